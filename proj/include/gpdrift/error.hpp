#pragma once

#include <stdexcept>
#include <string>

namespace gpdrift {

// Error categories surfaced through the C API as status codes.
enum class ErrorKind {
    invalid_argument,
    parse,
    small_cliques,
    domain,
    corrupted,
    io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace gpdrift
