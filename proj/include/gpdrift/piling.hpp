#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gpdrift/graph.hpp"
#include "gpdrift/persistent_seq.hpp"
#include "gpdrift/vertex_group.hpp"

namespace gpdrift {

/// A nontrivial element of one vertex group.
struct Syllable {
    Vertex vertex = 0;
    GroupElement value;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

/// Piling alphabet symbol: the zero marker or a nontrivial element of the
/// vertex group owning the string it sits in.
struct Letter {
    static constexpr Vertex zero_marker = -1;

    Vertex vertex = zero_marker;
    GroupElement value;

    static Letter zero() { return {}; }
    static Letter elem(Vertex v, GroupElement g) { return {v, g}; }

    bool is_zero() const noexcept { return vertex == zero_marker; }
    bool is_elem() const noexcept { return vertex != zero_marker; }

    friend bool operator==(const Letter&, const Letter&) = default;
};

using PilingString = PersistentSeq<Letter>;

/// Heap-of-pieces normal form of a graph-product element: one string per
/// vertex. Appending g at vertex i pushes g on string i and a zero on every
/// string whose vertex does not commute with i.
class Piling {
public:
    Piling() = default;
    explicit Piling(std::int32_t vertex_count);

    /// Builds a piling from explicit strings. Only the per-string alphabet
    /// constraint is validated; see check_invariants for the rest.
    static Piling from_strings(const std::vector<std::vector<Letter>>& strings);

    std::int32_t vertex_count() const noexcept { return static_cast<std::int32_t>(strings_.size()); }
    const PilingString& string(Vertex v) const { return strings_[v]; }
    const std::vector<PilingString>& strings() const noexcept { return strings_; }
    std::int64_t syllable_length() const noexcept { return syllables_; }
    bool empty() const noexcept { return syllables_ == 0; }

    /// In-place right multiplication by the syllable (i, g).
    void append(Vertex i, GroupElement g, const Graph& graph, const VertexGroupSpec& groups);

    friend bool operator==(const Piling& a, const Piling& b);

private:
    std::vector<PilingString> strings_;
    std::int64_t syllables_ = 0;
};

Piling empty_piling(std::int32_t vertex_count);

/// Throws Error{invalid_argument} if g is the identity and
/// Error{corrupted} if a cancellation finds a non-commuting string that does
/// not end in a zero.
Piling append(Piling p, Vertex i, GroupElement g, const Graph& graph, const VertexGroupSpec& groups);

Piling piling_of_word(const Word& w, const Graph& graph, const VertexGroupSpec& groups);

/// Terminal clique: vertices whose string ends in a group element.
std::vector<Vertex> term(const Piling& p);
/// Initial clique: vertices whose string starts with a group element.
std::vector<Vertex> init(const Piling& p);

Piling invert(const Piling& p, const VertexGroupSpec& groups);

/// Coordinatewise concatenation. Throws Error{invalid_argument} unless
/// term(p) and init(q) are disjoint.
Piling concat(const Piling& p, const Piling& q);

bool is_prefix(const Piling& p, const Piling& q);

inline std::int64_t syllable_length(const Piling& p) { return p.syllable_length(); }

/// Greedy heap-of-pieces pop, always taking the lowest poppable vertex.
/// Throws Error{corrupted} if no vertex can be popped.
Word linearize(const Piling& p, const Graph& graph);

/// Checks the structural invariants (alphabet, no adjacent group elements,
/// zero accounting). Returns an empty string when all hold, otherwise a
/// description of the first violation.
std::string check_invariants(const Piling& p, const Graph& graph, const VertexGroupSpec& groups);

/// "a^1 0, 0 b^1, 0 c^1 0"; an empty string renders as "ε".
std::string render(const Piling& p, const Graph& graph, const VertexGroupSpec& groups);

Word inverse(const Word& w, const VertexGroupSpec& groups);

/// Parses syllables "v^k" separated by whitespace, ',' or '*'. v is a vertex
/// label or index; k is an integer exponent of the vertex group's generator
/// (defaults to 1). Identity syllables are rejected.
Word parse_word(std::string_view text, const Graph& graph, const VertexGroupSpec& groups);
std::string render_word(const Word& w, const Graph& graph, const VertexGroupSpec& groups);

}  // namespace gpdrift
