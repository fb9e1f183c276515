#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace gpdrift {

using Rng = std::mt19937_64;

/// Opaque vertex-group element. Built-in groups encode their elements in a
/// single 64-bit integer; only the owning group interprets it.
struct GroupElement {
    std::int64_t value = 0;

    friend bool operator==(GroupElement, GroupElement) = default;
};

class VertexGroup {
public:
    virtual ~VertexGroup() = default;

    virtual GroupElement multiply(GroupElement x, GroupElement y) const = 0;
    virtual GroupElement invert(GroupElement x) const = 0;
    virtual bool is_identity(GroupElement x) const = 0;
    virtual GroupElement identity() const = 0;
    /// Never returns the identity.
    virtual GroupElement sample_nontrivial(Rng& rng) const = 0;
    /// Maps an integer exponent of the group's distinguished generator to an
    /// element (n -> g^n). Used by word parsers and heavy-tailed samplers.
    virtual GroupElement power_of_generator(std::int64_t n) const = 0;
    virtual std::string render(GroupElement x) const = 0;
    virtual std::string name() const = 0;
};

/// The integers under addition; sample_nontrivial draws +1 or -1.
class IntegerGroup final : public VertexGroup {
public:
    GroupElement multiply(GroupElement x, GroupElement y) const override;
    GroupElement invert(GroupElement x) const override { return {-x.value}; }
    bool is_identity(GroupElement x) const override { return x.value == 0; }
    GroupElement identity() const override { return {0}; }
    GroupElement sample_nontrivial(Rng& rng) const override;
    GroupElement power_of_generator(std::int64_t n) const override { return {n}; }
    std::string render(GroupElement x) const override { return std::to_string(x.value); }
    std::string name() const override { return "z"; }
};

/// Integers mod m (m >= 2) with residues in [0, m); sample_nontrivial is
/// uniform over the m-1 nonzero residues.
class CyclicGroup final : public VertexGroup {
public:
    explicit CyclicGroup(std::int64_t modulus);

    std::int64_t modulus() const noexcept { return modulus_; }
    GroupElement multiply(GroupElement x, GroupElement y) const override;
    GroupElement invert(GroupElement x) const override;
    bool is_identity(GroupElement x) const override { return x.value == 0; }
    GroupElement identity() const override { return {0}; }
    GroupElement sample_nontrivial(Rng& rng) const override;
    GroupElement power_of_generator(std::int64_t n) const override;
    std::string render(GroupElement x) const override { return std::to_string(x.value); }
    std::string name() const override { return "zmod:" + std::to_string(modulus_); }

private:
    std::int64_t modulus_;
};

/// One vertex group per graph vertex.
class VertexGroupSpec {
public:
    explicit VertexGroupSpec(std::vector<std::shared_ptr<const VertexGroup>> groups);

    /// Every vertex gets the same group.
    static VertexGroupSpec uniform(std::int32_t vertex_count, std::shared_ptr<const VertexGroup> group);

    /// Parses "z", "zmod:m", or a comma-separated list with one entry per
    /// vertex.
    static VertexGroupSpec parse(std::string_view text, std::int32_t vertex_count);

    std::int32_t size() const noexcept { return static_cast<std::int32_t>(groups_.size()); }
    const VertexGroup& operator[](std::int32_t v) const { return *groups_[v]; }
    std::string describe() const;

private:
    std::vector<std::shared_ptr<const VertexGroup>> groups_;
};

}  // namespace gpdrift
