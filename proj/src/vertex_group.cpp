#include "gpdrift/vertex_group.hpp"

#include <charconv>

#include "gpdrift/error.hpp"

namespace gpdrift {

GroupElement IntegerGroup::multiply(GroupElement x, GroupElement y) const {
    std::int64_t out = 0;
    if (__builtin_add_overflow(x.value, y.value, &out))
        fail(ErrorKind::domain, "integer vertex group overflow");
    return {out};
}

GroupElement IntegerGroup::sample_nontrivial(Rng& rng) const {
    return {std::bernoulli_distribution(0.5)(rng) ? 1 : -1};
}

CyclicGroup::CyclicGroup(std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 2) fail(ErrorKind::invalid_argument, "cyclic vertex group needs modulus >= 2");
}

GroupElement CyclicGroup::multiply(GroupElement x, GroupElement y) const {
    return {(x.value + y.value) % modulus_};
}

GroupElement CyclicGroup::invert(GroupElement x) const {
    return {x.value == 0 ? 0 : modulus_ - x.value};
}

GroupElement CyclicGroup::sample_nontrivial(Rng& rng) const {
    return {std::uniform_int_distribution<std::int64_t>(1, modulus_ - 1)(rng)};
}

GroupElement CyclicGroup::power_of_generator(std::int64_t n) const {
    std::int64_t r = n % modulus_;
    return {r < 0 ? r + modulus_ : r};
}

VertexGroupSpec::VertexGroupSpec(std::vector<std::shared_ptr<const VertexGroup>> groups)
    : groups_(std::move(groups)) {
    for (const auto& g : groups_)
        if (!g) fail(ErrorKind::invalid_argument, "null vertex group");
}

VertexGroupSpec VertexGroupSpec::uniform(std::int32_t vertex_count,
                                         std::shared_ptr<const VertexGroup> group) {
    return VertexGroupSpec(std::vector<std::shared_ptr<const VertexGroup>>(vertex_count, std::move(group)));
}

namespace {

std::shared_ptr<const VertexGroup> parse_one(std::string_view item) {
    if (item == "z") return std::make_shared<IntegerGroup>();
    constexpr std::string_view prefix = "zmod:";
    if (item.starts_with(prefix)) {
        auto digits = item.substr(prefix.size());
        std::int64_t m = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
        if (ec != std::errc{} || ptr != digits.data() + digits.size())
            fail(ErrorKind::invalid_argument, "bad modulus in group spec '" + std::string(item) + "'");
        return std::make_shared<CyclicGroup>(m);
    }
    fail(ErrorKind::invalid_argument, "unknown vertex group '" + std::string(item) + "'");
}

}  // namespace

VertexGroupSpec VertexGroupSpec::parse(std::string_view text, std::int32_t vertex_count) {
    std::vector<std::string_view> items;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        items.push_back(text.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (items.size() == 1) return uniform(vertex_count, parse_one(items.front()));
    if (static_cast<std::int32_t>(items.size()) != vertex_count)
        fail(ErrorKind::invalid_argument, "group spec lists " + std::to_string(items.size()) +
                                              " groups for " + std::to_string(vertex_count) + " vertices");
    std::vector<std::shared_ptr<const VertexGroup>> groups;
    for (auto item : items) groups.push_back(parse_one(item));
    return VertexGroupSpec(std::move(groups));
}

std::string VertexGroupSpec::describe() const {
    std::string out;
    for (std::size_t i = 0; i < groups_.size(); ++i) {
        if (i) out += ',';
        out += groups_[i]->name();
    }
    return out;
}

}  // namespace gpdrift
