#include "gpdrift/piling.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>

#include "gpdrift/error.hpp"

namespace gpdrift {

Piling::Piling(std::int32_t vertex_count) : strings_(vertex_count < 0 ? 0 : vertex_count) {
    if (vertex_count < 1) fail(ErrorKind::invalid_argument, "piling needs at least one vertex");
}

Piling Piling::from_strings(const std::vector<std::vector<Letter>>& strings) {
    Piling p(static_cast<std::int32_t>(strings.size()));
    for (std::size_t i = 0; i < strings.size(); ++i) {
        for (const Letter& l : strings[i]) {
            if (l.is_elem() && l.vertex != static_cast<Vertex>(i))
                fail(ErrorKind::invalid_argument,
                     "string " + std::to_string(i) + " holds an element of vertex " + std::to_string(l.vertex));
            if (l.is_elem()) ++p.syllables_;
        }
        p.strings_[i] = PilingString::from_range(strings[i].begin(), strings[i].end());
    }
    return p;
}

void Piling::append(Vertex i, GroupElement g, const Graph& graph, const VertexGroupSpec& groups) {
    const VertexGroup& group = groups[i];
    if (group.is_identity(g)) fail(ErrorKind::invalid_argument, "cannot append the identity");

    PilingString& own = strings_[i];
    if (own.empty() || own.back().is_zero()) {
        own = own.push_back(Letter::elem(i, g));
        graph.for_each_non_neighbour(i, [&](Vertex j) { strings_[j] = strings_[j].push_back(Letter::zero()); });
        ++syllables_;
        return;
    }

    GroupElement merged = group.multiply(own.back().value, g);
    if (!group.is_identity(merged)) {
        own = own.replace_back(Letter::elem(i, merged));
        return;
    }
    own = own.pop_back();
    graph.for_each_non_neighbour(i, [&](Vertex j) {
        if (strings_[j].empty() || !strings_[j].back().is_zero())
            fail(ErrorKind::corrupted, "cancellation at vertex " + std::to_string(i) + ": string " +
                                           std::to_string(j) + " does not end in a zero");
        strings_[j] = strings_[j].pop_back();
    });
    --syllables_;
}

bool operator==(const Piling& a, const Piling& b) {
    return a.syllables_ == b.syllables_ && a.strings_ == b.strings_;
}

Piling empty_piling(std::int32_t vertex_count) { return Piling(vertex_count); }

Piling append(Piling p, Vertex i, GroupElement g, const Graph& graph, const VertexGroupSpec& groups) {
    p.append(i, g, graph, groups);
    return p;
}

Piling piling_of_word(const Word& w, const Graph& graph, const VertexGroupSpec& groups) {
    Piling p(graph.vertex_count());
    for (const Syllable& s : w) p.append(s.vertex, s.value, graph, groups);
    return p;
}

std::vector<Vertex> term(const Piling& p) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < p.vertex_count(); ++v)
        if (!p.string(v).empty() && p.string(v).back().is_elem()) out.push_back(v);
    return out;
}

std::vector<Vertex> init(const Piling& p) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < p.vertex_count(); ++v)
        if (!p.string(v).empty() && p.string(v).front().is_elem()) out.push_back(v);
    return out;
}

Piling invert(const Piling& p, const VertexGroupSpec& groups) {
    std::vector<std::vector<Letter>> strings;
    strings.reserve(p.vertex_count());
    for (Vertex v = 0; v < p.vertex_count(); ++v) {
        auto letters = p.string(v).to_vector();
        std::reverse(letters.begin(), letters.end());
        for (Letter& l : letters)
            if (l.is_elem()) l.value = groups[v].invert(l.value);
        strings.push_back(std::move(letters));
    }
    return Piling::from_strings(strings);
}

Piling concat(const Piling& p, const Piling& q) {
    if (p.vertex_count() != q.vertex_count())
        fail(ErrorKind::invalid_argument, "concat: pilings have different vertex counts");
    auto t = term(p);
    auto s = init(q);
    std::vector<Vertex> shared;
    std::set_intersection(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(shared));
    if (!shared.empty())
        fail(ErrorKind::invalid_argument,
             "concat: term(p) and init(q) share vertex " + std::to_string(shared.front()));

    std::vector<std::vector<Letter>> strings;
    strings.reserve(p.vertex_count());
    for (Vertex v = 0; v < p.vertex_count(); ++v) {
        auto letters = p.string(v).to_vector();
        auto tail = q.string(v).to_vector();
        letters.insert(letters.end(), tail.begin(), tail.end());
        strings.push_back(std::move(letters));
    }
    return Piling::from_strings(strings);
}

bool is_prefix(const Piling& p, const Piling& q) {
    if (p.vertex_count() != q.vertex_count()) return false;
    if (p.syllable_length() > q.syllable_length()) return false;
    for (Vertex v = 0; v < p.vertex_count(); ++v)
        if (!p.string(v).is_prefix_of(q.string(v))) return false;
    return true;
}

Word linearize(const Piling& p, const Graph& graph) {
    const std::int32_t d = p.vertex_count();
    std::vector<std::vector<Letter>> strings;
    std::vector<std::size_t> cursor(d, 0);
    std::size_t remaining = 0;
    for (Vertex v = 0; v < d; ++v) {
        strings.push_back(p.string(v).to_vector());
        remaining += strings.back().size();
    }
    auto head = [&](Vertex v) -> const Letter* {
        return cursor[v] < strings[v].size() ? &strings[v][cursor[v]] : nullptr;
    };

    Word out;
    while (remaining > 0) {
        Vertex chosen = -1;
        for (Vertex i = 0; i < d && chosen < 0; ++i) {
            const Letter* h = head(i);
            if (!h || h->is_zero()) continue;
            bool free = true;
            graph.for_each_non_neighbour(i, [&](Vertex j) {
                const Letter* hj = head(j);
                if (!hj || !hj->is_zero()) free = false;
            });
            if (free) chosen = i;
        }
        if (chosen < 0) fail(ErrorKind::corrupted, "linearize: no poppable vertex");
        out.push_back({chosen, head(chosen)->value});
        ++cursor[chosen];
        --remaining;
        graph.for_each_non_neighbour(chosen, [&](Vertex j) {
            ++cursor[j];
            --remaining;
        });
    }
    return out;
}

std::string check_invariants(const Piling& p, const Graph& graph, const VertexGroupSpec& groups) {
    const std::int32_t d = p.vertex_count();
    if (d != graph.vertex_count()) return "vertex count mismatch";
    std::vector<std::int64_t> elems(d, 0);
    std::vector<std::int64_t> zeros(d, 0);
    for (Vertex v = 0; v < d; ++v) {
        bool prev_elem = false;
        for (const Letter& l : p.string(v).to_vector()) {
            if (l.is_elem()) {
                if (l.vertex != v) return "string " + std::to_string(v) + " holds a foreign element";
                if (groups[v].is_identity(l.value)) return "string " + std::to_string(v) + " holds the identity";
                if (prev_elem) return "string " + std::to_string(v) + " has two consecutive elements";
                ++elems[v];
            } else {
                ++zeros[v];
            }
            prev_elem = l.is_elem();
        }
    }
    for (Vertex j = 0; j < d; ++j) {
        std::int64_t expected = 0;
        graph.for_each_non_neighbour(j, [&](Vertex i) { expected += elems[i]; });
        if (zeros[j] != expected)
            return "string " + std::to_string(j) + " has " + std::to_string(zeros[j]) + " zeros, expected " +
                   std::to_string(expected);
    }
    std::int64_t total = 0;
    for (auto e : elems) total += e;
    if (total != p.syllable_length()) return "cached syllable length is stale";
    return {};
}

std::string render(const Piling& p, const Graph& graph, const VertexGroupSpec& groups) {
    std::string out;
    for (Vertex v = 0; v < p.vertex_count(); ++v) {
        if (v) out += ", ";
        const auto letters = p.string(v).to_vector();
        if (letters.empty()) out += "ε";
        for (std::size_t k = 0; k < letters.size(); ++k) {
            if (k) out += ' ';
            if (letters[k].is_zero())
                out += '0';
            else
                out += graph.label(v) + "^" + groups[v].render(letters[k].value);
        }
    }
    return out;
}

Word inverse(const Word& w, const VertexGroupSpec& groups) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->vertex, groups[it->vertex].invert(it->value)});
    return out;
}

Word parse_word(std::string_view text, const Graph& graph, const VertexGroupSpec& groups) {
    Word out;
    std::size_t pos = 0;
    auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*'; };
    while (pos < text.size()) {
        if (is_sep(text[pos])) {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !is_sep(text[end])) ++end;
        std::string_view token = text.substr(pos, end - pos);
        pos = end;

        std::string_view name = token;
        std::int64_t exponent = 1;
        if (auto caret = token.find('^'); caret != std::string_view::npos) {
            name = token.substr(0, caret);
            auto digits = token.substr(caret + 1);
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
            if (ec != std::errc{} || ptr != digits.data() + digits.size())
                fail(ErrorKind::invalid_argument, "bad exponent in syllable '" + std::string(token) + "'");
        }
        Vertex v = graph.find_label(name);
        if (v < 0) {
            std::int64_t index = -1;
            auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), index);
            if (ec != std::errc{} || ptr != name.data() + name.size() || index < 0 ||
                index >= graph.vertex_count())
                fail(ErrorKind::invalid_argument, "unknown vertex in syllable '" + std::string(token) + "'");
            v = static_cast<Vertex>(index);
        }
        GroupElement g = groups[v].power_of_generator(exponent);
        if (groups[v].is_identity(g))
            fail(ErrorKind::invalid_argument, "syllable '" + std::string(token) + "' is the identity");
        out.push_back({v, g});
    }
    return out;
}

std::string render_word(const Word& w, const Graph& graph, const VertexGroupSpec& groups) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ' ';
        out += graph.label(w[k].vertex) + "^" + groups[w[k].vertex].render(w[k].value);
    }
    return out;
}

}  // namespace gpdrift
