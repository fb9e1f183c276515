#include "gpdrift/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "gpdrift/error.hpp"

namespace gpdrift {

Graph::Graph(std::int32_t vertex_count,
             const std::vector<std::pair<Vertex, Vertex>>& edges,
             std::vector<std::string> labels)
    : neighbours_(vertex_count < 0 ? 0 : vertex_count), labels_(std::move(labels)) {
    if (vertex_count < 1) fail(ErrorKind::invalid_argument, "graph needs at least one vertex");
    if (labels_.empty()) {
        labels_.reserve(vertex_count);
        for (Vertex v = 0; v < vertex_count; ++v) labels_.push_back(std::to_string(v));
    }
    if (static_cast<std::int32_t>(labels_.size()) != vertex_count)
        fail(ErrorKind::invalid_argument, "label count does not match vertex count");

    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            fail(ErrorKind::invalid_argument,
                 "edge [" + std::to_string(u) + "," + std::to_string(v) + "] out of range");
        if (u == v) fail(ErrorKind::invalid_argument, "self-loop at vertex " + std::to_string(u));
        neighbours_[u].push_back(v);
        neighbours_[v].push_back(u);
    }
    std::size_t total = 0;
    for (auto& adj : neighbours_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        total += adj.size();
    }
    edge_count_ = total / 2;
    duplicate_edges_ = edges.size() - edge_count_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& adj = neighbours_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

Vertex Graph::find_label(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<Vertex>(it - labels_.begin());
}

namespace {

Graph parse_json_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::parse, std::string("graph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        fail(ErrorKind::parse, "graph JSON: missing \"vertices\" array");

    std::vector<std::string> labels;
    for (const auto& v : doc["vertices"]) {
        if (v.is_string())
            labels.push_back(v.get<std::string>());
        else if (v.is_number_integer())
            labels.push_back(std::to_string(v.get<std::int64_t>()));
        else
            fail(ErrorKind::parse, "graph JSON: vertex labels must be strings");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) fail(ErrorKind::parse, "graph JSON: \"edges\" must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                fail(ErrorKind::parse, "graph JSON: each edge must be a pair of integers");
            edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
    }
    const auto d = static_cast<std::int32_t>(labels.size());
    return Graph(d, edges, std::move(labels));
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    Vertex max_index = -1;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        long long u = 0;
        long long v = 0;
        if (!(fields >> u)) continue;
        std::string rest;
        if (!(fields >> v) || (fields >> rest))
            fail(ErrorKind::parse, "edge list line " + std::to_string(line_no) + ": expected \"i j\"");
        if (u < 0 || v < 0 || u > INT32_MAX - 1 || v > INT32_MAX - 1)
            fail(ErrorKind::parse, "edge list line " + std::to_string(line_no) + ": bad vertex index");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        max_index = std::max({max_index, static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (max_index < 0) fail(ErrorKind::parse, "edge list contains no edges");
    return Graph(max_index + 1, edges);
}

}  // namespace

Graph parse_graph(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json_graph(text);
    return parse_edge_list(text);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot open graph file " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_graph(text);
}

Graph cycle_graph(std::int32_t D) {
    if (D < 3) fail(ErrorKind::invalid_argument, "a cycle needs at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < D; ++v) edges.emplace_back(v, (v + 1) % D);
    return Graph(D, edges);
}

Graph complete_graph(std::int32_t D) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < D; ++u)
        for (Vertex v = u + 1; v < D; ++v) edges.emplace_back(u, v);
    return Graph(D, edges);
}

Graph edgeless_graph(std::int32_t D) { return Graph(D, {}); }

namespace {

using VertexSet = std::vector<Vertex>;

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

class BronKerbosch {
public:
    explicit BronKerbosch(const Graph& g) : g_(g) {}

    std::vector<VertexSet> run() {
        // Outer level in vertex order: each maximal clique is found exactly
        // once, from its smallest vertex.
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            VertexSet p;
            VertexSet x;
            for (Vertex u : g_.neighbours(v)) (u > v ? p : x).push_back(u);
            VertexSet r{v};
            expand(r, std::move(p), std::move(x));
        }
        return std::move(cliques_);
    }

private:
    void expand(VertexSet& r, VertexSet p, VertexSet x) {
        if (p.empty()) {
            if (x.empty()) {
                VertexSet clique = r;
                std::sort(clique.begin(), clique.end());
                cliques_.push_back(std::move(clique));
            }
            return;
        }
        // Tomita pivot: the vertex of P or X with most neighbours in P.
        Vertex pivot = p.front();
        std::size_t best = 0;
        for (const VertexSet* side : {&p, &x}) {
            for (Vertex u : *side) {
                std::size_t hits = intersect(g_.neighbours(u), p).size();
                if (hits > best) {
                    best = hits;
                    pivot = u;
                }
            }
        }
        VertexSet candidates;
        std::set_difference(p.begin(), p.end(), g_.neighbours(pivot).begin(),
                            g_.neighbours(pivot).end(), std::back_inserter(candidates));
        for (Vertex v : candidates) {
            const auto& adj = g_.neighbours(v);
            r.push_back(v);
            expand(r, intersect(p, adj), intersect(x, adj));
            r.pop_back();
            p.erase(std::lower_bound(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }

    const Graph& g_;
    std::vector<VertexSet> cliques_;
};

}  // namespace

std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) { return BronKerbosch(g).run(); }

std::int64_t max_clique_size(const Graph& g) {
    std::size_t best = 0;
    for (const auto& k : maximal_cliques(g)) best = std::max(best, k.size());
    return static_cast<std::int64_t>(best);
}

std::int64_t closed_neighbourhood_size(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<Vertex> ball(vertices.begin(), vertices.end());
    for (Vertex v : vertices) ball.insert(ball.end(), g.neighbours(v).begin(), g.neighbours(v).end());
    std::sort(ball.begin(), ball.end());
    return static_cast<std::int64_t>(std::unique(ball.begin(), ball.end()) - ball.begin());
}

std::int64_t max_clique_neighbourhood(const Graph& g) {
    // N1 is monotone under inclusion, so maximal cliques suffice.
    std::int64_t best = 0;
    for (const auto& k : maximal_cliques(g)) best = std::max(best, closed_neighbourhood_size(g, k));
    return best;
}

GraphStats stats(const Graph& g) {
    GraphStats s;
    s.D = g.vertex_count();
    s.C = 0;
    s.B = 0;
    for (const auto& k : maximal_cliques(g)) {
        s.C = std::max<std::int64_t>(s.C, static_cast<std::int64_t>(k.size()));
        s.B = std::max(s.B, closed_neighbourhood_size(g, k));
    }
    s.small_cliques = s.D > 3 * s.B + 2 * s.C;
    return s;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

}  // namespace gpdrift
