#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gpdrift {

using Vertex = std::int32_t;

/// Undirected simple graph on vertices 0..D-1.
///
/// Neighbour lists are sorted and free of duplicates.
class Graph {
public:
    Graph() = default;

    /// Throws Error{invalid_argument} on self-loops or out-of-range indices.
    /// Duplicate edges (in either orientation) are merged.
    Graph(std::int32_t vertex_count,
          const std::vector<std::pair<Vertex, Vertex>>& edges,
          std::vector<std::string> labels = {});

    std::int32_t vertex_count() const noexcept {
        return static_cast<std::int32_t>(neighbours_.size());
    }
    bool adjacent(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbours(Vertex v) const { return neighbours_[v]; }

    /// Calls f(u) for every u != v not adjacent to v, in increasing order.
    template <typename F>
    void for_each_non_neighbour(Vertex v, F&& f) const {
        const auto& adj = neighbours_[v];
        auto it = adj.begin();
        for (Vertex u = 0; u < vertex_count(); ++u) {
            if (it != adj.end() && *it == u) {
                ++it;
                continue;
            }
            if (u != v) f(u);
        }
    }
    const std::string& label(Vertex v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t duplicate_edges() const noexcept { return duplicate_edges_; }

    /// Index of the vertex with this label, or -1.
    Vertex find_label(std::string_view label) const;

private:
    std::vector<std::vector<Vertex>> neighbours_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
    std::size_t duplicate_edges_ = 0;
};

struct GraphStats {
    std::int64_t D = 0;
    std::int64_t C = 0;
    std::int64_t B = 0;
    bool small_cliques = false;
};

/// Accepts the JSON form {"vertices": [...], "edges": [[i,j], ...]} or a
/// plain edge list with one "i j" pair per line ('#' starts a comment).
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

Graph cycle_graph(std::int32_t D);
Graph complete_graph(std::int32_t D);
Graph edgeless_graph(std::int32_t D);

/// Maximal cliques by Bron-Kerbosch with Tomita pivoting. Each clique is a
/// sorted vertex list.
std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g);

std::int64_t max_clique_size(const Graph& g);

/// max |N1(K)| over nonempty cliques K, where N1(K) is K together with every
/// vertex adjacent to some vertex of K.
std::int64_t max_clique_neighbourhood(const Graph& g);

/// |N1(S)| for an arbitrary vertex set.
std::int64_t closed_neighbourhood_size(const Graph& g, const std::vector<Vertex>& vertices);

GraphStats stats(const Graph& g);

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices);

}  // namespace gpdrift
