#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace nbhd {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted and duplicate-free; the graph is immutable
/// once built. Use `from_edges` to construct; it symmetrizes, drops
/// duplicates and rejects loops or out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    explicit Graph(Vertex n);

    static Graph from_edges(Vertex n, std::span<const Edge> edges);

    Vertex order() const noexcept { return static_cast<Vertex>(adj_.size()); }
    std::size_t size() const noexcept { return num_edges_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t num_edges_ = 0;
};

/// Checks symmetry, irreflexivity, sortedness and id range of the adjacency.
bool is_valid(const Graph& g);

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

/// Component id per vertex, numbered in order of smallest member.
std::vector<Vertex> connected_components(const Graph& g, Vertex* count = nullptr);

struct BipartiteResult {
    bool bipartite = true;
    std::vector<int> sides;           // proper 2-coloring when bipartite
    std::vector<Vertex> odd_walk;     // closed walk v0 v1 ... v_{k-1} (v_{k-1} ~ v0), k odd
};

BipartiteResult is_bipartite(const Graph& g);

/// Biconnected components (blocks) as sorted vertex lists. Isolated vertices
/// form singleton blocks. Order is deterministic.
std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g);

/// Subgraph induced by `vertices` (sorted); vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace nbhd
