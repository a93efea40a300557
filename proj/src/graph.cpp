#include "nbhd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "nbhd/errors.hpp"

namespace nbhd {

Graph::Graph(Vertex n) {
    if (n < 0) throw ParameterError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParameterError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                 "} out of range for " + std::to_string(n) + " vertices");
        if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    std::size_t twice = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        twice += nb.size();
    }
    g.num_edges_ = twice / 2;
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool is_valid(const Graph& g) {
    const Vertex n = g.order();
    std::size_t twice = 0;
    for (Vertex v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        twice += nb.size();
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] < 0 || nb[i] >= n || nb[i] == v) return false;
            if (i > 0 && nb[i - 1] >= nb[i]) return false;
            if (!g.adjacent(nb[i], v)) return false;
        }
    }
    return twice == 2 * g.size();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    const Vertex off = a.order();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
    return Graph::from_edges(a.order() + b.order(), edges);
}

std::vector<Vertex> connected_components(const Graph& g, Vertex* count) {
    const Vertex n = g.order();
    std::vector<Vertex> comp(static_cast<std::size_t>(n), -1);
    Vertex next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : g.neighbors(u))
                if (comp[v] < 0) {
                    comp[v] = next;
                    stack.push_back(v);
                }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

bool is_connected(const Graph& g) {
    Vertex count = 0;
    connected_components(g, &count);
    return count <= 1;
}

BipartiteResult is_bipartite(const Graph& g) {
    const Vertex n = g.order();
    BipartiteResult res;
    res.sides.assign(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);

    for (Vertex root = 0; root < n; ++root) {
        if (res.sides[root] >= 0) continue;
        res.sides[root] = 0;
        std::queue<Vertex> queue;
        queue.push(root);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            for (Vertex v : g.neighbors(u)) {
                if (res.sides[v] < 0) {
                    res.sides[v] = 1 - res.sides[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push(v);
                } else if (res.sides[v] == res.sides[u]) {
                    // Tree paths to u and v meet at their lowest common ancestor;
                    // together with the edge uv they close an odd cycle.
                    std::vector<Vertex> up, down;
                    Vertex a = u, b = v;
                    while (depth[a] > depth[b]) { up.push_back(a); a = parent[a]; }
                    while (depth[b] > depth[a]) { down.push_back(b); b = parent[b]; }
                    while (a != b) {
                        up.push_back(a);
                        down.push_back(b);
                        a = parent[a];
                        b = parent[b];
                    }
                    up.push_back(a);
                    res.odd_walk = std::move(up);
                    res.odd_walk.insert(res.odd_walk.end(), down.rbegin(), down.rend());
                    res.bipartite = false;
                    res.sides.clear();
                    return res;
                }
            }
        }
    }
    return res;
}

std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g) {
    const Vertex n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> blocks;
    std::vector<Edge> edge_stack;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            blocks.push_back({root});
            continue;
        }
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                Vertex w = nb[f.next++];
                if (disc[w] < 0) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Vertex v = f.v, p = f.parent;
            stack.pop_back();
            if (p < 0) continue;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                std::vector<Vertex> block;
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e.first);
                    block.push_back(e.second);
                    if (e == Edge{p, v}) break;
                }
                std::sort(block.begin(), block.end());
                block.erase(std::unique(block.begin(), block.end()), block.end());
                blocks.push_back(std::move(block));
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbors(vertices[i])) {
            auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
            if (it != vertices.end() && *it == w) {
                auto j = static_cast<std::size_t>(it - vertices.begin());
                if (i < j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    return Graph::from_edges(static_cast<Vertex>(vertices.size()), edges);
}

}  // namespace nbhd
