#include "nbhd/constructions.hpp"

#include <string>

#include "nbhd/errors.hpp"

namespace nbhd {

Graph complete_graph(int p) {
    if (p < 1) throw ParameterError("complete graph needs p >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < p; ++u)
        for (Vertex v = u + 1; v < p; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(p, edges);
}

Graph complete_bipartite(int l, int m) {
    if (l < 1 || m < 1) throw ParameterError("complete bipartite graph needs l, m >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < l; ++u)
        for (Vertex v = 0; v < m; ++v) edges.emplace_back(u, l + v);
    return Graph::from_edges(l + m, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw ParameterError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph kneser_graph(int n, int k) {
    if (k < 1 || n < 2 * k)
        throw ParameterError("kneser graph needs n >= 2k >= 2 (got n=" + std::to_string(n) +
                             ", k=" + std::to_string(k) + ")");
    if (n > 30) throw ParameterError("kneser graph limited to n <= 30");

    // Lexicographic order of k-subsets as index vectors.
    std::vector<std::uint32_t> masks;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (int i : idx) mask |= 1u << i;
        masks.push_back(mask);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }

    std::vector<Edge> edges;
    const auto count = static_cast<Vertex>(masks.size());
    for (Vertex u = 0; u < count; ++u)
        for (Vertex v = u + 1; v < count; ++v)
            if ((masks[u] & masks[v]) == 0) edges.emplace_back(u, v);
    return Graph::from_edges(count, edges);
}

Graph mycielskian(const Graph& g) {
    const Vertex n = g.order();
    if (n < 1) throw ParameterError("mycielskian needs at least one vertex");
    std::vector<Edge> edges;
    edges.reserve(3 * g.size() + static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(n + u, v);
        edges.emplace_back(u, n + v);
    }
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
    return Graph::from_edges(2 * n + 1, edges);
}

Graph triangle_free_chromatic(int q) {
    if (q < 2) throw ParameterError("triangle-free construction needs q >= 2");
    Graph g = complete_graph(2);
    for (int i = 2; i < q; ++i) g = mycielskian(g);
    return g;
}

Gadget build_gadget(const GadgetSpec& spec) {
    if (spec.x < 0 || spec.x >= spec.h.order())
        throw ParameterError("gadget base point x=" + std::to_string(spec.x) + " outside H");
    if (spec.y < 0 || spec.y >= spec.k.order())
        throw ParameterError("gadget base point y=" + std::to_string(spec.y) + " outside K");

    Gadget out;
    out.k_offset = spec.h.order();
    out.bridge = spec.h.order() + spec.k.order();

    auto edges = spec.h.edges();
    for (auto [u, v] : spec.k.edges()) edges.emplace_back(out.map_k(u), out.map_k(v));
    edges.emplace_back(out.map_h(spec.x), out.bridge);
    edges.emplace_back(out.map_k(spec.y), out.bridge);
    out.graph = Graph::from_edges(out.bridge + 1, edges);
    return out;
}

void validate(const CorollaryParams& params) {
    if (params.l < 1 || params.m < 1) throw ParameterError("corollary needs l, m >= 1");
    if (params.p < 2) throw ParameterError("corollary needs p >= 2");
    if (params.q < params.p) throw ParameterError("corollary needs q >= p");
    // q = 2 forces H bipartite, but the gadget check needs non-bipartite parts.
    if (params.q < 3) throw ParameterError("corollary needs q >= 3");
}

CorollaryGraph build_corollary_graph(const CorollaryParams& params) {
    validate(params);

    const Graph kp = complete_graph(params.p);
    const Graph klm = complete_bipartite(params.l, params.m);
    const Graph t = triangle_free_chromatic(params.q);

    const Vertex klm_off = kp.order();
    const Vertex t_off = klm_off + klm.order();

    auto edges = kp.edges();
    for (auto [u, v] : klm.edges()) edges.emplace_back(u + klm_off, v + klm_off);
    for (auto [u, v] : t.edges()) edges.emplace_back(u + t_off, v + t_off);
    const Vertex a = 0, b = 1, c = klm_off, d = t_off;
    edges.emplace_back(a, c);
    edges.emplace_back(b, d);

    CorollaryGraph out;
    out.block = Graph::from_edges(t_off + t.order(), edges);

    Gadget gadget = build_gadget({out.block, 0, out.block, 0});
    out.graph = std::move(gadget.graph);
    out.bridge = gadget.bridge;
    out.s_first = gadget.map_h(0);
    out.s_second = gadget.map_k(0);
    for (Vertex i = 0; i < params.l; ++i) out.left.push_back(klm_off + i);
    for (Vertex i = 0; i < params.m; ++i) out.right.push_back(klm_off + params.l + i);
    for (Vertex i = 0; i < params.p; ++i) out.clique.push_back(i);
    return out;
}

}  // namespace nbhd
