#pragma once

#include <vector>

#include "nbhd/graph.hpp"

namespace nbhd {

// Standard families. Numbering is fixed so that witnesses survive composition.
Graph complete_graph(int p);
/// Left part 0..l-1, right part l..l+m-1.
Graph complete_bipartite(int l, int m);
/// i ~ i±1 (mod n); requires n >= 3.
Graph cycle_graph(int n);
/// Vertices are the k-subsets of {0..n-1} in lexicographic order, adjacent iff disjoint.
Graph kneser_graph(int n, int k);

/// Mycielskian: copies v_i = i, shadows u_i = n + i, apex w = 2n.
Graph mycielskian(const Graph& g);

/// (q-2)-fold Mycielski iterate of K_2: triangle-free with chromatic number q.
Graph triangle_free_chromatic(int q);

struct GadgetSpec {
    Graph h;
    Vertex x = 0;
    Graph k;
    Vertex y = 0;
};

/// H and K joined by the path x - z - y through a new vertex z.
///
/// H keeps its ids, K is shifted by H.order() and z = H.order() + K.order().
struct Gadget {
    Graph graph;
    Vertex bridge = 0;
    Vertex k_offset = 0;

    Vertex map_h(Vertex v) const { return v; }
    Vertex map_k(Vertex v) const { return v + k_offset; }
};

Gadget build_gadget(const GadgetSpec& spec);

struct CorollaryParams {
    int l = 1;
    int m = 1;
    int p = 2;
    int q = 3;
};

void validate(const CorollaryParams& params);

struct CorollaryGraph {
    Graph graph;
    Graph block;                   // the graph H glued twice
    std::vector<Vertex> left;      // biclique side of size l (first copy)
    std::vector<Vertex> right;     // biclique side of size m (first copy)
    std::vector<Vertex> clique;    // K_p block of the first copy
    Vertex s_first = 0;
    Vertex s_second = 0;
    Vertex bridge = 0;
};

/// H = K_p + K_{l,m} + T with edges {a,c}, {b,d}; the result is the gadget on
/// two disjoint copies of H, each attached at its vertex 0.
///
/// a, b are vertices 0 and 1 of the K_p block, c is vertex 0 of K_{l,m} and d
/// is vertex 0 of T.
CorollaryGraph build_corollary_graph(const CorollaryParams& params);

}  // namespace nbhd
