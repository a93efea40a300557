#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nbhd/graph.hpp"

namespace nbhd {

/// Proper coloring with colors 0..k-1, each used at least once.
struct ColoringWitness {
    int k = 0;
    std::vector<int> assignment;

    bool operator==(const ColoringWitness&) const = default;
};

/// Sorted vertex list of a clique.
struct CliqueWitness {
    std::vector<Vertex> vertices;

    std::size_t size() const noexcept { return vertices.size(); }
    bool operator==(const CliqueWitness&) const = default;
};

bool is_proper_coloring(const Graph& g, const ColoringWitness& w);
bool is_clique(const Graph& g, const CliqueWitness& w);

/// Maximum clique by branch and bound over a degeneracy ordering, bounded by
/// greedy colorings of the candidate set.
CliqueWitness max_clique(const Graph& g);

/// DSATUR greedy coloring; ties on saturation go to higher degree, then lower id.
ColoringWitness greedy_dsatur(const Graph& g);

/// Exact decision: a proper coloring with at most k colors, or nullopt.
///
/// Blocks (biconnected components) are searched independently and their
/// colorings glued at cut vertices. Within a block a maximum clique is
/// precolored and the rest is searched by DSATUR branch and bound.
std::optional<ColoringWitness> is_k_colorable(const Graph& g, int k);

/// Exact chromatic number with an optimal coloring (k = 0 for the empty graph).
ColoringWitness chromatic_number(const Graph& g);

/// Every vertex of `a` adjacent to every vertex of `b`. Throws
/// CertificateError on empty, overlapping or out-of-range sets.
bool verify_biclique_certificate(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);

std::optional<CliqueWitness> contains_triangle(const Graph& g);

}  // namespace nbhd
