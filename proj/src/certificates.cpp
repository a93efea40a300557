#include <algorithm>
#include <string>

#include "nbhd/errors.hpp"
#include "nbhd/invariants.hpp"

namespace nbhd {

bool is_proper_coloring(const Graph& g, const ColoringWitness& w) {
    if (w.assignment.size() != static_cast<std::size_t>(g.order())) return false;
    std::vector<char> used(static_cast<std::size_t>(std::max(w.k, 0)), 0);
    for (int c : w.assignment) {
        if (c < 0 || c >= w.k) return false;
        used[static_cast<std::size_t>(c)] = 1;
    }
    if (std::find(used.begin(), used.end(), 0) != used.end()) return false;
    for (auto [u, v] : g.edges())
        if (w.assignment[u] == w.assignment[v]) return false;
    return true;
}

bool is_clique(const Graph& g, const CliqueWitness& w) {
    const auto& vs = w.vertices;
    if (!std::is_sorted(vs.begin(), vs.end()) || std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        return false;
    for (Vertex v : vs)
        if (v < 0 || v >= g.order()) return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool verify_biclique_certificate(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
    if (a.empty() || b.empty()) throw CertificateError("biclique sides must be nonempty");
    std::vector<char> side(static_cast<std::size_t>(g.order()), 0);
    auto mark = [&](std::span<const Vertex> s, char tag) {
        for (Vertex v : s) {
            if (v < 0 || v >= g.order())
                throw CertificateError("biclique vertex " + std::to_string(v) + " out of range");
            if (side[v] != 0)
                throw CertificateError("biclique vertex " + std::to_string(v) + " listed twice");
            side[v] = tag;
        }
    };
    mark(a, 1);
    mark(b, 2);
    for (Vertex u : a)
        for (Vertex v : b)
            if (!g.adjacent(u, v)) return false;
    return true;
}

std::optional<CliqueWitness> contains_triangle(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        auto nu = g.neighbors(u), nv = g.neighbors(v);
        auto it_u = std::upper_bound(nu.begin(), nu.end(), v);
        auto it_v = std::upper_bound(nv.begin(), nv.end(), v);
        // Smallest common neighbor w > v, so each triangle is reported once as u < v < w.
        while (it_u != nu.end() && it_v != nv.end()) {
            if (*it_u < *it_v)
                ++it_u;
            else if (*it_v < *it_u)
                ++it_v;
            else
                return CliqueWitness{{u, v, *it_u}};
        }
    }
    return std::nullopt;
}

}  // namespace nbhd
