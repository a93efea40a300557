#include "nbhd/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nbhd/errors.hpp"

namespace nbhd {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const Face& f, std::size_t words) {
    Bits b(words, 0);
    for (Vertex v : f) b[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    return b;
}

bool subset_of(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

Vertex find_root(std::vector<Vertex>& parent, Vertex v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(Vertex num_vertices, std::vector<Face> faces) {
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (Vertex v : f)
            if (v < 0 || v >= num_vertices)
                throw ParameterError("face vertex " + std::to_string(v) + " outside ground set of size " +
                                     std::to_string(num_vertices));
    }
    std::erase_if(faces, [](const Face& f) { return f.empty(); });
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    // Larger faces first so every kept face is only tested against bigger ones.
    std::vector<std::size_t> order(faces.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return faces[a].size() > faces[b].size(); });

    const std::size_t words = (static_cast<std::size_t>(num_vertices) + 63) / 64;
    std::vector<Bits> kept_bits;
    std::vector<char> keep(faces.size(), 0);
    for (std::size_t idx : order) {
        Bits b = to_bits(faces[idx], words);
        bool maximal = std::none_of(kept_bits.begin(), kept_bits.end(),
                                    [&](const Bits& k) { return subset_of(b, k); });
        if (maximal) {
            keep[idx] = 1;
            kept_bits.push_back(std::move(b));
        }
    }

    SimplicialComplex c;
    c.num_vertices_ = num_vertices;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (keep[i]) c.facets_.push_back(std::move(faces[i]));
    return c;
}

int SimplicialComplex::dimension() const noexcept {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

SimplicialComplex neighborhood_complex(const Graph& g) {
    std::vector<Face> faces;
    faces.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nb = g.neighbors(v);
        if (!nb.empty()) faces.emplace_back(nb.begin(), nb.end());
    }
    return SimplicialComplex::from_faces(g.order(), std::move(faces));
}

std::vector<Vertex> complex_components(const SimplicialComplex& c, Vertex* count) {
    const auto n = static_cast<std::size_t>(c.num_vertices());
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> used(n, 0);
    for (const auto& f : c.facets()) {
        used[f.front()] = 1;
        for (std::size_t i = 1; i < f.size(); ++i) {
            used[f[i]] = 1;
            Vertex a = find_root(parent, f[i - 1]), b = find_root(parent, f[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<Vertex> comp(n, -1), label(n, -1);
    Vertex next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (!used[v]) continue;
        Vertex r = find_root(parent, static_cast<Vertex>(v));
        if (label[r] < 0) label[r] = next++;
        comp[v] = label[r];
    }
    if (count) *count = next;
    return comp;
}

long long euler_characteristic(const SimplicialComplex& c, std::size_t limit) {
    if (c.empty()) return 0;
    FaceTable table = faces_up_to(c, c.dimension(), limit);
    long long chi = 0;
    for (int i = 0; i <= table.max_dim(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(table.count(i));
    return chi;
}

}  // namespace nbhd
