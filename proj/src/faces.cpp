#include "nbhd/complex.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include <omp.h>

#include "nbhd/errors.hpp"

namespace nbhd {

namespace {

// Saturating binomial coefficient.
std::size_t choose(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
    }
    return static_cast<std::size_t>(r);
}

BudgetExceeded over_budget(int dim, std::size_t limit) {
    return BudgetExceeded(dim, "face budget of " + std::to_string(limit) + " exceeded at dimension " +
                                   std::to_string(dim));
}

// Sorts fixed-width records lexicographically and removes duplicates.
void sort_unique(std::vector<Vertex>& flat, std::size_t w) {
    const std::size_t count = flat.size() / w;
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), 0);
    auto rec = [&](std::size_t i) { return flat.begin() + static_cast<std::ptrdiff_t>(i * w); };
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(rec(a), rec(a) + static_cast<std::ptrdiff_t>(w), rec(b),
                                            rec(b) + static_cast<std::ptrdiff_t>(w));
    });
    std::vector<Vertex> out;
    out.reserve(flat.size());
    for (std::size_t k = 0; k < count; ++k) {
        auto r = rec(idx[k]);
        if (k > 0 && std::equal(r, r + static_cast<std::ptrdiff_t>(w), out.end() - static_cast<std::ptrdiff_t>(w)))
            continue;
        out.insert(out.end(), r, r + static_cast<std::ptrdiff_t>(w));
    }
    flat = std::move(out);
}

// Appends every w-subset of `facet` in lexicographic order.
void append_subsets(const Face& facet, std::size_t w, std::vector<Vertex>& out) {
    const std::size_t n = facet.size();
    if (w > n) return;
    std::vector<std::size_t> idx(w);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        for (std::size_t i : idx) out.push_back(facet[i]);
        std::size_t i = w;
        while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

FaceList::FaceList(int dim, std::vector<Vertex> flat) : dim_(dim), data_(std::move(flat)) {}

std::optional<std::size_t> FaceList::index_of(std::span<const Vertex> face) const {
    if (face.size() != width()) return std::nullopt;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        auto f = (*this)[mid];
        if (std::lexicographical_compare(f.begin(), f.end(), face.begin(), face.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < size() && std::ranges::equal((*this)[lo], face)) return lo;
    return std::nullopt;
}

std::size_t FaceTable::total() const {
    std::size_t t = 0;
    for (const auto& l : by_dim) t += l.size();
    return t;
}

FaceTable faces_up_to(const SimplicialComplex& c, int d, std::size_t limit) {
    if (d < 0) throw ParameterError("face dimension must be non-negative");
    const auto& facets = c.facets();
    FaceTable table;
    std::size_t total = 0;

    for (int i = 0; i <= d; ++i) {
        const std::size_t w = static_cast<std::size_t>(i) + 1;
        for (const auto& f : facets)
            if (choose(f.size(), w) > limit - std::min(limit, total)) throw over_budget(i, limit);

        const std::size_t remaining = limit - total;
        int threads = 1;
        std::vector<std::vector<Vertex>> local;
        std::atomic<bool> overflow = false;

#pragma omp parallel
        {
#pragma omp single
            {
                threads = omp_get_num_threads();
                local.resize(static_cast<std::size_t>(threads));
            }
            auto& buf = local[static_cast<std::size_t>(omp_get_thread_num())];
            std::size_t since_compact = 0;
#pragma omp for schedule(dynamic, 8)
            for (std::size_t j = 0; j < facets.size(); ++j) {
                if (overflow) continue;
                append_subsets(facets[j], w, buf);
                since_compact += choose(facets[j].size(), w);
                if (since_compact > remaining) {
                    sort_unique(buf, w);
                    since_compact = buf.size() / w;
                    if (since_compact > remaining) overflow = true;
                }
            }
        }
        if (overflow) throw over_budget(i, limit);

        std::vector<Vertex> merged;
        for (auto& buf : local) merged.insert(merged.end(), buf.begin(), buf.end());
        sort_unique(merged, w);
        total += merged.size() / w;
        if (total > limit) throw over_budget(i, limit);
        table.by_dim.emplace_back(i, std::move(merged));
    }
    return table;
}

namespace serial {

FaceTable faces_up_to(const SimplicialComplex& c, int d, std::size_t limit) {
    if (d < 0) throw ParameterError("face dimension must be non-negative");
    FaceTable table;
    std::size_t total = 0;
    for (int i = 0; i <= d; ++i) {
        const std::size_t w = static_cast<std::size_t>(i) + 1;
        std::set<Face> faces;
        for (const auto& f : c.facets()) {
            if (f.size() < w) continue;
            std::vector<std::size_t> idx(w);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                Face face;
                for (std::size_t k : idx) face.push_back(f[k]);
                faces.insert(std::move(face));
                if (total + faces.size() > limit) throw over_budget(i, limit);
                std::size_t k = w;
                while (k > 0 && idx[k - 1] == f.size() - w + k - 1) --k;
                if (k == 0) break;
                ++idx[k - 1];
                for (std::size_t j = k; j < w; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        std::vector<Vertex> flat;
        for (const auto& face : faces) flat.insert(flat.end(), face.begin(), face.end());
        total += faces.size();
        table.by_dim.emplace_back(i, std::move(flat));
    }
    return table;
}

}  // namespace serial

}  // namespace nbhd
