#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nbhd/graph.hpp"

namespace nbhd {

using Face = std::vector<Vertex>;

inline constexpr std::size_t kDefaultFaceLimit = 10'000'000;

/// Abstract simplicial complex stored by its facets.
///
/// Facets are sorted, duplicate-free, nonempty and form an antichain; the
/// facet list itself is sorted lexicographically. Faces are all nonempty
/// subsets of facets and are never stored.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Normalizes arbitrary faces: sorts each, drops empties and keeps only
    /// inclusion-maximal ones. Throws ParameterError on ids outside [0, n).
    static SimplicialComplex from_faces(Vertex num_vertices, std::vector<Face> faces);

    Vertex num_vertices() const noexcept { return num_vertices_; }
    const std::vector<Face>& facets() const noexcept { return facets_; }
    bool empty() const noexcept { return facets_.empty(); }
    /// Largest facet dimension, -1 for the empty complex.
    int dimension() const noexcept;

    bool operator==(const SimplicialComplex&) const = default;

private:
    Vertex num_vertices_ = 0;
    std::vector<Face> facets_;
};

/// Facets are the inclusion-maximal nonempty neighbor sets.
SimplicialComplex neighborhood_complex(const Graph& g);

/// All faces of one dimension, stored flat with fixed width dim+1 and
/// sorted lexicographically.
class FaceList {
public:
    FaceList() = default;
    FaceList(int dim, std::vector<Vertex> flat);

    int dim() const noexcept { return dim_; }
    std::size_t width() const noexcept { return static_cast<std::size_t>(dim_ + 1); }
    std::size_t size() const noexcept { return data_.size() / width(); }
    bool empty() const noexcept { return data_.empty(); }
    std::span<const Vertex> operator[](std::size_t j) const {
        return {data_.data() + j * width(), width()};
    }
    std::optional<std::size_t> index_of(std::span<const Vertex> face) const;
    const std::vector<Vertex>& flat() const noexcept { return data_; }

    bool operator==(const FaceList&) const = default;

private:
    int dim_ = 0;
    std::vector<Vertex> data_;
};

struct FaceTable {
    std::vector<FaceList> by_dim;  // by_dim[i] holds the i-faces

    int max_dim() const noexcept { return static_cast<int>(by_dim.size()) - 1; }
    std::size_t count(int i) const {
        return i >= 0 && i <= max_dim() ? by_dim[static_cast<std::size_t>(i)].size() : 0;
    }
    std::size_t total() const;
    bool operator==(const FaceTable&) const = default;
};

/// Enumerates faces of dimensions 0..d. Throws BudgetExceeded naming the
/// dimension at which the distinct face count passes `limit`.
/// Facets are expanded in parallel; the result does not depend on the schedule.
FaceTable faces_up_to(const SimplicialComplex& c, int d, std::size_t limit = kDefaultFaceLimit);

/// Alternating face count over every dimension of the complex.
long long euler_characteristic(const SimplicialComplex& c, std::size_t limit = kDefaultFaceLimit);

/// Union-find over the 1-skeleton. Returns the component id per vertex of
/// the complex (-1 for ground-set ids that lie in no facet).
std::vector<Vertex> complex_components(const SimplicialComplex& c, Vertex* count = nullptr);

// Facet-list text: one face per line, space separated 0-based ids, '#'
// comments. The writer records the ground set size as "# vertices <n>".
SimplicialComplex read_facets(std::istream& in);
SimplicialComplex read_facets(const std::string& path);
void write_facets(std::ostream& out, const SimplicialComplex& c);
void write_facets(const SimplicialComplex& c, const std::string& path);

namespace serial {

/// Reference enumeration through an ordered set; kept for tests and benchmarks.
FaceTable faces_up_to(const SimplicialComplex& c, int d, std::size_t limit = kDefaultFaceLimit);

}  // namespace serial

}  // namespace nbhd
