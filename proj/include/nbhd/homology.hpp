#pragma once

#include <string>
#include <vector>

#include "nbhd/complex.hpp"
#include "nbhd/integer_matrix.hpp"

namespace nbhd {

inline constexpr int kDefaultCap = 2;

/// Reduced integral homology in one degree: Z^betti plus the torsion
/// summands Z/t for t in `torsion` (a divisibility chain, all >= 2).
struct HomologyGroup {
    int dimension = 0;
    std::size_t betti = 0;
    std::vector<Integer> torsion;

    bool trivial() const noexcept { return betti == 0 && torsion.empty(); }
    std::string to_string() const;
    bool operator==(const HomologyGroup&) const = default;
};

/// Reduced homology in degree i. H~_0 of a c-component complex has betti c-1.
HomologyGroup reduced_homology(const SimplicialComplex& c, int i, std::size_t limit = kDefaultFaceLimit);

/// Reduced homology in degrees 0..max_dim from one face table. The boundary
/// matrices are reduced concurrently, one per thread.
std::vector<HomologyGroup> reduced_homology_profile(const SimplicialComplex& c, int max_dim,
                                                    std::size_t limit = kDefaultFaceLimit);

/// Homological connectivity: (least i <= cap with H~_i != 0) - 1, with
/// separate states for the empty complex and for "vanishes through cap".
struct HomologicalConnectivity {
    enum class Kind { Empty, Exact, AtLeast };
    Kind kind = Kind::Empty;
    int value = -2;

    static HomologicalConnectivity empty() { return {Kind::Empty, -2}; }
    static HomologicalConnectivity exact(int v) { return {Kind::Exact, v}; }
    static HomologicalConnectivity at_least(int v) { return {Kind::AtLeast, v}; }

    /// Beyond degree 1 a vanishing H~ does not imply a vanishing homotopy group.
    bool homological_only() const noexcept {
        return kind == Kind::AtLeast ? value >= 1 : (kind == Kind::Exact && value >= 1);
    }
    std::string to_string() const;
    bool operator==(const HomologicalConnectivity&) const = default;
};

HomologicalConnectivity homological_connectivity(const SimplicialComplex& c, int cap,
                                                 std::size_t limit = kDefaultFaceLimit);
HomologicalConnectivity homological_connectivity(const std::vector<HomologyGroup>& profile, bool nonempty);

/// Evidence for conn(|C|) = 0: nonempty, path-connected and H_1 != 0
/// (H_1 is the abelianization of pi_1, so H_1 != 0 forces pi_1 != 0).
struct ConnectivityCertificate {
    bool nonempty = false;
    bool connected = false;
    std::size_t components = 0;
    std::vector<Vertex> component_of;  // per ground-set vertex, -1 if unused
    HomologyGroup h1{1, 0, {}};
    bool certified_conn_zero = false;
    HomologicalConnectivity homological = HomologicalConnectivity::empty();
    std::vector<HomologyGroup> profile;  // degrees computed for the report
};

ConnectivityCertificate certify_conn_zero(const SimplicialComplex& c, std::size_t limit = kDefaultFaceLimit,
                                          int cap = kDefaultCap);

}  // namespace nbhd
