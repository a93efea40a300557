#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nbhd/constructions.hpp"
#include "nbhd/homology.hpp"
#include "nbhd/invariants.hpp"

namespace nbhd {

/// Chromatic number against its two lower bounds: the clique number and the
/// certified topological bound conn(N(G)) + 3.
struct BoundReport {
    Vertex n = 0;
    std::size_t m = 0;
    int chi = 0;
    int omega = 0;
    int greedy_upper = 0;
    // 3 when conn = 0 is certified, 2 for a nonempty disconnected complex.
    std::optional<int> lovasz_certified;
    std::vector<std::string> flags;
    ConnectivityCertificate certificate;
    ColoringWitness coloring;
    CliqueWitness clique;
};

BoundReport compare_bounds(const Graph& g, int cap = kDefaultCap, std::size_t limit = kDefaultFaceLimit);

struct WedgeRow {
    int dim = 0;
    std::size_t betti_gadget = 0;
    std::size_t betti_h = 0;
    std::size_t betti_k = 0;
    std::size_t expected = 0;
    bool betti_pass = false;
    std::vector<Integer> torsion_gadget, torsion_h, torsion_k;
    bool torsion_pass = false;
};

/// Homology of N(gadget) against N(H) (+) N(K) (+) S^1, degree by degree.
struct WedgeCheckReport {
    Vertex x = 0;
    Vertex y = 0;
    int cap = kDefaultCap;
    Gadget gadget;
    std::vector<WedgeRow> rows;
    std::vector<HomologyGroup> gadget_profile;
    ConnectivityCertificate certificate;
    bool additivity_pass = false;
    bool pass = false;
};

/// Throws PreconditionError unless H and K are connected and non-bipartite.
WedgeCheckReport verify_theorem2(const GadgetSpec& spec, int cap = kDefaultCap,
                                 std::size_t limit = kDefaultFaceLimit);

struct CorollaryReport {
    CorollaryParams params;
    CorollaryGraph construction;
    BoundReport bounds;
    bool chi_ok = false;
    bool omega_ok = false;
    bool biclique_ok = false;
    bool lovasz_ok = false;
    std::vector<std::string> failures;  // names of failed clauses
    bool pass = false;
};

CorollaryReport verify_corollary(const CorollaryParams& params, std::size_t limit = kDefaultFaceLimit);

/// Multiset equality of elementary divisors of the direct sums a1 (+) a2 and b.
bool torsion_sums_match(const std::vector<Integer>& a1, const std::vector<Integer>& a2,
                        const std::vector<Integer>& b);

// Full verification suite: the corollary parameter sets and every unordered
// pair of {K3, K4, C5, C7}, at vertex 0 and at one seeded random base-point
// pair. Cases are evaluated on up to `jobs` threads; results come back
// sorted by case key.
struct SuiteCase {
    std::string key;
    std::string kind;  // "corollary" or "theorem2"
    CorollaryParams corollary;
    std::string h_name, k_name;
    GadgetSpec gadget;
    int cap = kDefaultCap;
};

std::vector<SuiteCase> default_suite(std::uint64_t seed);

}  // namespace nbhd
