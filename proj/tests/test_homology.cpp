#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nbhd/boundary.hpp"
#include "nbhd/errors.hpp"
#include "nbhd/homology.hpp"
#include "nbhd/smith.hpp"
#include "oracles.hpp"

using namespace nbhd;

namespace {

// Fraction-free Gaussian elimination.
Integer bareiss_determinant(DenseMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntegerMatrix matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    DenseMatrix d;
    for (auto r : rows) {
        std::vector<Integer> row;
        for (auto v : r) row.emplace_back(v);
        d.push_back(row);
    }
    return IntegerMatrix::from_dense(d);
}

std::vector<Integer> ints(std::initializer_list<long long> vs) {
    std::vector<Integer> out;
    for (auto v : vs) out.emplace_back(v);
    return out;
}

HomologyGroup group(int dim, std::size_t betti, std::vector<Integer> torsion = {}) {
    return {dim, betti, std::move(torsion)};
}

}  // namespace

TEST_CASE("boundary matrix examples") {
    auto edge = faces_up_to(SimplicialComplex::from_faces(2, {{0, 1}}), 1);
    CHECK(boundary_matrix(edge, 1).to_dense() == DenseMatrix{{-1}, {1}});

    auto triangle = faces_up_to(SimplicialComplex::from_faces(3, {{0, 1}, {0, 2}, {1, 2}}), 1);
    auto d1 = boundary_matrix(triangle, 1);
    CHECK(d1.rows() == 3);
    CHECK(d1.cols() == 3);
    CHECK(smith_normal_form(d1).rank == 2);

    auto k4 = faces_up_to(neighborhood_complex(complete_graph(4)), 2);
    CHECK((boundary_matrix(k4, 1) * boundary_matrix(k4, 2)).is_zero());

    CHECK_THROWS_AS(boundary_matrix(k4, 3), ParameterError);
    CHECK_THROWS_AS(boundary_matrix(k4, 0), ParameterError);
}

TEST_CASE("parallel boundary assembly matches the serial reference") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        auto t = faces_up_to(oracle::random_complex(rng, 8), 4);
        for (int i = 1; i <= 4; ++i) CHECK(boundary_matrix(t, i) == serial::boundary_matrix(t, i));
    }
}

TEST_CASE("boundary of a boundary vanishes") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        auto c = oracle::random_complex(rng, 8);
        auto t = faces_up_to(c, std::max(c.dimension(), 2));
        for (int i = 2; i <= t.max_dim(); ++i)
            CHECK((boundary_matrix(t, i - 1) * boundary_matrix(t, i)).is_zero());
    }
}

TEST_CASE("smith normal form examples") {
    CHECK(smith_normal_form(matrix({{2, 0}, {0, 3}})).invariant_factors == ints({1, 6}));
    auto zero = smith_normal_form(matrix({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
    CHECK(zero.rank == 0);
    CHECK(zero.invariant_factors.empty());
    CHECK(smith_normal_form(matrix({{2, 4}, {6, 8}})).invariant_factors == ints({2, 4}));
    CHECK(oracle::invariant_factors_by_minors({{2, 4}, {6, 8}}) == std::vector<long long>{2, 4});
    CHECK(smith_normal_form(IntegerMatrix(0, 5)).rank == 0);
    CHECK(smith_normal_form(matrix({{6}})).invariant_factors == ints({6}));
    CHECK(smith_normal_form(matrix({{-4, 6}})).invariant_factors == ints({2}));
}

TEST_CASE("diagonal normalization") {
    CHECK(normalize_diagonal(ints({4, 6, 1, 0})) == ints({1, 2, 12}));
    CHECK(normalize_diagonal(ints({-3, 2})) == ints({1, 6}));
}

TEST_CASE("smith normal form against the minor-gcd oracle") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    std::bernoulli_distribution sparse(0.3);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
        DenseMatrix d(rows, std::vector<Integer>(cols));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                m[r][c] = sparse(rng) ? 0 : entry(rng);
                d[r][c] = m[r][c];
            }
        const auto expected = oracle::invariant_factors_by_minors(m);
        const auto mat = IntegerMatrix::from_dense(d);
        const auto snf = smith_normal_form(mat);
        std::vector<long long> got;
        for (const auto& f : snf.invariant_factors) got.push_back(static_cast<long long>(f));
        CHECK(got == expected);
        CHECK(snf.rank == expected.size());

        for (std::size_t i = 1; i < snf.invariant_factors.size(); ++i)
            CHECK(snf.invariant_factors[i] % snf.invariant_factors[i - 1] == 0);

        const auto w = smith_normal_form_with_transforms(mat);
        CHECK(w.snf == snf);
        CHECK(multiply(multiply(w.u, d), w.v) == w.diagonal);
        CHECK(abs(bareiss_determinant(w.u)) == 1);
        CHECK(abs(bareiss_determinant(w.v)) == 1);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (r != c) CHECK(w.diagonal[r][c] == 0);
    }
}

TEST_CASE("smith normal form is deterministic") {
    auto t = faces_up_to(neighborhood_complex(kneser_graph(6, 2)), 2);
    auto m = boundary_matrix(t, 2);
    CHECK(smith_normal_form(m) == smith_normal_form(m));
}

TEST_CASE("reduced homology examples") {
    auto simplex = SimplicialComplex::from_faces(3, {{0, 1, 2}});
    for (int i = 0; i <= 2; ++i) CHECK(reduced_homology(simplex, i).trivial());

    CHECK(reduced_homology(neighborhood_complex(cycle_graph(4)), 0) == group(0, 1));

    auto k4 = neighborhood_complex(complete_graph(4));
    CHECK(reduced_homology(k4, 0).trivial());
    CHECK(reduced_homology(k4, 1).trivial());
    CHECK(reduced_homology(k4, 2) == group(2, 1));
    CHECK(reduced_homology_profile(k4, 3) ==
          std::vector<HomologyGroup>{group(0, 0), group(1, 0), group(2, 1), group(3, 0)});

    CHECK(reduced_homology(neighborhood_complex(cycle_graph(5)), 1) == group(1, 1));
    CHECK(reduced_homology(SimplicialComplex{}, 0).trivial());
    CHECK_THROWS_AS(reduced_homology(k4, -1), ParameterError);
}

TEST_CASE("torsion: real projective plane") {
    // Six-vertex triangulation of RP^2.
    auto rp2 = SimplicialComplex::from_faces(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                                 {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
    CHECK(reduced_homology(rp2, 0).trivial());
    CHECK(reduced_homology(rp2, 1) == group(1, 0, ints({2})));
    CHECK(reduced_homology(rp2, 2).trivial());
    CHECK(reduced_homology(rp2, 1).to_string() == "Z/2");
}

TEST_CASE("sphere homology") {
    for (int n = 2; n <= 5; ++n) {
        auto profile = reduced_homology_profile(oracle::simplex_boundary(n), n);
        for (int i = 0; i <= n; ++i) CHECK(profile[i] == group(i, i == n - 1 ? 1 : 0));
    }
}

TEST_CASE("cones are acyclic") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        auto c = oracle::cone(oracle::random_complex(rng, 7));
        for (const auto& h : reduced_homology_profile(c, c.dimension())) CHECK(h.trivial());
    }
}

TEST_CASE("homology is independent of facet order") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        auto c = oracle::random_complex(rng, 8);
        auto facets = c.facets();
        std::shuffle(facets.begin(), facets.end(), rng);
        for (auto& f : facets) std::reverse(f.begin(), f.end());
        auto shuffled = SimplicialComplex::from_faces(c.num_vertices(), facets);
        CHECK(reduced_homology_profile(c, 3) == reduced_homology_profile(shuffled, 3));
    }
}

TEST_CASE("euler characteristic equals the alternating betti sum") {
    std::mt19937_64 rng(61);
    auto check = [](const SimplicialComplex& c) {
        if (c.empty()) return;
        long long alt = 0;
        for (const auto& h : reduced_homology_profile(c, c.dimension()))
            alt += (h.dimension % 2 == 0 ? 1 : -1) * static_cast<long long>(h.betti);
        CHECK(alt + 1 == euler_characteristic(c));
    };
    for (int trial = 0; trial < 100; ++trial) check(oracle::random_complex(rng, 8));
    for (const auto& [name, g] : oracle::corpus()) {
        auto c = neighborhood_complex(g);
        if (c.dimension() <= 5) check(c);
    }
}

TEST_CASE("homological connectivity") {
    CHECK(homological_connectivity(SimplicialComplex{}, 2) == HomologicalConnectivity::empty());
    CHECK(homological_connectivity(SimplicialComplex{}, 2).value == -2);
    CHECK(homological_connectivity(neighborhood_complex(complete_graph(3)), 2) == HomologicalConnectivity::exact(0));
    auto k4 = homological_connectivity(neighborhood_complex(complete_graph(4)), 2);
    CHECK(k4 == HomologicalConnectivity::exact(1));
    CHECK(k4.homological_only());
    CHECK(homological_connectivity(neighborhood_complex(complete_graph(4)), 1) ==
          HomologicalConnectivity::at_least(1));
    CHECK(homological_connectivity(neighborhood_complex(cycle_graph(4)), 2) == HomologicalConnectivity::exact(-1));
    CHECK_THROWS_AS(homological_connectivity(neighborhood_complex(complete_graph(3)), -1), ParameterError);
}

TEST_CASE("conn = 0 certificates") {
    auto c5 = certify_conn_zero(neighborhood_complex(cycle_graph(5)));
    CHECK(c5.nonempty);
    CHECK(c5.connected);
    CHECK(c5.h1 == group(1, 1));
    CHECK(c5.certified_conn_zero);

    auto gadget = certify_conn_zero(neighborhood_complex(build_gadget({complete_graph(3), 0, complete_graph(3), 0}).graph));
    CHECK(gadget.certified_conn_zero);
    CHECK(gadget.h1 == group(1, 3));

    auto c4 = certify_conn_zero(neighborhood_complex(cycle_graph(4)));
    CHECK(c4.nonempty);
    CHECK_FALSE(c4.connected);
    CHECK(c4.components == 2);
    CHECK_FALSE(c4.certified_conn_zero);
    CHECK(c4.homological == HomologicalConnectivity::exact(-1));

    auto k4 = certify_conn_zero(neighborhood_complex(complete_graph(4)));
    CHECK(k4.connected);
    CHECK(k4.h1.trivial());
    CHECK_FALSE(k4.certified_conn_zero);
    CHECK(k4.homological == HomologicalConnectivity::exact(1));

    auto empty = certify_conn_zero(SimplicialComplex{});
    CHECK_FALSE(empty.nonempty);
    CHECK_FALSE(empty.certified_conn_zero);
    CHECK(empty.homological == HomologicalConnectivity::empty());

    // Certified implies nonempty, connected and H_1 != 0.
    for (const auto& [name, g] : oracle::corpus()) {
        auto cert = certify_conn_zero(neighborhood_complex(g));
        if (cert.certified_conn_zero) CHECK_MESSAGE((cert.nonempty && cert.connected && !cert.h1.trivial()), name);
    }
}
