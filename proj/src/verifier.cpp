#include "nbhd/verifier.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "nbhd/errors.hpp"

namespace nbhd {

namespace {

// Prime-power decomposition of each coefficient, as a sorted multiset.
std::vector<Integer> elementary_divisors(const std::vector<Integer>& coefficients) {
    std::vector<Integer> out;
    for (Integer t : coefficients) {
        for (Integer p = 2; p * p <= t; ++p) {
            if (t % p != 0) continue;
            Integer power = 1;
            while (t % p == 0) {
                t /= p;
                power *= p;
            }
            out.push_back(power);
        }
        if (t > 1) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void require_hypothesis(const Graph& g, const char* name) {
    if (g.order() == 0 || !is_connected(g))
        throw PreconditionError(std::string(name) + " violates the hypothesis: connected non-bipartite graphs "
                                "(graph is not connected)");
    if (is_bipartite(g).bipartite)
        throw PreconditionError(std::string(name) + " violates the hypothesis: connected non-bipartite graphs "
                                "(graph is bipartite)");
}

}  // namespace

bool torsion_sums_match(const std::vector<Integer>& a1, const std::vector<Integer>& a2,
                        const std::vector<Integer>& b) {
    std::vector<Integer> sum = a1;
    sum.insert(sum.end(), a2.begin(), a2.end());
    return elementary_divisors(sum) == elementary_divisors(b);
}

BoundReport compare_bounds(const Graph& g, int cap, std::size_t limit) {
    BoundReport r;
    r.n = g.order();
    r.m = g.size();
    r.coloring = chromatic_number(g);
    r.clique = max_clique(g);
    r.chi = r.coloring.k;
    r.omega = static_cast<int>(r.clique.size());
    r.greedy_upper = greedy_dsatur(g).k;

    r.certificate = certify_conn_zero(neighborhood_complex(g), limit, cap);
    const auto& cert = r.certificate;
    if (cert.certified_conn_zero) {
        r.lovasz_certified = 3;
    } else if (cert.nonempty && !cert.connected) {
        r.lovasz_certified = 2;
    } else if (!cert.nonempty) {
        r.flags.emplace_back("empty complex");
    } else {
        r.flags.emplace_back("no certificate");
    }
    if (cert.homological.homological_only()) r.flags.emplace_back("homological-only in degrees >= 2");
    return r;
}

WedgeCheckReport verify_theorem2(const GadgetSpec& spec, int cap, std::size_t limit) {
    if (cap < 0) throw ParameterError("connectivity cap must be non-negative");
    require_hypothesis(spec.h, "H");
    require_hypothesis(spec.k, "K");

    WedgeCheckReport r;
    r.x = spec.x;
    r.y = spec.y;
    r.cap = cap;
    r.gadget = build_gadget(spec);

    const auto complex_g = neighborhood_complex(r.gadget.graph);
    r.gadget_profile = reduced_homology_profile(complex_g, cap, limit);
    const auto prof_h = reduced_homology_profile(neighborhood_complex(spec.h), cap, limit);
    const auto prof_k = reduced_homology_profile(neighborhood_complex(spec.k), cap, limit);

    r.additivity_pass = true;
    for (int i = 0; i <= cap; ++i) {
        const auto& gg = r.gadget_profile[static_cast<std::size_t>(i)];
        const auto& hh = prof_h[static_cast<std::size_t>(i)];
        const auto& kk = prof_k[static_cast<std::size_t>(i)];
        WedgeRow row;
        row.dim = i;
        row.betti_gadget = gg.betti;
        row.betti_h = hh.betti;
        row.betti_k = kk.betti;
        row.expected = hh.betti + kk.betti + (i == 1 ? 1 : 0);
        row.betti_pass = row.betti_gadget == row.expected;
        row.torsion_gadget = gg.torsion;
        row.torsion_h = hh.torsion;
        row.torsion_k = kk.torsion;
        row.torsion_pass = torsion_sums_match(hh.torsion, kk.torsion, gg.torsion);
        r.additivity_pass = r.additivity_pass && row.betti_pass && row.torsion_pass;
        r.rows.push_back(std::move(row));
    }

    r.certificate = certify_conn_zero(complex_g, limit, cap);
    r.pass = r.additivity_pass && r.certificate.certified_conn_zero;
    return r;
}

CorollaryReport verify_corollary(const CorollaryParams& params, std::size_t limit) {
    CorollaryReport r;
    r.params = params;
    r.construction = build_corollary_graph(params);
    const Graph& g = r.construction.graph;
    r.bounds = compare_bounds(g, kDefaultCap, limit);

    r.chi_ok = r.bounds.chi == params.q;
    r.omega_ok = r.bounds.omega == params.p;
    r.biclique_ok = verify_biclique_certificate(g, r.construction.left, r.construction.right);
    r.lovasz_ok = r.bounds.lovasz_certified == 3;

    if (!r.chi_ok) r.failures.emplace_back("chromatic number != q");
    if (!r.omega_ok) r.failures.emplace_back("clique number != p");
    if (!r.biclique_ok) r.failures.emplace_back("biclique certificate rejected");
    if (!r.lovasz_ok) r.failures.emplace_back("conn = 0 not certified");
    r.pass = r.failures.empty();
    return r;
}

std::vector<SuiteCase> default_suite(std::uint64_t seed) {
    std::vector<SuiteCase> cases;
    const CorollaryParams corollary_sets[] = {{1, 2, 2, 3}, {2, 2, 3, 3}, {2, 3, 3, 4}, {2, 2, 3, 5}};
    for (const auto& p : corollary_sets) {
        SuiteCase c;
        c.kind = "corollary";
        c.key = "corollary/l" + std::to_string(p.l) + "-m" + std::to_string(p.m) + "-p" + std::to_string(p.p) +
                "-q" + std::to_string(p.q);
        c.corollary = p;
        cases.push_back(std::move(c));
    }

    const std::vector<std::pair<std::string, Graph>> pool = {
        {"K3", complete_graph(3)}, {"K4", complete_graph(4)}, {"C5", cycle_graph(5)}, {"C7", cycle_graph(7)}};
    std::mt19937_64 rng(seed);
    for (std::size_t a = 0; a < pool.size(); ++a)
        for (std::size_t b = a; b < pool.size(); ++b) {
            const auto& [hn, h] = pool[a];
            const auto& [kn, k] = pool[b];
            const int cap = (hn == "K4" || kn == "K4") ? 3 : 2;
            std::uniform_int_distribution<Vertex> pick_x(0, h.order() - 1), pick_y(0, k.order() - 1);
            Vertex rx = 0, ry = 0;
            while (rx == 0 && ry == 0) {
                rx = pick_x(rng);
                ry = pick_y(rng);
            }
            for (auto [x, y] : {std::pair<Vertex, Vertex>{0, 0}, {rx, ry}}) {
                SuiteCase c;
                c.kind = "theorem2";
                c.key = "theorem2/" + hn + "@" + std::to_string(x) + "+" + kn + "@" + std::to_string(y);
                c.h_name = hn;
                c.k_name = kn;
                c.gadget = {h, x, k, y};
                c.cap = cap;
                cases.push_back(std::move(c));
            }
        }
    std::sort(cases.begin(), cases.end(), [](const SuiteCase& a, const SuiteCase& b) { return a.key < b.key; });
    cases.erase(std::unique(cases.begin(), cases.end(),
                            [](const SuiteCase& a, const SuiteCase& b) { return a.key == b.key; }),
                cases.end());
    return cases;
}

}  // namespace nbhd
