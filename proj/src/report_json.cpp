#include "nbhd/report.hpp"

#include <chrono>
#include <exception>
#include <string>

#include "nbhd/errors.hpp"

namespace nbhd {

namespace {

Json integers(const std::vector<Integer>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

Json homology_array(const std::vector<HomologyGroup>& profile) {
    Json out = Json::array();
    for (const auto& h : profile) out.push_back(to_json(h));
    return out;
}

Json time_field(std::optional<double> ms) { return ms ? Json(*ms) : Json(nullptr); }

Json lovasz_field(const BoundReport& r) {
    Json flags = Json::array();
    for (const auto& f : r.flags) flags.push_back(f);
    return Json{{"certified", r.lovasz_certified.has_value()},
                {"value", r.lovasz_certified ? Json(*r.lovasz_certified) : Json(nullptr)},
                {"flags", flags}};
}

Json witness_field(const BoundReport& r) {
    return Json{{"coloring", r.coloring.assignment},
                {"clique", r.clique.vertices},
                {"greedy_upper", r.greedy_upper},
                {"connectivity", to_json(r.certificate)}};
}

Json params_json(const CorollaryParams& p) {
    return Json{{"l", p.l}, {"m", p.m}, {"p", p.p}, {"q", p.q}};
}

}  // namespace

Json to_json(const HomologyGroup& h) {
    return Json{{"dim", h.dimension}, {"betti", h.betti}, {"torsion", integers(h.torsion)}};
}

Json to_json(const ConnectivityCertificate& c) {
    return Json{{"nonempty", c.nonempty},
                {"connected", c.connected},
                {"components", c.components},
                {"component_of", c.component_of},
                {"h1", to_json(c.h1)},
                {"certified_conn_zero", c.certified_conn_zero},
                {"homological_connectivity", c.homological.to_string()},
                {"homological_only", c.homological.homological_only()}};
}

Json bounds_report(const std::string& case_key, const Json& params, const BoundReport& r,
                   std::optional<double> wall_time_ms) {
    const bool sound = !r.lovasz_certified || *r.lovasz_certified <= r.chi;
    const bool sandwich = r.omega <= r.chi && r.chi <= r.greedy_upper;
    return Json{{"case", case_key},
                {"params", params},
                {"graph_stats", {{"n", r.n}, {"m", r.m}}},
                {"chi", r.chi},
                {"omega", r.omega},
                {"lovasz", lovasz_field(r)},
                {"homology", homology_array(r.certificate.profile)},
                {"witnesses", witness_field(r)},
                {"pass", sound && sandwich},
                {"wall_time_ms", time_field(wall_time_ms)}};
}

Json theorem2_report(const std::string& case_key, const Json& params, const WedgeCheckReport& r,
                     const BoundReport& bounds, std::optional<double> wall_time_ms) {
    Json wedge = Json::array();
    for (const auto& row : r.rows)
        wedge.push_back(Json{{"dim", row.dim},
                             {"betti_gadget", row.betti_gadget},
                             {"betti_h", row.betti_h},
                             {"betti_k", row.betti_k},
                             {"expected", row.expected},
                             {"betti_pass", row.betti_pass},
                             {"torsion_gadget", integers(row.torsion_gadget)},
                             {"torsion_h", integers(row.torsion_h)},
                             {"torsion_k", integers(row.torsion_k)},
                             {"torsion_pass", row.torsion_pass}});
    Json witnesses = witness_field(bounds);
    witnesses["connectivity"] = to_json(r.certificate);
    witnesses["bridge"] = r.gadget.bridge;
    witnesses["x"] = r.gadget.map_h(r.x);
    witnesses["y"] = r.gadget.map_k(r.y);
    witnesses["wedge"] = wedge;

    return Json{{"case", case_key},
                {"params", params},
                {"graph_stats", {{"n", r.gadget.graph.order()}, {"m", r.gadget.graph.size()}}},
                {"chi", bounds.chi},
                {"omega", bounds.omega},
                {"lovasz", lovasz_field(bounds)},
                {"homology", homology_array(r.gadget_profile)},
                {"witnesses", witnesses},
                {"pass", r.pass},
                {"wall_time_ms", time_field(wall_time_ms)}};
}

Json corollary_report(const std::string& case_key, const CorollaryReport& r, std::optional<double> wall_time_ms) {
    Json out = bounds_report(case_key, params_json(r.params), r.bounds, wall_time_ms);
    Json& w = out["witnesses"];
    w["biclique"] = {{"left", r.construction.left}, {"right", r.construction.right}};
    w["clique_block"] = r.construction.clique;
    w["s"] = {r.construction.s_first, r.construction.s_second};
    w["bridge"] = r.construction.bridge;
    w["clauses"] = {{"chi_equals_q", r.chi_ok},
                    {"omega_equals_p", r.omega_ok},
                    {"biclique_valid", r.biclique_ok},
                    {"lovasz_equals_3", r.lovasz_ok}};
    w["failures"] = r.failures;
    out["pass"] = r.pass;
    return out;
}

Json run_suite(const SuiteOptions& options) {
    if (options.jobs < 1) throw ParameterError("--jobs must be >= 1");
    const auto cases = default_suite(options.seed);
    std::vector<Json> results(cases.size());
    std::vector<std::exception_ptr> errors(cases.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(options.jobs)
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        try {
            const auto start = std::chrono::steady_clock::now();
            auto elapsed = [&]() -> std::optional<double> {
                if (!options.timing) return std::nullopt;
                return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            };
            if (c.kind == "corollary") {
                auto r = verify_corollary(c.corollary, options.limit);
                results[i] = corollary_report(c.key, r, elapsed());
            } else {
                auto r = verify_theorem2(c.gadget, c.cap, options.limit);
                auto b = compare_bounds(r.gadget.graph, c.cap, options.limit);
                Json params{{"h", c.h_name}, {"x", c.gadget.x}, {"k", c.k_name}, {"y", c.gadget.y}, {"cap", c.cap}};
                results[i] = theorem2_report(c.key, params, r, b, elapsed());
            }
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    bool pass = true;
    Json list = Json::array();
    for (auto& r : results) {
        pass = pass && r["pass"].get<bool>();
        list.push_back(std::move(r));
    }
    return Json{{"suite", "default"}, {"seed", options.seed}, {"cases", list}, {"pass", pass}};
}

}  // namespace nbhd
