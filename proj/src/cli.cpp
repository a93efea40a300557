#include "nbhd/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "nbhd/complex.hpp"
#include "nbhd/constructions.hpp"
#include "nbhd/dimacs.hpp"
#include "nbhd/errors.hpp"
#include "nbhd/homology.hpp"
#include "nbhd/invariants.hpp"
#include "nbhd/report.hpp"
#include "nbhd/verifier.hpp"

namespace nbhd {

namespace {

struct RunConfig {
    std::size_t limit = kDefaultFaceLimit;
    int cap = kDefaultCap;
    std::string output;
    std::string json_path;
    std::string format = "text";
    std::uint64_t seed = 0;
    int jobs = 1;
    bool timing = false;
};

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    Graph load_graph(const std::string& path) {
        std::vector<std::string> warnings;
        Graph g = read_graph(path, &warnings);
        for (const auto& w : warnings) err_ << "warning:dimacs:" << path << ": " << w << '\n';
        return g;
    }

    void emit_graph(const Graph& g, const std::string& comment, const RunConfig& cfg) {
        if (cfg.output.empty())
            write_dimacs(out_, g, comment);
        else
            write_graph(g, cfg.output, comment);
    }

    void emit_json(const Json& report, const RunConfig& cfg) {
        const std::string text = report.dump(2) + "\n";
        if (!cfg.json_path.empty()) {
            std::ofstream f(cfg.json_path);
            if (!f) throw ParseError("cannot write " + cfg.json_path);
            f << text;
        }
        if (cfg.format == "json") out_ << text;
    }

    // Human-readable output goes to stdout only in text mode.
    std::ostream& text(const RunConfig& cfg) { return cfg.format == "text" ? out_ : null_; }

private:
    std::ostream& out_;
    std::ostream& err_;
    std::ostream null_{nullptr};
};

std::optional<double> since(std::chrono::steady_clock::time_point start, bool timing) {
    if (!timing) return std::nullopt;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void print_bounds(std::ostream& os, const BoundReport& r) {
    os << "n=" << r.n << " m=" << r.m << '\n'
       << "chi=" << r.chi << " omega=" << r.omega << " dsatur=" << r.greedy_upper << '\n'
       << "lovasz=" << (r.lovasz_certified ? std::to_string(*r.lovasz_certified) : "uncertified")
       << " homological_connectivity=" << r.certificate.homological.to_string() << '\n';
    for (const auto& f : r.flags) os << "flag: " << f << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Neighborhood complexes, topological coloring bounds and gadget verification", "nbhd"};
    app.require_subcommand(1);
    app.fallthrough();
    // "--h" names the graph H, so help is long-form only.
    app.set_help_flag("--help", "print help and exit");

    RunConfig cfg;
    app.add_option("--limit", cfg.limit, "face-count budget")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "stdout format")->check(CLI::IsMember({"text", "json"}));

    Runner runner(out, err);
    std::function<int()> action;

    // construct
    auto* construct = app.add_subcommand("construct", "build a graph and write it as DIMACS");
    construct->require_subcommand(1);
    construct->add_option("-o,--output", cfg.output, "output file (default stdout)");
    int p = 0, l = 0, m = 0, n = 0, k = 0, q = 0, times = 1;
    Vertex x = 0, y = 0;
    std::string graph_path, h_path, k_path, complex_path;

    auto* c_complete = construct->add_subcommand("complete", "complete graph K_p");
    c_complete->add_option("--p", p)->required();
    c_complete->callback([&] { action = [&] { runner.emit_graph(complete_graph(p), "complete " + std::to_string(p), cfg); return 0; }; });

    auto* c_bip = construct->add_subcommand("bipartite", "complete bipartite graph K_{l,m}");
    c_bip->add_option("--l", l)->required();
    c_bip->add_option("--m", m)->required();
    c_bip->callback([&] {
        action = [&] {
            runner.emit_graph(complete_bipartite(l, m), "bipartite " + std::to_string(l) + " " + std::to_string(m), cfg);
            return 0;
        };
    });

    auto* c_cycle = construct->add_subcommand("cycle", "cycle C_n");
    c_cycle->add_option("--n", n)->required();
    c_cycle->callback([&] { action = [&] { runner.emit_graph(cycle_graph(n), "cycle " + std::to_string(n), cfg); return 0; }; });

    auto* c_kneser = construct->add_subcommand("kneser", "Kneser graph KG(n,k)");
    c_kneser->add_option("--n", n)->required();
    c_kneser->add_option("--k", k)->required();
    c_kneser->callback([&] {
        action = [&] {
            runner.emit_graph(kneser_graph(n, k), "kneser " + std::to_string(n) + " " + std::to_string(k), cfg);
            return 0;
        };
    });

    auto* c_myc = construct->add_subcommand("mycielski", "Mycielskian of a graph file");
    c_myc->add_option("graph", graph_path)->required();
    c_myc->add_option("--times", times, "number of iterations")->check(CLI::NonNegativeNumber);
    c_myc->callback([&] {
        action = [&] {
            Graph g = runner.load_graph(graph_path);
            for (int i = 0; i < times; ++i) g = mycielskian(g);
            runner.emit_graph(g, "mycielski x" + std::to_string(times), cfg);
            return 0;
        };
    });

    auto* c_tf = construct->add_subcommand("trianglefree", "triangle-free graph of chromatic number q");
    c_tf->add_option("--q", q)->required();
    c_tf->callback([&] {
        action = [&] { runner.emit_graph(triangle_free_chromatic(q), "trianglefree " + std::to_string(q), cfg); return 0; };
    });

    auto* c_gadget = construct->add_subcommand("gadget", "H and K joined by a path x - z - y");
    c_gadget->add_option("--h", h_path)->required();
    c_gadget->add_option("--x", x)->default_val(0);
    c_gadget->add_option("--k", k_path)->required();
    c_gadget->add_option("--y", y)->default_val(0);
    c_gadget->callback([&] {
        action = [&] {
            Gadget gd = build_gadget({runner.load_graph(h_path), x, runner.load_graph(k_path), y});
            runner.emit_graph(gd.graph, "gadget bridge " + std::to_string(gd.bridge + 1), cfg);
            return 0;
        };
    });

    auto* c_cor = construct->add_subcommand("corollary", "two copies of K_p + K_{l,m} + T joined by the gadget");
    for (auto [name, ref] : {std::pair{"--l", &l}, {"--m", &m}, {"--p", &p}, {"--q", &q}})
        c_cor->add_option(name, *ref)->required();
    c_cor->callback([&] {
        action = [&] {
            CorollaryGraph cg = build_corollary_graph({l, m, p, q});
            runner.emit_graph(cg.graph, "corollary l=" + std::to_string(l) + " m=" + std::to_string(m) +
                                            " p=" + std::to_string(p) + " q=" + std::to_string(q),
                              cfg);
            return 0;
        };
    });

    // ncomplex
    auto* ncomplex = app.add_subcommand("ncomplex", "neighborhood complex of a graph as a facet list");
    ncomplex->add_option("graph", graph_path)->required();
    ncomplex->add_option("-o,--output", cfg.output);
    ncomplex->callback([&] {
        action = [&] {
            auto c = neighborhood_complex(runner.load_graph(graph_path));
            if (cfg.output.empty())
                write_facets(out, c);
            else
                write_facets(c, cfg.output);
            return 0;
        };
    });

    // homology
    auto* homology = app.add_subcommand("homology", "reduced integral homology of a facet list");
    homology->add_option("--complex", complex_path)->required();
    homology->add_option("--max-dim", cfg.cap)->required()->check(CLI::NonNegativeNumber);
    homology->add_option("--json", cfg.json_path);
    homology->callback([&] {
        action = [&] {
            auto c = read_facets(complex_path);
            auto profile = reduced_homology_profile(c, cfg.cap, cfg.limit);
            auto& os = runner.text(cfg);
            Json list = Json::array();
            for (const auto& h : profile) {
                os << "H~" << h.dimension << " = " << h.to_string() << "  (betti " << h.betti << ")\n";
                list.push_back(to_json(h));
            }
            runner.emit_json(Json{{"complex", complex_path}, {"homology", list}}, cfg);
            return 0;
        };
    });

    // invariants
    auto* chromatic = app.add_subcommand("chromatic", "exact chromatic number");
    chromatic->add_option("graph", graph_path)->required();
    chromatic->callback([&] {
        action = [&] {
            auto w = chromatic_number(runner.load_graph(graph_path));
            auto& os = runner.text(cfg);
            os << "chi=" << w.k << "\ncoloring:";
            for (int c : w.assignment) os << ' ' << c;
            os << '\n';
            if (cfg.format == "json") out << Json{{"chi", w.k}, {"coloring", w.assignment}}.dump(2) << '\n';
            return 0;
        };
    });

    auto* clique = app.add_subcommand("clique", "maximum clique");
    clique->add_option("graph", graph_path)->required();
    clique->callback([&] {
        action = [&] {
            auto w = max_clique(runner.load_graph(graph_path));
            auto& os = runner.text(cfg);
            os << "omega=" << w.size() << "\nclique:";
            for (Vertex v : w.vertices) os << ' ' << v;
            os << '\n';
            if (cfg.format == "json") out << Json{{"omega", w.size()}, {"clique", w.vertices}}.dump(2) << '\n';
            return 0;
        };
    });

    auto* bounds = app.add_subcommand("bounds", "chromatic number against clique and topological bounds");
    bounds->add_option("graph", graph_path)->required();
    bounds->add_option("--max-dim", cfg.cap)->check(CLI::NonNegativeNumber);
    bounds->add_option("--json", cfg.json_path);
    bounds->add_flag("--timing", cfg.timing);
    bounds->callback([&] {
        action = [&] {
            const auto start = std::chrono::steady_clock::now();
            auto r = compare_bounds(runner.load_graph(graph_path), cfg.cap, cfg.limit);
            print_bounds(runner.text(cfg), r);
            Json report = bounds_report("bounds/" + graph_path, Json{{"graph", graph_path}, {"cap", cfg.cap}}, r,
                                        since(start, cfg.timing));
            runner.emit_json(report, cfg);
            return report["pass"].get<bool>() ? 0 : 1;
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification pipeline");
    verify->require_subcommand(1);
    verify->add_option("--json", cfg.json_path);
    verify->add_flag("--timing", cfg.timing, "record wall_time_ms");

    auto* v_t2 = verify->add_subcommand("theorem2", "wedge homology and conn = 0 for a gadget");
    v_t2->add_option("--h", h_path)->required();
    v_t2->add_option("--x", x)->default_val(0);
    v_t2->add_option("--k", k_path)->required();
    v_t2->add_option("--y", y)->default_val(0);
    v_t2->add_option("--max-dim", cfg.cap)->check(CLI::NonNegativeNumber);
    v_t2->callback([&] {
        action = [&] {
            const auto start = std::chrono::steady_clock::now();
            GadgetSpec spec{runner.load_graph(h_path), x, runner.load_graph(k_path), y};
            auto r = verify_theorem2(spec, cfg.cap, cfg.limit);
            auto b = compare_bounds(r.gadget.graph, cfg.cap, cfg.limit);
            Json params{{"h", h_path}, {"x", x}, {"k", k_path}, {"y", y}, {"cap", cfg.cap}};
            auto& os = runner.text(cfg);
            for (const auto& row : r.rows)
                os << "dim " << row.dim << ": gadget " << row.betti_gadget << " = " << row.betti_h << " + "
                   << row.betti_k << (row.dim == 1 ? " + 1" : "") << (row.betti_pass && row.torsion_pass ? "  ok" : "  FAIL")
                   << '\n';
            os << "conn=0 certified: " << (r.certificate.certified_conn_zero ? "yes" : "no") << '\n'
               << (r.pass ? "PASS" : "FAIL") << '\n';
            runner.emit_json(theorem2_report("theorem2", params, r, b, since(start, cfg.timing)), cfg);
            return r.pass ? 0 : 1;
        };
    });

    auto* v_cor = verify->add_subcommand("corollary", "chi = q, omega = p, K_{l,m} inside, Lovasz bound 3");
    for (auto [name, ref] : {std::pair{"--l", &l}, {"--m", &m}, {"--p", &p}, {"--q", &q}})
        v_cor->add_option(name, *ref)->required();
    v_cor->callback([&] {
        action = [&] {
            const auto start = std::chrono::steady_clock::now();
            auto r = verify_corollary({l, m, p, q}, cfg.limit);
            auto& os = runner.text(cfg);
            print_bounds(os, r.bounds);
            os << "biclique K_{" << l << "," << m << "}: " << (r.biclique_ok ? "valid" : "INVALID") << '\n';
            for (const auto& f : r.failures) os << "failed: " << f << '\n';
            os << (r.pass ? "PASS" : "FAIL") << '\n';
            runner.emit_json(corollary_report("corollary", r, since(start, cfg.timing)), cfg);
            return r.pass ? 0 : 1;
        };
    });

    auto* v_suite = verify->add_subcommand("suite", "every corollary and gadget case");
    v_suite->add_option("--seed", cfg.seed);
    v_suite->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
    v_suite->callback([&] {
        action = [&] {
            Json report = run_suite({cfg.seed, cfg.jobs, cfg.limit, cfg.timing});
            auto& os = runner.text(cfg);
            for (const auto& c : report["cases"])
                os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["case"].get<std::string>() << '\n';
            runner.emit_json(report, cfg);
            return report["pass"].get<bool>() ? 0 : 1;
        };
    });

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error:usage:" << e.what() << '\n';
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "error:" << e.kind() << ":" << e.what() << '\n';
        return kExitBudget;
    } catch (const Error& e) {
        err << "error:" << e.kind() << ":" << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error:internal:" << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace nbhd
