#include "nbhd/dimacs.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "nbhd/errors.hpp"

namespace nbhd {

namespace {

ParseError at_line(std::size_t line, const std::string& msg) {
    return ParseError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Graph read_dimacs(std::istream& in, std::vector<std::string>* warnings) {
    long long n = -1, declared = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::size_t duplicates = 0, edge_lines = 0;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string format;
            if (n >= 0) throw at_line(lineno, "second problem line");
            if (!(ls >> format >> n >> declared) || (format != "edge" && format != "col"))
                throw at_line(lineno, "malformed header, expected 'p edge <n> <m>'");
            if (n < 0 || declared < 0) throw at_line(lineno, "negative size in header");
        } else if (tag == "e") {
            if (n < 0) throw at_line(lineno, "edge before problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) throw at_line(lineno, "malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n)
                throw at_line(lineno, "vertex out of range 1.." + std::to_string(n));
            if (u == v) throw at_line(lineno, "self-loop");
            ++edge_lines;
            Edge e{static_cast<Vertex>(std::min(u, v) - 1), static_cast<Vertex>(std::max(u, v) - 1)};
            if (!seen.insert(e).second) {
                ++duplicates;
                continue;
            }
            edges.push_back(e);
        } else {
            throw at_line(lineno, "unknown line type '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError("missing problem line");
    if (warnings) {
        if (duplicates > 0)
            warnings->push_back("dropped " + std::to_string(duplicates) + " duplicate edge(s)");
        if (static_cast<long long>(edge_lines) != declared)
            warnings->push_back("header declares " + std::to_string(declared) + " edges, found " +
                                std::to_string(edge_lines));
    }
    return Graph::from_edges(static_cast<Vertex>(n), edges);
}

Graph read_graph(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_dimacs(in, warnings);
}

void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment) {
    if (!comment.empty()) out << "c " << comment << '\n';
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_graph(const Graph& g, const std::string& path, const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    write_dimacs(out, g, comment);
}

}  // namespace nbhd
