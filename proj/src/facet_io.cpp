#include <fstream>
#include <limits>
#include <sstream>

#include "nbhd/complex.hpp"
#include "nbhd/errors.hpp"

namespace nbhd {

SimplicialComplex read_facets(std::istream& in) {
    std::vector<Face> faces;
    long long declared = -1;
    Vertex max_id = -1;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::istringstream cs(line.substr(hash + 1));
            std::string key;
            long long n = 0;
            if (cs >> key >> n && key == "vertices") declared = n;
            line.erase(hash);
        }
        std::istringstream ls(line);
        Face face;
        long long v = 0;
        while (ls >> v) {
            if (v < 0 || v > std::numeric_limits<Vertex>::max() / 2)
                throw ParseError("line " + std::to_string(lineno) + ": vertex id out of range");
            face.push_back(static_cast<Vertex>(v));
            max_id = std::max(max_id, static_cast<Vertex>(v));
        }
        if (!ls.eof()) throw ParseError("line " + std::to_string(lineno) + ": expected vertex ids");
        if (!face.empty()) faces.push_back(std::move(face));
    }
    if (declared >= 0 && declared <= max_id)
        throw ParseError("declared " + std::to_string(declared) + " vertices but face uses id " +
                         std::to_string(max_id));
    Vertex n = declared >= 0 ? static_cast<Vertex>(declared) : max_id + 1;
    return SimplicialComplex::from_faces(n, std::move(faces));
}

SimplicialComplex read_facets(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_facets(in);
}

void write_facets(std::ostream& out, const SimplicialComplex& c) {
    out << "# vertices " << c.num_vertices() << '\n';
    for (const auto& f : c.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << '\n';
    }
}

void write_facets(const SimplicialComplex& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    write_facets(out, c);
}

}  // namespace nbhd
