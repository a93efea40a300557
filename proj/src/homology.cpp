#include "nbhd/homology.hpp"

#include <optional>
#include <sstream>

#include "nbhd/boundary.hpp"
#include "nbhd/errors.hpp"
#include "nbhd/smith.hpp"

namespace nbhd {

std::string HomologyGroup::to_string() const {
    if (trivial()) return "0";
    std::ostringstream os;
    const char* sep = "";
    if (betti > 0) {
        os << "Z";
        if (betti > 1) os << "^" << betti;
        sep = " + ";
    }
    for (const auto& t : torsion) {
        os << sep << "Z/" << t;
        sep = " + ";
    }
    return os.str();
}

std::string HomologicalConnectivity::to_string() const {
    switch (kind) {
        case Kind::Empty: return "empty";
        case Kind::Exact: return std::to_string(value);
        case Kind::AtLeast: return ">=" + std::to_string(value);
    }
    return {};
}

std::vector<HomologyGroup> reduced_homology_profile(const SimplicialComplex& c, int max_dim,
                                                    std::size_t limit) {
    if (max_dim < 0) throw ParameterError("homology degree must be non-negative");
    std::vector<HomologyGroup> out;
    if (c.empty()) {
        for (int i = 0; i <= max_dim; ++i) out.push_back({i, 0, {}});
        return out;
    }

    const FaceTable table = faces_up_to(c, max_dim + 1, limit);

    // snf[i] belongs to the boundary map out of dimension i, i = 1..max_dim+1.
    std::vector<std::optional<SnfResult>> snf(static_cast<std::size_t>(max_dim) + 2);
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 1; i <= max_dim + 1; ++i) {
        if (table.count(i) == 0) {
            snf[static_cast<std::size_t>(i)] = SnfResult{};
            continue;
        }
        snf[static_cast<std::size_t>(i)] = smith_normal_form(boundary_matrix(table, i));
    }

    for (int i = 0; i <= max_dim; ++i) {
        // Degree 0 uses the augmentation, which has rank 1 on a nonempty complex.
        const std::size_t rank_in = i == 0 ? 1 : snf[static_cast<std::size_t>(i)]->rank;
        const SnfResult& next = *snf[static_cast<std::size_t>(i) + 1];
        HomologyGroup h;
        h.dimension = i;
        h.betti = table.count(i) - rank_in - next.rank;
        for (const auto& d : next.invariant_factors)
            if (d > 1) h.torsion.push_back(d);
        out.push_back(std::move(h));
    }
    return out;
}

HomologyGroup reduced_homology(const SimplicialComplex& c, int i, std::size_t limit) {
    if (i < 0) throw ParameterError("homology degree must be non-negative");
    if (c.empty()) return {i, 0, {}};

    const FaceTable table = faces_up_to(c, i + 1, limit);
    const std::size_t rank_in =
        i == 0 ? 1 : (table.count(i) == 0 ? 0 : smith_normal_form(boundary_matrix(table, i)).rank);
    SnfResult next;
    if (table.count(i + 1) > 0) next = smith_normal_form(boundary_matrix(table, i + 1));

    HomologyGroup h;
    h.dimension = i;
    h.betti = table.count(i) - rank_in - next.rank;
    for (const auto& d : next.invariant_factors)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

HomologicalConnectivity homological_connectivity(const std::vector<HomologyGroup>& profile, bool nonempty) {
    if (!nonempty) return HomologicalConnectivity::empty();
    for (const auto& h : profile)
        if (!h.trivial()) return HomologicalConnectivity::exact(h.dimension - 1);
    return HomologicalConnectivity::at_least(static_cast<int>(profile.size()) - 1);
}

HomologicalConnectivity homological_connectivity(const SimplicialComplex& c, int cap, std::size_t limit) {
    if (cap < 0) throw ParameterError("connectivity cap must be non-negative");
    if (c.empty()) return HomologicalConnectivity::empty();
    return homological_connectivity(reduced_homology_profile(c, cap, limit), true);
}

ConnectivityCertificate certify_conn_zero(const SimplicialComplex& c, std::size_t limit, int cap) {
    ConnectivityCertificate cert;
    cert.nonempty = !c.empty();
    Vertex count = 0;
    cert.component_of = complex_components(c, &count);
    cert.components = static_cast<std::size_t>(count);
    cert.connected = cert.nonempty && count == 1;
    if (!cert.nonempty) return cert;

    if (!cert.connected) {
        // H~_0 != 0 already; higher degrees are not needed for the value.
        cert.profile = {reduced_homology(c, 0, limit)};
        cert.homological = HomologicalConnectivity::exact(-1);
        return cert;
    }

    cert.h1 = reduced_homology(c, 1, limit);
    cert.certified_conn_zero = !cert.h1.trivial();
    if (cert.certified_conn_zero) {
        cert.profile = {HomologyGroup{0, 0, {}}, cert.h1};
        cert.homological = HomologicalConnectivity::exact(0);
    } else {
        cert.profile = reduced_homology_profile(c, std::max(cap, 1), limit);
        cert.homological = homological_connectivity(cert.profile, true);
    }
    return cert;
}

}  // namespace nbhd
