#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "nbhd/verifier.hpp"

namespace nbhd {

using Json = nlohmann::ordered_json;

// Report schema (field order is stable):
//   { case, params, graph_stats{n, m}, chi, omega,
//     lovasz{certified, value, flags}, homology[{dim, betti, torsion[]}],
//     witnesses{...}, pass, wall_time_ms }
// Arbitrary-precision values (torsion coefficients) are decimal strings.
// wall_time_ms is null unless timing was requested, so reports are
// reproducible byte for byte.

Json to_json(const HomologyGroup& h);
Json to_json(const ConnectivityCertificate& c);

Json bounds_report(const std::string& case_key, const Json& params, const BoundReport& r,
                   std::optional<double> wall_time_ms = std::nullopt);
Json theorem2_report(const std::string& case_key, const Json& params, const WedgeCheckReport& r,
                     const BoundReport& bounds, std::optional<double> wall_time_ms = std::nullopt);
Json corollary_report(const std::string& case_key, const CorollaryReport& r,
                      std::optional<double> wall_time_ms = std::nullopt);

struct SuiteOptions {
    std::uint64_t seed = 0;
    int jobs = 1;
    std::size_t limit = kDefaultFaceLimit;
    bool timing = false;
};

/// Runs every case of default_suite(seed) and assembles one report.
Json run_suite(const SuiteOptions& options);

}  // namespace nbhd
