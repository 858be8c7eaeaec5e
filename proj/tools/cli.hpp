#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "maxdist/report.hpp"

namespace maxdist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Single-line object: dist, sq_dist, witness_i, witness_j and every counter.
nlohmann::json report_to_json(const DiameterReport& report);

/// Entry point shared by the executable and the tests. args[0] is the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxdist::cli
