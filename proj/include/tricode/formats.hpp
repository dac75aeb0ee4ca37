#pragma once

// On-disk formats shared by the CLI and the secret-sharing workflow.

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "tricode/census.hpp"
#include "tricode/code.hpp"
#include "tricode/sss.hpp"

namespace tricode::formats {

/// Matrix as {"rows": r, "cols": c, "entries": ["w 1 0", ...]}.
nlohmann::json matrix_to_json(const F4Matrix& a);
F4Matrix matrix_from_json(const nlohmann::json& j);

/// public.json: n, m, pair, R and G as symbol matrices, plus the version.
nlohmann::json bundle_to_json(const sss::PublicBundle& bundle);
sss::PublicBundle bundle_from_json(const nlohmann::json& j);

// Share file, e.g.
//
//   tricode-share
//   n 2
//   m 3
//   index 1
//   pair 2;1;1
//   1 1 W W
//
// The last line holds the 2n symbols of v.
std::string render_share(const sss::Share& share, const sss::PublicBundle& bundle);

struct ShareFile {
  std::size_t n = 0;
  std::size_t m = 0;
  GeneratorVectorPair pair;
  sss::Share share;
};
ShareFile parse_share(std::istream& in);
ShareFile parse_share(const std::string& text);

/// "3": 2 style map of n -> d_max(n).
DmaxTable dmax_table_from_json(const nlohmann::json& j);

nlohmann::json census_to_json(const CensusReport& report);

}  // namespace tricode::formats
