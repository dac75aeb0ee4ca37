#include "tricode/formats.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include "tricode/version.hpp"

namespace tricode::formats {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

template <class T>
T require(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(std::string("field '") + key + "' has the wrong type");
  }
}

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    bad(std::string("bad ") + what + " '" + text + "'");
  }
  return v;
}

}  // namespace

nlohmann::json matrix_to_json(const F4Matrix& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) entries.push_back(render_row(a.row(i)));
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
}

F4Matrix matrix_from_json(const nlohmann::json& j) {
  const auto rows = require<std::size_t>(j, "rows");
  const auto cols = require<std::size_t>(j, "cols");
  const auto entries = require<std::vector<std::string>>(j, "entries");
  if (entries.size() != rows) bad("matrix has " + std::to_string(entries.size()) + " rows, header says " + std::to_string(rows));
  F4Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row = parse_row(entries[i], cols);
    std::copy(row.begin(), row.end(), out.row(i).begin());
  }
  return out;
}

nlohmann::json bundle_to_json(const sss::PublicBundle& bundle) {
  return {
      {"format", "tricode-public"},
      {"version", kVersion},
      {"n", bundle.n},
      {"m", bundle.m},
      {"pair", bundle.pair.to_string()},
      {"R", matrix_to_json(bundle.remainder)},
      {"G", matrix_to_json(bundle.generator)},
  };
}

sss::PublicBundle bundle_from_json(const nlohmann::json& j) {
  sss::PublicBundle bundle;
  bundle.n = require<std::size_t>(j, "n");
  bundle.m = require<std::size_t>(j, "m");
  bundle.pair = GeneratorVectorPair::parse(require<std::string>(j, "pair"));
  bundle.remainder = matrix_from_json(require<nlohmann::json>(j, "R"));
  bundle.generator = matrix_from_json(require<nlohmann::json>(j, "G"));
  if (bundle.pair.n != bundle.n) bad("public bundle: pair length differs from n");
  if (bundle.remainder.rows() != 2 * bundle.n || bundle.remainder.cols() != 2 * bundle.n) {
    bad("public bundle: R must be 2n x 2n");
  }
  if (bundle.generator.rows() != bundle.n || bundle.generator.cols() != 2 * bundle.n) {
    bad("public bundle: G must be n x 2n");
  }
  return bundle;
}

std::string render_share(const sss::Share& share, const sss::PublicBundle& bundle) {
  std::ostringstream out;
  out << "tricode-share\n"
      << "n " << bundle.n << '\n'
      << "m " << bundle.m << '\n'
      << "index " << share.index << '\n'
      << "pair " << bundle.pair.to_string() << '\n'
      << render_row(share.v) << '\n';
  return out.str();
}

ShareFile parse_share(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.size() != 6 || lines[0] != "tricode-share") bad("not a share file");

  const auto field = [&](std::size_t i, const std::string& key) {
    const std::string& line = lines[i];
    if (line.rfind(key + " ", 0) != 0) bad("share file: expected '" + key + "' on line " + std::to_string(i + 1));
    return line.substr(key.size() + 1);
  };

  ShareFile file;
  file.n = parse_count(field(1, "n"), "n");
  file.m = parse_count(field(2, "m"), "m");
  file.share.index = parse_count(field(3, "index"), "index");
  file.pair = GeneratorVectorPair::parse(field(4, "pair"));
  if (file.pair.n != file.n) bad("share file: pair length differs from n");
  file.share.v = parse_row(lines[5], 2 * file.n);
  return file;
}

ShareFile parse_share(const std::string& text) {
  std::istringstream in(text);
  return parse_share(in);
}

DmaxTable dmax_table_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("d_max table must be a JSON object mapping n to d_max");
  DmaxTable table;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_unsigned()) bad("d_max table: value for '" + key + "' is not a count");
    table[parse_count(key, "length")] = value.get<std::size_t>();
  }
  return table;
}

nlohmann::json census_to_json(const CensusReport& report) {
  nlohmann::json histogram = nlohmann::json::object();
  for (const auto& [d, count] : report.distance_histogram) histogram[std::to_string(d)] = count;
  return {
      {"version", kVersion},
      {"n", report.n},
      {"total_pairs", report.total_pairs},
      {"distance_histogram", histogram},
      {"reversible_count", report.reversible_count},
      {"extremal_count", report.extremal_count},
      {"palindromic_pairs", report.palindromic_pairs},
      {"reversibility_violations", report.reversibility_violations},
      {"elapsed_seconds", report.elapsed_seconds},
  };
}

}  // namespace tricode::formats
