// tricode: analysis, census and secret-sharing front end.
//
// Exit codes: 0 success, 1 domain error (JSON {"error": <name>} on stdout),
// 2 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tricode/census.hpp"
#include "tricode/code.hpp"
#include "tricode/formats.hpp"
#include "tricode/kernels.hpp"
#include "tricode/sss.hpp"
#include "tricode/tridiagonal.hpp"
#include "tricode/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw tricode::Error(tricode::ErrorKind::ParseError, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw tricode::Error(tricode::ErrorKind::ParseError, path + ": " + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

tricode::GeneratorVectorPair usage_pair(const std::string& text) {
  try {
    return tricode::GeneratorVectorPair::parse(text);
  } catch (const tricode::Error& e) {
    throw UsageError(e.what());
  }
}

json rows_json(const tricode::F4Matrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(tricode::render_row(a.row(i)));
  return rows;
}

// ---------------------------------------------------------------- code

struct AnalyzeArgs {
  std::string pair;
  std::string file;
  std::string dmax_table;
};

int cmd_code_analyze(const AnalyzeArgs& args) {
  using namespace tricode;
  std::optional<TridiagonalGenerator> tri;
  F4Matrix generator;
  json out{{"version", kVersion}};

  if (!args.pair.empty()) {
    const auto pair = usage_pair(args.pair);
    tri = build(pair);
    generator = tri->matrix;
    out["input"] = pair.to_string();
    out["pair"] = {
        {"upper", render_row(pair.upper_vector())},
        {"lower", render_row(pair.lower_vector())},
        {"palindromic", is_reversible_pair(pair)},
        {"excluded_from_census", pair.excluded_from_census()},
    };
  } else {
    generator = parse_code(read_file(args.file)).generator();
    out["input"] = args.file;
  }

  DmaxTable table;
  if (!args.dmax_table.empty()) table = formats::dmax_table_from_json(parse_json_file(args.dmax_table));

  const AdditiveCode code(generator);
  const std::size_t n = code.length();
  out["n"] = n;
  out["k"] = code.generator_rows();
  out["f2_rank"] = code.f2_rank();
  out["generator"] = rows_json(generator);

  std::optional<std::size_t> distance;
  if (code.f2_rank() > 0) distance = min_distance(code);
  out["min_distance"] = distance ? json(*distance) : json(nullptr);
  out["weight_distribution"] = weight_distribution(code).counts;
  out["reversible"] = is_reversible(code);

  if (distance && code.f2_rank() == n && code.generator_rows() == n) {
    out["verdict"] = verdict_name(singleton_classify(n, code.f2_rank(), *distance, table));
  } else {
    out["verdict"] = nullptr;
  }

  if (is_graph_generator(generator)) {
    out["dual_generator"] = rows_json(transpose(generator));
    out["dual_source"] = "graph_transpose";
  } else {
    out["dual_generator"] = rows_json(hermitian_dual(code).generator());
    out["dual_source"] = "kernel";
  }
  emit(out);
  return kExitOk;
}

// ---------------------------------------------------------------- census

struct CensusArgs {
  std::size_t n = 0;
  std::size_t workers = 1;
  std::string filter;
  std::string out;
  std::string isa;
};

int cmd_census(const CensusArgs& args) {
  using namespace tricode;
  if (!args.isa.empty()) {
    if (args.isa == "scalar") {
      kernels::set_active_isa(kernels::Isa::Scalar);
    } else if (args.isa == "avx2" && kernels::isa_available(kernels::Isa::Avx2)) {
      kernels::set_active_isa(kernels::Isa::Avx2);
    } else {
      throw UsageError("kernel variant '" + args.isa + "' is not available");
    }
  }
  std::optional<CensusPredicate> predicate;
  if (!args.filter.empty()) {
    try {
      predicate = CensusPredicate::parse(args.filter);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  json report = formats::census_to_json(run_census(args.n, args.workers));
  report["workers"] = args.workers;
  report["kernel"] = std::string(kernels::isa_name(kernels::active_isa()));
  if (predicate) {
    json pairs = json::array();
    for (const auto& p : census_filter(args.n, *predicate, args.workers)) pairs.push_back(p.to_string());
    report["filter"] = predicate->to_string();
    report["pairs"] = pairs;
  }

  if (args.out.empty()) {
    emit(report);
  } else {
    std::ofstream file(args.out);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write '" + args.out + "'");
    file << report.dump(2) << '\n';
    emit({{"version", kVersion}, {"report", args.out}, {"total_pairs", report["total_pairs"]}});
  }
  return kExitOk;
}

// ---------------------------------------------------------------- sss

struct DealArgs {
  std::string pair;
  std::string secret;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string outdir;
};

int cmd_sss_deal(const DealArgs& args) {
  using namespace tricode;
  sss::DealerConfig config;
  config.pair = usage_pair(args.pair);
  config.m = args.m;
  config.seed = args.seed;
  config.secret = parse_f2_matrix(read_file(args.secret));

  const auto dealing = sss::deal(config);

  fs::create_directories(args.outdir);
  json files = json::array();
  for (const auto& share : dealing.shares) {
    const fs::path path = fs::path(args.outdir) / ("share-" + std::to_string(share.index) + ".f4");
    std::ofstream(path) << formats::render_share(share, dealing.bundle);
    files.push_back(path.string());
  }
  const fs::path public_path = fs::path(args.outdir) / "public.json";
  std::ofstream(public_path) << formats::bundle_to_json(dealing.bundle).dump(2) << '\n';

  emit({{"version", kVersion},
        {"n", dealing.bundle.n},
        {"m", dealing.bundle.m},
        {"seed", args.seed},
        {"shares", files},
        {"public", public_path.string()}});
  return kExitOk;
}

struct ReconstructArgs {
  std::string public_file;
  std::vector<std::string> shares;
};

int cmd_sss_reconstruct(const ReconstructArgs& args) {
  using namespace tricode;
  const auto bundle = formats::bundle_from_json(parse_json_file(args.public_file));
  if (args.shares.size() != bundle.n) {
    throw UsageError("reconstruct takes exactly n = " + std::to_string(bundle.n) +
                     " share files, got " + std::to_string(args.shares.size()));
  }
  std::vector<sss::Share> shares;
  for (const auto& path : args.shares) {
    const auto file = formats::parse_share(read_file(path));
    if (file.n != bundle.n || file.pair != bundle.pair) {
      throw Error(ErrorKind::ShapeError, path + " does not belong to this public bundle");
    }
    shares.push_back(file.share);
  }
  std::cout << render_matrix(sss::reconstruct(shares, bundle));
  return kExitOk;
}

json error_json(std::string_view name, const std::string& message) {
  return {{"version", tricode::kVersion}, {"error", name}, {"message", message}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive tridiagonal codes over GF(4) and matrix-projection secret sharing"};
  app.set_version_flag("--version", std::string("tricode ") + tricode::kVersion);
  app.require_subcommand(1);

  auto* code = app.add_subcommand("code", "Analyze an additive code");
  code->require_subcommand(1);
  AnalyzeArgs analyze_args;
  auto* analyze = code->add_subcommand("analyze", "Distance, weights, reversibility, verdict and dual as JSON");
  auto* pair_opt = analyze->add_option("--pair", analyze_args.pair, "Generator vector pair \"n;abits;bbits\"");
  auto* file_opt = analyze->add_option("--file", analyze_args.file, "Code file (\"n k\" header, k rows)")
                       ->check(CLI::ExistingFile);
  pair_opt->excludes(file_opt);
  analyze->add_option("--dmax-table", analyze_args.dmax_table, "JSON map n -> d_max(n)")
      ->check(CLI::ExistingFile);

  CensusArgs census_args;
  auto* census = app.add_subcommand("census", "Enumerate all tridiagonal codes of length n");
  census->add_option("--n", census_args.n, "Code length")->required();
  census->add_option("--workers", census_args.workers, "Worker threads (0 = all cores)");
  census->add_option("--filter", census_args.filter, "reversible | extremal | distance=<d>");
  census->add_option("--out", census_args.out, "Write the report here instead of stdout");
  census->add_option("--isa", census_args.isa, "Force a kernel variant: scalar | avx2");

  auto* sss_cmd = app.add_subcommand("sss", "Matrix-projection threshold secret sharing");
  sss_cmd->require_subcommand(1);
  DealArgs deal_args;
  auto* deal = sss_cmd->add_subcommand("deal", "Split a binary 2n x 2n secret into m shares");
  deal->add_option("--pair", deal_args.pair, "Generator vector pair \"n;abits;bbits\"")->required();
  deal->add_option("--secret", deal_args.secret, "Secret matrix file")->required()->check(CLI::ExistingFile);
  deal->add_option("--m", deal_args.m, "Number of participants")->required();
  deal->add_option("--seed", deal_args.seed, "Sampler seed")->required();
  deal->add_option("--outdir", deal_args.outdir, "Directory for share-<i>.f4 and public.json")->required();

  ReconstructArgs reconstruct_args;
  auto* reconstruct = sss_cmd->add_subcommand("reconstruct", "Recover the secret from n shares");
  reconstruct->add_option("--public", reconstruct_args.public_file, "public.json")->required()->check(CLI::ExistingFile);
  reconstruct->add_option("shares", reconstruct_args.shares, "Share files")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      if (analyze_args.pair.empty() && analyze_args.file.empty()) throw UsageError("give --pair or --file");
      return cmd_code_analyze(analyze_args);
    }
    if (census->parsed()) return cmd_census(census_args);
    if (deal->parsed()) return cmd_sss_deal(deal_args);
    if (reconstruct->parsed()) return cmd_sss_reconstruct(reconstruct_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tricode::Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
    emit(error_json(e.name(), e.what()));
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    emit(error_json("IoError", e.what()));
    return kExitDomain;
  }
  return kExitUsage;
}
