#include "tricode/census.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <exception>
#include <thread>

#include "tricode/code.hpp"

namespace tricode {

namespace {

struct PairResult {
  std::size_t distance = 0;
  bool reversible = false;
};

PairResult analyze_pair(const GeneratorVectorPair& pair) {
  const AdditiveCode code(build(pair).matrix);
  const std::size_t d = min_distance(code);
  if (d > singleton_bound(pair.n)) {
    throw Error(ErrorKind::BoundViolation, "pair " + pair.to_string() + " has distance " +
                                               std::to_string(d) + " above the Singleton bound");
  }
  return {d, is_reversible(code)};
}

void require_census_length(std::size_t n) {
  if (n < kCensusMinLength || n > kCensusMaxLength) {
    throw Error(ErrorKind::LengthError, "census length must be in [" + std::to_string(kCensusMinLength) +
                                            ", " + std::to_string(kCensusMaxLength) + "], got " +
                                            std::to_string(n));
  }
}

// Splits upper-vector indices 1..2^{n-1}-1 into contiguous chunks, one per
// worker, and runs visit(chunk, first, last) on each. Each chunk owns its
// own state, so concatenating in chunk order is deterministic.
template <class State, class Visit>
std::vector<State> for_each_chunk(std::size_t n, std::size_t workers, Visit visit) {
  const std::uint64_t vectors = (std::uint64_t{1} << (n - 1)) - 1;
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<std::size_t>(std::min<std::uint64_t>(workers, vectors));

  std::vector<State> states(workers);
  std::vector<std::exception_ptr> errors(workers);
  const auto run = [&](std::size_t w) {
    const std::uint64_t first = 1 + vectors * w / workers;
    const std::uint64_t last = 1 + vectors * (w + 1) / workers;
    try {
      visit(states[w], first, last);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return states;
}

bool matches(const CensusPredicate& p, const GeneratorVectorPair& pair, const PairResult& r) {
  switch (p.kind) {
    case CensusPredicate::Kind::Reversible: return r.reversible;
    case CensusPredicate::Kind::Extremal: return r.distance == singleton_bound(pair.n);
    case CensusPredicate::Kind::Distance: return r.distance == p.distance;
  }
  return false;
}

}  // namespace

bool CensusReport::same_counts(const CensusReport& other) const {
  return n == other.n && total_pairs == other.total_pairs &&
         distance_histogram == other.distance_histogram &&
         reversible_count == other.reversible_count && extremal_count == other.extremal_count &&
         palindromic_pairs == other.palindromic_pairs &&
         reversibility_violations == other.reversibility_violations;
}

std::uint64_t expected_pair_count(std::size_t n) {
  const std::uint64_t side = (std::uint64_t{1} << (n - 1)) - 1;
  return side * side;
}

CensusReport run_census(std::size_t n, std::size_t workers) {
  require_census_length(n);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t vectors = (std::uint64_t{1} << (n - 1)) - 1;

  auto chunks = for_each_chunk<CensusReport>(n, workers, [&](CensusReport& local, std::uint64_t first,
                                                             std::uint64_t last) {
    for (std::uint64_t ua = first; ua < last; ++ua) {
      for (std::uint64_t ub = 1; ub <= vectors; ++ub) {
        const auto pair = GeneratorVectorPair::from_indices(n, ua, ub);
        const PairResult r = analyze_pair(pair);
        local.total_pairs += 1;
        local.distance_histogram[r.distance] += 1;
        if (r.reversible) local.reversible_count += 1;
        if (r.distance == singleton_bound(n)) local.extremal_count += 1;
        if (is_reversible_pair(pair)) {
          local.palindromic_pairs += 1;
          if (!r.reversible) local.reversibility_violations += 1;
        }
      }
    }
  });

  CensusReport report;
  report.n = n;
  for (const auto& c : chunks) {
    report.total_pairs += c.total_pairs;
    for (const auto& [d, count] : c.distance_histogram) report.distance_histogram[d] += count;
    report.reversible_count += c.reversible_count;
    report.extremal_count += c.extremal_count;
    report.palindromic_pairs += c.palindromic_pairs;
    report.reversibility_violations += c.reversibility_violations;
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CensusPredicate CensusPredicate::parse(std::string_view text) {
  if (text == "reversible") return {Kind::Reversible, 0};
  if (text == "extremal") return {Kind::Extremal, 0};
  constexpr std::string_view prefix = "distance=";
  if (text.starts_with(prefix)) {
    const auto digits = text.substr(prefix.size());
    std::size_t d = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty()) {
      return {Kind::Distance, d};
    }
  }
  throw Error(ErrorKind::ParseError, "unknown census filter '" + std::string(text) +
                                         "' (use reversible, extremal or distance=<d>)");
}

std::string CensusPredicate::to_string() const {
  switch (kind) {
    case Kind::Reversible: return "reversible";
    case Kind::Extremal: return "extremal";
    case Kind::Distance: return "distance=" + std::to_string(distance);
  }
  return {};
}

std::vector<GeneratorVectorPair> census_filter(std::size_t n, const CensusPredicate& predicate,
                                               std::size_t workers) {
  require_census_length(n);
  const std::uint64_t vectors = (std::uint64_t{1} << (n - 1)) - 1;
  using Bucket = std::vector<GeneratorVectorPair>;
  auto chunks = for_each_chunk<Bucket>(n, workers, [&](Bucket& local, std::uint64_t first,
                                                       std::uint64_t last) {
    for (std::uint64_t ua = first; ua < last; ++ua) {
      for (std::uint64_t ub = 1; ub <= vectors; ++ub) {
        auto pair = GeneratorVectorPair::from_indices(n, ua, ub);
        if (matches(predicate, pair, analyze_pair(pair))) local.push_back(std::move(pair));
      }
    }
  });
  Bucket out;
  for (auto& c : chunks) out.insert(out.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  return out;
}

}  // namespace tricode
