#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tricode/tridiagonal.hpp"

namespace tricode {

inline constexpr std::size_t kCensusMinLength = 3;
inline constexpr std::size_t kCensusMaxLength = 16;

/// Distance statistics over every tridiagonal generator pair of length n
/// whose upper and lower vectors are both different from (w, 0, ..., 0).
struct CensusReport {
  std::size_t n = 0;
  std::uint64_t total_pairs = 0;
  /// d -> number of pairs whose code has minimum distance d.
  std::map<std::size_t, std::uint64_t> distance_histogram;
  /// Codes closed under coordinate reversal (checked on the code).
  std::uint64_t reversible_count = 0;
  /// Codes meeting the Singleton bound n/2 + 1.
  std::uint64_t extremal_count = 0;
  /// Pairs with a_i = b_{n-i}.
  std::uint64_t palindromic_pairs = 0;
  /// Palindromic pairs whose code is not reversible; always 0 unless the
  /// reversibility theorem fails.
  std::uint64_t reversibility_violations = 0;
  double elapsed_seconds = 0.0;

  /// Equality of everything except the timing.
  bool same_counts(const CensusReport& other) const;
};

/// (2^{n-1} - 1)^2.
std::uint64_t expected_pair_count(std::size_t n);

/// Visits every pair with `workers` threads (0 means hardware concurrency).
/// The result does not depend on the worker count. Throws LengthError for n
/// outside [3, 16] and BoundViolation if any code beats the Singleton bound.
CensusReport run_census(std::size_t n, std::size_t workers = 1);

struct CensusPredicate {
  enum class Kind { Reversible, Extremal, Distance };
  Kind kind = Kind::Reversible;
  std::size_t distance = 0;

  /// "reversible", "extremal" or "distance=<d>". Throws ParseError.
  static CensusPredicate parse(std::string_view text);
  std::string to_string() const;
};

/// Pairs whose code satisfies the predicate, ordered by (a, b) bit strings.
std::vector<GeneratorVectorPair> census_filter(std::size_t n, const CensusPredicate& predicate,
                                               std::size_t workers = 1);

}  // namespace tricode
