#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tricode/linalg.hpp"

namespace tricode {

/// Longest code the packed representation supports.
inline constexpr std::size_t kMaxCodeLength = 64;
/// Largest GF(2)-rank for which codewords are materialized.
inline constexpr std::size_t kMaxEnumerationRank = 24;

/// A GF(4) vector of length <= 64 split into its two GF(2) coordinate
/// planes: bit j of `ones` / `omegas` is the 1- / w-coordinate of entry j.
struct Word {
  std::uint64_t ones = 0;
  std::uint64_t omegas = 0;

  constexpr Word& operator^=(Word o) {
    ones ^= o.ones;
    omegas ^= o.omegas;
    return *this;
  }
  friend constexpr Word operator^(Word a, Word b) { return a ^= b; }
  friend constexpr auto operator<=>(const Word&, const Word&) = default;

  constexpr bool is_zero() const { return (ones | omegas) == 0; }
  constexpr unsigned weight() const {
    return static_cast<unsigned>(__builtin_popcountll(ones | omegas));
  }
};

Word pack(std::span<const F4> v);
F4Vector unpack(Word w, std::size_t n);
/// Coordinate reversal (c_1, ..., c_n) -> (c_n, ..., c_1).
Word reversed(Word w, std::size_t n);
/// Entry-wise conjugation.
constexpr Word conjugated(Word w) { return {w.ones ^ w.omegas, w.omegas}; }
/// Layout used by the kernels (n <= 32): ones in the low half, omegas high.
constexpr std::uint64_t to_kernel_word(Word w) { return w.ones | (w.omegas << 32); }

/// Additive code over GF(4): all GF(2)-combinations of the generator rows.
/// Rows need not be independent; the GF(2)-rank is computed on construction.
class AdditiveCode {
 public:
  /// Throws ShapeError if the length exceeds kMaxCodeLength.
  explicit AdditiveCode(F4Matrix generator);

  /// The zero code {0^n}.
  static AdditiveCode trivial(std::size_t n);
  /// All of GF(4)^n, generated by the unit vectors and their w multiples.
  static AdditiveCode full_space(std::size_t n);

  std::size_t length() const { return n_; }
  /// Number of generator rows; k of an (n, 2^k) code when they are independent.
  std::size_t generator_rows() const { return generator_.rows(); }
  std::size_t f2_rank() const { return basis_.size(); }
  const F4Matrix& generator() const { return generator_; }

  /// Generator rows that are independent of the rows before them, in order.
  std::span<const Word> basis() const { return basis_; }

  bool contains(Word w) const;
  bool contains(std::span<const F4> v) const;

  /// Equal as sets of codewords.
  bool same_code(const AdditiveCode& other) const;

  /// All 2^rank codewords in Gray-code order over the basis.
  /// Throws TooLarge when rank exceeds kMaxEnumerationRank.
  std::vector<Word> codeword_words() const;

 private:
  // Reduces w against the echelon table, returning the remainder.
  Word reduce(Word w) const;

  std::size_t n_ = 0;
  F4Matrix generator_;
  std::vector<Word> basis_;
  // echelon_[slot_[b]] has highest set bit b (omegas occupy bits 64..127).
  std::vector<Word> echelon_;
  std::array<std::int16_t, 128> slot_{};
};

enum class SingletonVerdict { Extremal, Optimal, NearOptimal, Suboptimal, Unknown };
std::string_view verdict_name(SingletonVerdict v);

/// Known maximum distances d_max(n) for (n, 2^n) codes, supplied by the user.
using DmaxTable = std::map<std::size_t, std::size_t>;

struct WeightDistribution {
  /// counts[i] = number of codewords of weight i, i = 0..n.
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

std::vector<F4Vector> enumerate_codewords(const AdditiveCode& code);

/// Smallest weight of a nonzero codeword. Throws NoNonzeroCodeword for the
/// trivial code and TooLarge past the rank guard.
std::size_t min_distance(const AdditiveCode& code);

WeightDistribution weight_distribution(const AdditiveCode& code);

/// u * v = sum Tr(u_i conj(v_i)).
F2 hermitian_trace_inner(std::span<const F4> u, std::span<const F4> v);
/// <u, v> = Tr(sum u_i v_i).
F2 trace_inner(std::span<const F4> u, std::span<const F4> v);

/// Dual under the Hermitian trace inner product, as the GF(2) kernel of the
/// expanded constraint system. The generator is a basis (rank = 2n - rank(C)).
AdditiveCode hermitian_dual(const AdditiveCode& code);
/// Dual under the trace inner product.
AdditiveCode trace_dual(const AdditiveCode& code);

/// True iff reversing any codeword gives a codeword; checked on the basis.
bool is_reversible(const AdditiveCode& code);

AdditiveCode conjugate_code(const AdditiveCode& code);

/// Block-diagonal generator diag(G1, G2).
AdditiveCode direct_product(const AdditiveCode& first, const AdditiveCode& second);

/// Classifies an (n, 2^k, d) code against the Singleton bound d <= n/2 + 1.
/// Requires k == n (ShapeError otherwise); throws BoundViolation when d
/// exceeds the bound or the table's d_max(n).
SingletonVerdict singleton_classify(std::size_t n, std::size_t k, std::size_t d,
                                    const DmaxTable& dmax_table = {});

inline std::size_t singleton_bound(std::size_t n) { return n / 2 + 1; }

// Code file: "n k" on the first line, then k rows of n symbols.
AdditiveCode parse_code(std::istream& in);
AdditiveCode parse_code(const std::string& text);
std::string render_code(const AdditiveCode& code);

}  // namespace tricode
