#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tricode/linalg.hpp"

namespace tricode {

/// Generator vector (a, b) of a tridiagonal code: a = (w, a_1, ..., a_{n-1})
/// sits on the superdiagonal, b = (w, b_1, ..., b_{n-1}) on the subdiagonal.
/// Only the binary tails are stored; the leading w is implicit.
struct GeneratorVectorPair {
  std::size_t n = 0;
  std::vector<std::uint8_t> upper;  // a_1 .. a_{n-1}
  std::vector<std::uint8_t> lower;  // b_1 .. b_{n-1}

  /// Parses "n;abits;bbits", e.g. "3;11;01". Throws ParseError.
  static GeneratorVectorPair parse(std::string_view text);
  /// From full vectors (w, a_1, ...); the head must be w and the tail binary
  /// (AlphabetError otherwise).
  static GeneratorVectorPair from_vectors(std::span<const F4> a, std::span<const F4> b);
  /// Tails read from integers with a_1 as the most significant of n-1 bits.
  static GeneratorVectorPair from_indices(std::size_t n, std::uint64_t upper_bits,
                                          std::uint64_t lower_bits);

  std::string to_string() const;
  F4Vector upper_vector() const;
  F4Vector lower_vector() const;
  std::uint64_t upper_index() const;
  std::uint64_t lower_index() const;

  /// a or b is (w, 0, ..., 0); such codes have distance 1 and are left out
  /// of the census count.
  bool excluded_from_census() const;

  friend auto operator<=>(const GeneratorVectorPair&, const GeneratorVectorPair&) = default;
};

/// n x n generator with w on the diagonal, a_i at (i, i+1), b_i at (i+1, i).
struct TridiagonalGenerator {
  GeneratorVectorPair pair;
  F4Matrix matrix;
};

struct BuildOptions {
  /// Accept n = 2, which the secret-sharing example needs for its 2x2 block.
  bool allow_length_two = false;
};

/// Throws LengthError for n < 3 (n < 2 with allow_length_two) and
/// AlphabetError for tails that are not 0/1 or have the wrong length.
TridiagonalGenerator build(const GeneratorVectorPair& pair, BuildOptions options = {});

/// Off-diagonal part A - wI as a binary adjacency matrix.
F2Matrix to_graph(const TridiagonalGenerator& gen);

/// Graph code generator Gamma + wI.
F4Matrix from_graph(const F2Matrix& adjacency);

/// True if the matrix is Gamma + wI for a binary zero-diagonal Gamma.
bool is_graph_generator(const F4Matrix& a);

/// a_i = b_{n-i} for every i; sufficient for the code to be reversible.
bool is_reversible_pair(const GeneratorVectorPair& pair);

/// I + A, the generator of the conjugate code.
F4Matrix conjugation_generator(const TridiagonalGenerator& gen);

/// (I | A), the n x 2n generator of the double-tridiagonal code.
F4Matrix double_generator(const TridiagonalGenerator& gen);

/// A^T, which generates the Hermitian-trace dual of a graph code.
F4Matrix graph_dual_generator(const TridiagonalGenerator& gen);

}  // namespace tricode
