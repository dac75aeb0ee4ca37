#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tricode/linalg.hpp"
#include "tricode/tridiagonal.hpp"

namespace tricode::sss {

/// Binary coefficient vector x_i of length n.
using Coefficients = std::vector<F2>;

/// Retry budget of the coefficient sampler.
inline constexpr std::size_t kMaxRejections = 10000;

struct DealerConfig {
  /// Defines A and hence G = (I | A); n = 2 is accepted here.
  GeneratorVectorPair pair;
  std::size_t m = 0;
  /// Binary 2n x 2n secret.
  F2Matrix secret;
  std::uint64_t seed = 0;
};

struct Share {
  /// Participant id, 1..m.
  std::size_t index = 0;
  /// v = H x for the participant's coefficient vector x; length 2n.
  F4Vector v;

  friend bool operator==(const Share&, const Share&) = default;
};

struct PublicBundle {
  std::size_t n = 0;
  std::size_t m = 0;
  GeneratorVectorPair pair;
  /// R = S + Proj(H).
  F4Matrix remainder;
  /// G = (I | A), n x 2n.
  F4Matrix generator;
};

struct Dealing {
  std::vector<Share> shares;
  PublicBundle bundle;
  /// The x_i; dealer-side only, never written to share files.
  std::vector<Coefficients> coefficients;
};

/// H = G^T for G = (I | A(pair)), a 2n x n matrix.
F4Matrix share_basis(const GeneratorVectorPair& pair);

/// Samples m coefficient vectors by seeded rejection so that every subset of
/// at most n of them is GF(2)-independent, then deals.
/// Throws SingularMatrix (H^T H not invertible), InfeasibleShareCount
/// (m < n, or budget exhausted) and ShapeError (secret not 2n x 2n).
Dealing deal(const DealerConfig& config);

/// Deals with caller-chosen coefficient vectors instead of sampling them.
/// The any-n-independent property is verified, not assumed.
Dealing deal_with(const GeneratorVectorPair& pair, const F2Matrix& secret,
                  std::span<const Coefficients> coefficients);

/// True iff every n-subset of the vectors is GF(2)-independent.
bool every_subset_independent(std::span<const Coefficients> vectors, std::size_t n);

/// Proj(K) + R from exactly n shares, demoted to GF(2).
/// Throws ShapeError on wrong arity or length, SingularMatrix when K^T K is
/// singular and NonBinaryResult when the result leaves GF(2).
F2Matrix reconstruct(std::span<const Share> shares, const PublicBundle& bundle);

/// Same with the share matrix K = [v_1 ... v_n] given directly.
F2Matrix reconstruct_from_matrix(const F4Matrix& k, const F4Matrix& remainder);

/// Proj(H X) == Proj(H) for an invertible binary X.
bool projection_invariance_check(const F4Matrix& h, const F2Matrix& x);

struct ParticipantBound {
  std::uint64_t value = 0;
  std::string note;
};

/// (2^n - 1)(2^n - 2)...(2^n - 2^{n-1}), the number of ordered bases of
/// GF(2)^n. Advisory only: a family where every n-subset is independent is
/// much smaller (at most n + 1 vectors for n >= 2). TooLarge for n > 8,
/// where the product no longer fits in 64 bits.
ParticipantBound max_participants(std::size_t n);

}  // namespace tricode::sss
