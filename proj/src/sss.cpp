#include "tricode/sss.hpp"

#include <algorithm>
#include <random>

namespace tricode::sss {

namespace {

std::uint64_t to_mask(const Coefficients& x) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mask |= static_cast<std::uint64_t>(x[i].bit) << i;
  return mask;
}

bool independent(std::span<const std::uint64_t> masks) {
  std::vector<std::uint64_t> basis;
  for (std::uint64_t v : masks) {
    for (std::uint64_t b : basis) v = std::min(v, v ^ b);
    if (v == 0) return false;
    basis.push_back(v);
    std::sort(basis.rbegin(), basis.rend());
  }
  return true;
}

// Calls fn(subset) for every size-k subset of `pool`; stops when fn is false.
template <class Fn>
bool all_subsets(std::span<const std::uint64_t> pool, std::size_t k, Fn fn) {
  if (k > pool.size()) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<std::uint64_t> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    if (!fn(std::span<const std::uint64_t>(subset))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

F4Matrix as_column(const Coefficients& x) {
  F4Matrix col(x.size(), 1);
  for (std::size_t i = 0; i < x.size(); ++i) col(i, 0) = F4(x[i]);
  return col;
}

void require_secret_shape(const F2Matrix& secret, std::size_t n) {
  if (secret.rows() != 2 * n || secret.cols() != 2 * n) {
    throw Error(ErrorKind::ShapeError, "secret must be " + std::to_string(2 * n) + "x" +
                                           std::to_string(2 * n) + ", got " +
                                           std::to_string(secret.rows()) + "x" +
                                           std::to_string(secret.cols()));
  }
}

}  // namespace

F4Matrix share_basis(const GeneratorVectorPair& pair) {
  return transpose(double_generator(build(pair, {.allow_length_two = true})));
}

bool every_subset_independent(std::span<const Coefficients> vectors, std::size_t n) {
  std::vector<std::uint64_t> masks;
  masks.reserve(vectors.size());
  for (const auto& x : vectors) masks.push_back(to_mask(x));
  return all_subsets(masks, n, [](std::span<const std::uint64_t> s) { return independent(s); });
}

Dealing deal_with(const GeneratorVectorPair& pair, const F2Matrix& secret,
                  std::span<const Coefficients> coefficients) {
  const std::size_t n = pair.n;
  require_secret_shape(secret, n);
  if (coefficients.size() < n) {
    throw Error(ErrorKind::InfeasibleShareCount, "need at least n = " + std::to_string(n) +
                                                     " participants, got " +
                                                     std::to_string(coefficients.size()));
  }
  for (const auto& x : coefficients) {
    if (x.size() != n) throw Error(ErrorKind::ShapeError, "coefficient vectors must have length n");
  }
  if (!every_subset_independent(coefficients, n)) {
    throw Error(ErrorKind::InfeasibleShareCount, "some n of the coefficient vectors are dependent");
  }

  const F4Matrix h = share_basis(pair);
  const F4Matrix proj = projection(h);

  Dealing dealing;
  dealing.coefficients.assign(coefficients.begin(), coefficients.end());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    dealing.shares.push_back({i + 1, matmul(h, as_column(coefficients[i])).col_vector(0)});
  }
  dealing.bundle.n = n;
  dealing.bundle.m = coefficients.size();
  dealing.bundle.pair = pair;
  dealing.bundle.remainder = promote(secret) + proj;
  dealing.bundle.generator = transpose(h);
  return dealing;
}

Dealing deal(const DealerConfig& config) {
  const std::size_t n = config.pair.n;
  require_secret_shape(config.secret, n);
  if (config.m < n) {
    throw Error(ErrorKind::InfeasibleShareCount, "m = " + std::to_string(config.m) +
                                                     " is below the threshold n = " + std::to_string(n));
  }
  // Fail on a singular H^T H before spending the sampling budget.
  (void)projection(share_basis(config.pair));

  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::uint64_t> draw(1, (std::uint64_t{1} << n) - 1);
  std::vector<std::uint64_t> accepted;
  std::size_t rejections = 0;
  while (accepted.size() < config.m) {
    const std::uint64_t candidate = draw(rng);
    bool ok = std::find(accepted.begin(), accepted.end(), candidate) == accepted.end();
    if (ok) {
      // Subsets of the new family that contain the candidate.
      const std::size_t k = std::min(n - 1, accepted.size());
      ok = all_subsets(accepted, k, [&](std::span<const std::uint64_t> s) {
        std::vector<std::uint64_t> with(s.begin(), s.end());
        with.push_back(candidate);
        return independent(with);
      });
    }
    if (ok) {
      accepted.push_back(candidate);
    } else if (++rejections > kMaxRejections) {
      throw Error(ErrorKind::InfeasibleShareCount,
                  "no family of " + std::to_string(config.m) + " vectors in GF(2)^" +
                      std::to_string(n) + " with every " + std::to_string(n) +
                      "-subset independent found within " + std::to_string(kMaxRejections) +
                      " rejections");
    }
  }

  std::vector<Coefficients> coefficients;
  for (std::uint64_t mask : accepted) {
    Coefficients x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = F2(((mask >> i) & 1U) != 0);
    coefficients.push_back(std::move(x));
  }
  return deal_with(config.pair, config.secret, coefficients);
}

F2Matrix reconstruct_from_matrix(const F4Matrix& k, const F4Matrix& remainder) {
  return demote(projection(k) + remainder);
}

F2Matrix reconstruct(std::span<const Share> shares, const PublicBundle& bundle) {
  const std::size_t n = bundle.n;
  if (shares.size() != n) {
    throw Error(ErrorKind::ShapeError, "reconstruction takes exactly n = " + std::to_string(n) +
                                           " shares, got " + std::to_string(shares.size()));
  }
  F4Matrix k(2 * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (shares[j].v.size() != 2 * n) {
      throw Error(ErrorKind::ShapeError, "share " + std::to_string(shares[j].index) +
                                             " has length " + std::to_string(shares[j].v.size()) +
                                             ", expected " + std::to_string(2 * n));
    }
    for (std::size_t i = 0; i < 2 * n; ++i) k(i, j) = shares[j].v[i];
  }
  return reconstruct_from_matrix(k, bundle.remainder);
}

bool projection_invariance_check(const F4Matrix& h, const F2Matrix& x) {
  return projection(matmul(h, promote(x))) == projection(h);
}

ParticipantBound max_participants(std::size_t n) {
  if (n == 0 || n > 8) {
    throw Error(ErrorKind::TooLarge, "participant bound is computed for 1 <= n <= 8");
  }
  std::uint64_t product = 1;
  const std::uint64_t full = std::uint64_t{1} << n;
  for (std::size_t i = 0; i < n; ++i) product *= full - (std::uint64_t{1} << i);
  return {product,
          "advisory: counts ordered bases of GF(2)^n; deal() only accepts families in which "
          "every n vectors are independent, which caps m at n + 1 for n >= 2"};
}

}  // namespace tricode::sss
