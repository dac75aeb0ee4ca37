#include <algorithm>
#include <bit>

#include "tricode/kernels.hpp"

namespace tricode::kernels::scalar {

unsigned min_weight(std::span<const std::uint64_t> basis) {
  if (basis.empty()) return 0;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  std::uint64_t word = 0;
  unsigned best = ~0U;
  // Gray-code walk: step i flips basis row ctz(i).
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    best = std::min(best, packed_weight(word));
  }
  return best;
}

void weight_histogram(std::span<const std::uint64_t> basis, std::span<std::uint64_t> counts) {
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  std::uint64_t word = 0;
  counts[0] += 1;
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    counts[packed_weight(word)] += 1;
  }
}

}  // namespace tricode::kernels::scalar
