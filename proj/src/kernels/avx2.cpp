// Compiled with -mavx2; only reached after the dispatcher has confirmed
// AVX2 support at runtime.

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <bit>

#include "tricode/kernels.hpp"

namespace tricode::kernels::avx2 {

namespace {

// Lanes hold all 8 combinations of the first kSeedRows basis rows; the
// remaining rows are walked in Gray-code order and broadcast into every lane.
constexpr std::size_t kSeedRows = 3;
constexpr std::size_t kLanes = std::size_t{1} << kSeedRows;

// Per 64-bit lane: popcount of (low32 | high32), left in the low bits.
inline __m256i lane_weights(__m256i v) {
  const __m256i low32 = _mm256_set1_epi64x(0xFFFFFFFFLL);
  const __m256i nibble = _mm256_set1_epi8(0x0F);
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i support = _mm256_and_si256(_mm256_or_si256(v, _mm256_srli_epi64(v, 32)), low32);
  const __m256i lo = _mm256_and_si256(support, nibble);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(support, 4), nibble);
  const __m256i bytes =
      _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

std::array<std::uint64_t, kLanes> seed_lanes(std::span<const std::uint64_t> basis) {
  std::array<std::uint64_t, kLanes> seeds{};
  for (std::size_t j = 0; j < kLanes; ++j) {
    for (std::size_t b = 0; b < kSeedRows; ++b) {
      if ((j >> b) & 1U) seeds[j] ^= basis[b];
    }
  }
  return seeds;
}

}  // namespace

unsigned min_weight(std::span<const std::uint64_t> basis) {
  if (basis.size() < kSeedRows) return scalar::min_weight(basis);

  const auto seeds = seed_lanes(basis);
  __m256i v0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(seeds.data()));
  __m256i v1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(seeds.data() + 4));

  // Track weight - 1 as unsigned so the zero word wraps to the maximum and
  // never wins. The high 32 bits of each lane stay at zero and are ignored.
  const __m256i one = _mm256_set1_epi64x(1);
  __m256i acc = _mm256_set1_epi32(-1);

  const auto rest = basis.subspan(kSeedRows);
  const std::uint64_t steps = std::uint64_t{1} << rest.size();
  for (std::uint64_t i = 0; i < steps; ++i) {
    if (i != 0) {
      const __m256i row = _mm256_set1_epi64x(
          static_cast<long long>(rest[static_cast<std::size_t>(std::countr_zero(i))]));
      v0 = _mm256_xor_si256(v0, row);
      v1 = _mm256_xor_si256(v1, row);
    }
    acc = _mm256_min_epu32(acc, _mm256_sub_epi64(lane_weights(v0), one));
    acc = _mm256_min_epu32(acc, _mm256_sub_epi64(lane_weights(v1), one));
  }

  alignas(32) std::array<std::uint32_t, 8> lanes{};
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), acc);
  const std::uint32_t best = std::min({lanes[0], lanes[2], lanes[4], lanes[6]});
  return best + 1;
}

void weight_histogram(std::span<const std::uint64_t> basis, std::span<std::uint64_t> counts) {
  if (basis.size() < kSeedRows) {
    scalar::weight_histogram(basis, counts);
    return;
  }

  const auto seeds = seed_lanes(basis);
  __m256i v0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(seeds.data()));
  __m256i v1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(seeds.data() + 4));

  const auto rest = basis.subspan(kSeedRows);
  const std::uint64_t steps = std::uint64_t{1} << rest.size();
  alignas(32) std::array<std::uint64_t, kLanes> weights{};
  for (std::uint64_t i = 0; i < steps; ++i) {
    if (i != 0) {
      const __m256i row = _mm256_set1_epi64x(
          static_cast<long long>(rest[static_cast<std::size_t>(std::countr_zero(i))]));
      v0 = _mm256_xor_si256(v0, row);
      v1 = _mm256_xor_si256(v1, row);
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(weights.data()), lane_weights(v0));
    _mm256_store_si256(reinterpret_cast<__m256i*>(weights.data() + 4), lane_weights(v1));
    for (auto w : weights) counts[w] += 1;
  }
}

}  // namespace tricode::kernels::avx2
