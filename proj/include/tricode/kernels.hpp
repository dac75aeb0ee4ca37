#pragma once

// Codeword-walk kernels over packed GF(4) words.
//
// A packed word holds a vector of length n <= 32: bit j of the low half is
// the 1-coordinate of entry j, bit j of the high half its w-coordinate.
// Adding two vectors is XOR; the Hamming weight is the popcount of the
// union of the two halves.
//
// Each kernel exists as a scalar reference and as SIMD variants, and the
// dispatcher picks the widest one the running CPU supports.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace tricode::kernels {

inline constexpr std::size_t kMaxPackedLength = 32;

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
/// Best variant for this CPU.
Isa detected_isa();

/// Variant used by the dispatching overloads. Not synchronized: set it
/// before starting worker threads.
Isa active_isa();
void set_active_isa(Isa isa);

constexpr unsigned packed_weight(std::uint64_t word) {
  return static_cast<unsigned>(__builtin_popcount(static_cast<std::uint32_t>(word | (word >> 32))));
}

/// Minimum weight over the 2^r - 1 nonzero GF(2) combinations of `basis`.
/// The basis must be GF(2)-independent (otherwise the zero word shows up
/// and the result is 0). Returns 0 for an empty basis.
unsigned min_weight(std::span<const std::uint64_t> basis);
unsigned min_weight(std::span<const std::uint64_t> basis, Isa isa);

/// Adds the weight of every one of the 2^r combinations (the empty one
/// included) into counts[weight]. counts must have at least n + 1 slots.
void weight_histogram(std::span<const std::uint64_t> basis, std::span<std::uint64_t> counts);
void weight_histogram(std::span<const std::uint64_t> basis, std::span<std::uint64_t> counts,
                      Isa isa);

namespace scalar {
unsigned min_weight(std::span<const std::uint64_t> basis);
void weight_histogram(std::span<const std::uint64_t> basis, std::span<std::uint64_t> counts);
}  // namespace scalar

#if defined(TRICODE_HAVE_AVX2)
namespace avx2 {
unsigned min_weight(std::span<const std::uint64_t> basis);
void weight_histogram(std::span<const std::uint64_t> basis, std::span<std::uint64_t> counts);
}  // namespace avx2
#endif

}  // namespace tricode::kernels
