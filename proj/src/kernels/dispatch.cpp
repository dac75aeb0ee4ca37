#include <atomic>
#include <stdexcept>
#include <string>

#include "tricode/kernels.hpp"

namespace tricode::kernels {

namespace {

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(TRICODE_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() { return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument(std::string("kernel variant '") + std::string(isa_name(isa)) +
                                "' is not available on this CPU");
  }
  active().store(isa, std::memory_order_relaxed);
}

unsigned min_weight(std::span<const std::uint64_t> basis, Isa isa) {
#if defined(TRICODE_HAVE_AVX2)
  if (isa == Isa::Avx2) return avx2::min_weight(basis);
#endif
  (void)isa;
  return scalar::min_weight(basis);
}

unsigned min_weight(std::span<const std::uint64_t> basis) { return min_weight(basis, active_isa()); }

void weight_histogram(std::span<const std::uint64_t> basis, std::span<std::uint64_t> counts,
                      Isa isa) {
#if defined(TRICODE_HAVE_AVX2)
  if (isa == Isa::Avx2) {
    avx2::weight_histogram(basis, counts);
    return;
  }
#endif
  (void)isa;
  scalar::weight_histogram(basis, counts);
}

void weight_histogram(std::span<const std::uint64_t> basis, std::span<std::uint64_t> counts) {
  weight_histogram(basis, counts, active_isa());
}

}  // namespace tricode::kernels
