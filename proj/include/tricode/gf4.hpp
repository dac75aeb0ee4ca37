#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "tricode/error.hpp"

namespace tricode {

/// Element of GF(2). Embeds into GF(4) as {0, 1}.
struct F2 {
  std::uint8_t bit = 0;

  constexpr F2() = default;
  constexpr explicit F2(bool b) : bit(b ? 1 : 0) {}

  friend constexpr F2 operator+(F2 x, F2 y) { return F2((x.bit ^ y.bit) != 0); }
  friend constexpr F2 operator*(F2 x, F2 y) { return F2((x.bit & y.bit) != 0); }
  friend constexpr bool operator==(F2, F2) = default;
  constexpr explicit operator bool() const { return bit != 0; }
};

/// Element of GF(4) = {0, 1, w, w^2} with w^2 + w + 1 = 0.
///
/// Stored as two bits (c0, c1) meaning c0 + c1*w, so addition is XOR and the
/// bits split directly into the two GF(2) coordinates of GF(4) over GF(2).
class F4 {
 public:
  enum Value : std::uint8_t { Zero = 0, One = 1, Omega = 2, Omega2 = 3 };

  constexpr F4() = default;
  constexpr F4(Value v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  constexpr explicit F4(F2 x) : v_(static_cast<Value>(x.bit)) {}

  static constexpr F4 from_bits(std::uint8_t bits) { return F4(static_cast<Value>(bits & 3U)); }

  constexpr std::uint8_t bits() const { return v_; }
  /// Coefficient of 1 in the basis {1, w}.
  constexpr std::uint8_t c0() const { return v_ & 1U; }
  /// Coefficient of w in the basis {1, w}.
  constexpr std::uint8_t c1() const { return (v_ >> 1) & 1U; }
  constexpr bool is_zero() const { return v_ == Zero; }
  constexpr bool is_binary() const { return v_ <= One; }

  friend constexpr F4 operator+(F4 x, F4 y) { return from_bits(x.v_ ^ y.v_); }
  friend constexpr F4 operator-(F4 x, F4 y) { return x + y; }
  friend constexpr F4 operator*(F4 x, F4 y) { return from_bits(kMul[x.v_][y.v_]); }
  constexpr F4& operator+=(F4 y) { return *this = *this + y; }
  constexpr F4& operator-=(F4 y) { return *this = *this - y; }
  constexpr F4& operator*=(F4 y) { return *this = *this * y; }
  friend constexpr bool operator==(F4, F4) = default;

 private:
  // Rows/cols indexed by bits: 0, 1, w, w^2.
  static constexpr std::array<std::array<std::uint8_t, 4>, 4> kMul{{
      {0, 0, 0, 0},
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  }};

  Value v_ = Zero;
};

inline constexpr F4 kZero{F4::Zero};
inline constexpr F4 kOne{F4::One};
inline constexpr F4 kOmega{F4::Omega};
inline constexpr F4 kOmega2{F4::Omega2};

inline constexpr std::array<F4, 4> kAllF4{kZero, kOne, kOmega, kOmega2};

/// Multiplicative inverse; throws DivisionByZero for 0.
F4 inv(F4 x);

/// Frobenius conjugation x -> x^2. Fixes 0 and 1, swaps w and w^2.
constexpr F4 conjugate(F4 x) {
  // x^2 of c0 + c1 w is (c0 + c1) + c1 w.
  return F4::from_bits(static_cast<std::uint8_t>((x.c0() ^ x.c1()) | (x.c1() << 1)));
}

/// Tr(x) = x + x^2, which equals the w-coordinate of x.
constexpr F2 trace(F4 x) { return F2(x.c1() != 0); }

/// Symbol in the alphabet {0, 1, w, W}; W stands for w^2.
char render_symbol(F4 x);
F4 parse_symbol(std::string_view token);
F4 parse_symbol(char c);

}  // namespace tricode
