#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "macaulay/error.hpp"

namespace macaulay {

/// Nonnegative integer backed by a 64-bit word. Every operation that would
/// leave [0, 2^64) throws Error(CapacityExceeded) instead of wrapping.
class Nat {
 public:
  using word = std::uint64_t;

  constexpr Nat() noexcept = default;
  constexpr Nat(word v) noexcept : v_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr Nat max() noexcept {
    return Nat(std::numeric_limits<word>::max());
  }

  constexpr word value() const noexcept { return v_; }
  constexpr bool is_zero() const noexcept { return v_ == 0; }

  friend constexpr bool operator==(Nat, Nat) noexcept = default;
  friend constexpr auto operator<=>(Nat, Nat) noexcept = default;

  friend Nat operator+(Nat x, Nat y) {
    word r;
    if (__builtin_add_overflow(x.v_, y.v_, &r)) overflow("addition");
    return Nat(r);
  }
  friend Nat operator-(Nat x, Nat y) {
    if (y.v_ > x.v_) {
      throw Error(ErrorCode::InvalidInput,
                  "natural subtraction " + x.str() + " - " + y.str() +
                      " would be negative");
    }
    return Nat(x.v_ - y.v_);
  }
  friend Nat operator*(Nat x, Nat y) {
    word r;
    if (__builtin_mul_overflow(x.v_, y.v_, &r)) overflow("multiplication");
    return Nat(r);
  }
  friend Nat operator/(Nat x, Nat y) {
    if (y.v_ == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
    return Nat(x.v_ / y.v_);
  }

  Nat& operator+=(Nat y) { return *this = *this + y; }
  Nat& operator-=(Nat y) { return *this = *this - y; }
  Nat& operator*=(Nat y) { return *this = *this * y; }
  Nat& operator++() { return *this += 1; }

  std::string str() const { return std::to_string(v_); }

  /// Parses a plain decimal string (no sign, no whitespace).
  static std::optional<Nat> parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    word v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return Nat(v);
  }

  [[noreturn]] static void overflow(const char* op) {
    throw Error(ErrorCode::CapacityExceeded,
                std::string("64-bit capacity exceeded in ") + op);
  }

 private:
  word v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Nat n) {
  return os << n.value();
}

/// Top degree of a representation. Always >= 1 once validated.
using Degree = unsigned;

inline void require_degree(Degree d) {
  if (d == 0) throw Error(ErrorCode::InvalidDegree, "d must be positive");
}

}  // namespace macaulay
