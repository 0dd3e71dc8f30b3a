#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "macaulay/binomial.hpp"

namespace macaulay {

/// a^<d>: shift every term C(k_i, i) of the d-binomial representation of a to
/// C(k_i + 1, i + 1). 0^<d> = 0.
Nat macaulay_value(Nat a, Degree d);

/// Bitmask selecting the decomposition form per recursion level: bit i set
/// means the half-closed form is used at degree i. Zero is half-open
/// everywhere.
using FormSchedule = std::uint32_t;

inline constexpr FormSchedule kHalfOpenEverywhere = 0;
inline constexpr FormSchedule kHalfClosedEverywhere = ~FormSchedule{0};

inline DecompositionForm form_at(FormSchedule schedule, Degree d) {
  return d < 32 && (schedule >> d) & 1U ? DecompositionForm::HalfClosed
                                        : DecompositionForm::HalfOpen;
}

/// a^<d> = C(c+d, d+1) + A^<d-1> with a = C(c-1+d, d) + A, bottoming out at
/// a(a+1)/2 for d = 1.
Nat macaulay_recursive(Nat a, Degree d,
                       FormSchedule schedule = kHalfOpenEverywhere);

/// Whether a < b implies a^<d> < b^<d> for this instance.
bool strictly_monotone(Nat a, Nat b, Degree d);

enum class Method { Definitional, Recursive };

std::string_view to_string(Method m);

struct MacaulayValue {
  Nat input;
  Degree d = 1;
  Nat output;
  Method method = Method::Definitional;
};

MacaulayValue evaluate(Nat a, Degree d, Method method);

/// Precomputed a^<d> for 0 <= a <= max_value, 1 <= d <= max_d. Lookups
/// outside the table fall through to macaulay_value. Immutable once built,
/// so it can be shared across threads.
class MacaulayTable {
 public:
  MacaulayTable() = default;
  MacaulayTable(Nat max_value, Degree max_d);

  /// An empty table that computes every value directly.
  static const MacaulayTable& direct();

  Nat operator()(Nat a, Degree d) const {
    if (d >= 1 && d <= rows_.size() && a.value() < rows_[d - 1].size()) {
      return rows_[d - 1][a.value()];
    }
    return macaulay_value(a, d);
  }

  Nat max_value() const {
    return rows_.empty() ? Nat(0) : Nat(rows_.front().size() - 1);
  }
  Degree max_d() const { return static_cast<Degree>(rows_.size()); }

 private:
  std::vector<std::vector<Nat>> rows_;
};

}  // namespace macaulay
