#include "macaulay/function.hpp"

namespace macaulay {

Nat macaulay_value(Nat a, Degree d) {
  const BinomialRep rep = d_binomial_rep(a, d);
  Nat sum = 0;
  for (const auto& t : rep.terms) sum += binom(t.k + 1, t.i + 1);
  return sum;
}

namespace {

Nat triangular(Nat a) {
  // a(a+1)/2 without overflowing the intermediate product
  return a.value() % 2 == 0 ? (a / 2) * (a + 1) : a * ((a + 1) / 2);
}

}  // namespace

Nat macaulay_recursive(Nat a, Degree d, FormSchedule schedule) {
  require_degree(d);
  if (a.is_zero()) return 0;
  if (d == 1) return triangular(a);
  const Decomposition dec = decompose(a, d, form_at(schedule, d));
  return binom(dec.c + Nat(d), d + 1) +
         macaulay_recursive(dec.A, d - 1, schedule);
}

bool strictly_monotone(Nat a, Nat b, Degree d) {
  require_degree(d);
  if (!(a < b)) return true;
  return macaulay_value(a, d) < macaulay_value(b, d);
}

std::string_view to_string(Method m) {
  return m == Method::Definitional ? "definitional" : "recursive";
}

MacaulayValue evaluate(Nat a, Degree d, Method method) {
  const Nat out = method == Method::Definitional ? macaulay_value(a, d)
                                                 : macaulay_recursive(a, d);
  return {a, d, out, method};
}

MacaulayTable::MacaulayTable(Nat max_value, Degree max_d) {
  require_degree(max_d);
  rows_.resize(max_d);
  for (Degree d = 1; d <= max_d; ++d) {
    auto& row = rows_[d - 1];
    row.reserve(max_value.value() + 1);
    for (Nat::word a = 0; a <= max_value.value(); ++a) {
      row.push_back(macaulay_value(a, d));
    }
  }
}

const MacaulayTable& MacaulayTable::direct() {
  static const MacaulayTable empty;
  return empty;
}

}  // namespace macaulay
