#include <algorithm>
#include <functional>
#include <vector>

#include "macaulay/search.hpp"

namespace macaulay {

namespace {

// A monomial is its nondecreasing list of variable indices. Reverse
// lexicographic order on these lists is lex order on exponent vectors with
// x_0 > x_1 > ... > x_{n-1}.
using Monomial = std::vector<unsigned>;

void enumerate(unsigned n, Degree d, const std::function<void(const Monomial&)>& emit) {
  Monomial cur(d, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos,
                                                       unsigned from) {
    if (pos == d) {
      emit(cur);
      return;
    }
    for (unsigned v = from; v < n; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
}

class KeyCodec {
 public:
  KeyCodec(unsigned n, Degree len) : n_(n) {
    Nat span = 1;
    for (Degree i = 0; i < len; ++i) span *= Nat(n);  // throws on overflow
  }

  std::uint64_t encode(const Monomial& m, std::size_t skip) const {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != skip) key = key * n_ + m[i];
    }
    return key;
  }

 private:
  std::uint64_t n_;
};

std::uint64_t count_monomials(unsigned n, Degree d) {
  std::uint64_t count = 0;
  enumerate(n, d, [&](const Monomial&) { ++count; });
  return count;
}

}  // namespace

Nat macaulay_via_order_ideal(Nat a, Degree d, unsigned n) {
  require_degree(d);
  if (n == 0) throw Error(ErrorCode::InvalidInput, "n must be positive");
  std::vector<Monomial> monomials;
  enumerate(n, d, [&](const Monomial& m) { monomials.push_back(m); });
  if (Nat(monomials.size()) < a) {
    throw Error(ErrorCode::InsufficientVariables,
                "only " + std::to_string(monomials.size()) + " monomials of degree " +
                    std::to_string(d) + " in " + std::to_string(n) + " variables");
  }
  if (a.is_zero()) return 0;
  std::sort(monomials.begin(), monomials.end(), std::greater<>());

  const KeyCodec codec(n, d + 1);
  std::vector<std::uint64_t> segment;
  segment.reserve(a.value());
  for (std::uint64_t i = 0; i < a.value(); ++i) {
    segment.push_back(codec.encode(monomials[i], monomials[i].size()));
  }
  std::sort(segment.begin(), segment.end());

  std::uint64_t count = 0;
  enumerate(n, d + 1, [&](const Monomial& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0 && m[i] == m[i - 1]) continue;  // same divisor as before
      if (!std::binary_search(segment.begin(), segment.end(), codec.encode(m, i))) {
        return;
      }
    }
    ++count;
  });
  return Nat(count);
}

Nat macaulay_via_order_ideal(Nat a, Degree d) {
  require_degree(d);
  unsigned n = 1;
  while (Nat(count_monomials(n, d)) < a) ++n;
  Nat prev = macaulay_via_order_ideal(a, d, n);
  for (;;) {
    const Nat next = macaulay_via_order_ideal(a, d, ++n);
    if (next == prev) return next;
    prev = next;
  }
}

}  // namespace macaulay
