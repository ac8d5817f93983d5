#pragma once

#include <cstddef>
#include <vector>

#include "recip/resultant.hpp"

namespace recip {

/// True iff the coefficient sequence is a palindrome, i.e. g(x) = x^n g(1/x).
inline bool is_reciprocal(const IntPoly& g) {
  if (g.is_zero()) throw precondition_error("the zero polynomial has no degree");
  const auto c = g.coeffs();
  for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j)
    if (c[i] != c[j]) return false;
  return true;
}

/// Trace polynomial: the unique h of degree m with g(x) = x^m h(x + 1/x),
/// for g reciprocal of degree 2m.
///
/// Peels from the outside in: the x^m coefficient of h is a_0, and
/// (g - a_0 (1 + x^2)^m) / x is reciprocal of formal degree 2(m - 1).
/// The working vector keeps its formal length because a_0 may vanish
/// partway through.
inline IntPoly trace_poly(const IntPoly& g) {
  if (!is_reciprocal(g)) throw precondition_error("trace polynomial needs a reciprocal polynomial");
  if (g.degree() % 2 != 0) throw precondition_error("trace polynomial needs even degree");
  const std::size_t m = g.degree() / 2;

  std::vector<Integer> work(g.coeffs().begin(), g.coeffs().end());
  std::vector<Integer> h(m + 1);
  std::size_t offset = 0;  // work[offset + i] is the x^i coefficient
  for (std::size_t k = m + 1; k-- > 0;) {
    const Integer a0 = work[offset];
    h[k] = a0;
    if (a0 != 0) {
      Integer binom = 1;
      for (std::size_t j = 0; j <= k; ++j) {
        work[offset + 2 * j] -= a0 * binom;
        binom = binom * Integer(k - j) / Integer(j + 1);
      }
    }
    if (work[offset] != 0 || work[offset + 2 * k] != 0)
      throw consistency_error("trace peeling left a nonzero end coefficient");
    ++offset;
  }
  return IntPoly(std::move(h));
}

/// x^m h(x + 1/x) = sum_k b_k x^(m-k) (x^2 + 1)^k, for deg h <= m.
inline IntPoly expand_trace(const IntPoly& h, std::size_t m) {
  if (!h.is_zero() && h.degree() > m) throw precondition_error("expand_trace needs deg h <= m");
  std::vector<Integer> out(2 * m + 1);
  for (std::size_t k = 0; k < h.size(); ++k) {
    const Integer& b = h.coeffs()[k];
    if (b == 0) continue;
    Integer binom = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      out[m - k + 2 * j] += b * binom;
      binom = binom * Integer(k - j) / Integer(j + 1);
    }
  }
  return IntPoly(std::move(out));
}

/// h_0 = 2, h_1 = x, h_n = x h_{n-1} - h_{n-2}; x^n + x^-n = h_n(x + 1/x).
inline IntPoly hn_poly(std::size_t n) {
  IntPoly prev{2};
  IntPoly cur = IntPoly::x();
  if (n == 0) return prev;
  for (std::size_t k = 2; k <= n; ++k) {
    IntPoly next = IntPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// L_0 = 2, L_1 = x, L_n = x L_{n-1} + L_{n-2}.
inline IntPoly lucas_poly(std::size_t n) {
  IntPoly prev{2};
  IntPoly cur = IntPoly::x();
  if (n == 0) return prev;
  for (std::size_t k = 2; k <= n; ++k) {
    IntPoly next = IntPoly::x() * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// H_n with L_n(x) = x H_n(x^2), odd n.
inline IntPoly lucas_h(std::size_t n) {
  if (n % 2 == 0) throw precondition_error("H_n is defined for odd n only");
  const IntPoly l = lucas_poly(n);
  std::vector<Integer> h((l.size() + 1) / 2);
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (k % 2 == 0) {
      if (l.coeffs()[k] != 0) throw consistency_error("odd Lucas polynomial has an even term");
    } else {
      h[k / 2] = l.coeffs()[k];
    }
  }
  return IntPoly(std::move(h));
}

/// g_1^#, g_3^#, ..., g_{n_max}^# (odd indices, ascending) from the seeds
/// g_1^# = 1, g_3^# = x + 1 and g_n^# = x g_{n-2}^# - g_{n-4}^#.
inline std::vector<IntPoly> gn_sharp_sequence(std::size_t n_max) {
  std::vector<IntPoly> seq;
  if (n_max >= 1) seq.push_back(IntPoly{1});
  if (n_max >= 3) seq.push_back(IntPoly{1, 1});
  for (std::size_t n = 5; n <= n_max; n += 2)
    seq.push_back(IntPoly::x() * seq[seq.size() - 1] - seq[seq.size() - 2]);
  return seq;
}

/// g_n^# by the recursion above; never goes through trace_poly.
inline IntPoly gn_sharp(std::size_t n) {
  if (n == 0 || n % 2 == 0) throw precondition_error("gn_sharp needs odd n >= 1");
  return std::move(gn_sharp_sequence(n).back());
}

/// Rec(f, g) := Res(f^#, g^#) for monic reciprocal f, g of even degree.
inline Integer reciprocant(const IntPoly& f, const IntPoly& g, const MatrixHook& hook = {}) {
  if (!f.is_monic() || !g.is_monic()) throw precondition_error("reciprocant needs monic inputs");
  return resultant_barnett(trace_poly(f), trace_poly(g), hook);
}

}  // namespace recip
