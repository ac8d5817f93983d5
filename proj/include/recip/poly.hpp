#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "recip/core.hpp"

namespace recip {

/// Dense univariate polynomial over the integers.
///
/// Coefficients are stored ascending by exponent and kept normalized: the
/// last stored coefficient is nonzero, and the zero polynomial has no
/// coefficients at all. Operations that need a degree or a leading
/// coefficient reject the zero polynomial instead of inventing a degree for it.
class IntPoly {
 public:
  IntPoly() = default;

  explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  static IntPoly constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

  /// c * x^k
  static IntPoly monomial(std::size_t k, const Integer& c = 1) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
  }

  static IntPoly x() { return monomial(1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::size_t degree() const {
    if (is_zero()) throw precondition_error("degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
  }

  const Integer& leading() const {
    if (is_zero()) throw precondition_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  bool is_monic() const noexcept { return !is_zero() && coeffs_.back() == 1; }

  /// Coefficient of x^k; zero past the degree.
  Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const noexcept { return coeffs_.size(); }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline IntPoly operator+(const IntPoly& p, const IntPoly& q) {
  std::vector<Integer> out(std::max(p.size(), q.size()));
  for (std::size_t k = 0; k < p.size(); ++k) out[k] += p.coeffs()[k];
  for (std::size_t k = 0; k < q.size(); ++k) out[k] += q.coeffs()[k];
  return IntPoly(std::move(out));
}

inline IntPoly operator-(const IntPoly& p) {
  std::vector<Integer> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out));
}

inline IntPoly operator-(const IntPoly& p, const IntPoly& q) {
  std::vector<Integer> out(std::max(p.size(), q.size()));
  for (std::size_t k = 0; k < p.size(); ++k) out[k] += p.coeffs()[k];
  for (std::size_t k = 0; k < q.size(); ++k) out[k] -= q.coeffs()[k];
  return IntPoly(std::move(out));
}

inline IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Integer> out(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Integer& a = p.coeffs()[i];
    if (a == 0) continue;
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += a * q.coeffs()[j];
  }
  return IntPoly(std::move(out));
}

inline IntPoly operator*(const Integer& c, const IntPoly& p) {
  std::vector<Integer> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& a : out) a *= c;
  return IntPoly(std::move(out));
}

inline IntPoly poly_add(const IntPoly& p, const IntPoly& q) { return p + q; }
inline IntPoly poly_mul(const IntPoly& p, const IntPoly& q) { return p * q; }

/// p^k by repeated squaring.
inline IntPoly poly_pow(IntPoly p, unsigned k) {
  IntPoly result{1};
  while (k != 0) {
    if (k & 1U) result = result * p;
    k >>= 1U;
    if (k != 0) p = p * p;
  }
  return result;
}

struct DivRem {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division by a monic f of degree >= 1: g = f * quotient + remainder with
/// remainder zero or of degree < deg f. Exact over the integers.
inline DivRem poly_divrem_monic(const IntPoly& g, const IntPoly& f) {
  if (!f.is_monic()) throw precondition_error("divisor must be monic");
  const std::size_t m = f.degree();
  if (m < 1) throw precondition_error("divisor must have degree at least 1");

  std::vector<Integer> rem(g.coeffs().begin(), g.coeffs().end());
  if (rem.size() <= m) return {IntPoly{}, g};

  std::vector<Integer> quot(rem.size() - m);
  for (std::size_t k = rem.size(); k-- > m;) {
    const Integer c = rem[k];
    if (c == 0) continue;
    quot[k - m] = c;
    for (std::size_t i = 0; i <= m; ++i) rem[k - m + i] -= c * f.coeffs()[i];
  }
  rem.resize(m);
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

/// Horner evaluation.
inline Integer poly_eval(const IntPoly& p, const Integer& a) {
  Integer acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * a + p.coeffs()[k];
  return acc;
}

/// Coefficients reduced to canonical residues in [0, n), then renormalized.
inline IntPoly poly_reduce_mod(const IntPoly& p, const Modulus& n) {
  std::vector<Integer> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(n.reduce(c));
  return IntPoly(std::move(out));
}

/// g_n = x^(n-1) + ... + x + 1 = (x^n - 1)/(x - 1).
inline IntPoly make_gn(std::size_t n) {
  if (n == 0) throw precondition_error("g_n requires n >= 1");
  return IntPoly(std::vector<Integer>(n, Integer(1)));
}

/// Expanded (x - a)^k, built from binomial coefficients.
inline IntPoly make_power_of_linear(const Integer& a, std::size_t k) {
  // coefficient of x^j is C(k, j) (-a)^(k-j)
  std::vector<Integer> out(k + 1);
  Integer binom = 1;
  for (std::size_t j = 0; j <= k; ++j) {
    out[j] = binom;
    binom = binom * Integer(k - j) / Integer(j + 1);
  }
  const Integer neg = -a;
  Integer power = 1;
  for (std::size_t j = k + 1; j-- > 0;) {
    out[j] *= power;
    power *= neg;
  }
  return IntPoly(std::move(out));
}

/// p(x + shift), by Horner in the shifted variable.
inline IntPoly poly_shift(const IntPoly& p, const Integer& shift) {
  const IntPoly lin = IntPoly(std::vector<Integer>{shift, Integer(1)});
  IntPoly acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * lin + IntPoly::constant(p.coeffs()[k]);
  return acc;
}

}  // namespace recip
