#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <string_view>
#include <utility>
#include <vector>

#include "recip/matrix.hpp"

namespace recip {

enum class ResultantMethod { barnett, sylvester };

inline std::string_view to_string(ResultantMethod m) {
  return m == ResultantMethod::barnett ? "barnett" : "sylvester";
}

/// Hook applied to g(C_f) before its determinant is taken. Only the fault
/// injection tests use it.
using MatrixHook = std::function<void(IntMatrix&)>;

namespace detail {

inline void require_monic(const IntPoly& f, const IntPoly& g) {
  if (!f.is_monic() || !g.is_monic())
    throw precondition_error("resultants are defined here for monic polynomials only");
}

}  // namespace detail

/// Res(f, g) := det(g(C_f)).
inline Integer resultant_barnett(const IntPoly& f, const IntPoly& g,
                                 const MatrixHook& hook = {}) {
  detail::require_monic(f, g);
  IntMatrix m = companion_poly_eval(g, f);
  if (hook) hook(m);
  return det_bareiss(std::move(m));
}

/// Classical Sylvester matrix: deg f rows of shifted g coefficients, then
/// deg g rows of shifted f coefficients, leading coefficients first.
inline IntMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g) {
  const std::size_t m = f.degree();
  const std::size_t n = g.degree();
  IntMatrix s(m + n);
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t k = 0; k <= n; ++k) s(row, row + k) = g.coeffs()[n - k];
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t k = 0; k <= m; ++k) s(m + row, row + k) = f.coeffs()[m - k];
  return s;
}

/// Determinant of the Sylvester matrix, sign-normalized to prod g(alpha_i)
/// over the roots alpha_i of f.
inline Integer resultant_sylvester(const IntPoly& f, const IntPoly& g) {
  detail::require_monic(f, g);
  Integer d = det_bareiss(sylvester_matrix(f, g));
  if ((f.degree() * g.degree()) % 2 == 1) d = -d;
  return d;
}

inline Integer resultant(const IntPoly& f, const IntPoly& g,
                         ResultantMethod method = ResultantMethod::barnett) {
  return method == ResultantMethod::barnett ? resultant_barnett(f, g)
                                            : resultant_sylvester(f, g);
}

/// Res(phi(f), phi(g)) for phi : Z -> Z/nZ, computed entirely with
/// residues: reduced inputs, g(C_f) reduced after every Horner step, and
/// the determinant reduced at the end. Returns the canonical residue.
inline Integer resultant_mod(const IntPoly& f, const IntPoly& g, const Modulus& n) {
  detail::require_monic(f, g);
  const IntPoly fr = poly_reduce_mod(f, n);
  const IntPoly gr = poly_reduce_mod(g, n);
  return n.reduce(det_bareiss(companion_poly_eval(gr, fr, &n)));
}

/// Index pairs (m_k, n_k) visited while reducing Res(g_m, g_n).
struct EuclidChain {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  friend bool operator==(const EuclidChain&, const EuclidChain&) = default;
};

struct ChainResult {
  Integer value;
  EuclidChain chain;
};

/// Res(g_m, g_n) for coprime m, n by replaying the Euclidean reduction
///   g_n = g_m * h + g_r   (n = m q + r, 0 <= r < m)
///   Res(g_m, g_n) = Res(g_m, g_r) = (-1)^{deg g_m deg g_r} Res(g_r, g_m)
/// until the smaller index reaches 1, where Res(g_1, g_k) = Res(1, g_k) is
/// the determinant of the empty matrix. Every division step is checked.
/// Arguments may come in either order; the chain starts at (min, max).
inline ChainResult gchain_resultant(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw precondition_error("g_n requires n >= 1");
  if (std::gcd(m, n) != 1) throw precondition_error("gchain_resultant requires gcd(m, n) = 1");
  if (m > n) std::swap(m, n);

  ChainResult out;
  bool negate = false;
  while (true) {
    out.chain.pairs.emplace_back(m, n);
    if (m == 1) break;
    const std::size_t r = n % m;
    const IntPoly gm = make_gn(m);
    const DivRem dr = poly_divrem_monic(make_gn(n), gm);
    const IntPoly gr = r == 0 ? IntPoly{} : make_gn(r);
    if (dr.remainder != gr) throw consistency_error("g_n mod g_m is not g_r");
    if (((m - 1) * (r - 1)) % 2 == 1) negate = !negate;
    n = m;
    m = r;
  }
  out.value = resultant_barnett(IntPoly{1}, make_gn(n));
  if (negate) out.value = -out.value;
  return out;
}

struct Res4Check {
  IntPoly g;
  Integer res_fg;
  Integer res_fr;
  bool holds() const { return res_fg == res_fr; }
};

/// Builds g = f q + r and evaluates both sides of Res(f, g) = Res(f, r).
inline Res4Check check_res4(const IntPoly& f, const IntPoly& q, const IntPoly& r,
                            const MatrixHook& hook = {}) {
  if (!f.is_monic() || !q.is_monic() || !r.is_monic())
    throw precondition_error("check_res4 needs monic f, q, r");
  if (r.degree() >= f.degree()) throw precondition_error("check_res4 needs deg r < deg f");
  Res4Check out;
  out.g = f * q + r;
  out.res_fg = resultant_barnett(f, out.g, hook);
  out.res_fr = resultant_barnett(f, r, hook);
  return out;
}

}  // namespace recip
