#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "recip/poly.hpp"

namespace recip {

/// Square matrix of big integers, row-major. Dimension 0 is allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) throw precondition_error("matrix rows must all have length dim");
      std::size_t j = 0;
      for (long v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  static IntMatrix identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  IntMatrix transposed() const {
    IntMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (e != 0) return false;
    return true;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Integer> entries_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw precondition_error("matrix dimensions differ");
  const std::size_t n = a.dim();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

/// Companion matrix of a monic f = a_0 + ... + a_{m-1} x^{m-1} + x^m:
/// ones on the subdiagonal, last column -a_0 ... -a_{m-1}.
inline IntMatrix companion_matrix(const IntPoly& f) {
  if (!f.is_monic()) throw precondition_error("companion matrix needs a monic polynomial");
  const std::size_t m = f.degree();
  IntMatrix c(m);
  for (std::size_t i = 0; i + 1 < m; ++i) c(i + 1, i) = 1;
  for (std::size_t i = 0; i < m; ++i) c(i, m - 1) = -f.coeffs()[i];
  return c;
}

/// g(M) by Horner: acc <- acc * M + b_k I.
inline IntMatrix matrix_poly_eval(const IntPoly& g, const IntMatrix& m) {
  const std::size_t n = m.dim();
  IntMatrix acc(n);
  for (std::size_t k = g.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += g.coeffs()[k];
  }
  return acc;
}

/// g(C_f) for the companion matrix of a monic f, by the same Horner scheme
/// as matrix_poly_eval. Right multiplication by C_f is a column shift plus
/// one dense column, so each step costs O(m^2) instead of O(m^3).
///
/// If `modulus` is given, entries are reduced to canonical residues after
/// every step, which evaluates g(C_f) over Z/nZ.
inline IntMatrix companion_poly_eval(const IntPoly& g, const IntPoly& f,
                                     const Modulus* modulus = nullptr) {
  if (!f.is_monic()) throw precondition_error("companion matrix needs a monic polynomial");
  const std::size_t m = f.degree();
  IntMatrix acc(m);
  std::vector<Integer> last(m);
  for (std::size_t k = g.size(); k-- > 0;) {
    if (m > 0) {
      for (std::size_t i = 0; i < m; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < m; ++j)
          if (f.coeffs()[j] != 0) s -= f.coeffs()[j] * acc(i, j);
        last[i] = std::move(s);
      }
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j + 1 < m; ++j) acc(i, j) = std::move(acc(i, j + 1));
        acc(i, m - 1) = std::move(last[i]);
      }
    }
    for (std::size_t i = 0; i < m; ++i) acc(i, i) += g.coeffs()[k];
    if (modulus != nullptr)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) acc(i, j) = modulus->reduce(acc(i, j));
  }
  return acc;
}

/// Exact determinant by Bareiss fraction-free elimination. The pivot is the
/// first nonzero entry at or below the diagonal; swaps flip the sign. The
/// empty matrix has determinant 1.
inline Integer det_bareiss(IntMatrix a) {
  const std::size_t n = a.dim();
  if (n == 0) return 1;
  bool negate = false;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(r, j));
      negate = !negate;
    }
    const Integer pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Integer lead = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * pivot - lead * a(k, j);
        // exact by Sylvester's identity
        mpz_divexact(v.backend().data(), v.backend().data(), prev.backend().data());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev = pivot;
  }
  Integer det = a(n - 1, n - 1);
  return negate ? Integer(-det) : det;
}

}  // namespace recip
