#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "recip/matrix.hpp"

namespace recip {
namespace {

oracle::Dense to_dense(const IntMatrix& m) {
  oracle::Dense d(m.dim(), std::vector<Integer>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) d[i][j] = m(i, j);
  return d;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t dim, long cap, int zero_bias = 0) {
  std::uniform_int_distribution<long> entry(-cap, cap);
  std::uniform_int_distribution<int> zero(0, 3);
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = zero(rng) < zero_bias ? 0 : entry(rng);
  return m;
}

IntPoly random_monic(std::mt19937_64& rng, std::size_t max_degree, long cap) {
  std::uniform_int_distribution<long> coeff(-cap, cap);
  std::vector<Integer> c(std::uniform_int_distribution<std::size_t>(0, max_degree)(rng) + 1);
  for (auto& a : c) a = coeff(rng);
  c.back() = 1;
  return IntPoly(std::move(c));
}

TEST(CompanionMatrix, Examples) {
  EXPECT_EQ(companion_matrix({2, -3, 1}), IntMatrix({{0, -2}, {1, 3}}));
  EXPECT_EQ(companion_matrix(IntPoly{1}).dim(), 0U);
  EXPECT_EQ(companion_matrix({-7, 1}), IntMatrix({{7}}));
  EXPECT_THROW(companion_matrix({1, 2}), precondition_error);
  EXPECT_THROW(companion_matrix(IntPoly{}), precondition_error);
}

TEST(CompanionMatrix, Layout) {
  const IntMatrix c = companion_matrix({5, 6, 7, 1});
  EXPECT_EQ(c, IntMatrix({{0, 0, -5}, {1, 0, -6}, {0, 1, -7}}));
}

TEST(MatrixPolyEval, Examples) {
  const IntMatrix m{{1, 2}, {3, 4}};
  EXPECT_EQ(matrix_poly_eval(IntPoly::x(), m), m);
  EXPECT_EQ(matrix_poly_eval(IntPoly{1}, m), IntMatrix::identity(2));
  EXPECT_TRUE(matrix_poly_eval({1, 0, 1}, IntMatrix({{0, -1}, {1, 0}})).is_zero());
  EXPECT_EQ(matrix_poly_eval({1, 2, 3}, IntMatrix{}).dim(), 0U);
  // x^2 + 1 at [[1,2],[3,4]]: [[7,10],[15,22]] + I
  EXPECT_EQ(matrix_poly_eval({1, 0, 1}, m), IntMatrix({{8, 10}, {15, 23}}));
}

TEST(MatrixPolyEval, CayleyHamiltonForCompanions) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const IntPoly f = random_monic(rng, 8, 9);
    EXPECT_TRUE(matrix_poly_eval(f, companion_matrix(f)).is_zero());
  }
}

TEST(CompanionPolyEval, MatchesGenericHorner) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int t = 0; t < 200; ++t) {
    const IntPoly f = random_monic(rng, 8, 9);
    std::vector<Integer> gc(std::uniform_int_distribution<std::size_t>(0, 12)(rng) + 1);
    for (auto& a : gc) a = coeff(rng);
    const IntPoly g(std::move(gc));
    ASSERT_EQ(companion_poly_eval(g, f), matrix_poly_eval(g, companion_matrix(f)));
  }
}

TEST(CompanionPolyEval, ReducesModN) {
  const Modulus n(12);
  const IntPoly f{-5, 3, 1};
  const IntPoly g{7, -11, 0, 4};
  const IntMatrix over_z = companion_poly_eval(g, f);
  const IntMatrix reduced = companion_poly_eval(g, f, &n);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(reduced(i, j), n.reduce(over_z(i, j)));
}

TEST(DetBareiss, Examples) {
  EXPECT_EQ(det_bareiss(IntMatrix{}), 1);
  EXPECT_EQ(det_bareiss(IntMatrix({{1, 2}, {3, 4}})), -2);
  EXPECT_EQ(det_bareiss(companion_matrix({2, -3, 1})), 2);
  EXPECT_EQ(oracle::cofactor_det(to_dense(companion_matrix({2, -3, 1}))), 2);
}

TEST(DetBareiss, PivotingCases) {
  EXPECT_EQ(det_bareiss(IntMatrix({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(det_bareiss(IntMatrix({{0, 1, 2}, {0, 3, 4}, {5, 6, 7}})), 5 * (4 - 6));
  EXPECT_EQ(det_bareiss(IntMatrix({{0, 1}, {0, 3}})), 0);
  EXPECT_EQ(det_bareiss(IntMatrix({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})), 0);
  // zero pivot appears mid-elimination
  EXPECT_EQ(det_bareiss(IntMatrix({{1, 1, 1}, {1, 1, 2}, {1, 2, 1}})), -1);
}

TEST(DetBareiss, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(99);
  for (std::size_t dim = 0; dim <= 5; ++dim)
    for (int t = 0; t < 100; ++t) {
      const IntMatrix m = random_matrix(rng, dim, 9, t % 3);
      ASSERT_EQ(det_bareiss(m), oracle::cofactor_det(to_dense(m))) << "dim=" << dim << " t=" << t;
    }
}

TEST(DetBareiss, TransposeInvariant) {
  std::mt19937_64 rng(100);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix m = random_matrix(rng, 1 + t % 9, 9, t % 4);
    EXPECT_EQ(det_bareiss(m), det_bareiss(m.transposed()));
  }
}

TEST(DetBareiss, CompanionDeterminant) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 100; ++t) {
    const IntPoly f = random_monic(rng, 8, 9);
    const std::size_t m = f.degree();
    const Integer expected = m % 2 == 0 ? f.coeff(0) : Integer(-f.coeff(0));
    EXPECT_EQ(det_bareiss(companion_matrix(f)), expected);
  }
}

TEST(DetBareiss, LargeEntriesStayExact) {
  // Vandermonde matrix: det = prod_{i<j} (x_j - x_i)
  const std::vector<long> xs{3, -5, 8, 13, -21, 34, 55, -89};
  IntMatrix v(xs.size());
  Integer expected = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Integer p = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      v(i, j) = p;
      p *= xs[i];
    }
    for (std::size_t k = i + 1; k < xs.size(); ++k) expected *= Integer(xs[k] - xs[i]);
  }
  EXPECT_EQ(det_bareiss(v), expected);
}

}  // namespace
}  // namespace recip
