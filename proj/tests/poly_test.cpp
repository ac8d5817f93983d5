#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "recip/poly.hpp"

namespace recip {
namespace {

IntPoly random_poly(std::mt19937_64& rng, std::size_t max_degree, long cap) {
  std::uniform_int_distribution<long> coeff(-cap, cap);
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<Integer> c(deg(rng) + 1);
  for (auto& a : c) a = coeff(rng);
  return IntPoly(std::move(c));
}

IntPoly random_monic(std::mt19937_64& rng, std::size_t min_degree, std::size_t max_degree, long cap) {
  std::uniform_int_distribution<long> coeff(-cap, cap);
  std::uniform_int_distribution<std::size_t> deg(min_degree, max_degree);
  std::vector<Integer> c(deg(rng) + 1);
  for (auto& a : c) a = coeff(rng);
  c.back() = 1;
  return IntPoly(std::move(c));
}

TEST(IntPoly, NormalizesTrailingZeros) {
  EXPECT_EQ(IntPoly({1, 2, 0, 0}), IntPoly({1, 2}));
  EXPECT_TRUE(IntPoly({0, 0}).is_zero());
  EXPECT_EQ(IntPoly({0, 0}).size(), 0U);
}

TEST(IntPoly, ZeroPolynomialHasNoDegree) {
  EXPECT_THROW(IntPoly{}.degree(), precondition_error);
  EXPECT_THROW(IntPoly{}.leading(), precondition_error);
  EXPECT_FALSE(IntPoly{}.is_monic());
}

TEST(PolyAdd, Examples) {
  EXPECT_EQ(poly_add({1, 1}, {-1, 1}), IntPoly({0, 2}));
  const IntPoly p{3, -1, 4};
  EXPECT_EQ(poly_add(p, IntPoly{}), p);
  EXPECT_EQ(poly_add({1, 1, 1}, {-1, 0, 1}), IntPoly({0, 1, 2}));
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(poly_mul({-1, 1}, {1, 1}), IntPoly({-1, 0, 1}));
  const IntPoly p{3, -1, 4};
  EXPECT_EQ(poly_mul(p, IntPoly{1}), p);
  EXPECT_EQ(poly_mul({1, 1}, {1, 1, 1}), IntPoly({1, 2, 2, 1}));
  EXPECT_TRUE(poly_mul(p, IntPoly{}).is_zero());
}

TEST(PolyMul, DegreesAddAndMonicsStayMonic) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const IntPoly p = random_monic(rng, 0, 10, 9);
    const IntPoly q = random_monic(rng, 0, 10, 9);
    const IntPoly pq = p * q;
    EXPECT_EQ(pq.degree(), p.degree() + q.degree());
    EXPECT_TRUE(pq.is_monic());
  }
}

TEST(PolyDivRem, Examples) {
  const IntPoly x5m1 = IntPoly::monomial(5) - IntPoly{1};
  const IntPoly x3m1 = IntPoly::monomial(3) - IntPoly{1};
  const DivRem dr = poly_divrem_monic(x5m1, x3m1);
  EXPECT_EQ(dr.quotient, IntPoly({0, 0, 1}));
  EXPECT_EQ(dr.remainder, IntPoly({-1, 0, 1}));

  const IntPoly f{2, -3, 1};
  const DivRem self = poly_divrem_monic(f, f);
  EXPECT_EQ(self.quotient, IntPoly{1});
  EXPECT_TRUE(self.remainder.is_zero());

  const DivRem small = poly_divrem_monic({1, 1}, {1, 0, 1});
  EXPECT_TRUE(small.quotient.is_zero());
  EXPECT_EQ(small.remainder, IntPoly({1, 1}));
}

TEST(PolyDivRem, RejectsBadDivisors) {
  EXPECT_THROW(poly_divrem_monic({1, 1}, {1, 2}), precondition_error);
  EXPECT_THROW(poly_divrem_monic({1, 1}, IntPoly{}), precondition_error);
  EXPECT_THROW(poly_divrem_monic({1, 1}, IntPoly{1}), precondition_error);
}

TEST(PolyDivRem, ReconstructsDividend) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const IntPoly f = random_monic(rng, 1, 8, 9);
    const IntPoly g = random_poly(rng, 16, 9);
    const DivRem dr = poly_divrem_monic(g, f);
    EXPECT_EQ(f * dr.quotient + dr.remainder, g);
    if (!dr.remainder.is_zero()) EXPECT_LT(dr.remainder.degree(), f.degree());
  }
}

TEST(PolyEval, Examples) {
  EXPECT_EQ(poly_eval(make_gn(5), 1), 5);
  EXPECT_EQ(poly_eval({7, 3, 2}, 0), 7);
  EXPECT_EQ(poly_eval({-1, 1, 1}, 2), 5);
  EXPECT_EQ(poly_eval(IntPoly{}, 12), 0);
}

TEST(PolyReduceMod, Examples) {
  const Modulus seven(7);
  EXPECT_EQ(poly_reduce_mod(make_gn(7), seven), make_gn(7));
  EXPECT_EQ(poly_reduce_mod(make_power_of_linear(1, 6), seven), make_gn(7));
  EXPECT_TRUE(poly_reduce_mod({14, 0, 7}, seven).is_zero());
  EXPECT_EQ(poly_reduce_mod({-1, -8, 1}, seven), IntPoly({6, 6, 1}));
}

TEST(PolyReduceMod, CommutesWithMultiplication) {
  std::mt19937_64 rng(13);
  for (long n : {2L, 3L, 7L, 12L, 97L}) {
    const Modulus mod(n);
    for (int t = 0; t < 50; ++t) {
      const IntPoly p = random_poly(rng, 8, 50);
      const IntPoly q = random_poly(rng, 8, 50);
      EXPECT_EQ(poly_reduce_mod(p * q, mod),
                poly_reduce_mod(poly_reduce_mod(p, mod) * poly_reduce_mod(q, mod), mod));
    }
  }
}

TEST(Modulus, RejectsSmallValues) {
  EXPECT_THROW(Modulus(1), precondition_error);
  EXPECT_THROW(Modulus(0), precondition_error);
  EXPECT_EQ(Modulus(5).reduce(-1), 4);
}

TEST(MakeGn, Examples) {
  EXPECT_EQ(make_gn(1), IntPoly{1});
  EXPECT_EQ(make_gn(5), IntPoly({1, 1, 1, 1, 1}));
  EXPECT_EQ(make_gn(2), IntPoly({1, 1}));
  EXPECT_THROW(make_gn(0), precondition_error);
}

TEST(MakeGn, ValueAtOneAndTimesXMinusOne) {
  for (std::size_t n = 1; n <= 1000; ++n) {
    const IntPoly gn = make_gn(n);
    ASSERT_EQ(poly_eval(gn, 1), Integer(n));
    ASSERT_EQ((gn * IntPoly{-1, 1}), IntPoly::monomial(n) - IntPoly{1}) << "n=" << n;
  }
}

TEST(MakePowerOfLinear, Examples) {
  EXPECT_EQ(make_power_of_linear(1, 2), IntPoly({1, -2, 1}));
  EXPECT_EQ(make_power_of_linear(5, 0), IntPoly{1});
  EXPECT_EQ(make_power_of_linear(2, 3), IntPoly({-8, 12, -6, 1}));
}

TEST(MakePowerOfLinear, MatchesPascalTriangle) {
  for (std::size_t k = 0; k <= 60; ++k) {
    const auto row = oracle::pascal_row(k);
    const IntPoly p = make_power_of_linear(1, k);
    for (std::size_t j = 0; j <= k; ++j) {
      const Integer expected = (k - j) % 2 == 0 ? row[j] : Integer(-row[j]);
      ASSERT_EQ(p.coeff(j), expected) << "k=" << k << " j=" << j;
    }
  }
}

TEST(MakePowerOfLinear, MatchesRepeatedMultiplication) {
  for (long a : {-3L, 0L, 2L, 7L})
    for (std::size_t k = 0; k <= 12; ++k)
      EXPECT_EQ(make_power_of_linear(a, k), IntPoly(oracle::from_roots(std::vector<Integer>(k, Integer(a)))));
}

TEST(GpModP, CongruentToPowerOfXMinusOne) {
  for (std::uint64_t p = 2; p <= 97; ++p) {
    if (!oracle::is_prime_trial(p)) continue;
    const Modulus mod{Integer(p)};
    EXPECT_EQ(poly_reduce_mod(make_power_of_linear(1, p - 1), mod), poly_reduce_mod(make_gn(p), mod))
        << "p=" << p;
  }
}

TEST(PolyShift, ShiftsTheVariable) {
  // (x + 1)^2 shifted by -1 is x^2
  EXPECT_EQ(poly_shift({1, 2, 1}, -1), IntPoly({0, 0, 1}));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const IntPoly p = random_poly(rng, 8, 9);
    for (long a : {-2L, 0L, 5L}) EXPECT_EQ(poly_eval(poly_shift(p, a), 3), poly_eval(p, 3 + a));
  }
}

}  // namespace
}  // namespace recip
