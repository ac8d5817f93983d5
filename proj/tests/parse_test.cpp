#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "recip/parse.hpp"

namespace recip {
namespace {

TEST(ParsePoly, Examples) {
  EXPECT_EQ(parse_poly("x^4+x^3+x^2+x+1"), make_gn(5));
  EXPECT_EQ(parse_poly("(x-1)^6"), IntPoly({1, -6, 15, -20, 15, -6, 1}));
  EXPECT_TRUE(parse_poly("0").is_zero());
}

TEST(ParsePoly, BinomialExpansionMatchesOracle) {
  const auto row = oracle::pascal_row(6);
  const IntPoly p = parse_poly("(x - 1)^6");
  for (std::size_t j = 0; j <= 6; ++j)
    EXPECT_EQ(p.coeff(j), (6 - j) % 2 == 0 ? row[j] : Integer(-row[j]));
}

TEST(ParsePoly, GrammarFeatures) {
  EXPECT_EQ(parse_poly("  -x^2 + 1 "), IntPoly({1, 0, -1}));
  EXPECT_EQ(parse_poly("+x"), IntPoly::x());
  EXPECT_EQ(parse_poly("2*x*x - 3*(x+1)"), IntPoly({-3, -3, 2}));
  EXPECT_EQ(parse_poly("(x^2)^3"), IntPoly::monomial(6));
  EXPECT_EQ(parse_poly("x^0"), IntPoly{1});
  EXPECT_EQ(parse_poly("123456789012345678901234567890*x"),
            IntPoly::monomial(1, Integer("123456789012345678901234567890")));
  EXPECT_EQ(parse_poly("(x - 1)"), IntPoly({-1, 1}));
}

TEST(ParsePoly, Errors) {
  const auto error_at = [](const char* s) -> std::size_t {
    try {
      parse_poly(s);
    } catch (const parse_error& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << s;
    return 0;
  };
  EXPECT_EQ(error_at("x^-1"), 2U);     // exponent must be a nonnegative integer
  EXPECT_EQ(error_at("x^2^3"), 3U);    // chained '^'
  EXPECT_EQ(error_at("x + 1 )"), 6U);  // stray token
  EXPECT_EQ(error_at("(x + -1)"), 5U);
  EXPECT_EQ(error_at("2x"), 1U);
  EXPECT_EQ(error_at("y + 1"), 0U);
  EXPECT_EQ(error_at("xy"), 0U);
  EXPECT_EQ(error_at("(x + 1"), 6U);
  EXPECT_EQ(error_at(""), 0U);
  EXPECT_EQ(error_at("x +"), 3U);
  EXPECT_EQ(error_at("x^"), 2U);
  EXPECT_EQ(error_at("x^1.5"), 3U);
}

TEST(FormatPoly, Examples) {
  EXPECT_EQ(format_poly(make_gn(3)), "x^2 + x + 1");
  EXPECT_EQ(format_poly({-1, 1, 1}), "x^2 + x - 1");
  EXPECT_EQ(format_poly(IntPoly{}), "0");
  EXPECT_EQ(format_poly({-8, 12, -6, 1}), "x^3 - 6*x^2 + 12*x - 8");
  EXPECT_EQ(format_poly({0, -1}), "-x");
  EXPECT_EQ(format_poly(IntPoly{-5}), "-5");
}

TEST(FormatPoly, RoundTripsRandomPolynomials) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> deg(0, 12);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  std::uniform_int_distribution<int> sparse(0, 2);
  for (int t = 0; t < 500; ++t) {
    std::vector<Integer> c(deg(rng) + 1);
    for (auto& a : c) a = sparse(rng) == 0 ? 0 : coeff(rng);
    const IntPoly p(std::move(c));
    const std::string s = format_poly(p);
    ASSERT_EQ(parse_poly(s), p) << s;
    ASSERT_EQ(format_poly(parse_poly(s)), s);
  }
}

TEST(FormatPoly, CanonicalFormIsIdempotent) {
  for (const char* s : {"(x+1)^3 - x", "x*x*x - 2*(x - 3)^2", "0*x + 5", "-(x)^2", "  x  "}) {
    const std::string once = format_poly(parse_poly(s));
    EXPECT_EQ(format_poly(parse_poly(once)), once) << s;
  }
}

}  // namespace
}  // namespace recip
