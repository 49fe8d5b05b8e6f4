#include <gtest/gtest.h>

#include "support.hpp"

using namespace skein;
using skein::testing::eval;
using skein::testing::Gen;

namespace {

LaurentPoly L(const char* s) { return parse_laurent(s); }

}  // namespace

TEST(Laurent, AdditionCancels) {
  EXPECT_EQ(L("t^2 + t^-2") + L("-t^-2"), tpow(2));
  EXPECT_TRUE((L("3*t^5 - t") - L("3*t^5 - t")).is_zero());
}

TEST(Laurent, ProductExample) {
  LaurentPoly p = -tpow(4) * (-tpow(2) - tpow(-2));
  EXPECT_EQ(p, tpow(6) + tpow(2));
  for (int at : {2, 3, -5}) EXPECT_EQ(eval(p, at), eval(tpow(6), at) + eval(tpow(2), at));
}

TEST(Laurent, BarExample) { EXPECT_EQ(bar(L("t^3 - 2*t^-1")), L("t^-3 - 2*t")); }

TEST(Laurent, DivByUnit) {
  EXPECT_EQ(div_by_unit(L("-t^10 + t^6"), -tpow(10)), L("1 - t^-4"));
  EXPECT_THROW(div_by_unit(tpow(3), L("1 + t")), NotAUnit);
  EXPECT_THROW(div_by_unit(tpow(3), LaurentPoly(2) * tpow(1)), NotAUnit);
  EXPECT_THROW(div_by_unit(tpow(3), LaurentPoly()), NotAUnit);
}

TEST(Laurent, DivByEveryUnitUpTo40) {
  Gen g(11);
  for (int k = -40; k <= 40; ++k)
    for (int s : {1, -1}) {
      LaurentPoly u = LaurentPoly(s) * tpow(k);
      LaurentPoly a = g.laurent();
      EXPECT_EQ(div_by_unit(a * u, u), a);
    }
}

TEST(Laurent, QConversion) {
  EXPECT_EQ(to_q(L("-t^4 - 1")), L("-t - 1"));
  EXPECT_EQ(to_q(tpow(-8)), tpow(-2));
  EXPECT_THROW(to_q(tpow(2)), NotInQ);
  EXPECT_FALSE(in_q(L("t^4 + t")));
  EXPECT_EQ(to_text(L("-t^4 - 1"), "t", false, true), "-q - 1");
}

TEST(Laurent, Text) {
  EXPECT_EQ(to_text(L("-t^4 - 1")), "-t^4 - 1");
  EXPECT_EQ(to_text(LaurentPoly()), "0");
  EXPECT_EQ(to_pretty(L("t^-2 - 3*t^10")), "-3t¹⁰ + t⁻²");
}

TEST(Laurent, BigCoefficients) {
  LaurentPoly a = LaurentPoly::monomial(Int("1000000000000000000000000000000"), 1) + LaurentPoly(1);
  LaurentPoly sq = a * a;
  EXPECT_EQ(sq.coeff(2), Int("1000000000000000000000000000000000000000000000000000000000000"));
  EXPECT_EQ(sq.coeff(1), Int("2000000000000000000000000000000"));
  EXPECT_EQ(parse_laurent(to_text(sq)), sq);
}

TEST(LaurentProperty, RingAxiomsAgainstEvaluation) {
  Gen g(1);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = g.laurent(), b = g.laurent(), c = g.laurent();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * LaurentPoly(1), a);
    EXPECT_TRUE((a - a).is_zero());
    for (int at : {2, 3}) {
      EXPECT_EQ(eval(a * b, at), eval(a, at) * eval(b, at));
      EXPECT_EQ(eval(a + b, at), eval(a, at) + eval(b, at));
    }
  }
}

TEST(LaurentProperty, BarIsInvolutiveAutomorphism) {
  Gen g(2);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = g.laurent(), b = g.laurent();
    EXPECT_EQ(bar(bar(a)), a);
    EXPECT_EQ(bar(a * b), bar(a) * bar(b));
    EXPECT_EQ(bar(a + b), bar(a) + bar(b));
  }
}

TEST(LaurentProperty, QRoundTrip) {
  Gen g(3);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = g.laurent();
    EXPECT_EQ(to_q(from_q(a)), a);
    EXPECT_TRUE(in_q(from_q(a)));
  }
}

TEST(LaurentProperty, TextAndJsonRoundTrip) {
  Gen g(4);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = g.laurent();
    EXPECT_EQ(parse_laurent(to_text(a)), a) << to_text(a);
    EXPECT_EQ(laurent_from_json(json::parse(to_json(a).dump())), a);
  }
}
