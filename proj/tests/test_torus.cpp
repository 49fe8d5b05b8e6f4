#include <gtest/gtest.h>

#include "support.hpp"

using namespace skein;
using skein::testing::Gen;

namespace {

TorusElement C(int p, int q, const LaurentPoly& c = 1) { return TorusElement::curve(p, q, c); }

}  // namespace

TEST(Torus, Canonicalize) {
  EXPECT_EQ(canonicalize(-1, 3).curve, (Curve{1, -3}));
  EXPECT_EQ(canonicalize(0, -2).curve, (Curve{0, 2}));
  EXPECT_EQ(canonicalize(2, -5).curve, (Curve{2, -5}));
  EXPECT_TRUE(canonicalize(0, 0).empty_times2);
  EXPECT_EQ(C(0, 0), TorusElement::scalar(2));
  EXPECT_EQ(C(-2, 1), C(2, -1));
}

TEST(Torus, MeridianSquared) {
  EXPECT_EQ(C(1, 0) * C(1, 0), C(2, 0) + TorusElement::scalar(2));
  // Same relation as T_1^2 = T_2 + T_0.
  EXPECT_EQ(cheb_T(1) * cheb_T(1), cheb_T(2) + cheb_T(0));
}

TEST(Torus, CommutationWithLongitude) {
  for (int q = -10; q <= 10; ++q) {
    EXPECT_EQ(C(1, q) * C(0, 1), C(1, q + 1, tpow(1)) + C(1, q - 1, tpow(-1))) << q;
    EXPECT_EQ(C(0, 1) * C(1, q), C(1, q + 1, tpow(-1)) + C(1, q - 1, tpow(1))) << q;
  }
}

TEST(Torus, SignedDeterminantFlipsUnderSwap) {
  Gen g(8);
  for (int i = 0; i < 50; ++i) {
    Curve a{g.uniform(-5, 5), g.uniform(-5, 5)}, b{g.uniform(-5, 5), g.uniform(-5, 5)};
    TorusElement ab = mul_basis(a, b), ba = mul_basis(b, a);
    int D = a.p * b.q - a.q * b.p;
    TorusElement w = C(a.p + b.p, a.q + b.q, tpow(-D)) + C(b.p - a.p, b.q - a.q, tpow(D));
    EXPECT_EQ(ba, w);
    EXPECT_EQ(ab, C(a.p + b.p, a.q + b.q, tpow(D)) + C(a.p - b.p, a.q - b.q, tpow(-D)));
  }
}

TEST(Torus, ParallelCurvesFollowChebyshevT) {
  // (m,0)(n,0) = (m+n,0) + (m-n,0), matching T_m T_n = T_{m+n} + T_{|m-n|}.
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) {
      UnivariatePoly lhs = cheb_T(m) * cheb_T(n);
      EXPECT_EQ(lhs, cheb_T(m + n) + cheb_T(std::abs(m - n)));
      TorusElement prod = C(m, 0) * C(n, 0);
      TorusElement want = C(m + n, 0) + C(m - n, 0);
      EXPECT_EQ(prod, want);
    }
}

TEST(Torus, UnitLaw) {
  Gen g(9);
  for (int i = 0; i < 50; ++i) {
    TorusElement a = g.torus();
    EXPECT_EQ(TorusElement::scalar(1) * a, a);
    EXPECT_EQ(a * TorusElement::scalar(1), a);
  }
}

TEST(TorusProperty, Associativity) {
  Gen g(10);
  for (int i = 0; i < 100; ++i) {
    TorusElement a = g.torus(3, 4), b = g.torus(3, 4), c = g.torus(3, 4);
    EXPECT_EQ((a * b) * c, a * (b * c)) << i;
  }
}

TEST(TorusProperty, Bilinearity) {
  Gen g(12);
  for (int i = 0; i < 50; ++i) {
    TorusElement a = g.torus(), b = g.torus(), c = g.torus();
    LaurentPoly s = g.laurent();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((s * a) * b, s * (a * b));
  }
}
