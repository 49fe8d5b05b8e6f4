#include <gtest/gtest.h>

#include "support.hpp"

using namespace skein;
using skein::testing::Gen;

namespace {

UnivariatePoly poly(std::initializer_list<int> coeffs_low_first) {
  UnivariatePoly p;
  int d = 0;
  for (int c : coeffs_low_first) p.add(d++, c);
  return p;
}

// Brute force: S_m S_n expanded in powers of x and peeled degree by degree.
std::map<int, int> brute_S_product(int m, int n) {
  UnivariatePoly prod = cheb_S(m) * cheb_S(n);
  std::map<int, int> out;
  while (!prod.is_zero()) {
    int d = prod.degree();
    LaurentPoly c = prod.coeff(d);
    out[d] += static_cast<int>(c.coeff(0));
    prod = prod - UnivariatePoly::constant(c) * cheb_S(d);
  }
  return out;
}

}  // namespace

TEST(Chebyshev, SmallPolynomials) {
  EXPECT_EQ(cheb_T(0), poly({2}));
  EXPECT_EQ(cheb_T(1), poly({0, 1}));
  EXPECT_EQ(cheb_T(2), poly({-2, 0, 1}));
  EXPECT_EQ(cheb_T(3), poly({0, -3, 0, 1}));
  EXPECT_EQ(cheb_S(0), poly({1}));
  EXPECT_EQ(cheb_S(2), poly({-1, 0, 1}));
  EXPECT_EQ(cheb_S(3), poly({0, -2, 0, 1}));
}

TEST(Chebyshev, PowerToS) {
  EXPECT_EQ(power_to_S(poly({0, 0, 1})), (ChebCoeffs{{0, 1}, {2, 1}}));
  EXPECT_EQ(power_to_S(poly({0, 0, 0, 1})), (ChebCoeffs{{1, 2}, {3, 1}}));
  EXPECT_EQ(power_in_S(4), (std::map<int, Int>{{0, 2}, {2, 3}, {4, 1}}));
}

TEST(Chebyshev, SProduct) {
  EXPECT_EQ(S_product(2, 3), (std::vector<int>{5, 3, 1}));
  EXPECT_EQ(S_product(0, 4), (std::vector<int>{4}));
  EXPECT_EQ(S_product(3, 3), (std::vector<int>{6, 4, 2, 0}));
}

TEST(Chebyshev, RecurrencesUpTo20) {
  UnivariatePoly x = UnivariatePoly::var();
  for (int n = 1; n < 20; ++n) {
    EXPECT_EQ(cheb_T(n + 1), x * cheb_T(n) - cheb_T(n - 1)) << n;
    EXPECT_EQ(cheb_S(n + 1), x * cheb_S(n) - cheb_S(n - 1)) << n;
  }
}

TEST(Chebyshev, TAndSRelation) {
  // T_n = S_n - S_{n-2}, an identity not used by the implementation.
  for (int n = 2; n <= 20; ++n) EXPECT_EQ(cheb_T(n), cheb_S(n) - cheb_S(n - 2)) << n;
}

TEST(Chebyshev, SProductAgainstBruteForce) {
  for (int m = 0; m <= 10; ++m)
    for (int n = 0; n <= 10; ++n) {
      std::map<int, int> want;
      for (int i : S_product(m, n)) want[i] += 1;
      EXPECT_EQ(brute_S_product(m, n), want) << m << "," << n;
    }
}

TEST(ChebyshevProperty, BasisChangeIsBijective) {
  Gen g(5);
  for (int i = 0; i < 100; ++i) {
    UnivariatePoly p;
    int deg = g.uniform(0, 20);
    for (int d = 0; d <= deg; ++d) p.add(d, g.laurent(2, 4, 5));
    EXPECT_EQ(S_to_power(power_to_S(p)), p);
    ChebCoeffs c;
    for (int d = 0; d <= deg; ++d)
      if (auto v = g.laurent(2, 4, 5); !v.is_zero()) c[d] = v;
    EXPECT_EQ(power_to_S(S_to_power(c)), c);
  }
}

TEST(ChebyshevProperty, BivariateViewRoundTrip) {
  Gen g(6);
  for (int i = 0; i < 100; ++i) {
    Poly2 p = g.poly2(6, 8, 6);
    EXPECT_EQ(from_cheb(to_cheb(p)), p);
  }
  EXPECT_EQ(Sxy(2, 1), Poly2::x(2) * Poly2::y() - Poly2::y());
}
