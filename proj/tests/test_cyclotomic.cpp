#include "gcodim/cyclotomic.hpp"

#include <gtest/gtest.h>

using namespace gcodim;

namespace {

IntPoly poly(std::initializer_list<int> c) {
  IntPoly p;
  for (int x : c) p.emplace_back(x);
  return p;
}

}  // namespace

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), poly({1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), poly({1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), poly({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), poly({1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(8), poly({1, 0, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), poly({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(15), poly({1, -1, 0, 1, -1, 1, 0, -1, 1}));
  EXPECT_THROW(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST(Cyclotomic, RootsOfUnity) {
  for (int d = 1; d <= 12; ++d) {
    EXPECT_EQ(CyclotomicInt::zeta_power(d, d), CyclotomicInt::constant(d, 1));
    EXPECT_EQ(CyclotomicInt::zeta_power(d, -1) * CyclotomicInt::zeta_power(d, 1), CyclotomicInt::constant(d, 1));
    CyclotomicInt sum(d);
    for (int k = 0; k < d; ++k) sum += CyclotomicInt::zeta_power(d, k);
    EXPECT_EQ(sum, CyclotomicInt::constant(d, d == 1 ? 1 : 0)) << d;
  }
}

TEST(Cyclotomic, RingLaws) {
  for (int d = 2; d <= 8; ++d) {
    const auto a = CyclotomicInt::zeta_power(d, 1) + CyclotomicInt::constant(d, 3);
    const auto b = CyclotomicInt::zeta_power(d, 2) * BigInt(-2) + CyclotomicInt::zeta_power(d, 5);
    const auto c = CyclotomicInt::zeta_power(d, 3) + CyclotomicInt::constant(d, -1);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
  EXPECT_THROW(CyclotomicInt(3) + CyclotomicInt(4), std::invalid_argument);
}
