#include <doctest.h>

#include <cmath>
#include <random>

#include "catalog.hpp"
#include "cox/ring.hpp"

using namespace cox;

TEST_CASE("minimal polynomials of 2cos(pi/L)") {
  // L = 1: theta = -2
  CHECK(NumberField(1).minpoly() == Poly{2, 1});
  // L = 2: theta = 0
  CHECK(NumberField(2).minpoly() == Poly{0, 1});
  // L = 3: theta = 1
  CHECK(NumberField(3).minpoly() == Poly{-1, 1});
  // L = 4: theta = sqrt(2)
  CHECK(NumberField(4).minpoly() == Poly{-2, 0, 1});
  // L = 5: theta = golden ratio
  CHECK(NumberField(5).minpoly() == Poly{-1, -1, 1});
  // L = 6: theta = sqrt(3)
  CHECK(NumberField(6).minpoly() == Poly{-3, 0, 1});
  // degree phi(2L)/2 in general
  CHECK(NumberField(12).degree() == 4);
  CHECK(NumberField(15).degree() == 4);
  CHECK(NumberField(60).degree() == 16);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == Poly{-1, 1});
  CHECK(cyclotomic(2) == Poly{1, 1});
  CHECK(cyclotomic(6) == Poly{1, -1, 1});
  CHECK(cyclotomic(12) == Poly{1, 0, -1, 0, 1});
}

TEST_CASE("field arithmetic and exact signs") {
  NumberField F(5);  // Q(golden ratio)
  FieldElement t = F.theta();
  // theta^2 = theta + 1
  CHECK(t * t == t + F.one());
  CHECK((t * t - t - F.one()).is_zero());
  // theta is positive, 1 - theta negative
  CHECK(t.sign() == 1);
  CHECK((F.one() - t).sign() == -1);
  // theta = (1+sqrt 5)/2 ~ 1.618: compare against 1.61 and 1.62 exactly
  CHECK((t - F.rational(Rational(161, 100))).sign() == 1);
  CHECK((t - F.rational(Rational(162, 100))).sign() == -1);
  // inverse: 1/theta = theta - 1
  CHECK(F.inverse(t) == t - F.one());
}

TEST_CASE("two_cos_pi_times embeds smaller cosines") {
  NumberField F(12);
  // 2cos(pi * 6/12) = 0, 2cos(pi * 4/12) = 1, 2cos(pi * 3/12) = sqrt 2
  CHECK(F.two_cos_pi_times(6).is_zero());
  CHECK(F.two_cos_pi_times(4) == F.one());
  FieldElement r2 = F.two_cos_pi_times(3);
  CHECK(F.mul(r2, r2) == F.rational(2));
  CHECK(r2.sign() == 1);
}

TEST_CASE("sign determination agrees with float evaluation") {
  // random small elements of assorted fields built from B-like values
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (long L : {4L, 5L, 6L, 12L}) {
    NumberField F(L);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Rational> c(F.degree());
      for (auto& q : c)
        q = Rational(coef(rng), 1 + std::abs(coef(rng)));
      FieldElement e(&F, c);
      double approx = e.approx();
      int s = e.sign();
      if (std::fabs(approx) > 1e-6) CHECK(s == (approx > 0 ? 1 : -1));
      if (e.is_zero()) CHECK(s == 0);
    }
  }
}

TEST_CASE("field element printing is stable") {
  NumberField F(5);
  CHECK(F.rational(Rational(-1, 2)).str() == "-1/2");
  CHECK((F.theta() + F.one()).str() == "x+1");
  CHECK((F.theta() * F.rational(Rational(1, 2))).str() == "1/2*x");
}
