/* Copyright (C) 2026 The hyperquad authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include <gtest/gtest.h>

#include "errors.hpp"
#include "fpoly.hpp"
#include "support.hpp"

using namespace hq;

namespace {

FqPoly P(const FieldPtr& F, std::string_view text) { return parse_poly(FqRing{F}, text); }

// Irreducible iff no monic divisor of degree 1..d/2; plain trial division.
bool irreducible_by_trial(const FqPoly& f) {
  const auto& F = f.ring().field;
  const long d = f.degree();
  if (d < 1) return false;
  for (long e = 1; 2 * e <= d; ++e) {
    std::uint64_t count = 1;
    for (long i = 0; i < e; ++i) count *= F->q();
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Elem> c(e + 1);
      std::uint64_t x = code;
      for (long i = 0; i < e; ++i, x /= F->q()) c[i] = static_cast<Elem>(x % F->q());
      c[e] = 1;
      if ((f % fq_poly(F, c)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST(FPoly, Divmod) {
  auto F5 = Field::prime(5);
  auto qr = divmod(P(F5, "T^5"), P(F5, "T^2 - 1"));
  EXPECT_EQ(qr.quotient, P(F5, "T^3 + T"));
  EXPECT_EQ(qr.remainder, P(F5, "T"));
  auto F3 = Field::prime(3);
  qr = divmod(P(F3, "T^2 - 1"), P(F3, "T"));
  EXPECT_EQ(qr.quotient, P(F3, "T"));
  EXPECT_EQ(qr.remainder, P(F3, "-1"));
  auto f = P(F3, "T^4 + T + 2");
  qr = divmod(f, f);
  EXPECT_EQ(qr.quotient, P(F3, "1"));
  EXPECT_TRUE(qr.remainder.is_zero());
  EXPECT_THROW(divmod(f, FqPoly(FqRing{F3})), DivisionByZero);
}

TEST(FPoly, DivmodRoundTrip) {
  hqtest::Rng g(7);
  for (auto F : {Field::prime(3), Field::make(5, 2), Field::paper_f27()}) {
    for (int trial = 0; trial < 200; ++trial) {
      auto a = hqtest::any_poly(g, F, 12), b = hqtest::nonzero_poly(g, F, 6);
      auto qr = divmod(a, b);
      ASSERT_EQ(qr.quotient * b + qr.remainder, a);
      ASSERT_LT(qr.remainder.degree(), b.degree());
    }
  }
}

TEST(FPoly, PolynomialPart) {
  auto F5 = Field::prime(5);
  EXPECT_EQ(polynomial_part(FqRational(P(F5, "T^5"), P(F5, "T^2 - 1"))), P(F5, "T^3 + T"));
  auto p = P(F5, "2*T^3 + T + 4");
  EXPECT_EQ(polynomial_part(FqRational(p)), p);
  EXPECT_TRUE(polynomial_part(FqRational(P(F5, "T"), P(F5, "T^2 - 1"))).is_zero());
}

TEST(FPoly, ParseFormat) {
  auto F = Field::paper_f27();
  auto p = P(F, "u^7*T^2 - T + u");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p[2], F->pow(F->u(), 7));
  EXPECT_EQ(parse_poly(FqRing{F}, p.str()), p);
  EXPECT_EQ(parse_poly(FqRing{F}, p.str('T', TermOrder::Descending)), p);
  EXPECT_THROW(P(F, "T^^2"), ParseError);
}

TEST(FPoly, Factor) {
  auto F3 = Field::prime(3);
  FqRing R{F3};
  auto x2p1 = parse_poly(R, "X^2 + 1", 'X');
  auto fm = factor(x2p1);
  ASSERT_EQ(fm.factors.size(), 1u);
  EXPECT_EQ(fm.factors[0].first, x2p1);
  EXPECT_EQ(fm.factors[0].second, 1u);
  EXPECT_EQ(fm.unit, 1u);

  fm = factor(parse_poly(R, "X^3 + 1", 'X'));
  ASSERT_EQ(fm.factors.size(), 1u);
  EXPECT_EQ(fm.factors[0].first, parse_poly(R, "X + 1", 'X'));
  EXPECT_EQ(fm.factors[0].second, 3u);

  fm = factor(parse_poly(R, "2*X", 'X'));
  EXPECT_EQ(fm.unit, 2u);
  ASSERT_EQ(fm.factors.size(), 1u);
  EXPECT_EQ(fm.factors[0].first, parse_poly(R, "X", 'X'));
  EXPECT_THROW(factor(FqPoly(R)), ParameterError);
}

TEST(FPoly, FactorProperties) {
  hqtest::Rng g(11);
  for (auto F : {Field::prime(3), Field::prime(5), Field::make(3, 2), Field::prime(7)}) {
    FqRing R{F};
    for (int trial = 0; trial < 60; ++trial) {
      auto f = hqtest::nonzero_poly(g, F, 9);
      if (f.degree() < 1) continue;
      // occasionally force repeated factors
      if (trial % 5 == 0) f = f * f;
      auto fm = factor(f);
      ASSERT_EQ(fm.product(R), f) << f.str();
      for (std::size_t i = 0; i < fm.factors.size(); ++i) {
        ASSERT_TRUE(fm.factors[i].first.is_monic());
        if (fm.factors[i].first.degree() <= 4) ASSERT_TRUE(irreducible_by_trial(fm.factors[i].first));
        ASSERT_TRUE(is_irreducible(fm.factors[i].first));
        if (i) ASSERT_TRUE(canonical_less(fm.factors[i - 1].first, fm.factors[i].first));
      }
    }
  }
}

TEST(FPoly, FactorIsDeterministic) {
  auto F = Field::prime(5);
  auto f = P(F, "T^12 + 3*T^7 + T^2 + 4");
  EXPECT_EQ(factor(f).str(FqRing{F}), factor(f).str(FqRing{F}));
}

TEST(FPoly, IrreducibleCounts) {
  EXPECT_EQ(count_irreducibles(3, 1), 3);
  EXPECT_EQ(count_irreducibles(3, 2), 3);
  EXPECT_EQ(count_irreducibles(3, 4), 18);
  EXPECT_EQ(count_irreducibles(27, 1), 27);
  for (std::uint32_t p : {3u, 5u})
    for (unsigned d = 1; d <= 4; ++d) {
      auto list = enumerate_irreducibles(p, d);
      EXPECT_EQ(Integer(static_cast<unsigned long>(list.size())), count_irreducibles(p, d)) << p << " " << d;
      if (d <= 3)
        for (auto& f : list) ASSERT_TRUE(irreducible_by_trial(f));
    }
  EXPECT_THROW(enumerate_irreducibles(7, 8), ParameterError);
}

TEST(FPoly, FrobeniusMapMatchesPowering) {
  auto F = Field::make(3, 2);
  auto f = P(F, "T^5 + T + 2");
  FrobeniusMap fm(f);
  hqtest::Rng g(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = hqtest::any_poly(g, F, 4);
    ASSERT_EQ(fm.apply(a), powmod(a, F->q(), f));
  }
}

TEST(FPoly, FrobeniusPow) {
  auto F = Field::paper_f27();
  auto a = P(F, "u*T + 1");
  EXPECT_EQ(frobenius_pow(a, 1), a * a * a);
}

TEST(FPoly, RationalFunctionIsReduced) {
  auto F = Field::prime(5);
  FqRational f(P(F, "2*T^2 - 2"), P(F, "3*T - 3"));
  EXPECT_EQ(f.num(), P(F, "4*T + 4"));
  EXPECT_EQ(f.den(), P(F, "1"));
  EXPECT_THROW(FqRational(P(F, "T"), FqPoly(FqRing{F})), DivisionByZero);
}
