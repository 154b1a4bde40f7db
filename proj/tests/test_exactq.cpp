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

#include "exactq.hpp"
#include "errors.hpp"

using namespace hq;

namespace {

// n! valuation by repeated division of every factor.
std::uint64_t naive_factorial_valuation(std::uint64_t n, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::uint64_t m = 2; m <= n; ++m)
    for (std::uint64_t x = m; x % p == 0; x /= p) ++v;
  return v;
}

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

}  // namespace

TEST(Exactq, LowestTerms) {
  Rational a = q(6, -8);
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 4);
  EXPECT_EQ(Rational::parse("-6/8"), a);
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_THROW(Rational::parse("3/"), ParseError);
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
  EXPECT_EQ(q(2, 3).pow(-2), q(9, 4));
}

TEST(Exactq, Valuations) {
  EXPECT_EQ(vp(q(3, 8), 2).value, -3);
  EXPECT_TRUE(vp(Rational(0), 5).infinite());
  auto [theta2, omega2] = theta_omega_rational(2);
  EXPECT_EQ(vp(theta2, 5).value, 0);
  EXPECT_EQ(vp(theta2, 7).value, 0);
  EXPECT_THROW(vp(q(1, 2), 9), ParameterError);
  EXPECT_EQ(vp(Integer(250), 5), 3);
}

TEST(Exactq, FactorialValuation) {
  EXPECT_EQ(factorial_valuation(6, 3), 2u);
  EXPECT_EQ(factorial_valuation(0, 7), 0u);
  for (std::uint64_t p : {3, 5, 7, 11, 13})
    for (std::uint64_t n = 0; n <= 200; ++n) ASSERT_EQ(factorial_valuation(n, p), naive_factorial_valuation(n, p)) << n;
  // against the integer itself
  EXPECT_EQ(vp(factorial(30), 3), static_cast<long>(factorial_valuation(30, 3)));
}

TEST(Exactq, VSequence) {
  EXPECT_EQ(v_sequence_rational(1), (std::vector<Rational>{1, -1}));
  EXPECT_EQ(v_sequence_rational(2), (std::vector<Rational>{3, q(1, 3), q(-3, 4), q(-4, 3)}));
  // the two ends: v_{2k} = v_1 omega
  for (unsigned k = 1; k <= 8; ++k) {
    auto v = v_sequence_rational(k);
    auto [theta, omega] = theta_omega_rational(k);
    ASSERT_EQ(v.size(), 2 * k);
    EXPECT_EQ(v.back(), v.front() * omega) << k;
  }
}

TEST(Exactq, ThetaOmega) {
  EXPECT_EQ(theta_omega_rational(1), std::make_pair(q(-1, 2), Rational(-1)));
  EXPECT_EQ(theta_omega_rational(2), std::make_pair(q(3, 8), q(-4, 9)));
  for (unsigned k = 1; k <= 10; ++k) {
    auto [theta, omega] = theta_omega_rational(k);
    Rational two_k_theta = Rational(2 * static_cast<long>(k)) * theta;
    EXPECT_EQ(omega, -(two_k_theta * two_k_theta).inverse());
    Rational q1;
    for (auto& b : q_coefficients_rational(k)) q1 += b;
    EXPECT_EQ(q1, -two_k_theta.inverse()) << k;
  }
}

TEST(Exactq, BinomialValuationZeroForAdmissible) {
  // k = 4 is admissible for r = 9; C(8, i) is prime to 3.
  for (unsigned long i = 0; i <= 8; ++i) EXPECT_EQ(vp(binomial(8, i), 3), 0) << i;
  // k = 3 is not: C(6, 3) = 20 is fine but C(6, 1) = 6 is not.
  EXPECT_GT(vp(binomial(6, 1), 3), 0);
}

TEST(Exactq, ReduceMod) {
  EXPECT_EQ(reduce_mod(q(1, 3), 7), 5u);
  EXPECT_EQ(reduce_mod(q(-4, 3), 7), 1u);
  EXPECT_EQ(reduce_mod(Rational(0), 5), 0u);
  EXPECT_THROW(reduce_mod(q(1, 3), 3), ParameterError);
}

TEST(Exactq, Primality) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(65521));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_THROW(require_prime(15), ParameterError);
}
