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

#include <map>
#include <set>

#include "errors.hpp"
#include "ffield.hpp"
#include "support.hpp"

using namespace hq;

TEST(Field, PresetF27) {
  auto F = Field::paper_f27();
  EXPECT_EQ(F->q(), 27u);
  EXPECT_EQ(F->modulus(), (std::vector<std::uint32_t>{1, 2, 1, 1}));
  const Elem u = F->u();
  EXPECT_EQ(F->pow(u, 13), F->neg(F->one()));
  EXPECT_EQ(F->mul(u, F->pow(u, 12)), F->from_int(-1));
  EXPECT_EQ(Field::preset("f27-paper")->modulus(), F->modulus());
  EXPECT_THROW(Field::preset("f81"), ParameterError);
}

TEST(Field, Construction) {
  auto F3 = Field::make(3, 1);
  EXPECT_EQ(F3->q(), 3u);
  EXPECT_EQ(F3->modulus(), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_THROW(Field::make(3, 3, std::vector<std::uint32_t>{1, 0, 0, 1}), FieldError);  // X^3 + 1
  EXPECT_THROW(Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 2}), FieldError);     // not monic
  EXPECT_THROW(Field::make(2, 3), FieldError);
  EXPECT_THROW(Field::make(9, 1), FieldError);
  // default modulus is the least irreducible, low coefficients compared first
  EXPECT_EQ(Field::default_modulus(3, 2), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(Field::default_modulus(5, 2), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(Field, Arithmetic) {
  auto F3 = Field::prime(3);
  EXPECT_EQ(F3->add(2, 2), 1u);
  auto F = Field::paper_f27();
  const Elem u = F->u();
  EXPECT_EQ(F->add(F->from_int(-1), F->pow(u, 3)), F->pow(u, 4));
  FieldElement a(F, u), b(F, F->pow(u, 12));
  EXPECT_EQ(a * b, FieldElement(F, F->from_int(-1)));
  EXPECT_EQ(arith(a, b, ArithOp::Div) * b, a);
  EXPECT_THROW(arith(a, FieldElement(F, 0), ArithOp::Div), DivisionByZero);
  FieldElement c(Field::make(3, 3), 5);
  EXPECT_THROW(a + c, FieldMismatch);
}

TEST(Field, Frobenius) {
  auto F = Field::paper_f27();
  const Elem u = F->u();
  // u^3 = -u^2 + u - 1
  EXPECT_EQ(F->frobenius(u, 1), F->from_digits({2, 1, 2}));
  EXPECT_EQ(F->frobenius(u, 1), F->pow(u, 3));
  for (Elem x = 0; x < F->q(); ++x) {
    EXPECT_EQ(F->frobenius(x, 3), x);
    EXPECT_EQ(F->frobenius(F->frobenius_inverse(x, 1), 1), x);
    EXPECT_EQ(F->frobenius(F->frobenius_inverse(x, 2), 2), x);
  }
  for (Elem x = 0; x < 3; ++x) EXPECT_EQ(F->frobenius(x, 2), x);
}

TEST(Field, DegreeOverPrime) {
  auto F = Field::paper_f27();
  EXPECT_EQ(F->degree_over_prime(F->u()), 3u);
  for (Elem x = 0; x < F->q(); ++x) EXPECT_EQ(F->degree_over_prime(x), x < 3 ? 1u : 3u);
  auto F81 = Field::make(3, 4);
  std::map<unsigned, int> seen;
  for (Elem x = 0; x < F81->q(); ++x) ++seen[F81->degree_over_prime(x)];
  // 3 in F_3, 6 more in F_9, the remaining 72 generate F_81
  EXPECT_EQ(seen, (std::map<unsigned, int>{{1, 3}, {2, 6}, {4, 72}}));
}

TEST(Field, ParseFormat) {
  auto F = Field::paper_f27();
  const Elem u7 = F->pow(F->u(), 7);
  EXPECT_EQ(F->parse("u^7"), u7);
  EXPECT_EQ(F->format(u7), "u^7");
  EXPECT_EQ(F->parse("0"), 0u);
  EXPECT_EQ(F->parse("2,0,1"), F->add(2, F->pow(F->u(), 2)));
  EXPECT_EQ(F->parse("-u^6"), F->neg(F->pow(F->u(), 6)));
  EXPECT_EQ(F->format(F->from_int(-1)), "-1");
  for (Elem x = 0; x < F->q(); ++x) EXPECT_EQ(F->parse(F->format(x)), x);
  EXPECT_THROW(F->parse("u^"), ParseError);
  EXPECT_THROW(F->parse("1,2"), ParseError);
  try {
    F->parse("v");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 0u);
  }
  auto F5 = Field::prime(5);
  EXPECT_EQ(F5->format(4), "-1");
  EXPECT_THROW(F5->parse("u"), ParseError);
  // big field without tables: coordinate display
  auto G = Field::make(7, 6);
  Elem x = G->from_digits({1, 2, 3, 4, 5, 6});
  EXPECT_EQ(G->parse(G->format(x)), x);
}

TEST(Field, NonzeroElementsArePlusMinusPowersOfU) {
  auto F = Field::paper_f27();
  std::set<Elem> s;
  for (int i = 0; i <= 12; ++i) {
    s.insert(F->pow(F->u(), i));
    s.insert(F->neg(F->pow(F->u(), i)));
  }
  EXPECT_EQ(s.size(), 26u);
  EXPECT_EQ(s.count(0), 0u);
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(FieldAxioms, RandomSamples) {
  auto [p, s] = GetParam();
  auto F = Field::make(p, s);
  hqtest::Rng g(1000 * p + s);
  for (int trial = 0; trial < 400; ++trial) {
    Elem a = hqtest::any_elem(g, *F), b = hqtest::any_elem(g, *F), c = hqtest::any_elem(g, *F);
    ASSERT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c)));
    ASSERT_EQ(F->add(F->add(a, b), c), F->add(a, F->add(b, c)));
    ASSERT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
    ASSERT_EQ(F->add(a, F->neg(a)), 0u);
    if (a) ASSERT_EQ(F->mul(a, F->inv(a)), 1u);
    // against schoolbook multiplication modulo the modulus
    if (s > 1) ASSERT_EQ(F->digits(F->mul(a, b)), hqtest::naive_mul(F->digits(a), F->digits(b), F->modulus(), p));
    for (unsigned t = 1; t <= 2; ++t) {
      ASSERT_EQ(F->frobenius(F->add(a, b), t), F->add(F->frobenius(a, t), F->frobenius(b, t)));
      ASSERT_EQ(F->frobenius(F->mul(a, b), t), F->mul(F->frobenius(a, t), F->frobenius(b, t)));
    }
    ASSERT_EQ(s % F->degree_over_prime(a), 0u);
  }
}

INSTANTIATE_TEST_SUITE_P(Grid, FieldAxioms,
                         ::testing::Values(std::make_pair(3u, 1u), std::make_pair(3u, 3u), std::make_pair(5u, 1u),
                                           std::make_pair(5u, 2u), std::make_pair(7u, 1u), std::make_pair(7u, 3u),
                                           std::make_pair(3u, 12u)));
