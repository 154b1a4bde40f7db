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
#include "hyper.hpp"
#include "perfect.hpp"
#include "support.hpp"

using namespace hq;

namespace {

FqPoly P(const FieldPtr& F, std::string_view text) { return parse_poly(FqRing{F}, text); }

}  // namespace

TEST(Hyper, CorollaryEquation) {
  auto s = corollary_c_spec();
  auto eq = normalize(build_equation(s));
  EXPECT_EQ(eq.str(), "X^4 - T*X^3 - u^3*T*X + u*T^2 - u^6 = 0");
  auto F = s.field;
  EXPECT_EQ(eq.c_r1, P(F, "1"));
  EXPECT_EQ(eq.c_r, P(F, "-T"));
  EXPECT_EQ(eq.c_1, P(F, "-u^3*T"));
  EXPECT_EQ(eq.c_0, P(F, "u*T^2 - u^6"));
}

TEST(Hyper, Validation) {
  auto s = corollary_c_spec();
  s.k = 2;
  EXPECT_THROW(validate(s), AdmissibilityError);
  s = corollary_c_spec();
  s.lambdas = {};
  EXPECT_THROW(validate(s), ParameterError);
  s = corollary_c_spec();
  s.eps1 = 0;
  EXPECT_THROW(validate(s), ParameterError);
  s = corollary_c_spec();
  s.t = 0;
  EXPECT_THROW(validate(s), ParameterError);
}

TEST(Hyper, CorollaryHead) {
  auto s = corollary_c_spec();
  auto F = s.field;
  auto rec = expand_alpha(s, 5);
  std::vector<FqPoly> want{P(F, "T"), P(F, "u^7*T"), P(F, "u^2*T"), P(F, "u^11*T"), P(F, "-u*T")};
  EXPECT_EQ(rec.quotients, want);
  EXPECT_EQ(expand_alpha_quotients(s, 5).quotients, want);
  EXPECT_EQ(expand_alpha(s, 1).quotients, std::vector<FqPoly>{P(F, "T")});
}

TEST(Hyper, RootCheck) {
  auto s = corollary_c_spec();
  auto a = alpha_series(s, -300);
  EXPECT_LE(a.floor(), -300);
  auto rc = check_root(s, a);
  EXPECT_TRUE(rc.pass);
  EXPECT_FALSE(rc.valuation.has_value());
  EXPECT_TRUE(check_functional_equation(s, a).pass);
  // one flipped digit
  auto b = a.with_coeff(-20, s.field->add(a.coeff(-20), 1));
  rc = check_root(s, b);
  EXPECT_FALSE(rc.pass);
  ASSERT_TRUE(rc.valuation.has_value());
  EXPECT_GT(*rc.valuation, rc.floor);
  EXPECT_FALSE(check_functional_equation(s, b).pass);
  // T itself is not a root
  EXPECT_FALSE(check_root(s, LaurentSeries::from_poly(P(s.field, "T"))).pass);
}

TEST(Hyper, EnginesAgreeAndAreDeterministic) {
  hqtest::Rng g(77);
  struct Cell {
    std::uint32_t p;
    unsigned s, t, k, l;
  };
  for (Cell c : {Cell{3, 2, 1, 1, 2}, Cell{5, 1, 1, 2, 1}, Cell{5, 2, 1, 1, 3}, Cell{3, 3, 2, 4, 1}, Cell{7, 1, 1, 3, 2}}) {
    auto F = Field::make(c.p, c.s);
    for (int trial = 0; trial < 4; ++trial) {
      auto s = hqtest::random_spec(g, F, c.t, c.k, c.l);
      auto a = expand_alpha(s, 40);
      auto b = expand_alpha_quotients(s, 40);
      const std::size_t n = std::min(a.quotients.size(), b.quotients.size());
      ASSERT_GT(n, c.l);
      for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(a.quotients[i], b.quotients[i]) << i;
      EXPECT_EQ(expand_alpha(s, 40).quotients, a.quotients);
      for (unsigned i = 0; i < c.l; ++i) ASSERT_EQ(a.quotients[i], FqPoly::monomial(FqRing{F}, s.lambdas[i], 1));
      ASSERT_TRUE(verify_record(a).ok);
      ASSERT_TRUE(verify_record(b).ok);
    }
  }
}

TEST(Hyper, FunctionalEquationOnRandomSpecs) {
  hqtest::Rng g(78);
  for (auto [p, s, k] : {std::tuple{3u, 1u, 1u}, std::tuple{5u, 2u, 2u}, std::tuple{7u, 1u, 1u}}) {
    auto F = Field::make(p, s);
    for (int trial = 0; trial < 5; ++trial) {
      auto spec = hqtest::random_spec(g, F, 1, k, 1 + trial % 3);
      auto a = alpha_series(spec, -200);
      EXPECT_TRUE(check_root(spec, a).pass);
      EXPECT_TRUE(check_functional_equation(spec, a).pass);
    }
  }
}

TEST(Hyper, EngineNames) {
  EXPECT_EQ(parse_engine("quotient"), Engine::Quotient);
  EXPECT_EQ(to_string(Engine::Series), "series");
  EXPECT_THROW(parse_engine("newton"), ParameterError);
}
