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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contfrac.hpp"
#include "laurent.hpp"
#include "seedpair.hpp"

namespace hq {

// Data of a continued fraction of type (r, l, k).
struct TypeSpec {
  FieldPtr field;
  unsigned t = 1;
  unsigned k = 1;
  std::vector<Elem> lambdas;  // l entries
  Elem eps1 = 1, eps2 = 1;

  std::size_t l() const { return lambdas.size(); }
  std::uint64_t r() const;
};

// Throws ParameterError / AdmissibilityError.
void validate(const TypeSpec& spec);

// Seed pair of the spec, with P_k and Q_k moved into F_q[T].
struct SpecContext {
  SeedPair sp;
  FqPoly P, Q;
  // Continuants of [lambda_1 T, ..., lambda_l T].
  FqPoly x_l, x_lm1, y_l, y_lm1;
};
SpecContext make_context(const TypeSpec& spec);

// c_{r+1} X^{r+1} + c_r X^r + c_1 X + c_0.
struct AlgebraicEquation {
  std::uint64_t r = 0;
  FqPoly c_r1, c_r, c_1, c_0;

  // Expanded into monomials c T^a X^j, highest X first.
  std::string str() const;
  friend bool operator==(const AlgebraicEquation&, const AlgebraicEquation&) = default;
};

AlgebraicEquation build_equation(const TypeSpec& spec);
// Divides through by the leading coefficient of c_{r+1}.
AlgebraicEquation normalize(const AlgebraicEquation& eq);

enum class Engine { Auto, Series, Quotient };
std::string to_string(Engine e);
Engine parse_engine(std::string_view text);

struct ExpandOptions {
  Engine engine = Engine::Series;
  long initial_floor = 0;          // 0 picks a default from n_max
  long min_floor = -(1L << 14);    // series engine gives up below this
  std::size_t degree_budget = std::size_t{1} << 24;  // quotient engine
  std::size_t continuant_limit = std::size_t{1} << 22;
};

// alpha to precision floor <= target_floor, by the fixed-point iteration.
LaurentSeries alpha_series(const TypeSpec& spec, long target_floor);

// First n_max partial quotients of alpha, without reference to any predicted pattern.
FqRecord expand_alpha(const TypeSpec& spec, std::size_t n_max, const ExpandOptions& opt = {});

// Same, through the Frobenius transducer on quotient sequences.
FqRecord expand_alpha_quotients(const TypeSpec& spec, std::size_t n_max, const ExpandOptions& opt = {});

struct RootCheck {
  bool pass = false;
  long floor = 0;                 // precision floor of the residual
  std::optional<long> valuation;  // exponent of the leading known term, if any
};

RootCheck check_root(const AlgebraicEquation& eq, const LaurentSeries& alpha);
RootCheck check_root(const TypeSpec& spec, const LaurentSeries& alpha);

// alpha^r - eps1 P alpha_{l+1} - eps2 Q with alpha_{l+1} recovered from the head continuants.
RootCheck check_functional_equation(const TypeSpec& spec, const LaurentSeries& alpha);

}  // namespace hq
