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

#include "hyper.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace hq {

std::uint64_t TypeSpec::r() const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < t; ++i) r *= field->p();
  return r;
}

void validate(const TypeSpec& spec) {
  if (!spec.field) throw ParameterError("type spec without a field");
  if (spec.field->p() == 2) throw ParameterError("characteristic must be odd");
  if (spec.t == 0) throw ParameterError("t must be positive");
  if (spec.lambdas.empty()) throw ParameterError("l must be positive");
  for (std::size_t i = 0; i < spec.lambdas.size(); ++i) {
    if (spec.lambdas[i] >= spec.field->q()) throw ParameterError("lambda out of range");
    if (spec.lambdas[i] == 0) throw ParameterError("lambda_" + std::to_string(i + 1) + " is zero");
  }
  if (spec.eps1 == 0 || spec.eps1 >= spec.field->q()) throw ParameterError("eps1 must be a nonzero field element");
  if (spec.eps2 == 0 || spec.eps2 >= spec.field->q()) throw ParameterError("eps2 must be a nonzero field element");
  // r^(t) overflow guard: the seed pair needs 2k+1 <= r anyway.
  if (static_cast<double>(spec.t) * std::log2(static_cast<double>(spec.field->p())) > 40)
    throw ParameterError("r = p^t too large");
  if (!is_admissible(spec.field->p(), spec.t, spec.k))
    throw AdmissibilityError("k = " + std::to_string(spec.k) + " is not admissible for r = " + std::to_string(spec.r()));
}

SpecContext make_context(const TypeSpec& spec) {
  validate(spec);
  SpecContext ctx{build_seedpair(spec.field->p(), spec.t, spec.k), {}, {}, {}, {}, {}, {}};
  ctx.P = fq_poly(spec.field, ctx.sp.P.coeffs());
  ctx.Q = fq_poly(spec.field, ctx.sp.Q.coeffs());
  const FqRing ring{spec.field};
  FqPoly x_prev = FqPoly::constant(ring, 1), y_prev(ring);
  FqPoly x = FqPoly::monomial(ring, spec.lambdas[0], 1), y = FqPoly::constant(ring, 1);
  for (std::size_t n = 2; n <= spec.l(); ++n) {
    const FqPoly a = FqPoly::monomial(ring, spec.lambdas[n - 1], 1);
    FqPoly xn = a * x + x_prev, yn = a * y + y_prev;
    x_prev = std::move(x);
    y_prev = std::move(y);
    x = std::move(xn);
    y = std::move(yn);
  }
  ctx.x_l = std::move(x);
  ctx.x_lm1 = std::move(x_prev);
  ctx.y_l = std::move(y);
  ctx.y_lm1 = std::move(y_prev);
  return ctx;
}

AlgebraicEquation build_equation(const TypeSpec& spec) {
  const SpecContext c = make_context(spec);
  AlgebraicEquation eq;
  eq.r = spec.r();
  eq.c_r1 = c.y_l;
  eq.c_r = -c.x_l;
  eq.c_1 = (c.P * c.y_lm1).scaled(spec.eps1) - (c.Q * c.y_l).scaled(spec.eps2);
  eq.c_0 = (c.Q * c.x_l).scaled(spec.eps2) - (c.P * c.x_lm1).scaled(spec.eps1);
  return eq;
}

AlgebraicEquation normalize(const AlgebraicEquation& eq) {
  if (eq.c_r1.is_zero()) throw ParameterError("equation without an X^(r+1) term");
  const Field& F = *eq.c_r1.ring().field;
  const Elem s = F.inv(eq.c_r1.lead());
  AlgebraicEquation out = eq;
  out.c_r1 = eq.c_r1.scaled(s);
  out.c_r = eq.c_r.scaled(s);
  out.c_1 = eq.c_1.scaled(s);
  out.c_0 = eq.c_0.scaled(s);
  return out;
}

std::string AlgebraicEquation::str() const {
  std::vector<std::string> terms;
  auto add = [&](const FqPoly& c, std::uint64_t j) {
    if (c.is_zero()) return;
    const Field& F = *c.ring().field;
    std::string xs;
    if (j >= 1) xs = j == 1 ? "X" : "X^" + std::to_string(j);
    for (std::size_t a = c.coeffs().size(); a-- > 0;) {
      const Elem v = c[a];
      if (!v) continue;
      std::string mono;
      if (a >= 1) mono = a == 1 ? "T" : "T^" + std::to_string(a);
      if (!xs.empty()) mono = mono.empty() ? xs : mono + "*" + xs;
      if (mono.empty()) {
        terms.push_back(F.format(v));
      } else if (v == 1) {
        terms.push_back(mono);
      } else if (v == F.neg(1)) {
        terms.push_back("-" + mono);
      } else {
        terms.push_back(F.format(v) + "*" + mono);
      }
    }
  };
  add(c_r1, r + 1);
  add(c_r, r);
  add(c_1, 1);
  add(c_0, 0);
  if (terms.empty()) return "0 = 0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i][0] == '-')
      out += " - " + terms[i].substr(1);
    else
      out += " + " + terms[i];
  }
  return out + " = 0";
}

std::string to_string(Engine e) {
  switch (e) {
    case Engine::Auto: return "auto";
    case Engine::Series: return "series";
    case Engine::Quotient: return "quotient";
  }
  return "?";
}

Engine parse_engine(std::string_view text) {
  if (text == "auto") return Engine::Auto;
  if (text == "series") return Engine::Series;
  if (text == "quotient") return Engine::Quotient;
  throw ParameterError("unknown engine '" + std::string(text) + "'");
}

namespace {

// (x z + x') / (y z + y') for a series z.
LaurentSeries fold(const SpecContext& c, const LaurentSeries& z, long cap) {
  const auto num = LaurentSeries::from_poly(c.x_l) * z + LaurentSeries::from_poly(c.x_lm1);
  const auto den = LaurentSeries::from_poly(c.y_l) * z + LaurentSeries::from_poly(c.y_lm1);
  return LaurentSeries::div(num, den, cap);
}

// Inverse of fold: z = (y' alpha - x') / (x - y alpha).
LaurentSeries unfold(const SpecContext& c, const LaurentSeries& alpha, long cap) {
  const auto num = LaurentSeries::from_poly(c.y_lm1) * alpha - LaurentSeries::from_poly(c.x_lm1);
  const auto den = LaurentSeries::from_poly(c.x_l) - LaurentSeries::from_poly(c.y_l) * alpha;
  return LaurentSeries::div(num, den, cap);
}

LaurentSeries tail_from(const TypeSpec& spec, const SpecContext& c, const LaurentSeries& alpha, long cap) {
  auto ar = alpha.frobenius_pow(spec.t);
  if (!ar.is_exact() && ar.floor() < cap - 1) ar = ar.truncated(cap - 1);
  const auto num = ar - LaurentSeries::from_poly(c.Q.scaled(spec.eps2));
  return LaurentSeries::div(num, LaurentSeries::from_poly(c.P.scaled(spec.eps1)), cap);
}

long default_floor(const TypeSpec& spec, std::size_t n_max) {
  return -(64 + static_cast<long>(n_max) * (1 + 2 * static_cast<long>(spec.k)));
}

void check_head(const TypeSpec& spec, const FqRecord& rec) {
  const FqRing ring{spec.field};
  for (std::size_t j = 0; j < std::min(spec.l(), rec.quotients.size()); ++j) {
    if (!(rec.quotients[j] == FqPoly::monomial(ring, spec.lambdas[j], 1)))
      throw InternalError("expansion head differs from lambda_" + std::to_string(j + 1) + " T");
  }
}

}  // namespace

LaurentSeries alpha_series(const TypeSpec& spec, long target_floor) {
  const SpecContext c = make_context(spec);
  const FieldPtr& F = spec.field;
  const long start = 1 - 2 * static_cast<long>(spec.l());
  // [lambda_1 T, ..., lambda_l T, T]; any tail of absolute value >= |T| agrees with alpha above the start floor.
  LaurentSeries alpha = fold(c, LaurentSeries::monomial(F, 1, 1), start).truncated(start);
  for (int round = 0; round < 64; ++round) {
    if (alpha.floor() <= target_floor) return alpha;
    const auto z = tail_from(spec, c, alpha, target_floor);
    LaurentSeries next = fold(c, z, target_floor);
    if (next.floor() < target_floor) next = next.truncated(target_floor);
    if (next.floor() >= alpha.floor())
      throw InternalError("fixed-point iteration stalled at floor " + std::to_string(alpha.floor()));
    alpha = std::move(next);
  }
  throw InternalError("fixed-point iteration did not reach the requested precision");
}

FqRecord expand_alpha(const TypeSpec& spec, std::size_t n_max, const ExpandOptions& opt) {
  if (n_max == 0) throw ParameterError("n_max must be at least 1");
  if (opt.engine == Engine::Quotient) return expand_alpha_quotients(spec, n_max, opt);
  validate(spec);
  long target = opt.initial_floor < 0 ? opt.initial_floor : default_floor(spec, n_max);
  target = std::max(target, opt.min_floor);
  for (;;) {
    const LaurentSeries alpha = alpha_series(spec, target);
    FqRecord rec = expand_series(alpha, n_max);
    const bool done = rec.quotients.size() >= n_max;
    if (done || target <= opt.min_floor) {
      if (!done && rec.status == RecordStatus::RationalWithinPrecision) rec.status = RecordStatus::PrecisionExhausted;
      check_head(spec, rec);
      return rec;
    }
    target = std::max(2 * target, opt.min_floor);
  }
}

FqRecord expand_alpha_quotients(const TypeSpec& spec, std::size_t n_max, const ExpandOptions& opt) {
  if (n_max == 0) throw ParameterError("n_max must be at least 1");
  const SpecContext c = make_context(spec);
  const FqRing ring{spec.field};
  const long r = static_cast<long>(spec.r());
  FqRecord rec;
  rec.provenance = Provenance::Direct;
  rec.status = RecordStatus::Complete;
  for (std::size_t j = 0; j < std::min(spec.l(), n_max); ++j)
    rec.quotients.push_back(FqPoly::monomial(ring, spec.lambdas[j], 1));

  // alpha_{l+1} = H(alpha^r) with H(z) = (z - eps2 Q) / (eps1 P). The partial quotients of
  // alpha^r are the a_j^r, each of degree >= r, so H can be run as a transducer on them whose
  // output feeds back as later input.
  FqPoly A = FqPoly::constant(ring, 1), B = -c.Q.scaled(spec.eps2);
  FqPoly C(ring), D = c.P.scaled(spec.eps1);
  std::size_t next_in = 0;
  while (rec.quotients.size() < n_max) {
    if (!C.is_zero() && C.degree() + r > D.degree()) {
      auto qr = divmod(A, C);
      FqPoly rest = B - qr.quotient * D;
      if (rest.degree() < C.degree() + r) {
        FqPoly nA = std::move(C), nB = std::move(D);
        C = std::move(qr.remainder);
        D = std::move(rest);
        A = std::move(nA);
        B = std::move(nB);
        rec.quotients.push_back(std::move(qr.quotient));
        continue;
      }
    }
    if (next_in >= rec.quotients.size()) throw InternalError("quotient transducer starved");
    const FqPoly in = frobenius_pow(rec.quotients[next_in++], spec.t);
    const std::size_t need = static_cast<std::size_t>(in.degree() + std::max(A.degree(), C.degree()));
    if (need > opt.degree_budget) {
      rec.status = RecordStatus::BudgetExceeded;
      break;
    }
    FqPoly nA = A * in + B, nC = C * in + D;
    B = std::move(A);
    D = std::move(C);
    A = std::move(nA);
    C = std::move(nC);
  }
  check_head(spec, rec);
  fill_continuants_bounded(rec, opt.continuant_limit);
  return rec;
}

RootCheck check_root(const AlgebraicEquation& eq, const LaurentSeries& alpha) {
  const auto ar = alpha.frobenius_pow_r(eq.r);
  const auto res = LaurentSeries::from_poly(eq.c_r1) * ar * alpha + LaurentSeries::from_poly(eq.c_r) * ar +
                   LaurentSeries::from_poly(eq.c_1) * alpha + LaurentSeries::from_poly(eq.c_0);
  RootCheck rc;
  rc.floor = res.floor();
  if (res.has_known_lead()) rc.valuation = res.top();
  rc.pass = !res.has_known_lead();
  return rc;
}

RootCheck check_root(const TypeSpec& spec, const LaurentSeries& alpha) {
  return check_root(build_equation(spec), alpha);
}

RootCheck check_functional_equation(const TypeSpec& spec, const LaurentSeries& alpha) {
  const SpecContext c = make_context(spec);
  const long cap = alpha.is_exact() ? -4096 : alpha.floor();
  const auto tail = unfold(c, alpha, cap);
  const auto res = alpha.frobenius_pow(spec.t) - LaurentSeries::from_poly(c.P.scaled(spec.eps1)) * tail -
                   LaurentSeries::from_poly(c.Q.scaled(spec.eps2));
  RootCheck rc;
  rc.floor = res.floor();
  if (res.has_known_lead()) rc.valuation = res.top();
  rc.pass = !res.has_known_lead();
  return rc;
}

}  // namespace hq
