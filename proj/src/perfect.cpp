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

#include "perfect.hpp"

#include <algorithm>
#include <limits>

#include "errors.hpp"

namespace hq {

IndexMachinery::IndexMachinery(unsigned k, std::size_t l) : k_(k), l_(l) {
  if (k == 0 || l == 0) throw ParameterError("index machinery needs k, l >= 1");
}

std::uint64_t IndexMachinery::f(std::uint64_t n) const {
  if (n == 0) throw ParameterError("f is defined for n >= 1");
  return (2 * std::uint64_t{k_} + 1) * n + l_ - 2 * std::uint64_t{k_};
}

std::optional<IndexMachinery::Split> IndexMachinery::split(std::uint64_t n) const {
  if (n <= l_) return std::nullopt;
  const std::uint64_t b = 2 * std::uint64_t{k_} + 1;
  const std::uint64_t d = n - l_ - 1;
  return Split{d / b + 1, static_cast<unsigned>(d % b)};
}

unsigned IndexMachinery::i(std::uint64_t n) const {
  if (n == 0) throw ParameterError("i is defined for n >= 1");
  unsigned depth = 1;
  for (auto s = split(n); s && s->i == 0; s = split(s->m)) ++depth;
  return depth;
}

std::vector<std::uint64_t> tower_degrees(std::uint64_t r, unsigned k, unsigned count) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> d;
  std::uint64_t cur = 1;
  for (unsigned j = 0; j < count; ++j) {
    d.push_back(cur);
    if (cur == kMax || cur > (kMax - 1) / r) {
      cur = kMax;
    } else {
      cur = cur * r - 2 * std::uint64_t{k};
    }
  }
  return d;
}

std::vector<FqPoly> polynomial_tower(const FieldPtr& field, const FqPoly& P, unsigned t, unsigned count,
                                     std::size_t max_degree) {
  const FqRing ring{field};
  const FqPoly Pq = fq_poly(field, P.coeffs());
  std::uint64_t r = 1;
  for (unsigned j = 0; j < t; ++j) r *= field->p();
  const auto degs = tower_degrees(r, static_cast<unsigned>(Pq.degree() / 2), count);
  std::vector<FqPoly> A;
  if (count == 0) return A;
  A.push_back(FqPoly::monomial(ring, 1, 1));
  for (unsigned j = 1; j < count; ++j) {
    if (degs[j] > max_degree) throw BudgetExceeded("A_" + std::to_string(j + 1) + " exceeds the degree budget");
    A.push_back(divmod(frobenius_pow(A.back(), t), Pq).quotient);
  }
  return A;
}

std::string to_string(CaseTag c) { return c == CaseTag::III1 ? "III1" : "III2"; }

namespace {

struct Consts {
  const Field& F;
  Elem two_k_theta, theta, omega, four_k2_theta;
  unsigned t;
  Elem fr(Elem x) const { return F.frobenius(x, t); }
};

ConsistencyCheck named(const char* name) {
  ConsistencyCheck c;
  c.name = name;
  return c;
}

Consts consts(const TypeSpec& spec, const SeedPair& sp) {
  const Field& F = *spec.field;
  const Elem four_k2 = F.from_int(4LL * spec.k * spec.k);
  return Consts{F, sp.two_k_theta, sp.theta, sp.omega, F.mul(four_k2, sp.theta), spec.t};
}

}  // namespace

ConditionII condition_II(const TypeSpec& spec) {
  validate(spec);
  const SeedPair sp = build_seedpair(spec.field->p(), spec.t, spec.k);
  const Consts c = consts(spec, sp);
  const Field& F = c.F;
  ConditionII out;
  out.ok = true;

  // Recursion from delta_0.
  std::vector<Elem> rec{F.neg(F.inv(F.mul(c.omega, spec.eps2)))};
  std::size_t rec_fail = 0;
  for (std::size_t n = 1; n <= spec.l(); ++n) {
    Elem d = F.sub(F.mul(c.two_k_theta, c.fr(spec.lambdas[n - 1])), F.inv(F.mul(c.omega, rec.back())));
    if (d == 0) {
      rec_fail = n;
      break;
    }
    rec.push_back(d);
  }

  // Bracket form.
  std::vector<Elem> br{rec.front()};
  std::size_t br_fail = 0;
  for (std::size_t n = 1; n <= spec.l(); ++n) {
    std::vector<Elem> vals;
    for (std::size_t j = n; j >= 1; --j) vals.push_back(c.fr(spec.lambdas[j - 1]));
    vals.push_back(F.div(c.two_k_theta, spec.eps2));
    try {
      br.push_back(F.mul(c.two_k_theta, eval_finite_constants(F, vals)));
    } catch (const UndefinedBracket&) {
      br_fail = n;
      break;
    }
  }

  if (rec_fail != br_fail || rec != br)
    throw InternalError("the bracket and recursive forms of delta_1..delta_l disagree");
  out.delta = std::move(rec);
  if (rec_fail) {
    out.ok = false;
    out.failing_index = rec_fail;
    out.reason = "delta_" + std::to_string(rec_fail) + " vanishes";
  }
  return out;
}

Elem case_III1_target(const TypeSpec& spec) {
  const SeedPair sp = build_seedpair(spec.field->p(), spec.t, spec.k);
  const Consts c = consts(spec, sp);
  return c.F.mul(c.four_k2_theta, c.fr(c.F.div(spec.eps1, spec.eps2)));
}

CaseTag classify_case(const TypeSpec& spec, Elem delta_l) {
  return delta_l == case_III1_target(spec) ? CaseTag::III1 : CaseTag::III2;
}

GammaSeed gamma_seed(const TypeSpec& spec, const std::vector<Elem>& delta) {
  if (delta.size() < spec.l() + 1) throw ParameterError("gamma seed needs delta_0..delta_l");
  const SeedPair sp = build_seedpair(spec.field->p(), spec.t, spec.k);
  const Consts c = consts(spec, sp);
  const Field& F = c.F;
  const Elem e1r = c.fr(spec.eps1), e2r = c.fr(spec.eps2);
  const Elem dl = delta[spec.l()], d1 = delta[1], d0 = delta[0];
  GammaSeed s;
  s.gamma1_r = F.mul(F.mul(F.sub(F.div(F.mul(c.four_k2_theta, e1r), dl), e2r), c.theta), F.inv(c.fr(d1)));
  s.gamma1_r_alt = F.mul(F.sub(F.mul(c.theta, F.inv(c.fr(d0))), F.div(e1r, dl)), F.inv(c.fr(F.mul(c.omega, d1))));
  s.gamma1 = F.frobenius_inverse(s.gamma1_r, spec.t);
  return s;
}

GenerateResult generate_sequences(const TypeSpec& spec, std::size_t n_max) {
  GenerateResult res;
  res.cond = condition_II(spec);
  if (!res.cond.ok) {
    res.failure = NotPerfect{res.cond.failing_index, "condition-II"};
    return res;
  }
  PerfectSequences s;
  s.spec = spec;
  s.sp = build_seedpair(spec.field->p(), spec.t, spec.k);
  const Consts c = consts(spec, s.sp);
  const Field& F = c.F;
  const std::size_t l = spec.l();
  const std::vector<Elem>& d = res.cond.delta;
  s.tag = classify_case(spec, d[l]);
  res.tag = s.tag;
  s.seed = gamma_seed(spec, d);
  if ((s.seed.gamma1_r == 0) != (s.tag == CaseTag::III1))
    throw InternalError("case tag and gamma seed disagree");

  std::vector<Elem> head_gamma(l + 1, 0);
  if (s.tag == CaseTag::III2) {
    head_gamma[1] = s.seed.gamma1;
    for (std::size_t n = 2; n <= l; ++n)
      head_gamma[n] = F.div(head_gamma[n - 1], F.mul(F.mul(d[n], d[n - 1]), c.omega));
    const Elem e1r = c.fr(spec.eps1);
    s.C0 = F.div(F.mul(head_gamma[l], e1r), F.mul(c.fr(F.mul(d[1], head_gamma[1])), F.mul(d[l], c.omega)));
  }

  const std::size_t N = std::max(n_max, l);
  s.delta.assign(N + 1, 0);
  s.gamma.assign(N + 1, 0);
  s.lambda.assign(N + 1, 0);
  for (std::size_t n = 0; n <= l; ++n) s.delta[n] = d[n];
  for (std::size_t n = 1; n <= l; ++n) {
    s.gamma[n] = head_gamma[n];
    s.lambda[n] = spec.lambdas[n - 1];
  }

  const IndexMachinery idx(spec.k, l);
  const Elem e1 = spec.eps1, e1_inv = F.inv(spec.eps1);
  const Elem e1r = c.fr(e1), e1r_inv = F.inv(e1r);
  std::size_t n = l + 1;
  for (; n <= N; ++n) {
    const auto sp_ = *idx.split(n);
    const std::size_t m = sp_.m;
    const unsigned i = sp_.i;
    const bool ev_mi = (m + i) % 2 == 0, ev_i = i % 2 == 0;
    Elem x = 0;
    if (s.tag == CaseTag::III2) {
      x = c.fr(s.gamma[m]);
      auto h = eval_h(s.sp, F, i, x);
      if (!h) {
        res.failure = NotPerfect{n, "pole-of-h"};
        break;
      }
      s.gamma[n] = F.mul(s.C0, *h);
      if (s.gamma[n] == 0) {
        res.failure = NotPerfect{n, "zero-gamma"};
        break;
      }
    }
    auto g = eval_g(s.sp, F, i, x);
    if (!g) {
      res.failure = NotPerfect{n, "pole-of-g"};
      break;
    }
    const Elem dm_r = c.fr(s.delta[m]);
    s.delta[n] = F.mul(F.mul(ev_mi ? e1r : e1r_inv, ev_i ? dm_r : F.inv(dm_r)), *g);
    if (s.delta[n] == 0) {
      res.failure = NotPerfect{n, "zero-delta"};
      break;
    }
    if (i == 0) {
      s.lambda[n] = F.mul(m % 2 == 0 ? e1 : e1_inv, c.fr(s.lambda[m]));
    } else {
      const Elem dm = ev_i ? s.delta[m] : F.inv(s.delta[m]);
      s.lambda[n] = F.neg(F.mul(F.mul(s.sp.v[i], ev_mi ? e1 : e1_inv), dm));
    }
  }
  s.n_max = n - 1;
  s.delta.resize(n);
  s.gamma.resize(n);
  s.lambda.resize(n);
  res.seqs = std::move(s);
  return res;
}

FqRecord predict_expansion(const PerfectSequences& seqs, std::size_t n_max, std::size_t degree_budget) {
  if (n_max > seqs.n_max) throw ParameterError("sequences were generated only to " + std::to_string(seqs.n_max));
  const TypeSpec& spec = seqs.spec;
  const IndexMachinery idx = seqs.index();
  unsigned imax = 1;
  for (std::size_t n = 1; n <= n_max; ++n) imax = std::max(imax, idx.i(n));
  const auto degs = tower_degrees(spec.r(), spec.k, imax);

  FqRecord rec;
  rec.provenance = Provenance::Predicted;
  rec.status = RecordStatus::Complete;
  std::vector<FqPoly> A;
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const unsigned i = idx.i(n);
    total += degs[i - 1] > degree_budget ? degree_budget + 1 : degs[i - 1];
    if (total > degree_budget) {
      rec.status = RecordStatus::BudgetExceeded;
      break;
    }
    if (A.size() < i) A = polynomial_tower(spec.field, seqs.sp.P, spec.t, i, degree_budget);
    rec.quotients.push_back(A[i - 1].scaled(seqs.lambda[n]));
  }
  fill_continuants_bounded(rec, std::size_t{1} << 22);
  return rec;
}

FqRecord predict_expansion(const TypeSpec& spec, std::size_t n_max) {
  auto gen = generate_sequences(spec, n_max);
  if (gen.failure && gen.failure->index <= n_max)
    throw NotPerfectError("not perfect: " + gen.failure->cause + " at index " + std::to_string(gen.failure->index),
                          gen.failure->index);
  return predict_expansion(*gen.seqs, n_max);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Contradiction: return "contradiction";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Match: return 0;
    case Verdict::Mismatch: return 2;
    case Verdict::Inconclusive: return 3;
    case Verdict::Contradiction: return 1;
  }
  return 1;
}

Engine choose_engine(const TypeSpec& spec, std::size_t n_max, long series_limit) {
  const IndexMachinery idx(spec.k, spec.l());
  unsigned imax = 1;
  for (std::size_t n = 1; n <= n_max; ++n) imax = std::max(imax, idx.i(n));
  const auto degs = tower_degrees(spec.r(), spec.k, imax);
  long double sum = 0;
  for (std::size_t n = 1; n <= n_max; ++n) sum += static_cast<long double>(degs[idx.i(n) - 1]);
  return 2 * sum + 64 <= series_limit ? Engine::Series : Engine::Quotient;
}

bool is_scalar_multiple(const FqPoly& a, const FqPoly& A) {
  if (A.is_zero() || a.is_zero() || a.degree() != A.degree()) return false;
  const Field& F = *A.ring().field;
  return a == A.scaled(F.div(a.lead(), A.lead()));
}

MatchReport differential_verify(const TypeSpec& spec, std::size_t n_max, const VerifyOptions& opt) {
  if (n_max == 0) throw ParameterError("n_max must be at least 1");
  MatchReport rep;
  rep.n_max = n_max;
  GenerateResult gen = generate_sequences(spec, n_max);
  rep.cond = gen.cond;
  rep.tag = gen.tag;
  rep.not_perfect = gen.failure;

  ExpandOptions eo;
  eo.degree_budget = opt.degree_budget;
  auto run_direct = [&](std::size_t count) {
    eo.engine = opt.engine == Engine::Auto ? choose_engine(spec, count, opt.series_limit) : opt.engine;
    rep.engine = eo.engine;
    return expand_alpha(spec, count, eo);
  };

  if (!gen.failure) {
    rep.predicted = predict_expansion(*gen.seqs, n_max, opt.degree_budget);
    rep.direct = run_direct(n_max);
    const std::size_t c = std::min(rep.predicted.quotients.size(), rep.direct.quotients.size());
    for (std::size_t j = 0; j < c; ++j) {
      if (!(rep.predicted.quotients[j] == rep.direct.quotients[j])) {
        rep.first_mismatch = j + 1;
        rep.compared = j + 1;
        rep.verdict = Verdict::Contradiction;
        rep.note = "perfect spec whose direct expansion departs from the prediction";
        return rep;
      }
    }
    rep.compared = c;
    if (c >= n_max) {
      rep.verdict = Verdict::Match;
    } else {
      rep.verdict = Verdict::Inconclusive;
      rep.note = "direct " + to_string(rep.direct.status) + ", predicted " + to_string(rep.predicted.status);
    }
    return rep;
  }

  // Not perfect: look for the first quotient that is not a constant multiple of A_{i(n)}.
  if (n_max <= spec.l()) {
    rep.direct = run_direct(n_max);
    rep.compared = rep.direct.quotients.size();
    rep.verdict = Verdict::Match;
    rep.note = "only the prescribed head was requested";
    return rep;
  }
  // The pattern estimate says nothing about a spec that leaves the pattern, so Auto takes the
  // budgeted transducer here.
  const IndexMachinery idx(spec.k, spec.l());
  const SeedPair sp = build_seedpair(spec.field->p(), spec.t, spec.k);
  eo.engine = opt.engine == Engine::Auto ? Engine::Quotient : opt.engine;
  rep.engine = eo.engine;
  rep.direct = expand_alpha(spec, n_max, eo);
  const auto& qs = rep.direct.quotients;
  std::vector<FqPoly> A;
  for (std::size_t j = 0; j < qs.size(); ++j) {
    const unsigned i = idx.i(j + 1);
    const auto degs = tower_degrees(spec.r(), spec.k, i);
    bool ok = qs[j].degree() >= 0 && static_cast<std::uint64_t>(qs[j].degree()) == degs[i - 1];
    if (ok) {
      if (A.size() < i) A = polynomial_tower(spec.field, sp.P, spec.t, i, opt.degree_budget);
      ok = is_scalar_multiple(qs[j], A[i - 1]);
    }
    if (!ok) {
      rep.first_mismatch = j + 1;
      rep.compared = j + 1;
      rep.verdict = Verdict::Mismatch;
      rep.note = "quotient " + std::to_string(j + 1) + " is not a constant multiple of A_" + std::to_string(i);
      return rep;
    }
  }
  rep.compared = qs.size();
  rep.verdict = Verdict::Inconclusive;
  if (qs.size() < n_max)
    rep.note = "direct expansion stopped (" + to_string(rep.direct.status) + ") before a departure was seen";
  else
    rep.note = "no departure from the pattern within " + std::to_string(n_max) + " quotients";
  return rep;
}

std::vector<ConsistencyCheck> consistency_suite(const PerfectSequences& s) {
  const TypeSpec& spec = s.spec;
  const Consts c = consts(spec, s.sp);
  const Field& F = c.F;
  const IndexMachinery idx = s.index();
  const std::size_t N = s.n_max;
  const unsigned two_k = 2 * spec.k;
  const Elem e1r = c.fr(spec.eps1), e1r_inv = F.inv(e1r);
  const bool III2 = s.tag == CaseTag::III2;
  std::vector<ConsistencyCheck> out;
  auto check = [&](ConsistencyCheck& ck, std::size_t n, bool ok) {
    ++ck.checked;
    if (!ok && ck.passed) {
      ck.passed = false;
      ck.first_failure = n;
    }
  };
  auto inv_or0 = [&](Elem x) { return x ? F.inv(x) : Elem{0}; };

  ConsistencyCheck nz = named("nonzero-values");
  for (std::size_t n = 0; n <= N; ++n) check(nz, n, s.delta[n] != 0);
  for (std::size_t n = 1; n <= N; ++n) check(nz, n, s.lambda[n] != 0 && (!III2 || s.gamma[n] != 0));
  out.push_back(nz);

  ConsistencyCheck d1 = named("delta-recursion");
  for (std::size_t n = 1; n <= N; ++n) {
    const Elem th = F.pow(c.theta, idx.i(n));
    const Elem rhs = F.sub(F.mul(F.mul(F.from_int(2LL * spec.k), th), c.fr(s.lambda[n])),
                           inv_or0(F.mul(c.omega, s.delta[n - 1])));
    check(d1, n, s.delta[n] == rhs);
  }
  out.push_back(d1);

  ConsistencyCheck d2 = named("delta-at-f(n)");
  ConsistencyCheck d3 = named("delta-at-f(n)+i");
  for (std::size_t n = 1; idx.f(n) <= N; ++n) {
    const std::size_t fn = idx.f(n);
    const Elem lhs = F.add(s.delta[fn], inv_or0(F.mul(c.omega, s.delta[fn - 1])));
    const Elem inner = F.add(c.fr(s.delta[n]), inv_or0(c.fr(F.mul(c.omega, s.delta[n - 1]))));
    check(d2, fn, lhs == F.mul(F.mul(c.theta, n % 2 == 0 ? e1r : e1r_inv), inner));
    for (unsigned i = 1; i <= two_k && fn + i <= N; ++i) {
      const std::size_t j = fn + i;
      const Elem l3 = F.add(s.delta[j], inv_or0(F.mul(c.omega, s.delta[j - 1])));
      const Elem dnr = c.fr(s.delta[n]);
      Elem r3 = F.mul(F.mul(c.two_k_theta, s.sp.v[i]), (n + i) % 2 == 0 ? e1r : e1r_inv);
      r3 = F.neg(F.mul(r3, i % 2 == 0 ? dnr : inv_or0(dnr)));
      check(d3, j, l3 == r3);
    }
  }
  out.push_back(d2);
  out.push_back(d3);

  ConsistencyCheck seed = named("gamma-seed-forms");
  check(seed, 1, s.seed.gamma1_r == s.seed.gamma1_r_alt && (s.seed.gamma1_r == 0) == !III2);
  out.push_back(seed);

  if (!III2) {
    ConsistencyCheck z = named("gamma-vanishes");
    for (std::size_t n = 1; n <= N; ++n) check(z, n, s.gamma[n] == 0);
    out.push_back(z);
    return out;
  }

  ConsistencyCheck g2 = named("gamma-ratio");
  for (std::size_t n = 2; n <= N; ++n)
    check(g2, n, s.gamma[n] == F.mul(s.gamma[n - 1], inv_or0(F.mul(F.mul(s.delta[n], s.delta[n - 1]), c.omega))));
  out.push_back(g2);

  ConsistencyCheck hr = named("delta-pair-h-ratio");
  ConsistencyCheck c0 = named("gamma-over-h0");
  for (std::size_t n = 1; idx.f(n) <= N; ++n) {
    const std::size_t fn = idx.f(n);
    const Elem x = c.fr(s.gamma[n]);
    auto h0 = eval_h(s.sp, F, 0, x);
    check(c0, fn, h0 && *h0 != 0 && F.div(s.gamma[fn], *h0) == s.C0);
    for (unsigned i = 1; i <= two_k && fn + i <= N; ++i) {
      auto a = eval_h(s.sp, F, i - 1, x), b = eval_h(s.sp, F, i, x);
      const Elem lhs = F.mul(F.mul(c.omega, s.delta[fn + i]), s.delta[fn + i - 1]);
      check(hr, fn + i, a && b && *b != 0 && lhs == F.div(*a, *b));
    }
  }
  out.push_back(hr);
  out.push_back(c0);
  return out;
}

bool all_passed(const std::vector<ConsistencyCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const ConsistencyCheck& c) { return c.passed; });
}

TypeSpec force_case_III1(const TypeSpec& spec) {
  const ConditionII cond = condition_II(spec);
  if (!cond.ok) throw ParameterError("condition II fails; case III1 cannot be forced");
  const SeedPair sp = build_seedpair(spec.field->p(), spec.t, spec.k);
  const Consts c = consts(spec, sp);
  const Field& F = c.F;
  TypeSpec out = spec;
  const Elem target = F.div(F.mul(cond.delta[spec.l()], c.fr(spec.eps2)), c.four_k2_theta);
  out.eps1 = F.frobenius_inverse(target, spec.t);
  return out;
}

TypeSpec violate_condition_II(const TypeSpec& spec, std::size_t n) {
  validate(spec);
  if (n == 0 || n > spec.l()) throw ParameterError("index must lie in 1..l");
  const SeedPair sp = build_seedpair(spec.field->p(), spec.t, spec.k);
  const Consts c = consts(spec, sp);
  const Field& F = c.F;
  Elem d = F.neg(F.inv(F.mul(c.omega, spec.eps2)));
  for (std::size_t j = 1; j < n; ++j) {
    d = F.sub(F.mul(c.two_k_theta, c.fr(spec.lambdas[j - 1])), F.inv(F.mul(c.omega, d)));
    if (d == 0) throw ParameterError("delta_" + std::to_string(j) + " already vanishes");
  }
  TypeSpec out = spec;
  out.lambdas[n - 1] = F.frobenius_inverse(F.neg(F.div(c.two_k_theta, d)), spec.t);
  return out;
}

TypeSpec corollary_c_spec() {
  TypeSpec s;
  s.field = Field::paper_f27();
  s.t = 1;
  s.k = 1;
  s.lambdas = {1};
  s.eps1 = s.field->parse("-u^6");
  s.eps2 = s.field->parse("u^3");
  return s;
}

}  // namespace hq
