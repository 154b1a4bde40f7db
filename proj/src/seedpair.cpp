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

#include "seedpair.hpp"

#include <algorithm>

#include "contfrac.hpp"

namespace hq {

std::vector<unsigned> admissible_set(std::uint32_t p, unsigned t) {
  if (p == 2 || !is_prime(p)) throw ParameterError("p must be an odd prime");
  if (t == 0) throw ParameterError("t must be positive");
  std::vector<unsigned> out;
  std::uint64_t pj = 1;
  for (unsigned j = 0; j < t; ++j, pj *= p) {
    if (pj > (1u << 30)) throw ParameterError("r = p^t is too large");
    for (std::uint64_t m = 1; m <= (p - 1) / 2; ++m) out.push_back(static_cast<unsigned>(m * pj + (pj - 1) / 2));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_admissible(std::uint32_t p, unsigned t, unsigned k) {
  auto e = admissible_set(p, t);
  return std::binary_search(e.begin(), e.end(), k);
}

namespace {

Elem reduce_unit(const Rational& x, std::uint32_t p, const std::string& what) {
  auto v = vp(x, p);
  if (v.infinite() || *v.value != 0) throw InternalError(what + " is not a p-adic unit");
  return reduce_mod(x, p);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InternalError("seed pair invariant failed: " + what);
}

}  // namespace

SeedPair build_seedpair(std::uint32_t p, unsigned t, unsigned k) {
  if (!is_admissible(p, t, k))
    throw AdmissibilityError("k = " + std::to_string(k) + " is not admissible for r = " + std::to_string(p) +
                             "^" + std::to_string(t));
  SeedPair sp;
  sp.p = p;
  sp.t = t;
  sp.k = k;
  sp.r = 1;
  for (unsigned i = 0; i < t; ++i) sp.r *= p;
  sp.fp = Field::prime(p);
  const Field& F = *sp.fp;
  const unsigned n = 2 * k;

  sp.v_rational = v_sequence_rational(k);
  std::tie(sp.theta_rational, sp.omega_rational) = theta_omega_rational(k);
  sp.b_rational = q_coefficients_rational(k);

  sp.v.assign(n + 1, 0);
  for (unsigned i = 1; i <= n; ++i) sp.v[i] = reduce_unit(sp.v_rational[i - 1], p, "v_" + std::to_string(i));
  for (unsigned i = 0; i <= n; ++i)
    sp.binom2k.push_back(reduce_unit(Rational(binomial(n, i)), p, "C(2k," + std::to_string(i) + ")"));
  for (unsigned i = 0; i < k; ++i) {
    auto val = vp(sp.b_rational[i], p);
    if (!val.infinite() && *val.value < 0) throw InternalError("b_" + std::to_string(i) + " has negative valuation");
    sp.b.push_back(reduce_mod(sp.b_rational[i], p));
  }
  sp.theta = reduce_unit(sp.theta_rational, p, "theta");
  sp.omega = reduce_unit(sp.omega_rational, p, "omega");
  sp.two_k_theta = F.mul(F.from_int(n), sp.theta);
  require(sp.two_k_theta != 0, "2k theta is nonzero");

  for (unsigned i = 0; i < n; ++i) {
    Integer c = binomial(n - 1, i);
    if (i % 2) c = -c;
    sp.w.push_back(reduce_mod(Rational(c), p));
  }
  sp.g_scale.assign(n + 1, 0);
  for (unsigned i = 1; i < n; ++i) {
    Elem ratio = reduce_unit(Rational(Integer(i), Integer(static_cast<long>(n) - 2 * static_cast<long>(i) + 1)), p,
                             "i/(2k-2i+1)");
    sp.g_scale[i] = F.mul(F.mul(sp.two_k_theta, sp.v[i]), ratio);
  }

  FqRing ring{sp.fp};
  FqPoly t2m1(ring, {F.neg(1), 0, 1});
  sp.P = t2m1.pow(k);
  std::vector<Elem> qc(2 * k, 0);
  for (unsigned i = 0; i < k; ++i) qc[2 * i + 1] = sp.b[i];
  sp.Q = FqPoly(ring, std::move(qc));

  // Invariants in F_p.
  require(sp.v[1] == F.from_int(static_cast<long long>(n) - 1), "v_1 = 2k - 1");
  for (unsigned i = 1; i < n; ++i) {
    long a = static_cast<long>(n) - 2 * static_cast<long>(i) - 1, b2 = a + 2;
    Rational rhs = Rational(Integer(a * b2), Integer(static_cast<long>(i) * static_cast<long>(n - i)));
    require(F.mul(sp.v[i + 1], sp.v[i]) == reduce_unit(rhs, p, "v recursion ratio"), "v recursion at i = " + std::to_string(i));
  }
  require(sp.omega == F.neg(F.inv(F.mul(sp.two_k_theta, sp.two_k_theta))), "omega = -(2k theta)^-2");
  for (unsigned i = 1; i <= n; ++i) {
    Elem rhs = (i % 2) ? F.mul(sp.v[i], sp.omega) : F.div(sp.v[i], sp.omega);
    require(sp.v[n + 1 - i] == rhs, "v symmetry at i = " + std::to_string(i));
  }
  require(sp.Q.eval(1) == F.neg(F.inv(sp.two_k_theta)), "Q_k(1) = -(2k theta)^-1");
  for (unsigned i = 1; i < n; ++i) {
    Elem diff = F.sub(sp.w[i], sp.w[i - 1]);
    Elem expect = (i % 2) ? F.neg(sp.binom2k[i]) : sp.binom2k[i];
    require(diff == expect && diff != 0, "w difference at i = " + std::to_string(i));
  }
  auto rec = expand_rational(sp.P, sp.Q);
  require(rec.quotients.size() == n, "P_k/Q_k has 2k quotients");
  for (unsigned i = 1; i <= n; ++i)
    require(rec.quotients[i - 1] == FqPoly::monomial(ring, sp.v[i], 1), "quotient " + std::to_string(i) + " is v_i T");
  return sp;
}

std::optional<Elem> eval_g(const SeedPair& sp, const Field& F, unsigned i, Elem x) {
  const unsigned n = sp.two_k();
  if (i > n) throw ParameterError("g index out of range");
  if (i == 0) return F.add(sp.theta, x);
  if (i == n) {
    Elem den = F.sub(sp.theta, x);
    if (den == 0) return std::nullopt;
    return F.inv(den);
  }
  Elem den = F.add(sp.theta, F.mul(sp.w[i - 1], x));
  if (den == 0) return std::nullopt;
  Elem num = F.add(sp.theta, F.mul(sp.w[i], x));
  return F.mul(sp.g_scale[i], F.div(num, den));
}

std::optional<Elem> eval_h(const SeedPair& sp, const Field& F, unsigned i, Elem x) {
  const unsigned n = sp.two_k();
  if (i > n) throw ParameterError("h index out of range");
  if (i == 0 || i == n) {
    Elem den = i == 0 ? F.add(sp.theta, x) : F.sub(sp.theta, x);
    if (den == 0) return std::nullopt;
    return F.div(x, den);
  }
  Elem den = F.mul(F.add(sp.theta, F.mul(sp.w[i], x)), F.add(sp.theta, F.mul(sp.w[i - 1], x)));
  if (den == 0) return std::nullopt;
  Elem c = (i % 2) ? F.neg(sp.binom2k[i]) : sp.binom2k[i];
  return F.div(F.mul(F.mul(c, sp.theta), x), den);
}

std::optional<FieldElement> eval_g(const SeedPair& sp, unsigned i, const FieldElement& x) {
  auto r = eval_g(sp, *x.field(), i, x.value());
  if (!r) return std::nullopt;
  return FieldElement(x.field(), *r);
}

std::optional<FieldElement> eval_h(const SeedPair& sp, unsigned i, const FieldElement& x) {
  auto r = eval_h(sp, *x.field(), i, x.value());
  if (!r) return std::nullopt;
  return FieldElement(x.field(), *r);
}

namespace {

FqRational constant(const SeedPair& sp, Elem c) { return FqRational(FqPoly::constant(FqRing{sp.fp}, c)); }

// a + b X
FqRational linear(const SeedPair& sp, Elem a, Elem b) { return FqRational(FqPoly(FqRing{sp.fp}, {a, b})); }

bool same(const FqRational& a, const FqRational& b) { return a.num() * b.den() == b.num() * a.den(); }

}  // namespace

FqRational g_symbolic(const SeedPair& sp, unsigned i) {
  const Field& F = *sp.fp;
  const unsigned n = sp.two_k();
  if (i > n) throw ParameterError("g index out of range");
  if (i == 0) return linear(sp, sp.theta, 1);
  if (i == n) return constant(sp, 1) / linear(sp, sp.theta, F.neg(1));
  return constant(sp, sp.g_scale[i]) * linear(sp, sp.theta, sp.w[i]) / linear(sp, sp.theta, sp.w[i - 1]);
}

FqRational h_symbolic(const SeedPair& sp, unsigned i) {
  const Field& F = *sp.fp;
  const unsigned n = sp.two_k();
  if (i > n) throw ParameterError("h index out of range");
  FqRational x = linear(sp, 0, 1);
  if (i == 0) return x / linear(sp, sp.theta, 1);
  if (i == n) return x / linear(sp, sp.theta, F.neg(1));
  Elem c = (i % 2) ? F.neg(sp.binom2k[i]) : sp.binom2k[i];
  return constant(sp, F.mul(c, sp.theta)) * x / (linear(sp, sp.theta, sp.w[i]) * linear(sp, sp.theta, sp.w[i - 1]));
}

std::vector<IdentityCheck> validate_identities(const SeedPair& sp) {
  const Field& F = *sp.fp;
  const unsigned n = sp.two_k();
  const Elem tkt = sp.two_k_theta;
  std::vector<IdentityCheck> out;
  auto record = [&](const std::string& name, auto&& failing_index) {
    IdentityCheck c;
    c.name = name;
    std::optional<unsigned> bad = failing_index();
    if (bad) {
      c.passed = false;
      c.detail = "fails at i = " + std::to_string(*bad);
    }
    out.push_back(c);
  };
  std::vector<FqRational> g, h;
  for (unsigned i = 0; i <= n; ++i) {
    g.push_back(g_symbolic(sp, i));
    h.push_back(h_symbolic(sp, i));
  }
  const FqRational X = linear(sp, 0, 1);

  record("v-symmetry", [&]() -> std::optional<unsigned> {
    for (unsigned i = 1; i <= n; ++i) {
      Elem rhs = (i % 2) ? F.mul(sp.v[i], sp.omega) : F.div(sp.v[i], sp.omega);
      if (sp.v[n + 1 - i] != rhs) return i;
    }
    return std::nullopt;
  });
  record("g-recursion", [&]() -> std::optional<unsigned> {
    for (unsigned i = 0; i < n; ++i) {
      FqRational rhs = constant(sp, tkt) * (constant(sp, F.neg(sp.v[i + 1])) + constant(sp, tkt) / g[i]);
      if (!same(g[i + 1], rhs)) return i;
    }
    return std::nullopt;
  });
  record("g-reciprocal", [&]() -> std::optional<unsigned> {
    for (unsigned i = 1; i < n; ++i) {
      long a = static_cast<long>(n) - static_cast<long>(i), b = static_cast<long>(n) - 2 * static_cast<long>(i) - 1;
      Elem c = F.mul(reduce_unit(Rational(Integer(a), Integer(b)), sp.p, "(2k-i)/(2k-2i-1)"), sp.v[i + 1]);
      FqRational rhs = constant(sp, c) * linear(sp, sp.theta, sp.w[i - 1]) / linear(sp, sp.theta, sp.w[i]);
      if (!same(constant(sp, tkt) / g[i], rhs)) return i;
    }
    return std::nullopt;
  });
  record("w-three-term", [&]() -> std::optional<unsigned> {
    for (unsigned i = 1; i + 2 <= n; ++i) {
      Elem lhs = F.sub(F.mul(F.from_int(static_cast<long long>(n) - i), sp.w[i - 1]),
                       F.mul(F.from_int(static_cast<long long>(n) - 2 * i - 1), sp.w[i]));
      if (lhs != F.mul(F.from_int(i + 1), sp.w[i + 1])) return i;
    }
    return std::nullopt;
  });
  record("g-last-closed-form", [&]() -> std::optional<unsigned> {
    const Elem v2k = sp.v[n];
    const Elem c = F.div(v2k, F.from_int(static_cast<long long>(n) - 1));
    FqRational frac = linear(sp, sp.theta, F.from_int(static_cast<long long>(n) - 1)) / linear(sp, sp.theta, F.neg(1));
    FqRational rhs = constant(sp, tkt) * (constant(sp, F.neg(v2k)) - constant(sp, c) * frac);
    if (!same(g[n], rhs)) return n;
    return std::nullopt;
  });
  record("v-last", [&]() -> std::optional<unsigned> {
    Elem rhs = F.neg(F.mul(F.from_int(static_cast<long long>(n) - 1), F.inv(F.mul(tkt, tkt))));
    if (sp.v[n] != rhs) return n;
    return std::nullopt;
  });
  record("g-h-ratio", [&]() -> std::optional<unsigned> {
    for (unsigned i = 1; i <= n; ++i)
      if (!same(g[i] * g[i - 1] * constant(sp, sp.omega), h[i - 1] / h[i])) return i;
    return std::nullopt;
  });
  record("g-h-ends", [&]() -> std::optional<unsigned> {
    if (!same(g[0] * h[0], X)) return 0;
    if (!same(h[n], X * g[n])) return n;
    return std::nullopt;
  });
  return out;
}

}  // namespace hq
