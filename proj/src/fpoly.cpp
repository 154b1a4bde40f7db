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

#include "fpoly.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace hq {

FqPoly fq_poly(const FieldPtr& field, const std::vector<Elem>& coeffs) {
  return FqPoly(FqRing{field}, coeffs);
}

FqPoly fq_variable(const FieldPtr& field) { return FqPoly::variable(FqRing{field}); }

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& mod) { return (a * b) % mod; }

FqPoly powmod(FqPoly base, std::uint64_t e, const FqPoly& mod) {
  const FqRing& R = mod.ring();
  FqPoly result = FqPoly::constant(R, R.one()) % mod;
  base = base % mod;
  while (e) {
    if (e & 1) result = mulmod(result, base, mod);
    e >>= 1;
    if (e) base = mulmod(base, base, mod);
  }
  return result;
}

namespace {

// v <- v * X mod f for monic f of degree n, v of length n.
void times_x(std::vector<Elem>& v, const std::vector<Elem>& f, const Field& F) {
  const std::size_t n = v.size();
  Elem top = v[n - 1];
  for (std::size_t i = n - 1; i > 0; --i) v[i] = v[i - 1];
  v[0] = 0;
  if (top == 0) return;
  Elem nt = F.neg(top);
  for (std::size_t i = 0; i < n; ++i) v[i] = F.add(v[i], F.mul(nt, f[i]));
}

std::uint64_t seed_from(const FqPoly& f) {
  std::uint64_t h = 1469598103934665603ULL;
  for (Elem c : f.coeffs()) {
    h ^= c + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

FrobeniusMap::FrobeniusMap(const FqPoly& modulus) : f_(modulus.monic()) {
  if (f_.degree() < 1) throw ParameterError("Frobenius map needs a nonconstant modulus");
  const Field& F = *f_.ring().field;
  const std::size_t n = static_cast<std::size_t>(f_.degree());
  const std::uint64_t q = F.q();
  rows_.assign(n, std::vector<Elem>(n, 0));
  rows_[0][0] = 1;
  if (n == 1) return;
  if (q <= 4 * n) {
    for (std::size_t i = 1; i < n; ++i) {
      rows_[i] = rows_[i - 1];
      for (std::uint64_t j = 0; j < q; ++j) times_x(rows_[i], f_.coeffs(), F);
    }
  } else {
    FqPoly xq = powmod(FqPoly::variable(f_.ring()), q, f_);
    FqPoly cur = FqPoly::constant(f_.ring(), 1);
    for (std::size_t i = 1; i < n; ++i) {
      cur = mulmod(cur, xq, f_);
      auto c = cur.coeffs();
      c.resize(n, 0);
      rows_[i] = std::move(c);
    }
  }
}

FqPoly FrobeniusMap::apply(const FqPoly& g) const {
  const Field& F = *f_.ring().field;
  const std::size_t n = rows_.size();
  FqPoly gr = g.degree() >= static_cast<long>(n) ? g % f_ : g;
  std::vector<Elem> out(n, 0);
  const auto& gc = gr.coeffs();
  for (std::size_t i = 0; i < gc.size(); ++i) {
    Elem c = gc[i];
    if (c == 0) continue;
    const auto& row = rows_[i];
    for (std::size_t j = 0; j < n; ++j)
      if (row[j]) out[j] = F.add(out[j], F.mul(c, row[j]));
  }
  return FqPoly(f_.ring(), std::move(out));
}

FqPoly frobenius_pow(const FqPoly& a, unsigned t) {
  if (a.is_zero()) return a;
  const Field& F = *a.ring().field;
  std::size_t r = 1;
  for (unsigned i = 0; i < t; ++i) r *= F.p();
  const auto& c = a.coeffs();
  std::vector<Elem> out((c.size() - 1) * r + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) out[i * r] = F.frobenius(c[i], t);
  return FqPoly(a.ring(), std::move(out));
}

bool is_irreducible(const FqPoly& f) {
  const long n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  FqPoly fm = f.monic();
  FrobeniusMap frob(fm);
  const FqPoly x = FqPoly::variable(fm.ring());
  std::vector<long> checkpoints;
  for (long r = 2, m = n; r <= m; ++r) {
    if (m % r) continue;
    checkpoints.push_back(n / r);
    while (m % r == 0) m /= r;
  }
  FqPoly h = x;
  for (long j = 1; j <= n; ++j) {
    h = frob.apply(h);
    if (std::find(checkpoints.begin(), checkpoints.end(), j) != checkpoints.end() &&
        gcd(h - x, fm).degree() > 0)
      return false;
  }
  return h == x;
}

bool canonical_less(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

FqPoly FactorMultiset::product(const FqRing& ring) const {
  FqPoly acc = FqPoly::constant(ring, unit);
  for (const auto& [g, e] : factors) acc *= g.pow(e);
  return acc;
}

std::string FactorMultiset::str(const FqRing& ring, char var) const {
  std::string out;
  if (unit != 1 || factors.empty()) out = ring.format(unit);
  for (const auto& [g, e] : factors) {
    if (!out.empty()) out += " * ";
    out += "(" + g.str(var) + ")";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::vector<std::pair<FqPoly, unsigned>> squarefree_decomposition(const FqPoly& monic_f) {
  const FqRing& R = monic_f.ring();
  const Field& F = *R.field;
  std::vector<std::pair<FqPoly, unsigned>> out;
  if (monic_f.degree() < 1) return out;
  const FqPoly one = FqPoly::constant(R, 1);
  FqPoly c = gcd(monic_f, monic_f.derivative());
  FqPoly w = divmod(monic_f, c).quotient;
  unsigned i = 1;
  while (w.degree() > 0) {
    FqPoly y = gcd(w, c);
    FqPoly fac = divmod(w, y).quotient;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = divmod(c, y).quotient;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a p-th power.
    const std::uint32_t p = F.p();
    std::vector<Elem> root;
    for (std::size_t j = 0; j < c.coeffs().size(); j += p) root.push_back(F.frobenius_inverse(c.coeffs()[j], 1));
    for (auto& [g, e] : squarefree_decomposition(FqPoly(R, std::move(root)).monic()))
      out.emplace_back(g, e * p);
  }
  return out;
}

std::vector<std::pair<FqPoly, unsigned>> distinct_degree(const FqPoly& f) {
  std::vector<std::pair<FqPoly, unsigned>> out;
  FqPoly rest = f.monic();
  if (rest.degree() < 1) return out;
  FrobeniusMap frob(rest);
  const FqPoly x = FqPoly::variable(rest.ring());
  FqPoly h = x % rest;
  unsigned d = 0;
  while (rest.degree() >= 2 * static_cast<long>(d + 1)) {
    ++d;
    h = frob.apply(h);
    FqPoly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = divmod(rest, g).quotient;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

std::vector<FqPoly> equal_degree(const FqPoly& f, unsigned d, std::uint64_t seed) {
  FqPoly fm = f.monic();
  if (fm.degree() == static_cast<long>(d)) return {fm};
  const FqRing& R = fm.ring();
  const Field& F = *R.field;
  const std::uint64_t half = (F.q() - 1) / 2;
  FrobeniusMap frob(fm);
  std::mt19937_64 rng(seed);
  std::vector<FqPoly> todo{fm}, done;
  while (!todo.empty()) {
    FqPoly g = std::move(todo.back());
    todo.pop_back();
    if (g.degree() == static_cast<long>(d)) {
      done.push_back(std::move(g));
      continue;
    }
    const std::size_t n = static_cast<std::size_t>(g.degree());
    for (;;) {
      std::vector<Elem> rc(n);
      for (auto& c : rc) c = static_cast<Elem>(rng() % F.q());
      FqPoly a(R, std::move(rc));
      if (a.degree() < 1) continue;
      // a^{(q^d - 1)/2} = (a * a^q * ... * a^{q^{d-1}})^{(q-1)/2}
      FqPoly norm = a, cur = a;
      for (unsigned j = 1; j < d; ++j) {
        cur = frob.apply(cur) % g;
        norm = mulmod(norm, cur, g);
      }
      FqPoly t = powmod(norm, half, g) - FqPoly::constant(R, 1);
      FqPoly b = gcd(g, t);
      if (b.degree() > 0 && b.degree() < g.degree()) {
        todo.push_back(divmod(g, b).quotient.monic());
        todo.push_back(std::move(b));
        break;
      }
    }
  }
  std::sort(done.begin(), done.end(), canonical_less);
  return done;
}

FactorMultiset factor(const FqPoly& f) {
  if (f.is_zero()) throw ParameterError("cannot factor the zero polynomial");
  FactorMultiset out;
  out.unit = f.lead();
  FqPoly fm = f.monic();
  const std::uint64_t seed = seed_from(fm);
  for (const auto& [g, e] : squarefree_decomposition(fm)) {
    for (const auto& [h, d] : distinct_degree(g)) {
      if (h.degree() == static_cast<long>(d)) {
        out.factors.emplace_back(h, e);
      } else {
        for (auto& piece : equal_degree(h, d, seed)) out.factors.emplace_back(std::move(piece), e);
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

namespace {

int mobius(unsigned n) {
  int result = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

Integer count_irreducibles(std::uint64_t q, unsigned d) {
  if (d == 0) throw ParameterError("degree must be positive");
  Integer total = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e) continue;
    int mu = mobius(e);
    if (mu == 0) continue;
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), q, d / e);
    total += mu * term;
  }
  return total / d;
}

namespace {

// Monic degree-d polynomials are indexed by sum_{i<d} c_i p^i.
std::vector<std::vector<std::uint32_t>> sieve_irreducibles(std::uint32_t p, unsigned d,
                                                           std::map<unsigned, std::vector<std::vector<std::uint32_t>>>& memo) {
  if (auto it = memo.find(d); it != memo.end()) return it->second;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= p;
  std::vector<bool> reducible(total, false);
  auto digits_of = [&](std::uint64_t code, unsigned len) {
    std::vector<std::uint32_t> c(len + 1);
    for (unsigned i = 0; i < len; ++i) {
      c[i] = code % p;
      code /= p;
    }
    c[len] = 1;
    return c;
  };
  for (unsigned a = 1; 2 * a <= d; ++a) {
    const auto& low = sieve_irreducibles(p, a, memo);
    std::uint64_t hcount = 1;
    for (unsigned i = 0; i < d - a; ++i) hcount *= p;
    for (const auto& g : low) {
      for (std::uint64_t hc = 0; hc < hcount; ++hc) {
        auto h = digits_of(hc, d - a);
        std::vector<std::uint64_t> prod(d + 1, 0);
        for (unsigned i = 0; i <= a; ++i)
          for (unsigned j = 0; j <= d - a; ++j) prod[i + j] += std::uint64_t{g[i]} * h[j];
        std::uint64_t code = 0;
        for (unsigned i = d; i-- > 0;) code = code * p + prod[i] % p;
        reducible[code] = true;
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint64_t code = 0; code < total; ++code)
    if (!reducible[code]) out.push_back(digits_of(code, d));
  memo[d] = out;
  return out;
}

}  // namespace

std::vector<FqPoly> enumerate_irreducibles(std::uint32_t p, unsigned d) {
  if (d == 0) throw ParameterError("degree must be positive");
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) {
    total *= p;
    if (total > kEnumerateLimit)
      throw ParameterError("enumeration of degree-" + std::to_string(d) + " irreducibles over F_" +
                           std::to_string(p) + " exceeds 2^20 candidates");
  }
  auto field = Field::prime(p);
  std::map<unsigned, std::vector<std::vector<std::uint32_t>>> memo;
  std::vector<FqPoly> out;
  for (const auto& c : sieve_irreducibles(p, d, memo)) out.push_back(fq_poly(field, {c.begin(), c.end()}));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace hq
