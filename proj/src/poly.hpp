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

// Dense univariate polynomials over a coefficient ring context.
//
// A ring context supplies value_type and the field operations; FqRing wraps a
// finite field, QRing the exact rationals. Coefficients are stored low to
// high with no trailing zeros, so the zero polynomial is the empty vector.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exactq.hpp"
#include "ffield.hpp"

namespace hq {

struct FqRing {
  FieldPtr field;

  using value_type = Elem;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const { return field->add(a, b); }
  value_type sub(value_type a, value_type b) const { return field->sub(a, b); }
  value_type neg(value_type a) const { return field->neg(a); }
  value_type mul(value_type a, value_type b) const { return field->mul(a, b); }
  value_type inv(value_type a) const { return field->inv(a); }
  value_type from_int(long long v) const { return field->from_int(v); }
  bool is_zero(value_type a) const { return a == 0; }
  bool eq(value_type a, value_type b) const { return a == b; }
  std::string format(value_type a) const { return field->format(a); }
  value_type parse(std::string_view s) const { return field->parse(s); }
  bool compatible(const FqRing& o) const { return field->same_as(*o.field); }
};

struct QRing {
  using value_type = Rational;
  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return a.inverse(); }
  value_type from_int(long long v) const { return Rational(static_cast<long>(v)); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }
  std::string format(const value_type& a) const { return a.str(); }
  value_type parse(std::string_view s) const { return Rational::parse(s); }
  bool compatible(const QRing&) const { return true; }
};

enum class TermOrder { Ascending, Descending };

template <class Ring>
class Poly {
 public:
  using ring_type = Ring;
  using value_type = typename Ring::value_type;

  Poly() = default;
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}
  Poly(Ring ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
    trim();
  }
  static Poly constant(Ring ring, value_type c) { return Poly(std::move(ring), {std::move(c)}); }
  static Poly monomial(Ring ring, value_type c, std::size_t degree) {
    std::vector<value_type> v(degree + 1, ring.zero());
    v[degree] = std::move(c);
    return Poly(std::move(ring), std::move(v));
  }
  static Poly variable(const Ring& ring) { return monomial(ring, ring.one(), 1); }

  const Ring& ring() const { return ring_; }
  const std::vector<value_type>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  value_type lead() const { return c_.empty() ? ring_.zero() : c_.back(); }
  value_type operator[](std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && ring_.eq(c_.back(), ring_.one()); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = ring_.neg(x);
    return r;
  }
  Poly& operator+=(const Poly& o) { return accumulate(o, false); }
  Poly& operator-=(const Poly& o) { return accumulate(o, true); }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    const auto& R = a.ring_;
    std::vector<value_type> r(a.c_.size() + b.c_.size() - 1, R.zero());
    std::vector<std::pair<std::size_t, value_type>> bt;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!R.is_zero(b.c_[j])) bt.emplace_back(j, b.c_[j]);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (R.is_zero(a.c_[i])) continue;
      for (const auto& [j, y] : bt) r[i + j] = R.add(r[i + j], R.mul(a.c_[i], y));
    }
    return Poly(R, std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.ring_.eq(a.c_[i], b.c_[i])) return false;
    return true;
  }

  Poly scaled(const value_type& s) const {
    if (ring_.is_zero(s)) return Poly(ring_);
    Poly r = *this;
    for (auto& x : r.c_) x = ring_.mul(x, s);
    return r;
  }
  // Multiply by X^n.
  Poly shifted(std::size_t n) const {
    if (is_zero()) return *this;
    std::vector<value_type> v(n, ring_.zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(ring_, std::move(v));
  }
  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(ring_.inv(c_.back()));
  }
  Poly derivative() const {
    if (c_.size() <= 1) return Poly(ring_);
    std::vector<value_type> v(c_.size() - 1, ring_.zero());
    for (std::size_t i = 1; i < c_.size(); ++i)
      v[i - 1] = ring_.mul(ring_.from_int(static_cast<long long>(i)), c_[i]);
    return Poly(ring_, std::move(v));
  }
  value_type eval(const value_type& x) const {
    value_type acc = ring_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ring_.add(ring_.mul(acc, x), *it);
    return acc;
  }
  Poly pow(unsigned e) const {
    Poly result = constant(ring_, ring_.one()), base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) result *= base;
      if (e > 1) base *= base;
    }
    return result;
  }

  std::string str(char var = 'T', TermOrder order = TermOrder::Ascending) const;

  // Coefficient access for algorithms that build results in place.
  std::vector<value_type>& mutable_coeffs() { return c_; }
  void trim() {
    while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
  }

 private:
  static void check_compatible(const Poly& a, const Poly& b) {
    if (!a.ring_.compatible(b.ring_)) throw FieldMismatch();
  }
  Poly& accumulate(const Poly& o, bool subtract) {
    check_compatible(*this, o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ring_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] = subtract ? ring_.sub(c_[i], o.c_[i]) : ring_.add(c_[i], o.c_[i]);
    trim();
    return *this;
  }

  Ring ring_;
  std::vector<value_type> c_;
};

using FqPoly = Poly<FqRing>;
using QPoly = Poly<QRing>;

template <class Ring>
struct DivMod {
  Poly<Ring> quotient;
  Poly<Ring> remainder;
};

template <class Ring>
DivMod<Ring> divmod(const Poly<Ring>& a, const Poly<Ring>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const Ring& R = a.ring();
  if (a.degree() < b.degree()) return {Poly<Ring>(R), a};
  auto rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const auto lead_inv = R.inv(bc.back());
  std::vector<typename Ring::value_type> quo(rem.size() - db, R.zero());
  // lower terms of b, negated; zeros skipped
  std::vector<std::pair<std::size_t, typename Ring::value_type>> bt;
  for (std::size_t j = 0; j < db; ++j)
    if (!R.is_zero(bc[j])) bt.emplace_back(j, R.neg(bc[j]));
  for (std::size_t i = rem.size(); i-- > db;) {
    if (R.is_zero(rem[i])) continue;
    auto c = R.mul(rem[i], lead_inv);
    quo[i - db] = c;
    for (const auto& [j, nb] : bt) rem[i - db + j] = R.add(rem[i - db + j], R.mul(c, nb));
    rem[i] = R.zero();
  }
  return {Poly<Ring>(R, std::move(quo)), Poly<Ring>(R, std::move(rem))};
}

template <class Ring>
Poly<Ring> operator%(const Poly<Ring>& a, const Poly<Ring>& b) {
  return divmod(a, b).remainder;
}

// Monic gcd; gcd(0, 0) = 0.
template <class Ring>
Poly<Ring> gcd(Poly<Ring> a, Poly<Ring> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class Ring>
std::string Poly<Ring>::str(char var, TermOrder order) const {
  if (c_.empty()) return "0";
  std::vector<std::string> terms;
  auto emit = [&](std::size_t i) {
    const auto& c = c_[i];
    if (ring_.is_zero(c)) return;
    std::string mono;
    if (i >= 1) {
      mono.push_back(var);
      if (i > 1) mono += "^" + std::to_string(i);
    }
    std::string cs = ring_.format(c);
    if (i == 0) {
      terms.push_back(cs);
    } else if (ring_.eq(c, ring_.one())) {
      terms.push_back(mono);
    } else if (ring_.eq(c, ring_.neg(ring_.one()))) {
      terms.push_back("-" + mono);
    } else {
      terms.push_back(cs + "*" + mono);
    }
  };
  if (order == TermOrder::Ascending) {
    for (std::size_t i = 0; i < c_.size(); ++i) emit(i);
  } else {
    for (std::size_t i = c_.size(); i-- > 0;) emit(i);
  }
  std::string out = terms.front();
  for (std::size_t t = 1; t < terms.size(); ++t) {
    if (terms[t][0] == '-')
      out += " - " + terms[t].substr(1);
    else
      out += " + " + terms[t];
  }
  return out;
}

// Parses "c0 + c1*T + c2*T^2" (any term order, repeated degrees add up).
template <class Ring>
Poly<Ring> parse_poly(const Ring& ring, std::string_view text, char var = 'T') {
  std::string s;
  std::vector<std::size_t> pos;  // original offsets, for error messages
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s.push_back(text[i]);
      pos.push_back(i);
    }
  }
  if (s.empty()) throw ParseError("empty polynomial", 0);
  auto orig = [&](std::size_t i) { return i < pos.size() ? pos[i] : text.size(); };

  // Split at top-level signs that start a new term.
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced ')'", orig(i));
    if ((ch == '+' || ch == '-') && depth == 0 && i > start) {
      char prev = s[i - 1];
      if (prev != '^' && prev != '*' && prev != '/' && prev != '(' && prev != ',') {
        spans.emplace_back(start, i);
        start = i;
      }
    }
  }
  if (depth != 0) throw ParseError("unbalanced '('", orig(s.size()));
  spans.emplace_back(start, s.size());

  std::vector<typename Ring::value_type> coeffs;
  for (auto [b, e] : spans) {
    std::string term = s.substr(b, e - b);
    bool negative = false;
    std::size_t off = 0;
    while (off < term.size() && (term[off] == '+' || term[off] == '-')) {
      negative ^= term[off] == '-';
      ++off;
    }
    std::string body = term.substr(off);
    if (body.empty()) throw ParseError("empty term", orig(b));
    std::size_t degree = 0;
    std::string coef = body;
    // The variable at top level marks the monomial part.
    std::size_t vpos = std::string::npos;
    depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (depth == 0 && body[i] == var) vpos = i;
    }
    if (vpos != std::string::npos) {
      std::string tail = body.substr(vpos + 1);
      degree = 1;
      if (!tail.empty()) {
        if (tail[0] != '^' || tail.size() < 2 ||
            !std::all_of(tail.begin() + 1, tail.end(), [](unsigned char c) { return std::isdigit(c); }))
          throw ParseError("malformed exponent '" + tail + "'", orig(b + off + vpos + 1));
        degree = std::stoul(tail.substr(1));
      }
      coef = body.substr(0, vpos);
      if (!coef.empty()) {
        if (coef.back() != '*') throw ParseError("expected '*' before variable", orig(b + off + vpos));
        coef.pop_back();
        if (coef.empty()) throw ParseError("missing coefficient", orig(b + off));
      }
    }
    typename Ring::value_type c = ring.one();
    if (!coef.empty()) {
      try {
        c = ring.parse(coef);
      } catch (const ParseError& err) {
        throw ParseError(std::string("bad coefficient: ") + err.what(), orig(b + off));
      }
    }
    if (negative) c = ring.neg(c);
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, ring.zero());
    coeffs[degree] = ring.add(coeffs[degree], c);
  }
  return Poly<Ring>(ring, std::move(coeffs));
}

}  // namespace hq
