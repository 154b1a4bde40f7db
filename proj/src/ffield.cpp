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

#include "ffield.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "errors.hpp"
#include "exactq.hpp"
#include "fpoly.hpp"

namespace hq {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool modulus_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& m) {
  FqRing ring{Field::prime(p)};
  std::vector<Elem> c(m.begin(), m.end());
  return is_irreducible(FqPoly(ring, std::move(c)));
}

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  return s;
}

// Signed decimal integer occupying all of s.
std::optional<long long> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size() || s.size() - i > 18) return std::nullopt;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
  return std::stoll(s);
}

}  // namespace

Field::Field(std::uint32_t p, unsigned s, std::vector<std::uint32_t> modulus)
    : p_(p), s_(s), q_(ipow(p, s)), modulus_(std::move(modulus)) {}

std::vector<std::uint32_t> Field::default_modulus(std::uint32_t p, unsigned s) {
  if (s == 1) return {0, 1};
  // Enumerate (c0, ..., c_{s-1}) lexicographically with c0 most significant.
  std::vector<std::uint32_t> c(s, 0);
  for (;;) {
    std::vector<std::uint32_t> m = c;
    m.push_back(1);
    if (c[0] != 0 && modulus_irreducible(p, m)) return m;
    int i = static_cast<int>(s) - 1;
    while (i >= 0 && ++c[i] == p) c[i--] = 0;
    if (i < 0) throw InternalError("no irreducible polynomial found");
  }
}

FieldPtr Field::make(std::uint32_t p, unsigned s, std::optional<std::vector<std::uint32_t>> modulus) {
  if (p == 2) throw FieldError("characteristic 2 is not supported");
  if (!is_prime(p)) throw FieldError("p = " + std::to_string(p) + " is not prime");
  if (s == 0) throw FieldError("extension degree must be positive");
  if (s > 31 || ipow(p, s) > kMaxOrder || (s > 1 && ipow(p, s) / p != ipow(p, s - 1)))
    throw FieldError("field order exceeds 2^31");
  std::vector<std::uint32_t> m;
  if (modulus) {
    m = *modulus;
    while (!m.empty() && m.back() == 0) m.pop_back();
    if (m.size() != s + 1) throw FieldError("modulus must have degree " + std::to_string(s));
    for (auto c : m)
      if (c >= p) throw FieldError("modulus coefficient out of range [0, p)");
    if (m.back() != 1) throw FieldError("modulus is not monic");
    if (s == 1 && m[0] != 0) m = {0, 1};  // every linear modulus gives the same F_p
    if (s > 1 && !modulus_irreducible(p, m)) throw FieldError("modulus is reducible over F_p");
  } else {
    m = default_modulus(p, s);
  }
  std::shared_ptr<Field> f(new Field(p, s, std::move(m)));
  f->build_tables();
  return f;
}

FieldPtr Field::paper_f27() {
  static const FieldPtr f = [] {
    std::shared_ptr<Field> g(new Field(3, 3, {1, 2, 1, 1}));
    g->preset_ = "f27-paper";
    g->build_tables();
    return FieldPtr(g);
  }();
  return f;
}

FieldPtr Field::preset(std::string_view name) {
  if (name == "f27-paper") return paper_f27();
  throw ParameterError("unknown field preset '" + std::string(name) + "'");
}

void Field::build_tables() {
  if (s_ > 1 && q_ <= kAddTableLimit) {
    add_.resize(q_ * q_);
    neg_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
      neg_[a] = neg_slow(a);
      for (Elem b = 0; b < q_; ++b) add_[static_cast<std::size_t>(a) * q_ + b] = add_slow(a, b);
    }
  }
  if (q_ > kTableLimit) return;
  Elem g = 0;
  if (s_ > 1 && is_primitive_slow(u())) {
    g = u();
    named_ = true;
  } else {
    for (Elem c = 1; c < q_ && g == 0; ++c)
      if (is_primitive_slow(c)) g = c;
  }
  if (g == 0) throw InternalError("no primitive element");
  const std::uint64_t n = q_ - 1;
  exp_.resize(2 * n);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = exp_[i + n] = x;
    log_[x] = static_cast<Elem>(i);
    x = mul_slow(x, g);
  }
}

Elem Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() > s_) throw FieldError("too many coordinates for this field");
  Elem code = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= p_) throw FieldError("coordinate out of range [0, p)");
    code = code * p_ + d[i];
  }
  return code;
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> d(s_);
  for (unsigned i = 0; i < s_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Elem Field::u() const {
  if (s_ < 2) throw FieldError("prime field has no generator u");
  return p_;
}

Elem Field::add_slow(Elem a, Elem b) const {
  Elem r = 0, place = 1;
  for (unsigned i = 0; i < s_; ++i) {
    Elem x = a % p_, y = b % p_;
    a /= p_;
    b /= p_;
    Elem z = x + y;
    if (z >= p_) z -= p_;
    r += z * place;
    place *= p_;
  }
  return r;
}

Elem Field::neg_slow(Elem a) const {
  Elem r = 0, place = 1;
  for (unsigned i = 0; i < s_; ++i) {
    Elem x = a % p_;
    a /= p_;
    r += (x == 0 ? 0 : p_ - x) * place;
    place *= p_;
  }
  return r;
}

Elem Field::mul_slow(Elem a, Elem b) const {
  if (s_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  auto x = digits(a), y = digits(b);
  std::vector<std::uint64_t> prod(2 * s_ - 1, 0);
  for (unsigned i = 0; i < s_; ++i)
    for (unsigned j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_;
  // u^s = -sum m_i u^i.
  for (unsigned d = 2 * s_ - 2; d >= s_; --d) {
    std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < s_; ++i)
      prod[d - s_ + i] = (prod[d - s_ + i] + (p_ - c) * modulus_[i]) % p_;
  }
  Elem r = 0;
  for (unsigned i = s_; i-- > 0;) r = r * p_ + static_cast<Elem>(prod[i]);
  return r;
}

Elem Field::pow_slow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return result;
}

bool Field::is_primitive_slow(Elem g) const {
  if (g == 0) return false;
  const std::uint64_t n = q_ - 1;
  for (auto r : prime_factors(n))
    if (pow_slow(g, n / r) == 1) return false;
  return true;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in " + describe());
  if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow_slow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  if (a == 0) return e == 0 ? 1 : 0;
  const std::uint64_t n = q_ - 1;
  std::uint64_t ee = static_cast<std::uint64_t>(e) % n;
  if (!log_.empty()) return exp_[static_cast<std::uint64_t>(log_[a]) * ee % n];
  return pow_slow(a, ee);
}

Elem Field::frobenius(Elem a, unsigned t) const {
  t %= s_;
  for (unsigned i = 0; i < t; ++i) a = pow(a, p_);
  return a;
}

Elem Field::frobenius_inverse(Elem a, unsigned t) const {
  return frobenius(a, (s_ - t % s_) % s_);
}

unsigned Field::degree_over_prime(Elem a) const {
  for (unsigned d = 1; d < s_; ++d)
    if (s_ % d == 0 && frobenius(a, d) == a) return d;
  return s_;
}

std::optional<std::uint32_t> Field::log(Elem a) const {
  if (a == 0 || log_.empty()) return std::nullopt;
  return log_[a];
}

std::string Field::format(Elem a) const {
  if (a == 0) return "0";
  if (s_ == 1) {
    long long v = a;
    if (v > static_cast<long long>(p_ / 2)) v -= p_;
    return std::to_string(v);
  }
  if (named_) {
    std::uint64_t L = log_[a];
    const std::uint64_t half = (q_ - 1) / 2;
    std::string sign;
    if (L >= half) {
      L -= half;
      sign = "-";
    }
    if (L == 0) return sign + "1";
    if (L == 1) return sign + "u";
    return sign + "u^" + std::to_string(L);
  }
  auto d = digits(a);
  std::string out = "(";
  for (unsigned i = 0; i < s_; ++i) {
    long long v = d[i];
    if (v > static_cast<long long>(p_ / 2)) v -= p_;
    if (i) out += ",";
    out += std::to_string(v);
  }
  return out + ")";
}

Elem Field::parse(std::string_view text) const {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty field element", 0);
  std::string body = s;
  bool paren = false;
  if (body.front() == '(') {
    if (body.back() != ')') throw ParseError("missing ')'", text.size());
    body = body.substr(1, body.size() - 2);
    paren = true;
  }
  if (paren || body.find(',') != std::string::npos) {
    std::vector<std::uint32_t> d;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = body.find(',', start);
      std::string part = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      auto v = parse_int(part);
      if (!v) throw ParseError("bad coordinate '" + part + "'", start + (paren ? 1 : 0));
      d.push_back(from_int(*v));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (d.size() != s_)
      throw ParseError("expected " + std::to_string(s_) + " coordinates, got " + std::to_string(d.size()), 0);
    return from_digits(d);
  }
  if (auto v = parse_int(body)) return from_int(*v);

  // [sign][int*]u[^[-]e]
  std::size_t i = 0;
  bool negative = false;
  if (body[i] == '-' || body[i] == '+') negative = body[i++] == '-';
  Elem coef = 1;
  std::size_t star = body.find('*', i);
  if (star != std::string::npos) {
    auto v = parse_int(body.substr(i, star - i));
    if (!v) throw ParseError("bad scalar before '*'", i);
    coef = from_int(*v);
    i = star + 1;
  }
  if (i >= body.size() || body[i] != 'u') throw ParseError("unrecognized field element '" + s + "'", i);
  if (s_ < 2) throw ParseError("generator u is not defined in a prime field", i);
  ++i;
  long long e = 1;
  if (i < body.size()) {
    if (body[i] != '^') throw ParseError("expected '^' after u", i);
    auto v = parse_int(body.substr(i + 1));
    if (!v) throw ParseError("bad exponent", i + 1);
    e = *v;
  }
  Elem x = mul(coef, pow(u(), e));
  return negative ? neg(x) : x;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (s_ > 1) {
    os << " = F_" << p_ << "[u]/(";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      long long c = modulus_[i];
      if (c == 0) continue;
      if (c > static_cast<long long>(p_ / 2)) c -= p_;
      bool neg = c < 0;
      long long mag = neg ? -c : c;
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      if (i == 0 || mag != 1) os << mag;
      if (i >= 1) os << "u";
      if (i > 1) os << "^" << i;
      first = false;
    }
    os << ")";
  }
  return os.str();
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (value_ >= field_->q()) throw FieldError("element code out of range");
}

FieldElement FieldElement::parse(const FieldPtr& field, std::string_view text) {
  return {field, field->parse(text)};
}

static void require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field()->same_as(*b.field())) throw FieldMismatch();
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->div(a.value_, b.value_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_->same_as(*b.field_) && a.value_ == b.value_;
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw InternalError("unknown arithmetic operation");
}

}  // namespace hq
