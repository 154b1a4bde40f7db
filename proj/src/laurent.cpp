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

#include "laurent.hpp"

#include <algorithm>

namespace hq {

LaurentSeries::LaurentSeries(FieldPtr field) : field_(std::move(field)) {}

LaurentSeries::LaurentSeries(FieldPtr field, long top, std::vector<Elem> c, long floor)
    : field_(std::move(field)), top_(top), c_(std::move(c)), floor_(floor) {
  normalize();
}

void LaurentSeries::normalize() {
  std::size_t lz = 0;
  while (lz < c_.size() && c_[lz] == 0) ++lz;
  if (lz) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lz));
    top_ -= static_cast<long>(lz);
  }
  if (is_exact()) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) top_ = 0;
    return;
  }
  if (c_.empty() || top_ <= floor_) {
    c_.clear();
    top_ = floor_;
    return;
  }
  c_.resize(static_cast<std::size_t>(top_ - floor_), 0);
}

LaurentSeries LaurentSeries::from_poly(const FqPoly& p) {
  std::vector<Elem> c(p.coeffs().rbegin(), p.coeffs().rend());
  return LaurentSeries(p.ring().field, p.degree(), std::move(c), kExact);
}

LaurentSeries LaurentSeries::monomial(FieldPtr field, Elem c, long e) {
  return LaurentSeries(std::move(field), e, {c}, kExact);
}

LaurentSeries LaurentSeries::from_rational(const FqPoly& num, const FqPoly& den, long floor) {
  return div(from_poly(num), from_poly(den), floor);
}

LaurentSeries LaurentSeries::from_coeffs(FieldPtr field, long top, std::vector<Elem> desc_coeffs, long floor) {
  if (floor != kExact && static_cast<long>(desc_coeffs.size()) > top - floor)
    desc_coeffs.resize(static_cast<std::size_t>(std::max(0L, top - floor)));
  return LaurentSeries(std::move(field), top, std::move(desc_coeffs), floor);
}

long LaurentSeries::top() const {
  if (c_.empty()) {
    if (is_exact()) throw ParameterError("the zero series has no leading term");
    throw PrecisionError("series is zero at precision O(T^" + std::to_string(floor_) + ")", floor_ - 1);
  }
  return top_;
}

Elem LaurentSeries::lead() const {
  top();
  return c_[0];
}

Elem LaurentSeries::coeff(long e) const {
  if (!is_exact() && e <= floor_)
    throw PrecisionError("coefficient of T^" + std::to_string(e) + " is below the precision floor", e - 1);
  if (c_.empty() || e > top_) return 0;
  std::size_t idx = static_cast<std::size_t>(top_ - e);
  return idx < c_.size() ? c_[idx] : 0;
}

LaurentSeries LaurentSeries::truncated(long floor) const {
  if (floor <= floor_) return *this;
  std::vector<Elem> c = c_;
  long top = c_.empty() ? floor : top_;
  return LaurentSeries(field_, top, std::move(c), floor);
}

LaurentSeries LaurentSeries::with_coeff(long e, Elem c) const {
  if (!is_exact() && e <= floor_) throw PrecisionError("cannot set a coefficient below the floor", e - 1);
  long top = c_.empty() ? e : std::max(top_, e);
  long low = c_.empty() ? e : std::min(top_ - static_cast<long>(c_.size()) + 1, e);
  std::vector<Elem> v(static_cast<std::size_t>(top - low + 1), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(top - top_) + i] = c_[i];
  v[static_cast<std::size_t>(top - e)] = c;
  return LaurentSeries(field_, top, std::move(v), floor_);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& x : r.c_) x = field_->neg(x);
  return r;
}

LaurentSeries LaurentSeries::scaled(Elem c) const {
  if (c == 0) return is_exact() ? LaurentSeries(field_) : LaurentSeries(field_, floor_, {}, floor_);
  LaurentSeries r = *this;
  for (auto& x : r.c_) x = field_->mul(x, c);
  return r;
}

LaurentSeries LaurentSeries::shifted(long n) const {
  LaurentSeries r = *this;
  if (!r.c_.empty() || !is_exact()) r.top_ += n;
  if (!is_exact()) r.floor_ += n;
  return r;
}

namespace {

void require_same(const LaurentSeries& a, const LaurentSeries& b) {
  if (!a.field()->same_as(*b.field())) throw FieldMismatch();
}

long lowest(const LaurentSeries& a) { return a.top() - static_cast<long>(a.size()) + 1; }

}  // namespace

static LaurentSeries add_impl(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
  require_same(a, b);
  const Field& F = *a.field();
  const long floor = std::max(a.floor(), b.floor());
  const bool exact = floor == LaurentSeries::kExact;
  long top = floor, low = floor + 1;
  bool any = false;
  for (const LaurentSeries* s : {&a, &b}) {
    if (!s->has_known_lead()) continue;
    if (!any) {
      top = s->top();
      low = lowest(*s);
      any = true;
    } else {
      top = std::max(top, s->top());
      low = std::min(low, lowest(*s));
    }
  }
  if (!any) {
    return exact ? LaurentSeries(a.field()) : LaurentSeries::from_coeffs(a.field(), floor, {}, floor);
  }
  if (!exact) low = floor + 1;
  if (top < low) return LaurentSeries::from_coeffs(a.field(), floor, {}, floor);
  std::vector<Elem> v(static_cast<std::size_t>(top - low + 1), 0);
  for (int which = 0; which < 2; ++which) {
    const LaurentSeries& s = which ? b : a;
    if (!s.has_known_lead()) continue;
    const auto& c = s.desc_coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      long e = s.top() - static_cast<long>(i);
      if (e < low) break;
      Elem x = (which && subtract) ? F.neg(c[i]) : c[i];
      auto& slot = v[static_cast<std::size_t>(top - e)];
      slot = F.add(slot, x);
    }
  }
  return LaurentSeries::from_coeffs(a.field(), top, std::move(v), floor);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add_impl(a, b, false); }
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return add_impl(a, b, true); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  require_same(a, b);
  if (a.is_exact_zero() || b.is_exact_zero()) return LaurentSeries(a.field());
  const Field& F = *a.field();
  const long ta = a.has_known_lead() ? a.top_ : a.floor_;
  const long tb = b.has_known_lead() ? b.top_ : b.floor_;
  long floor = LaurentSeries::kExact;
  if (!a.is_exact() || !b.is_exact()) {
    floor = std::max(a.is_exact() ? LaurentSeries::kExact : a.floor_ + tb,
                     b.is_exact() ? LaurentSeries::kExact : b.floor_ + ta);
  }
  if (!a.has_known_lead() || !b.has_known_lead()) return LaurentSeries(a.field_, floor, {}, floor);
  const long top = ta + tb;
  long low = floor + 1;
  if (floor == LaurentSeries::kExact) low = lowest(a) + lowest(b);
  if (top < low) return LaurentSeries(a.field_, floor, {}, floor);
  std::vector<Elem> v(static_cast<std::size_t>(top - low + 1), 0);
  const std::size_t width = v.size();
  for (std::size_t i = 0; i < a.c_.size() && i < width; ++i) {
    const Elem x = a.c_[i];
    if (x == 0) continue;
    const std::size_t jmax = std::min(b.c_.size(), width - i);
    Elem* out = v.data() + i;
    const Elem* y = b.c_.data();
    for (std::size_t j = 0; j < jmax; ++j)
      if (y[j]) out[j] = F.add(out[j], F.mul(x, y[j]));
  }
  return LaurentSeries(a.field_, top, std::move(v), floor);
}

LaurentSeries LaurentSeries::div(const LaurentSeries& a, const LaurentSeries& b, long cap_floor) {
  require_same(a, b);
  if (b.is_exact_zero()) throw DivisionByZero("division by the zero series");
  if (b.is_zero_at_precision())
    throw PrecisionError("divisor is zero at precision O(T^" + std::to_string(b.floor_) + ")", b.floor_ - 1);
  if (a.is_exact_zero()) return LaurentSeries(a.field_);
  const Field& F = *a.field_;
  const long tb = b.top_;
  const long ta = a.has_known_lead() ? a.top_ : a.floor_;
  long rule = kExact;
  if (!a.is_exact()) rule = std::max(rule, a.floor_ - tb);
  if (!b.is_exact()) rule = std::max(rule, b.floor_ + ta - 2 * tb);
  const bool both_exact = a.is_exact() && b.is_exact();
  long floor = both_exact ? cap_floor : std::max(rule, cap_floor);
  if (!a.has_known_lead()) return LaurentSeries(a.field_, floor, {}, floor);
  const long qtop = ta - tb;
  if (qtop <= floor) return LaurentSeries(a.field_, floor, {}, floor);

  // Remainder window over exponents [wlow, ta].
  long wlow = floor + 1 + tb;
  if (both_exact) wlow = std::min({wlow, lowest(a), floor + 1 + lowest(b)});
  std::vector<Elem> rem(static_cast<std::size_t>(ta - wlow + 1), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    long e = ta - static_cast<long>(i);
    if (e < wlow) break;
    rem[i] = a.c_[i];
  }
  const Elem inv_lead = F.inv(b.c_[0]);
  std::vector<Elem> q(static_cast<std::size_t>(qtop - floor), 0);
  for (std::size_t k = 0; k < q.size(); ++k) {
    // quotient exponent qtop - k pairs with remainder index k
    Elem r0 = rem[k];
    if (r0 == 0) continue;
    Elem c = F.mul(r0, inv_lead);
    q[k] = c;
    Elem nc = F.neg(c);
    const std::size_t jmax = std::min(b.c_.size(), rem.size() - k);
    for (std::size_t j = 0; j < jmax; ++j)
      if (b.c_[j]) rem[k + j] = F.add(rem[k + j], F.mul(nc, b.c_[j]));
  }
  if (both_exact && std::all_of(rem.begin(), rem.end(), [](Elem x) { return x == 0; }))
    return LaurentSeries(a.field_, qtop, std::move(q), kExact);
  return LaurentSeries(a.field_, qtop, std::move(q), floor);
}

LaurentSeries LaurentSeries::inverse(long cap_floor) const {
  return div(monomial(field_, 1, 0), *this, cap_floor);
}

LaurentSeries LaurentSeries::frobenius_pow(unsigned t) const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < t; ++i) r *= field_->p();
  const long rl = static_cast<long>(r);
  const long floor = is_exact() ? kExact : floor_ * rl;
  if (c_.empty()) return LaurentSeries(field_, floor, {}, floor);
  std::vector<Elem> v((c_.size() - 1) * r + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) v[i * r] = field_->frobenius(c_[i], t);
  return LaurentSeries(field_, top_ * rl, std::move(v), floor);
}

LaurentSeries LaurentSeries::frobenius_pow_r(std::uint64_t r) const {
  unsigned t = 0;
  std::uint64_t x = r;
  while (x > 1 && x % field_->p() == 0) {
    x /= field_->p();
    ++t;
  }
  if (x != 1 || t == 0)
    throw ParameterError(std::to_string(r) + " is not a positive power of p = " + std::to_string(field_->p()));
  return frobenius_pow(t);
}

FqPoly LaurentSeries::polynomial_part() const {
  if (!is_exact() && floor_ >= 0)
    throw PrecisionError("constant term is below the precision floor O(T^" + std::to_string(floor_) + ")", -1);
  FqRing ring{field_};
  if (c_.empty() || top_ < 0) return FqPoly(ring);
  std::vector<Elem> v(static_cast<std::size_t>(top_ + 1), 0);
  for (long e = 0; e <= top_; ++e) v[static_cast<std::size_t>(e)] = coeff(e);
  return FqPoly(ring, std::move(v));
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.field_->same_as(*b.field_) && a.floor_ == b.floor_ && a.c_ == b.c_ &&
         (a.c_.empty() || a.top_ == b.top_);
}

std::string LaurentSeries::str(std::size_t max_terms) const {
  auto mono = [](long e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return "T";
    return "T^" + std::to_string(e);
  };
  std::vector<std::string> terms;
  bool elided = false;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (max_terms && terms.size() == max_terms) {
      elided = true;
      break;
    }
    long e = top_ - static_cast<long>(i);
    std::string m = mono(e), cs = field_->format(c_[i]);
    if (m.empty())
      terms.push_back(cs);
    else if (c_[i] == 1)
      terms.push_back(m);
    else if (c_[i] == field_->neg(1))
      terms.push_back("-" + m);
    else
      terms.push_back(cs + "*" + m);
  }
  if (elided) terms.push_back("...");
  if (!is_exact()) terms.push_back("O(T^" + std::to_string(floor_) + ")");
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i][0] == '-')
      out += " - " + terms[i].substr(1);
    else
      out += " + " + terms[i];
  }
  return out;
}

}  // namespace hq
