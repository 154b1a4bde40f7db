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

// Truncated Laurent series in 1/T over F_q.
//
// A series knows its coefficients at exponents e with floor < e <= top and
// is O(T^floor) below that. Exact series (finite sums, e.g. polynomials) have
// no floor. A non-exact series whose known part vanishes is "zero at
// precision": it is only known to satisfy |a| <= |T|^floor, and dividing by
// it is a precision error rather than a division by zero.

#pragma once

#include <climits>
#include <string>
#include <vector>

#include "poly.hpp"

namespace hq {

class LaurentSeries {
 public:
  static constexpr long kExact = LONG_MIN / 4;

  // Exact zero.
  explicit LaurentSeries(FieldPtr field);
  // Exact value of a polynomial.
  static LaurentSeries from_poly(const FqPoly& p);
  // Exact monomial c T^e.
  static LaurentSeries monomial(FieldPtr field, Elem c, long e);
  // num/den expanded until exponent floor (exclusive); exact if den is constant.
  static LaurentSeries from_rational(const FqPoly& num, const FqPoly& den, long floor);
  // Coefficients given from exponent top downward, known down to floor (exclusive).
  static LaurentSeries from_coeffs(FieldPtr field, long top, std::vector<Elem> desc_coeffs, long floor);

  const FieldPtr& field() const { return field_; }
  bool is_exact() const { return floor_ == kExact; }
  bool is_exact_zero() const { return is_exact() && c_.empty(); }
  bool is_zero_at_precision() const { return !is_exact() && c_.empty(); }
  bool has_known_lead() const { return !c_.empty(); }
  // Exponent of the leading term; |a| = |T|^top. Requires a known lead.
  long top() const;
  long floor() const { return floor_; }
  Elem lead() const;
  Elem coeff(long e) const;  // e must be above the floor
  // Number of stored coefficients (top down).
  std::size_t size() const { return c_.size(); }
  const std::vector<Elem>& desc_coeffs() const { return c_; }

  LaurentSeries truncated(long floor) const;
  LaurentSeries with_coeff(long e, Elem c) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries scaled(Elem c) const;
  LaurentSeries shifted(long n) const;  // times T^n

  // a / b. When both are exact and the quotient is not, it is cut at cap_floor.
  static LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b, long cap_floor);
  LaurentSeries inverse(long cap_floor) const;

  // Sum u_k^r T^{rk} for r = p^t.
  LaurentSeries frobenius_pow(unsigned t) const;
  // Same with r given directly; r must be a power of p.
  LaurentSeries frobenius_pow_r(std::uint64_t r) const;
  // Sum of the terms with k >= 0; requires floor < 0.
  FqPoly polynomial_part() const;
  // Exact equality of known parts and floors.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  // "c T^e + ... + O(T^floor)"; max_terms = 0 prints everything.
  std::string str(std::size_t max_terms = 0) const;

 private:
  LaurentSeries(FieldPtr field, long top, std::vector<Elem> c, long floor);
  void normalize();

  FieldPtr field_;
  long top_ = 0;           // exponent of c_[0]
  std::vector<Elem> c_;    // descending exponents
  long floor_ = kExact;
};

}  // namespace hq
