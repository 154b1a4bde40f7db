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

// Exact rational arithmetic and p-adic valuations for the characteristic-zero
// side of the (P_k, Q_k) construction.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hq {

using Integer = mpz_class;

// Always in lowest terms with a positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  Rational inverse() const;
  Rational pow(long e) const;

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

// Exponent of p in a rational; nullopt encodes +infinity (input zero).
struct PadicValuation {
  std::optional<long> value;
  bool infinite() const { return !value.has_value(); }
  friend bool operator==(const PadicValuation&, const PadicValuation&) = default;
};

bool is_prime(std::uint64_t n);
void require_prime(std::uint64_t p);

PadicValuation vp(const Rational& x, std::uint64_t p);
long vp(const Integer& n, std::uint64_t p);

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p);
// Legendre: v_p(n!) = (n - s_p(n)) / (p - 1).
std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// v_{1,k}, ..., v_{2k,k}: the coefficients in P_k/Q_k = [v_1 T, ..., v_2k T].
std::vector<Rational> v_sequence_rational(unsigned k);
// (theta_k, omega_k).
std::pair<Rational, Rational> theta_omega_rational(unsigned k);
// b_0, ..., b_{k-1} with Q_k = sum b_i T^{2i+1}.
std::vector<Rational> q_coefficients_rational(unsigned k);

// Image of x in F_p; throws ParameterError when v_p(x) < 0.
std::uint32_t reduce_mod(const Rational& x, std::uint64_t p);

}  // namespace hq
