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

#include "exactq.hpp"

#include "errors.hpp"

namespace hq {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + s + "'", 0);
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Rational result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
}

long vp(const Integer& n, std::uint64_t p) {
  require_prime(p);
  if (n == 0) throw ParameterError("valuation of zero integer is infinite");
  Integer m = abs(n), pp(static_cast<unsigned long>(p));
  long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
    m /= pp;
    ++v;
  }
  return v;
}

PadicValuation vp(const Rational& x, std::uint64_t p) {
  require_prime(p);
  if (x.is_zero()) return {};
  return {vp(x.num(), p) - vp(x.den(), p)};
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p) {
  std::uint64_t s = 0;
  for (; n > 0; n /= p) s += n % p;
  return s;
}

std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  return (n - digit_sum(n, p)) / (p - 1);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::vector<Rational> v_sequence_rational(unsigned k) {
  if (k == 0) throw ParameterError("k must be positive");
  const long kk = static_cast<long>(k);
  std::vector<Rational> v;
  v.reserve(2 * k);
  v.emplace_back(2 * kk - 1);
  for (long i = 1; i <= 2 * kk - 1; ++i) {
    // v_{i+1} v_i = (2k-2i-1)(2k-2i+1) / (i(2k-i))
    const Rational& vi = v.back();
    if (vi.is_zero()) throw InternalError("v_{i,k} vanished in the recursion");
    Rational rhs = Rational(Integer((2 * kk - 2 * i - 1) * (2 * kk - 2 * i + 1)), Integer(i * (2 * kk - i)));
    v.push_back(rhs / vi);
  }
  return v;
}

std::pair<Rational, Rational> theta_omega_rational(unsigned k) {
  if (k == 0) throw ParameterError("k must be positive");
  Rational theta(binomial(2 * k, k), Integer(1) << (2 * k));
  if (k % 2 == 1) theta = -theta;
  Rational two_k_theta = Rational(2 * static_cast<long>(k)) * theta;
  Rational omega = -(two_k_theta * two_k_theta).inverse();
  return {theta, omega};
}

std::vector<Rational> q_coefficients_rational(unsigned k) {
  if (k == 0) throw ParameterError("k must be positive");
  std::vector<Rational> b;
  for (unsigned i = 0; i < k; ++i) {
    Rational bi(binomial(k - 1, i), Integer(2 * i + 1));
    if ((k - 1 - i) % 2 == 1) bi = -bi;
    b.push_back(bi);
  }
  return b;
}

std::uint32_t reduce_mod(const Rational& x, std::uint64_t p) {
  auto v = vp(x, p);
  if (!v.infinite() && *v.value < 0)
    throw ParameterError("rational " + x.str() + " has negative " + std::to_string(p) + "-adic valuation");
  if (x.is_zero()) return 0;
  Integer pp(static_cast<unsigned long>(p));
  Integer n = x.num() % pp;
  if (n < 0) n += pp;
  Integer d = x.den() % pp, dinv;
  mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t());
  Integer r = (n * dinv) % pp;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace hq
