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

// Polynomials over finite fields: modular powering, the Frobenius map
// g -> g^q mod f, irreducibility, factorization and counting/enumerating
// irreducibles. Also the reduced rational-function type.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "exactq.hpp"
#include "poly.hpp"

namespace hq {

FqPoly fq_poly(const FieldPtr& field, const std::vector<Elem>& coeffs);
FqPoly fq_variable(const FieldPtr& field);

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& mod);
FqPoly powmod(FqPoly base, std::uint64_t e, const FqPoly& mod);

// Precomputed X^{q i} mod f, so g^q mod f is one matrix-vector product.
class FrobeniusMap {
 public:
  explicit FrobeniusMap(const FqPoly& modulus);
  FqPoly apply(const FqPoly& g) const;
  const FqPoly& modulus() const { return f_; }

 private:
  FqPoly f_;
  std::vector<std::vector<Elem>> rows_;
};

// Coefficientwise x -> x^{p^t} combined with T -> T^{p^t}: the polynomial a^{p^t}.
FqPoly frobenius_pow(const FqPoly& a, unsigned t);

bool is_irreducible(const FqPoly& f);

// Monic polynomials in canonical order: degree, then coefficients low to high.
bool canonical_less(const FqPoly& a, const FqPoly& b);

struct FactorMultiset {
  Elem unit = 1;
  std::vector<std::pair<FqPoly, unsigned>> factors;  // monic irreducible, multiplicity

  FqPoly product(const FqRing& ring) const;
  std::string str(const FqRing& ring, char var = 'T') const;
};

FactorMultiset factor(const FqPoly& f);

// Building blocks, exposed for testing.
std::vector<std::pair<FqPoly, unsigned>> squarefree_decomposition(const FqPoly& monic_f);
// Pairs (product of all irreducible factors of degree d, d) for squarefree monic f.
std::vector<std::pair<FqPoly, unsigned>> distinct_degree(const FqPoly& f);
std::vector<FqPoly> equal_degree(const FqPoly& f, unsigned d, std::uint64_t seed);

// Number of monic irreducibles of degree d over F_q.
Integer count_irreducibles(std::uint64_t q, unsigned d);
// All monic irreducibles of degree d over F_p by sieving; requires p^d <= 2^20.
std::vector<FqPoly> enumerate_irreducibles(std::uint32_t p, unsigned d);
constexpr std::uint64_t kEnumerateLimit = std::uint64_t{1} << 20;

// num/den with gcd(num, den) = 1 and den monic.
template <class Ring>
class RationalFunction {
 public:
  using P = Poly<Ring>;

  RationalFunction(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  explicit RationalFunction(P num) : RationalFunction(num, P::constant(num.ring(), num.ring().one())) {}

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  long degree() const { return std::max(num_.degree(), den_.degree()); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str(char var = 'T') const {
    if (den_.degree() == 0) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    const Ring& R = num_.ring();
    if (num_.is_zero()) {
      den_ = P::constant(R, R.one());
      return;
    }
    P g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).quotient;
      den_ = divmod(den_, g).quotient;
    }
    auto li = R.inv(den_.lead());
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }

  P num_, den_;
};

using FqRational = RationalFunction<FqRing>;

// [f]: the polynomial part of num/den.
template <class Ring>
Poly<Ring> polynomial_part(const RationalFunction<Ring>& f) {
  return divmod(f.num(), f.den()).quotient;
}

}  // namespace hq
