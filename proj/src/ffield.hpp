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

// Arithmetic in F_p and F_{p^s} in the polynomial basis 1, u, ..., u^{s-1}.
//
// Elements are packed into an integer code sum_i c_i p^i. Hot loops work on
// raw codes through a Field reference; FieldElement is the checked value type
// used at API boundaries.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hq {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  // Largest supported order; multiplication tables exist up to kTableLimit.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;
  static constexpr std::uint64_t kAddTableLimit = 1024;

  // modulus: monic, low-to-high coefficients in [0, p), length s + 1.
  // When omitted, the lexicographically least monic irreducible is used.
  static FieldPtr make(std::uint32_t p, unsigned s,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
  static FieldPtr prime(std::uint32_t p) { return make(p, 1); }
  // F_27 as u^3 + u^2 - u + 1 = 0.
  static FieldPtr paper_f27();
  static FieldPtr preset(std::string_view name);

  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned s);

  std::uint32_t p() const { return p_; }
  unsigned s() const { return s_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  const std::string& preset_name() const { return preset_; }
  bool same_as(const Field& o) const {
    return this == &o || (p_ == o.p_ && s_ == o.s_ && modulus_ == o.modulus_);
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const;
  Elem from_digits(const std::vector<std::uint32_t>& digits) const;
  std::vector<std::uint32_t> digits(Elem a) const;
  // Residue class u of the modulus variable (s >= 2).
  Elem u() const;

  Elem add(Elem a, Elem b) const {
    if (s_ == 1) {
      Elem c = a + b;
      return c >= p_ ? c - p_ : c;
    }
    if (!add_.empty()) return add_[static_cast<std::size_t>(a) * q_ + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const {
    if (s_ == 1) return a == 0 ? 0 : p_ - a;
    if (!neg_.empty()) return neg_[a];
    return neg_slow(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (s_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;
  // a^(p^t).
  Elem frobenius(Elem a, unsigned t) const;
  // The unique b with b^(p^t) = a.
  Elem frobenius_inverse(Elem a, unsigned t) const;
  bool in_prime_field(Elem a) const { return a < p_; }
  unsigned degree_over_prime(Elem a) const;

  // True when u is primitive and elements display as +-u^k.
  bool has_named_generator() const { return named_; }
  // Discrete log to the table generator (u when named); requires tables.
  std::optional<std::uint32_t> log(Elem a) const;

  std::string format(Elem a) const;
  Elem parse(std::string_view text) const;
  std::string describe() const;

 private:
  Field(std::uint32_t p, unsigned s, std::vector<std::uint32_t> modulus);
  void build_tables();
  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;
  Elem mul_slow(Elem a, Elem b) const;
  Elem pow_slow(Elem a, std::uint64_t e) const;
  bool is_primitive_slow(Elem g) const;

  std::uint32_t p_;
  unsigned s_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::string preset_;
  bool named_ = false;
  std::vector<Elem> log_;
  std::vector<Elem> exp_;  // doubled so exp_[log a + log b] needs no reduction
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
};

// An element together with its field; mixing fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);
  static FieldElement parse(const FieldPtr& field, std::string_view text);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  std::string str() const { return field_->format(value_); }

  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }
  FieldElement frobenius(unsigned t) const { return {field_, field_->frobenius(value_, t)}; }
  unsigned degree_over_prime() const { return field_->degree_over_prime(value_); }

 private:
  FieldPtr field_;
  Elem value_;
};

enum class ArithOp { Add, Sub, Mul, Div };
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

}  // namespace hq
