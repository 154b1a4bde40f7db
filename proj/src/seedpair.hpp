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

// The seed pair (P_k, Q_k) = ((T^2-1)^k, sum b_i T^{2i+1}) with
// P_k/Q_k = [v_1 T, ..., v_2k T], and the rational-function families g_i,
// h_i built from it. Everything is derived over Q first and reduced mod p;
// the reduction is legitimate exactly when k is admissible for r = p^t.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exactq.hpp"
#include "fpoly.hpp"

namespace hq {

// k = m p^j + (p^j - 1)/2 with 1 <= m <= (p-1)/2 and 0 <= j < t, sorted.
std::vector<unsigned> admissible_set(std::uint32_t p, unsigned t);
bool is_admissible(std::uint32_t p, unsigned t, unsigned k);

struct SeedPair {
  std::uint32_t p = 0;
  unsigned t = 0, k = 0;
  std::uint64_t r = 0;
  FieldPtr fp;  // F_p; its codes embed unchanged into any F_{p^s}

  // 1-based: v[i] for 1 <= i <= 2k, v[0] unused.
  std::vector<Elem> v;
  Elem theta = 0, omega = 0, two_k_theta = 0;
  std::vector<Elem> w;          // w_0 .. w_{2k-1}
  std::vector<Elem> binom2k;    // C(2k, i) mod p, 0 <= i <= 2k
  std::vector<Elem> g_scale;    // 2k theta v_i i/(2k-2i+1) for 1 <= i <= 2k-1 (index i)
  std::vector<Elem> b;          // b_0 .. b_{k-1}
  FqPoly P, Q;

  std::vector<Rational> v_rational, b_rational;
  Rational theta_rational, omega_rational;

  unsigned two_k() const { return 2 * k; }
};

SeedPair build_seedpair(std::uint32_t p, unsigned t, unsigned k);

// g_i(x), h_i(x) for x in any F_{p^s}; nullopt where a denominator vanishes.
std::optional<Elem> eval_g(const SeedPair& sp, const Field& F, unsigned i, Elem x);
std::optional<Elem> eval_h(const SeedPair& sp, const Field& F, unsigned i, Elem x);
std::optional<FieldElement> eval_g(const SeedPair& sp, unsigned i, const FieldElement& x);
std::optional<FieldElement> eval_h(const SeedPair& sp, unsigned i, const FieldElement& x);

// g_i and h_i as reduced rational functions in X over F_p.
FqRational g_symbolic(const SeedPair& sp, unsigned i);
FqRational h_symbolic(const SeedPair& sp, unsigned i);

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // first failing index, when any
};

// Checks the relations among v, w, g and h as identities over F_p (rational
// functions compared after clearing denominators).
std::vector<IdentityCheck> validate_identities(const SeedPair& sp);

}  // namespace hq
