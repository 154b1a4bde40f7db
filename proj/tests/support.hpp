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
// Small helpers shared by the unit tests: seeded generators and a few
// naive reference computations used as oracles.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fpoly.hpp"
#include "hyper.hpp"

namespace hqtest {

using Rng = std::mt19937_64;

inline hq::Elem any_elem(Rng& g, const hq::Field& F) {
  return static_cast<hq::Elem>(g() % F.q());
}
inline hq::Elem nonzero_elem(Rng& g, const hq::Field& F) {
  return static_cast<hq::Elem>(1 + g() % (F.q() - 1));
}

inline hq::FqPoly any_poly(Rng& g, const hq::FieldPtr& F, unsigned max_degree) {
  std::vector<hq::Elem> c(1 + g() % (max_degree + 1));
  for (auto& x : c) x = any_elem(g, *F);
  return hq::fq_poly(F, c);
}
inline hq::FqPoly nonzero_poly(Rng& g, const hq::FieldPtr& F, unsigned max_degree) {
  for (;;) {
    auto p = any_poly(g, F, max_degree);
    if (!p.is_zero()) return p;
  }
}

// Random spec with nonzero lambdas and epsilons; condition II is not enforced.
inline hq::TypeSpec random_spec(Rng& g, const hq::FieldPtr& F, unsigned t, unsigned k, unsigned l) {
  hq::TypeSpec s;
  s.field = F;
  s.t = t;
  s.k = k;
  for (unsigned i = 0; i < l; ++i) s.lambdas.push_back(nonzero_elem(g, *F));
  s.eps1 = nonzero_elem(g, *F);
  s.eps2 = nonzero_elem(g, *F);
  return s;
}

// Schoolbook multiplication in F_p[u]/(m), no tables.
inline std::vector<std::uint32_t> naive_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                            const std::vector<std::uint32_t>& m, std::uint32_t p) {
  const std::size_t s = m.size() - 1;
  std::vector<std::uint64_t> r(2 * s, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t i = r.size(); i-- > s;) {
    const std::uint64_t c = r[i];
    if (!c) continue;
    for (std::size_t j = 0; j <= s; ++j) r[i - s + j] = (r[i - s + j] + (p - c) * m[j]) % p;
  }
  std::vector<std::uint32_t> out(s);
  for (std::size_t i = 0; i < s; ++i) out[i] = static_cast<std::uint32_t>(r[i]);
  return out;
}

}  // namespace hqtest
