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

#include "conjecture.hpp"

#include <set>

#include "errors.hpp"
#include "exactq.hpp"

namespace hq {

namespace {

bool power_of_two(unsigned d) { return d && !(d & (d - 1)); }

void record(OrbitLedger& L, const FqPoly& f, std::uint64_t n) {
  if (f.degree() <= 0) return;
  for (const auto& [g, mult] : factor(f).factors) {
    (void)mult;
    L.seen.emplace(g.coeffs(), n);
  }
}

}  // namespace

std::optional<FqRational> apply_h(const FqRational& u, unsigned i) {
  const FqPoly& N = u.num();
  const FqPoly& D = u.den();
  const Field& F = *N.ring().field;
  const FqPoly N2 = N.scaled(F.from_int(2));
  FqPoly num(N.ring()), den(N.ring());
  switch (i) {
    case 0:
      num = N2;
      den = N2 - D;
      break;
    case 1:
      num = (N * D).scaled(F.from_int(4));
      den = D * D - (N * N).scaled(F.from_int(4));
      break;
    case 2:
      num = -N2;
      den = N2 + D;
      break;
    default:
      throw ParameterError("h index must be 0, 1 or 2");
  }
  if (den.is_zero()) return std::nullopt;
  FqRational v(num, den);
  if (v.is_constant()) return std::nullopt;
  return v;
}

OrbitLedger start_orbit(std::uint32_t p) {
  require_prime(p);
  if (p == 2) throw ParameterError("p must be odd");
  OrbitLedger L;
  L.p = p;
  L.field = Field::prime(p);
  const FqPoly x = fq_variable(L.field);
  L.frontier.push_back(OrbitNode{1, FqRational(x)});
  record(L, x, 1);
  return L;
}

void step_orbit(OrbitLedger& L, const OrbitLimits& limits) {
  if (L.truncated) return;
  std::vector<OrbitNode> next;
  next.reserve(L.frontier.size() * 3);
  for (const OrbitNode& node : L.frontier) {
    // The new factors of all three children come from 2N - D and 2N + D.
    const FqPoly N2 = node.u.num().scaled(L.field->from_int(2));
    bool factored = false;
    for (unsigned i = 0; i < 3; ++i) {
      if (L.nodes >= limits.node_budget) {
        L.truncated = true;
        break;
      }
      auto child = apply_h(node.u, i);
      ++L.nodes;
      if (!child) {
        ++L.degenerate;
        continue;
      }
      const std::uint64_t n = 3 * node.n + i - 1;
      if (!factored) {
        record(L, N2 - node.u.den(), n);
        record(L, N2 + node.u.den(), n);
        factored = true;
      }
      if (child->degree() > limits.degree_cap) {
        ++L.degree_capped;
        continue;
      }
      next.push_back(OrbitNode{n, std::move(*child)});
    }
    if (L.truncated) break;
  }
  L.frontier = std::move(next);
  if (!L.truncated) ++L.depth;
}

double CoverageRow::fraction() const {
  if (total == 0) return 0.0;
  return static_cast<double>(found) / total.get_d();
}

CoverageReport coverage_of(const OrbitLedger& L, unsigned max_log_degree, unsigned depth_requested) {
  CoverageReport rep;
  rep.p = L.p;
  rep.depth_requested = depth_requested;
  rep.depth_reached = L.depth;
  rep.max_log_degree = max_log_degree;
  rep.nodes = L.nodes;
  rep.degenerate = L.degenerate;
  rep.degree_capped = L.degree_capped;
  rep.truncated = L.truncated || L.degree_capped > 0;
  rep.factors_seen = L.seen.size();
  std::map<unsigned, std::size_t> by_degree;
  for (const auto& [coeffs, n] : L.seen) {
    (void)n;
    ++by_degree[static_cast<unsigned>(coeffs.size() - 1)];
  }
  for (unsigned j = 0; j <= max_log_degree; ++j) {
    CoverageRow row;
    row.degree = 1u << j;
    row.total = count_irreducibles(L.p, row.degree);
    row.found = by_degree.count(row.degree) ? by_degree[row.degree] : 0;
    rep.coverage.push_back(row);
  }
  for (const auto& [d, c] : by_degree) {
    (void)c;
    if (!power_of_two(d)) rep.non_power_of_two_degrees.push_back(d);
  }
  return rep;
}

CoverageReport run_conjecture(std::uint32_t p, unsigned depth, unsigned max_log_degree, const OrbitLimits& limits) {
  if (max_log_degree > 20) throw ParameterError("max log-degree too large");
  OrbitLedger L = start_orbit(p);
  while (L.depth < depth && !L.truncated && !L.frontier.empty()) step_orbit(L, limits);
  CoverageReport rep = coverage_of(L, max_log_degree, depth);
  if (!rep.non_power_of_two_degrees.empty())
    throw InternalError("orbit produced an irreducible factor whose degree is not a power of two");
  return rep;
}

KOrbitTrace general_k_orbit(const SeedPair& sp, const FieldPtr& field, const std::vector<Elem>& seeds,
                            unsigned depth) {
  if (field->p() != sp.p) throw FieldMismatch();
  const Field& F = *field;
  KOrbitTrace tr;
  std::set<Elem> seen;
  std::vector<Elem> level;
  for (Elem s : seeds) {
    if (s >= F.q()) throw ParameterError("seed out of range");
    if (seen.insert(s).second) {
      level.push_back(s);
      tr.visited.push_back(s);
    }
  }
  for (unsigned d = 0; d < depth && !level.empty(); ++d) {
    std::vector<Elem> next;
    for (Elem x : level) {
      const Elem xr = F.frobenius(x, sp.t);
      for (unsigned i = 0; i <= sp.two_k(); ++i) {
        auto y = eval_h(sp, F, i, xr);
        if (!y) {
          ++tr.poles;
          continue;
        }
        if (seen.insert(*y).second) {
          next.push_back(*y);
          tr.visited.push_back(*y);
        }
      }
    }
    level = std::move(next);
    tr.depth_reached = d + 1;
  }
  for (Elem v : tr.visited) ++tr.degrees[F.degree_over_prime(v)];
  return tr;
}

}  // namespace hq
