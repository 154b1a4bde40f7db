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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpoly.hpp"
#include "seedpair.hpp"

namespace hq {

// The k = 1 orbit u_1 = x, u_{3n+i-1} = h_i(u_n) over F_p with
// h_0 = 2x/(2x-1), h_1 = 4x/(1-4x^2), h_2 = -2x/(2x+1).
struct OrbitNode {
  std::uint64_t n = 1;
  FqRational u;
};

struct OrbitLedger {
  std::uint32_t p = 0;
  FieldPtr field;
  std::vector<OrbitNode> frontier;
  // Monic irreducible factor (coefficients low to high) -> first index n where it appeared.
  std::map<std::vector<Elem>, std::uint64_t> seen;
  unsigned depth = 0;           // generations computed
  std::size_t nodes = 1;        // reduced functions computed so far
  std::size_t degenerate = 0;   // children that collapsed to a constant
  std::size_t degree_capped = 0;
  bool truncated = false;
};

struct OrbitLimits {
  std::size_t node_budget = 50000;
  long degree_cap = 4096;
};

OrbitLedger start_orbit(std::uint32_t p);
// One more generation. Stops early and sets truncated when the node budget runs out.
void step_orbit(OrbitLedger& ledger, const OrbitLimits& limits = {});

// h_i applied to u for the k = 1 family; nullopt when the result is constant.
std::optional<FqRational> apply_h(const FqRational& u, unsigned i);

struct CoverageRow {
  unsigned degree = 0;
  Integer total;
  std::size_t found = 0;
  double fraction() const;
};

struct CoverageReport {
  std::uint32_t p = 0;
  unsigned depth_requested = 0, depth_reached = 0, max_log_degree = 0;
  std::size_t nodes = 0, degenerate = 0, degree_capped = 0;
  bool truncated = false;
  std::vector<CoverageRow> coverage;
  std::vector<unsigned> non_power_of_two_degrees;
  std::size_t factors_seen = 0;
};

CoverageReport coverage_of(const OrbitLedger& ledger, unsigned max_log_degree, unsigned depth_requested);
CoverageReport run_conjecture(std::uint32_t p, unsigned depth, unsigned max_log_degree,
                              const OrbitLimits& limits = {});

// Numeric orbit of x -> h_i(x^r), 0 <= i <= 2k, with the seed pair's h family.
struct KOrbitTrace {
  std::vector<Elem> visited;                 // in breadth-first order
  std::map<unsigned, std::size_t> degrees;   // degree over F_p -> count of visited values
  std::size_t poles = 0;
  unsigned depth_reached = 0;
};

KOrbitTrace general_k_orbit(const SeedPair& sp, const FieldPtr& field, const std::vector<Elem>& seeds,
                            unsigned depth);

}  // namespace hq
