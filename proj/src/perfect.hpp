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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "contfrac.hpp"
#include "hyper.hpp"
#include "seedpair.hpp"

namespace hq {

// f(n) = (2k+1)n + l - 2k and the depth function i(n).
class IndexMachinery {
 public:
  IndexMachinery(unsigned k, std::size_t l);

  std::uint64_t f(std::uint64_t n) const;
  // For n > l: n = f(m) + i with 0 <= i <= 2k.
  struct Split {
    std::uint64_t m;
    unsigned i;
  };
  std::optional<Split> split(std::uint64_t n) const;
  unsigned i(std::uint64_t n) const;

  unsigned k() const { return k_; }
  std::size_t l() const { return l_; }

 private:
  unsigned k_;
  std::size_t l_;
};

// A_1 = T, A_{j+1} = [A_j^r / P_k]; returns A_1..A_count. BudgetExceeded past max_degree.
std::vector<FqPoly> polynomial_tower(const FieldPtr& field, const FqPoly& P, unsigned t, unsigned count,
                                     std::size_t max_degree = std::size_t{1} << 26);
// deg A_1..deg A_count without building the polynomials (saturating).
std::vector<std::uint64_t> tower_degrees(std::uint64_t r, unsigned k, unsigned count);

enum class CaseTag { III1, III2 };
std::string to_string(CaseTag c);

struct ConditionII {
  bool ok = false;
  std::vector<Elem> delta;        // delta_0 .. delta_l when ok; the defined prefix otherwise
  std::size_t failing_index = 0;  // first n with delta_n undefined or zero
  std::string reason;
};

// Both the bracket formula and the delta recursion from delta_0; they must agree.
ConditionII condition_II(const TypeSpec& spec);

Elem case_III1_target(const TypeSpec& spec);  // 4k^2 theta (eps1/eps2)^r
CaseTag classify_case(const TypeSpec& spec, Elem delta_l);

struct GammaSeed {
  Elem gamma1_r = 0;      // from the eps1, delta_l form
  Elem gamma1_r_alt = 0;  // from the delta_0, delta_1 form
  Elem gamma1 = 0;        // r-th root of gamma1_r
};
GammaSeed gamma_seed(const TypeSpec& spec, const std::vector<Elem>& delta);

struct NotPerfect {
  std::size_t index = 0;
  std::string cause;  // condition-II, zero-delta, zero-gamma, pole-of-g, pole-of-h
};

struct PerfectSequences {
  TypeSpec spec;
  SeedPair sp;
  CaseTag tag = CaseTag::III2;
  std::size_t n_max = 0;
  // Indexed by n; delta from 0, gamma and lambda from 1 (slot 0 unused).
  std::vector<Elem> delta, gamma, lambda;
  Elem C0 = 0;  // 0 in case III1
  GammaSeed seed;

  IndexMachinery index() const { return IndexMachinery(spec.k, spec.l()); }
};

struct GenerateResult {
  ConditionII cond;
  std::optional<CaseTag> tag;
  std::optional<PerfectSequences> seqs;  // up to the failure when failure is set
  std::optional<NotPerfect> failure;
};

GenerateResult generate_sequences(const TypeSpec& spec, std::size_t n_max);

// a_n = lambda_n A_{i(n)}; stops with BudgetExceeded when the total degree passes degree_budget.
FqRecord predict_expansion(const PerfectSequences& seqs, std::size_t n_max,
                           std::size_t degree_budget = std::size_t{1} << 24);
// Throws NotPerfectError when the sequences cannot be generated.
FqRecord predict_expansion(const TypeSpec& spec, std::size_t n_max);

enum class Verdict { Match, Mismatch, Inconclusive, Contradiction };
std::string to_string(Verdict v);
int exit_code(Verdict v);

struct VerifyOptions {
  Engine engine = Engine::Auto;
  std::size_t degree_budget = std::size_t{1} << 24;
  // Auto picks the series engine when the expected precision need stays below this.
  long series_limit = 1024;
};

struct MatchReport {
  Verdict verdict = Verdict::Inconclusive;
  std::size_t n_max = 0;
  std::size_t compared = 0;  // indices checked on both sides
  std::optional<std::size_t> first_mismatch;
  ConditionII cond;
  std::optional<CaseTag> tag;
  std::optional<NotPerfect> not_perfect;
  Engine engine = Engine::Auto;
  FqRecord direct, predicted;
  std::string note;
};

MatchReport differential_verify(const TypeSpec& spec, std::size_t n_max, const VerifyOptions& opt = {});

// Engine used by Auto for a run of n quotients.
Engine choose_engine(const TypeSpec& spec, std::size_t n_max, long series_limit = 1024);

struct ConsistencyCheck {
  std::string name;
  std::size_t checked = 0;
  bool passed = true;
  std::optional<std::size_t> first_failure;
};

std::vector<ConsistencyCheck> consistency_suite(const PerfectSequences& seqs);
bool all_passed(const std::vector<ConsistencyCheck>& checks);

// Replaces eps1 so that the spec lands in case III1. Requires condition II.
TypeSpec force_case_III1(const TypeSpec& spec);
// Replaces lambda_n so that delta_n = 0 (1 <= n <= l). Requires delta_1..delta_{n-1} defined.
TypeSpec violate_condition_II(const TypeSpec& spec, std::size_t n);

// F_27 preset, r = 3, k = 1, l = 1, lambda_1 = 1, eps1 = -u^6, eps2 = u^3.
TypeSpec corollary_c_spec();

// Is a a nonzero constant times A?
bool is_scalar_multiple(const FqPoly& a, const FqPoly& A);

}  // namespace hq
