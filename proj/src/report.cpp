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

#include "report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "conjecture.hpp"
#include "errors.hpp"
#include "hyper.hpp"
#include "perfect.hpp"
#include "seedpair.hpp"

namespace hq {

using json = nlohmann::json;

namespace {

constexpr const char* kSchema = "hyperquad/1";
constexpr std::size_t kPrefix = 20;
constexpr long kPrintDegree = 256;

class UsageError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// --- config access -------------------------------------------------------

template <class T>
T get_or(json& cfg, const char* key, T def) {
  if (!cfg.contains(key) || cfg[key].is_null()) {
    cfg[key] = def;
    return def;
  }
  try {
    return cfg[key].get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("flag --") + key + " has the wrong type");
  }
}

template <class T>
T require(json& cfg, const char* key) {
  if (!cfg.contains(key) || cfg[key].is_null()) throw UsageError(std::string("missing required flag --") + key);
  try {
    return cfg[key].get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("flag --") + key + " has the wrong type");
  }
}

// Splits at commas outside parentheses, so "(1,0,2),u" has two items.
std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

FieldPtr field_from(json& cfg) {
  const std::string preset = get_or<std::string>(cfg, "field", "");
  FieldPtr F;
  if (!preset.empty()) {
    F = Field::preset(preset);
    if (cfg.contains("p") && !cfg["p"].is_null() && cfg["p"].get<std::uint32_t>() != F->p())
      throw UsageError("--p disagrees with --field");
    if (cfg.contains("s") && !cfg["s"].is_null() && cfg["s"].get<unsigned>() != F->s())
      throw UsageError("--s disagrees with --field");
  } else {
    const auto p = require<std::uint32_t>(cfg, "p");
    const auto s = get_or<unsigned>(cfg, "s", 1);
    std::optional<std::vector<std::uint32_t>> mod;
    if (cfg.contains("modulus") && !cfg["modulus"].is_null()) {
      if (cfg["modulus"].is_string()) {
        std::vector<std::uint32_t> m;
        for (const auto& part : split_list(cfg["modulus"].get<std::string>())) {
          try {
            m.push_back(static_cast<std::uint32_t>(std::stoul(part)));
          } catch (const std::exception&) {
            throw UsageError("--modulus expects comma-separated digits, low degree first");
          }
        }
        mod = m;
      } else {
        mod = cfg["modulus"].get<std::vector<std::uint32_t>>();
      }
    }
    F = Field::make(p, s, mod);
  }
  cfg["p"] = F->p();
  cfg["s"] = F->s();
  cfg["modulus"] = F->modulus();
  return F;
}

TypeSpec spec_from(json& cfg) {
  TypeSpec spec;
  spec.field = field_from(cfg);
  spec.t = get_or<unsigned>(cfg, "t", 1);
  spec.k = require<unsigned>(cfg, "k");
  const auto lam = require<std::string>(cfg, "lambdas");
  for (const auto& part : split_list(lam)) spec.lambdas.push_back(spec.field->parse(part));
  if (cfg.contains("l") && !cfg["l"].is_null() && cfg["l"].get<std::size_t>() != spec.l())
    throw UsageError("--l is " + std::to_string(cfg["l"].get<std::size_t>()) + " but " +
                     std::to_string(spec.l()) + " lambdas were given");
  cfg["l"] = spec.l();
  spec.eps1 = spec.field->parse(require<std::string>(cfg, "eps1"));
  spec.eps2 = spec.field->parse(require<std::string>(cfg, "eps2"));
  validate(spec);
  return spec;
}

// --- formatting ----------------------------------------------------------

std::string poly_str(const FqPoly& a) {
  if (a.degree() > kPrintDegree) return "<degree " + std::to_string(a.degree()) + ">";
  return a.str('T', TermOrder::Descending);
}

json elems(const Field& F, const std::vector<Elem>& v, std::size_t from, std::size_t count) {
  json out = json::array();
  for (std::size_t i = from; i < v.size() && out.size() < count; ++i) out.push_back(F.format(v[i]));
  return out;
}

std::string join(const json& arr) {
  std::string s;
  for (const auto& x : arr) {
    if (!s.empty()) s += ", ";
    s += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return s;
}

json record_json(const FqRecord& rec, std::size_t limit) {
  json q = json::array();
  for (std::size_t i = 0; i < rec.quotients.size() && i < limit; ++i) q.push_back(poly_str(rec.quotients[i]));
  json degs = json::array();
  for (const auto& a : rec.quotients) degs.push_back(a.degree());
  const DeterminantReport det = verify_record(rec);
  return json{{"count", rec.quotients.size()},
              {"status", to_string(rec.status)},
              {"provenance", to_string(rec.provenance)},
              {"precision_floor", rec.precision_floor == LaurentSeries::kExact ? json(nullptr) : json(rec.precision_floor)},
              {"quotients", q},
              {"degrees", degs},
              {"determinant", {{"ok", det.ok}, {"checked", det.checked}, {"modular", det.modular}}}};
}

std::string spec_text(const TypeSpec& s) {
  const Field& F = *s.field;
  std::vector<std::string> lam;
  for (Elem x : s.lambdas) lam.push_back(F.format(x));
  std::string l;
  for (const auto& x : lam) l += (l.empty() ? "" : ", ") + x;
  return F.describe() + "\nr = " + std::to_string(s.r()) + ", k = " + std::to_string(s.k) + ", l = " +
         std::to_string(s.l()) + "\nlambdas = [" + l + "], eps1 = " + F.format(s.eps1) + ", eps2 = " + F.format(s.eps2) +
         "\n";
}

void quotient_lines(std::ostringstream& os, const FqRecord& rec, std::size_t limit) {
  for (std::size_t i = 0; i < rec.quotients.size() && i < limit; ++i)
    os << "  a_" << (i + 1) << " = " << poly_str(rec.quotients[i]) << "\n";
  if (rec.quotients.size() > limit) os << "  ... (" << rec.quotients.size() - limit << " more)\n";
}

json sequences_json(const PerfectSequences& s) {
  const Field& F = *s.spec.field;
  json j{{"delta", elems(F, s.delta, 0, kPrefix)},
         {"lambda", elems(F, s.lambda, 1, kPrefix)},
         {"gamma", elems(F, s.gamma, 1, kPrefix)}};
  return j;
}

json tower_json(const TypeSpec& spec, std::size_t n) {
  const IndexMachinery idx(spec.k, spec.l());
  unsigned imax = 1;
  for (std::size_t m = 1; m <= n; ++m) imax = std::max(imax, idx.i(m));
  const auto degs = tower_degrees(spec.r(), spec.k, imax);
  json out = json::array();
  const SeedPair sp = build_seedpair(spec.field->p(), spec.t, spec.k);
  unsigned printable = 0;
  while (printable < imax && degs[printable] <= static_cast<std::uint64_t>(kPrintDegree)) ++printable;
  const auto A = polynomial_tower(spec.field, sp.P, spec.t, printable);
  for (unsigned i = 0; i < imax; ++i) {
    out.push_back({{"i", i + 1},
                   {"degree", degs[i]},
                   {"poly", i < printable ? json(A[i].str('T', TermOrder::Descending)) : json(nullptr)}});
  }
  return out;
}

json condition_json(const ConditionII& c, const Field& F) {
  return json{{"holds", c.ok},
              {"failing_index", c.ok ? json(nullptr) : json(c.failing_index)},
              {"delta", elems(F, c.delta, 0, c.delta.size())}};
}

// --- commands ------------------------------------------------------------

json cmd_seedpair(json& cfg, std::ostringstream& os) {
  const auto p = require<std::uint32_t>(cfg, "p");
  const auto t = get_or<unsigned>(cfg, "t", 1);
  const auto k = require<unsigned>(cfg, "k");
  const SeedPair sp = build_seedpair(p, t, k);
  const Field& F = *sp.fp;
  json r;
  r["r"] = sp.r;
  r["admissible_set"] = admissible_set(p, t);
  r["v"] = elems(F, sp.v, 1, sp.v.size());
  json vq = json::array();
  for (std::size_t i = 1; i < sp.v_rational.size(); ++i) vq.push_back(sp.v_rational[i].str());
  r["v_rational"] = vq;
  r["theta"] = F.format(sp.theta);
  r["omega"] = F.format(sp.omega);
  r["w"] = elems(F, sp.w, 0, sp.w.size());
  r["b"] = elems(F, sp.b, 0, sp.b.size());
  r["P"] = sp.P.str('T', TermOrder::Descending);
  r["Q"] = sp.Q.str('T', TermOrder::Descending);
  json ids = json::array();
  bool all = true;
  for (const auto& c : validate_identities(sp)) {
    ids.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    all = all && c.passed;
  }
  r["identities"] = ids;
  r["identities_pass"] = all;

  os << "seed pair for p = " << p << ", r = " << sp.r << ", k = " << k << "\n";
  os << "admissible k: " << join(r["admissible_set"]) << "\n";
  os << "v     = [" << join(r["v"]) << "]  (over Q: " << join(vq) << ")\n";
  os << "theta = " << r["theta"].get<std::string>() << ", omega = " << r["omega"].get<std::string>() << "\n";
  os << "w     = [" << join(r["w"]) << "]\n";
  os << "b     = [" << join(r["b"]) << "]\n";
  os << "P_k   = " << r["P"].get<std::string>() << "\n";
  os << "Q_k   = " << r["Q"].get<std::string>() << "\n";
  for (const auto& c : ids)
    os << (c["passed"].get<bool>() ? "  pass " : "  FAIL ") << c["name"].get<std::string>()
       << (c["detail"].get<std::string>().empty() ? "" : "  " + c["detail"].get<std::string>()) << "\n";
  return r;
}

json cmd_expand(json& cfg, std::ostringstream& os) {
  const TypeSpec spec = spec_from(cfg);
  const auto n = get_or<std::size_t>(cfg, "n", 20);
  if (n == 0) throw UsageError("--n must be positive");
  ExpandOptions eo;
  eo.engine = parse_engine(get_or<std::string>(cfg, "engine", "series"));
  if (eo.engine == Engine::Auto) eo.engine = choose_engine(spec, n);
  const AlgebraicEquation eq = build_equation(spec);
  const FqRecord rec = expand_alpha(spec, n, eo);
  json r;
  r["equation"] = eq.str();
  r["equation_normalized"] = normalize(eq).str();
  r["engine"] = to_string(eo.engine);
  r["expansion"] = record_json(rec, n);
  os << spec_text(spec);
  os << "equation: " << eq.str() << "\n";
  os << "engine: " << to_string(eo.engine) << ", status: " << to_string(rec.status) << ", quotients: "
     << rec.quotients.size() << "\n";
  quotient_lines(os, rec, n);
  return r;
}

json cmd_predict(json& cfg, std::ostringstream& os) {
  const TypeSpec spec = spec_from(cfg);
  const auto n = get_or<std::size_t>(cfg, "n", 20);
  if (n == 0) throw UsageError("--n must be positive");
  const GenerateResult gen = generate_sequences(spec, n);
  const Field& F = *spec.field;
  json r;
  r["condition_II"] = condition_json(gen.cond, F);
  r["case"] = gen.tag ? json(to_string(*gen.tag)) : json(nullptr);
  r["not_perfect"] = gen.failure ? json{{"index", gen.failure->index}, {"cause", gen.failure->cause}} : json(nullptr);
  os << spec_text(spec);
  if (!gen.cond.ok) os << "condition II fails: " << gen.cond.reason << "\n";
  if (gen.tag) os << "case " << to_string(*gen.tag) << "\n";
  if (gen.seqs) {
    const PerfectSequences& s = *gen.seqs;
    r["C0"] = s.tag == CaseTag::III2 ? json(F.format(s.C0)) : json(nullptr);
    r["gamma1_r"] = F.format(s.seed.gamma1_r);
    r["sequences"] = sequences_json(s);
    r["A"] = tower_json(spec, std::min(n, s.n_max));
    if (s.tag == CaseTag::III2) os << "C0 = " << F.format(s.C0) << ", gamma_1 = " << F.format(s.seed.gamma1) << "\n";
    os << "delta:  " << join(r["sequences"]["delta"]) << "\n";
    os << "lambda: " << join(r["sequences"]["lambda"]) << "\n";
    os << "gamma:  " << join(r["sequences"]["gamma"]) << "\n";
    for (const auto& a : r["A"])
      os << "A_" << a["i"].get<unsigned>() << " = "
         << (a["poly"].is_null() ? "<degree " + std::to_string(a["degree"].get<std::uint64_t>()) + ">"
                                 : a["poly"].get<std::string>())
         << "\n";
  }
  if (gen.failure) {
    os << "not perfect: " << gen.failure->cause << " at index " << gen.failure->index << "\n";
    return r;
  }
  const FqRecord rec = predict_expansion(*gen.seqs, n);
  r["expansion"] = record_json(rec, n);
  os << "predicted quotients (" << to_string(rec.status) << "):\n";
  quotient_lines(os, rec, n);
  return r;
}

json verify_json(const MatchReport& rep, const TypeSpec& spec, int& exit_status) {
  const Field& F = *spec.field;
  json r;
  r["verdict"] = to_string(rep.verdict);
  r["exit_code"] = exit_code(rep.verdict);
  r["n"] = rep.n_max;
  r["compared"] = rep.compared;
  r["first_mismatch"] = rep.first_mismatch ? json(*rep.first_mismatch) : json(nullptr);
  r["condition_II"] = condition_json(rep.cond, F);
  r["case"] = rep.tag ? json(to_string(*rep.tag)) : json(nullptr);
  r["not_perfect"] =
      rep.not_perfect ? json{{"index", rep.not_perfect->index}, {"cause", rep.not_perfect->cause}} : json(nullptr);
  r["engine"] = to_string(rep.engine);
  r["note"] = rep.note;
  r["direct"] = record_json(rep.direct, kPrefix);
  if (!rep.predicted.quotients.empty()) r["predicted"] = record_json(rep.predicted, kPrefix);
  exit_status = exit_code(rep.verdict);
  return r;
}

void verify_text(std::ostringstream& os, const MatchReport& rep) {
  os << "condition II: " << (rep.cond.ok ? "holds" : "fails (" + rep.cond.reason + ")") << "\n";
  if (rep.tag) os << "case " << to_string(*rep.tag) << "\n";
  if (rep.not_perfect)
    os << "not perfect: " << rep.not_perfect->cause << " at index " << rep.not_perfect->index << "\n";
  os << "engine: " << to_string(rep.engine) << "\n";
  os << "verdict: " << to_string(rep.verdict) << " (" << rep.compared << " of " << rep.n_max << " quotients compared";
  if (rep.first_mismatch) os << ", first mismatch at " << *rep.first_mismatch;
  os << ")\n";
  if (!rep.note.empty()) os << "note: " << rep.note << "\n";
}

VerifyOptions verify_options(json& cfg) {
  VerifyOptions o;
  o.engine = parse_engine(get_or<std::string>(cfg, "engine", "auto"));
  o.degree_budget = get_or<std::size_t>(cfg, "budget", o.degree_budget);
  return o;
}

json cmd_verify(json& cfg, std::ostringstream& os, int& exit_status) {
  const TypeSpec spec = spec_from(cfg);
  const auto n = get_or<std::size_t>(cfg, "n", 200);
  if (n == 0) throw UsageError("--n must be positive");
  const MatchReport rep = differential_verify(spec, n, verify_options(cfg));
  os << spec_text(spec);
  verify_text(os, rep);
  return verify_json(rep, spec, exit_status);
}

json cmd_corollary_c(json& cfg, std::ostringstream& os, int& exit_status) {
  const auto n = get_or<std::size_t>(cfg, "n", 300);
  if (n == 0) throw UsageError("--n must be positive");
  const TypeSpec spec = corollary_c_spec();
  const Field& F = *spec.field;
  const AlgebraicEquation eq = normalize(build_equation(spec));
  const MatchReport rep = differential_verify(spec, n, verify_options(cfg));
  json r = verify_json(rep, spec, exit_status);
  r["equation"] = eq.str();
  const GenerateResult gen = generate_sequences(spec, n);
  if (gen.seqs) {
    r["C0"] = F.format(gen.seqs->C0);
    r["gamma1"] = F.format(gen.seqs->seed.gamma1);
    r["sequences"] = sequences_json(*gen.seqs);
  }
  os << spec_text(spec);
  os << "equation: " << eq.str() << "\n";
  if (gen.seqs) {
    os << "gamma_1 = " << r["gamma1"].get<std::string>() << ", C0 = " << r["C0"].get<std::string>() << "\n";
    os << "delta:  " << join(r["sequences"]["delta"]) << "\n";
    os << "lambda: " << join(r["sequences"]["lambda"]) << "\n";
    os << "gamma:  " << join(r["sequences"]["gamma"]) << "\n";
  }
  os << "quotients:\n";
  quotient_lines(os, rep.direct, std::min<std::size_t>(n, 10));
  verify_text(os, rep);
  return r;
}

json cmd_conjecture(json& cfg, std::ostringstream& os) {
  const auto p = require<std::uint32_t>(cfg, "p");
  const auto depth = get_or<unsigned>(cfg, "depth", 6);
  const auto J = get_or<unsigned>(cfg, "max_log_degree", 2);
  OrbitLimits lim;
  lim.node_budget = get_or<std::size_t>(cfg, "budget", lim.node_budget);
  lim.degree_cap = get_or<long>(cfg, "degree_cap", lim.degree_cap);
  const CoverageReport rep = run_conjecture(p, depth, J, lim);
  json cov = json::array();
  os << "orbit over F_" << p << ": depth " << rep.depth_reached << " of " << depth << ", " << rep.nodes << " nodes"
     << (rep.truncated ? " (truncated)" : "") << "\n";
  os << "degree  found/total  fraction\n";
  for (const auto& row : rep.coverage) {
    cov.push_back({{"degree", row.degree},
                   {"total", row.total.get_str()},
                   {"found", row.found},
                   {"fraction", row.fraction()}});
    std::ostringstream frac;
    frac.precision(4);
    frac << row.fraction();
    os << "  " << row.degree << "     " << row.found << "/" << row.total.get_str() << "     " << frac.str() << "\n";
  }
  os << "non-power-of-two degrees: " << (rep.non_power_of_two_degrees.empty() ? "none" : "present") << "\n";
  return json{{"p", p},
              {"depth", rep.depth_reached},
              {"depth_requested", depth},
              {"nodes", rep.nodes},
              {"coverage", cov},
              {"non_power_of_two_degrees", rep.non_power_of_two_degrees},
              {"factors_seen", rep.factors_seen},
              {"degree_capped", rep.degree_capped},
              {"truncated", rep.truncated}};
}

}  // namespace

bool is_usage_error(const std::exception& e) {
  return dynamic_cast<const ParameterError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
         dynamic_cast<const FieldError*>(&e) || dynamic_cast<const AdmissibilityError*>(&e) ||
         dynamic_cast<const json::exception*>(&e);
}

RunOutput run_command(const std::string& config_json) {
  json cfg;
  try {
    cfg = json::parse(config_json);
  } catch (const json::parse_error& e) {
    throw ParseError("config is not valid JSON", e.byte);
  }
  if (!cfg.is_object()) throw UsageError("config must be a JSON object");
  const auto cmd = require<std::string>(cfg, "command");
  std::ostringstream os;
  RunOutput out;
  json result;
  if (cmd == "seedpair") {
    result = cmd_seedpair(cfg, os);
  } else if (cmd == "expand") {
    result = cmd_expand(cfg, os);
  } else if (cmd == "predict") {
    result = cmd_predict(cfg, os);
  } else if (cmd == "verify") {
    result = cmd_verify(cfg, os, out.exit_code);
  } else if (cmd == "corollary-c") {
    result = cmd_corollary_c(cfg, os, out.exit_code);
  } else if (cmd == "conjecture") {
    result = cmd_conjecture(cfg, os);
  } else {
    throw UsageError("unknown command '" + cmd + "'");
  }
  const json doc{{"schema", kSchema}, {"config", cfg}, {"result", result}};
  out.text = os.str();
  out.json = doc.dump(2) + "\n";
  return out;
}

}  // namespace hq
