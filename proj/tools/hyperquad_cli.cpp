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

// Command-line front end. Flags are collected into a JSON config and handed to the
// library through the C interface; the library echoes the resolved config in its JSON.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "hyperquad/hyperquad.h"

namespace {

constexpr int kUsage = 64;
constexpr int kSoftware = 70;  // tool failure, kept apart from verdict codes

using json = nlohmann::json;

struct Flags {
  std::optional<std::string> field, modulus, lambdas, eps1, eps2, engine;
  std::optional<unsigned> p, s, t, k, l, depth, max_log_degree;
  std::optional<std::size_t> n, budget;
  std::optional<long> degree_cap;
  std::string format = "text";
  std::string out;
  std::string replay_file;
};

template <class T>
void put(json& cfg, const char* key, const std::optional<T>& v) {
  if (v) cfg[key] = *v;
}

void add_spec_flags(CLI::App* c, Flags& f) {
  c->add_option("--field", f.field, "named field preset (f27-paper)");
  c->add_option("--p", f.p, "characteristic");
  c->add_option("--s", f.s, "degree of F_q over F_p");
  c->add_option("--modulus", f.modulus, "monic modulus digits, low degree first, comma separated");
  c->add_option("--t", f.t, "r = p^t");
  c->add_option("--k", f.k, "index k of the seed pair");
  c->add_option("--l", f.l, "number of prescribed quotients");
  c->add_option("--lambdas", f.lambdas, "lambda_1,...,lambda_l in field syntax");
  c->add_option("--eps1", f.eps1, "epsilon_1");
  c->add_option("--eps2", f.eps2, "epsilon_2");
  c->add_option("--n", f.n, "number of partial quotients");
}

void add_output_flags(CLI::App* c, Flags& f) {
  c->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  c->add_option("--out", f.out, "also write the JSON report to this file");
}

json config_for(const std::string& cmd, const Flags& f) {
  json cfg{{"command", cmd}};
  put(cfg, "field", f.field);
  put(cfg, "p", f.p);
  put(cfg, "s", f.s);
  put(cfg, "modulus", f.modulus);
  put(cfg, "t", f.t);
  put(cfg, "k", f.k);
  put(cfg, "l", f.l);
  put(cfg, "lambdas", f.lambdas);
  put(cfg, "eps1", f.eps1);
  put(cfg, "eps2", f.eps2);
  put(cfg, "n", f.n);
  put(cfg, "engine", f.engine);
  put(cfg, "budget", f.budget);
  put(cfg, "depth", f.depth);
  put(cfg, "max_log_degree", f.max_log_degree);
  put(cfg, "degree_cap", f.degree_cap);
  return cfg;
}

int exit_for(hq_status st) {
  switch (st) {
    case HQ_ERR_NULL_ARGUMENT:
    case HQ_ERR_PARAMETER:
    case HQ_ERR_FIELD:
    case HQ_ERR_PARSE:
    case HQ_ERR_ADMISSIBILITY:
    case HQ_ERR_OUT_OF_RANGE:
      return kUsage;
    default:
      return kSoftware;
  }
}

struct Outcome {
  std::string text, json;
  int exit_code = 0;
};

std::optional<Outcome> run(const json& cfg, int& status) {
  char* text = nullptr;
  char* doc = nullptr;
  int code = 0;
  const std::string s = cfg.dump();
  const hq_status st = hq_run(s.c_str(), &text, &doc, &code);
  if (st != HQ_OK) {
    std::cerr << "hyperquad: " << hq_status_name(st) << ": " << hq_last_error() << "\n";
    status = exit_for(st);
    return std::nullopt;
  }
  Outcome o{text, doc, code};
  hq_string_free(text);
  hq_string_free(doc);
  status = code;
  return o;
}

int emit(const Outcome& o, const Flags& f) {
  std::cout << (f.format == "json" ? o.json : o.text);
  if (!f.out.empty()) {
    std::ofstream os(f.out, std::ios::binary);
    if (!os) {
      std::cerr << "hyperquad: cannot write " << f.out << "\n";
      return kSoftware;
    }
    os << o.json;
  }
  return o.exit_code;
}

int replay(const Flags& f) {
  std::ifstream in(f.replay_file, std::ios::binary);
  if (!in) {
    std::cerr << "hyperquad: cannot read " << f.replay_file << "\n";
    return kUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string original = buf.str();
  json doc;
  try {
    doc = json::parse(original);
  } catch (const json::exception& e) {
    std::cerr << "hyperquad: " << f.replay_file << " is not JSON: " << e.what() << "\n";
    return kUsage;
  }
  if (!doc.contains("config") || doc.value("schema", "") != "hyperquad/1") {
    std::cerr << "hyperquad: " << f.replay_file << " is not a hyperquad/1 report\n";
    return kUsage;
  }
  int status = 0;
  auto o = run(doc["config"], status);
  if (!o) return status;
  const bool same = o->json == original;
  if (f.format == "json")
    std::cout << o->json;
  else
    std::cout << (same ? "identical" : "differs") << ": " << f.replay_file << "\n";
  return same ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperquad: hyperquadratic continued fractions over finite fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hq_version()));
  Flags f;

  auto* seed = app.add_subcommand("seedpair", "the seed pair (P_k, Q_k) and its identities");
  seed->add_option("--p", f.p, "characteristic")->required();
  seed->add_option("--t", f.t, "r = p^t");
  seed->add_option("--k", f.k, "index k")->required();
  add_output_flags(seed, f);

  auto* expand = app.add_subcommand("expand", "expand alpha directly from its functional equation");
  add_spec_flags(expand, f);
  expand->add_option("--engine", f.engine, "series, quotient or auto")
      ->check(CLI::IsMember({"series", "quotient", "auto"}));
  add_output_flags(expand, f);

  auto* predict = app.add_subcommand("predict", "sequences and the predicted perfect expansion");
  add_spec_flags(predict, f);
  add_output_flags(predict, f);

  auto* verify = app.add_subcommand("verify", "compare the predicted and direct expansions");
  add_spec_flags(verify, f);
  verify->add_option("--engine", f.engine, "series, quotient or auto")
      ->check(CLI::IsMember({"series", "quotient", "auto"}));
  verify->add_option("--budget", f.budget, "degree budget of the engines");
  add_output_flags(verify, f);

  auto* corc = app.add_subcommand("corollary-c", "the F_27 example end to end");
  corc->add_option("--n", f.n, "number of partial quotients");
  corc->add_option("--engine", f.engine, "series, quotient or auto")
      ->check(CLI::IsMember({"series", "quotient", "auto"}));
  add_output_flags(corc, f);

  auto* conj = app.add_subcommand("conjecture", "irreducible factors along the k = 1 orbit");
  conj->add_option("--p", f.p, "odd prime")->required();
  conj->add_option("--depth", f.depth, "generations");
  conj->add_option("--max-log-degree", f.max_log_degree, "report degrees 1, 2, ..., 2^J");
  conj->add_option("--budget", f.budget, "node budget");
  conj->add_option("--degree-cap", f.degree_cap, "largest degree kept in the frontier");
  add_output_flags(conj, f);

  auto* rep = app.add_subcommand("replay", "rerun a JSON report and compare byte for byte");
  rep->add_option("report", f.replay_file, "JSON report written by --out")->required();
  rep->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (rep->parsed()) return replay(f);
  std::string cmd;
  for (auto* sc : app.get_subcommands()) cmd = sc->get_name();
  int status = 0;
  auto o = run(config_for(cmd, f), status);
  if (!o) return status;
  return emit(*o, f);
}
