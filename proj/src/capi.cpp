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

#include "hyperquad/hyperquad.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <string>

#include "errors.hpp"
#include "hyper.hpp"
#include "perfect.hpp"
#include "report.hpp"

struct hq_field {
  hq::FieldPtr f;
};
struct hq_spec {
  hq::TypeSpec s;
};
struct hq_record {
  hq::FqRecord r;
};

namespace {

thread_local std::string g_last_error;

hq_status fail(hq_status st, const char* what) {
  g_last_error = what;
  return st;
}

template <class F>
hq_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return HQ_OK;
  } catch (const hq::FieldMismatch& e) {
    return fail(HQ_ERR_FIELD_MISMATCH, e.what());
  } catch (const hq::FieldError& e) {
    return fail(HQ_ERR_FIELD, e.what());
  } catch (const hq::ParseError& e) {
    return fail(HQ_ERR_PARSE, e.what());
  } catch (const hq::DivisionByZero& e) {
    return fail(HQ_ERR_DIVISION_BY_ZERO, e.what());
  } catch (const hq::PrecisionError& e) {
    return fail(HQ_ERR_PRECISION, e.what());
  } catch (const hq::AdmissibilityError& e) {
    return fail(HQ_ERR_ADMISSIBILITY, e.what());
  } catch (const hq::UndefinedBracket& e) {
    return fail(HQ_ERR_UNDEFINED_BRACKET, e.what());
  } catch (const hq::NotPerfectError& e) {
    return fail(HQ_ERR_NOT_PERFECT, e.what());
  } catch (const hq::BudgetExceeded& e) {
    return fail(HQ_ERR_BUDGET, e.what());
  } catch (const hq::ParameterError& e) {
    return fail(HQ_ERR_PARAMETER, e.what());
  } catch (const nlohmann::json::parse_error& e) {
    return fail(HQ_ERR_PARSE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(HQ_ERR_PARAMETER, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HQ_ERR_BUDGET, "out of memory");
  } catch (const std::exception& e) {
    return fail(HQ_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

hq::Engine engine_of(hq_engine e) {
  switch (e) {
    case HQ_ENGINE_SERIES: return hq::Engine::Series;
    case HQ_ENGINE_QUOTIENT: return hq::Engine::Quotient;
    default: return hq::Engine::Auto;
  }
}

#define HQ_REQUIRE(p) \
  if (!(p)) return fail(HQ_ERR_NULL_ARGUMENT, "null argument: " #p)

}  // namespace

extern "C" {

const char* hq_version(void) { return "1.0.0"; }

const char* hq_status_name(hq_status st) {
  switch (st) {
    case HQ_OK: return "ok";
    case HQ_ERR_NULL_ARGUMENT: return "null-argument";
    case HQ_ERR_PARAMETER: return "parameter";
    case HQ_ERR_FIELD: return "field";
    case HQ_ERR_FIELD_MISMATCH: return "field-mismatch";
    case HQ_ERR_PARSE: return "parse";
    case HQ_ERR_DIVISION_BY_ZERO: return "division-by-zero";
    case HQ_ERR_PRECISION: return "precision";
    case HQ_ERR_ADMISSIBILITY: return "admissibility";
    case HQ_ERR_UNDEFINED_BRACKET: return "undefined-bracket";
    case HQ_ERR_NOT_PERFECT: return "not-perfect";
    case HQ_ERR_BUDGET: return "budget";
    case HQ_ERR_INTERNAL: return "internal";
    case HQ_ERR_OUT_OF_RANGE: return "out-of-range";
  }
  return "unknown";
}

const char* hq_last_error(void) { return g_last_error.c_str(); }

void hq_string_free(char* s) { std::free(s); }

hq_status hq_field_new(uint32_t p, unsigned s, const uint32_t* modulus, hq_field** out) {
  HQ_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    std::optional<std::vector<std::uint32_t>> m;
    if (modulus) m = std::vector<std::uint32_t>(modulus, modulus + s + 1);
    *out = new hq_field{hq::Field::make(p, s, m)};
  });
}

hq_status hq_field_preset(const char* name, hq_field** out) {
  HQ_REQUIRE(name);
  HQ_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new hq_field{hq::Field::preset(name)}; });
}

void hq_field_free(hq_field* field) { delete field; }

uint64_t hq_field_order(const hq_field* field) { return field ? field->f->q() : 0; }

hq_status hq_field_parse(const hq_field* field, const char* text, uint32_t* out) {
  HQ_REQUIRE(field);
  HQ_REQUIRE(text);
  HQ_REQUIRE(out);
  return guard([&] { *out = field->f->parse(text); });
}

hq_status hq_field_format(const hq_field* field, uint32_t element, char** out) {
  HQ_REQUIRE(field);
  HQ_REQUIRE(out);
  if (element >= field->f->q()) return fail(HQ_ERR_OUT_OF_RANGE, "element code out of range");
  return guard([&] { *out = dup(field->f->format(element)); });
}

hq_status hq_field_mul(const hq_field* field, uint32_t a, uint32_t b, uint32_t* out) {
  HQ_REQUIRE(field);
  HQ_REQUIRE(out);
  if (a >= field->f->q() || b >= field->f->q()) return fail(HQ_ERR_OUT_OF_RANGE, "element code out of range");
  return guard([&] { *out = field->f->mul(a, b); });
}

hq_status hq_field_inv(const hq_field* field, uint32_t a, uint32_t* out) {
  HQ_REQUIRE(field);
  HQ_REQUIRE(out);
  if (a >= field->f->q()) return fail(HQ_ERR_OUT_OF_RANGE, "element code out of range");
  return guard([&] { *out = field->f->inv(a); });
}

hq_status hq_spec_new(const hq_field* field, unsigned t, unsigned k, const uint32_t* lambdas, size_t l, uint32_t eps1,
                      uint32_t eps2, hq_spec** out) {
  HQ_REQUIRE(field);
  HQ_REQUIRE(out);
  HQ_REQUIRE(lambdas || l == 0);
  *out = nullptr;
  return guard([&] {
    hq::TypeSpec s;
    s.field = field->f;
    s.t = t;
    s.k = k;
    s.lambdas.assign(lambdas, lambdas + l);
    s.eps1 = eps1;
    s.eps2 = eps2;
    hq::validate(s);
    *out = new hq_spec{std::move(s)};
  });
}

hq_status hq_spec_corollary_c(hq_spec** out) {
  HQ_REQUIRE(out);
  return guard([&] { *out = new hq_spec{hq::corollary_c_spec()}; });
}

void hq_spec_free(hq_spec* spec) { delete spec; }

hq_status hq_spec_equation(const hq_spec* spec, int normalized, char** out) {
  HQ_REQUIRE(spec);
  HQ_REQUIRE(out);
  return guard([&] {
    auto eq = hq::build_equation(spec->s);
    *out = dup((normalized ? hq::normalize(eq) : eq).str());
  });
}

hq_status hq_spec_case(const hq_spec* spec, hq_case* out_case, size_t* failing_index) {
  HQ_REQUIRE(spec);
  HQ_REQUIRE(out_case);
  return guard([&] {
    const auto c = hq::condition_II(spec->s);
    if (failing_index) *failing_index = c.ok ? 0 : c.failing_index;
    if (!c.ok) {
      *out_case = HQ_CASE_NONE;
      return;
    }
    *out_case = hq::classify_case(spec->s, c.delta[spec->s.l()]) == hq::CaseTag::III1 ? HQ_CASE_III1 : HQ_CASE_III2;
  });
}

hq_status hq_expand(const hq_spec* spec, size_t n, hq_engine engine, hq_record** out) {
  HQ_REQUIRE(spec);
  HQ_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    hq::ExpandOptions o;
    o.engine = engine_of(engine);
    if (o.engine == hq::Engine::Auto) o.engine = hq::choose_engine(spec->s, n);
    *out = new hq_record{hq::expand_alpha(spec->s, n, o)};
  });
}

hq_status hq_predict(const hq_spec* spec, size_t n, hq_record** out) {
  HQ_REQUIRE(spec);
  HQ_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new hq_record{hq::predict_expansion(spec->s, n)}; });
}

void hq_record_free(hq_record* record) { delete record; }

size_t hq_record_length(const hq_record* record) { return record ? record->r.quotients.size() : 0; }

hq_status hq_record_quotient(const hq_record* record, size_t index, char** out) {
  HQ_REQUIRE(record);
  HQ_REQUIRE(out);
  if (index >= record->r.quotients.size()) return fail(HQ_ERR_OUT_OF_RANGE, "quotient index out of range");
  return guard([&] { *out = dup(record->r.quotients[index].str('T', hq::TermOrder::Descending)); });
}

long hq_record_degree(const hq_record* record, size_t index) {
  if (!record || index >= record->r.quotients.size()) return -2;
  return record->r.quotients[index].degree();
}

int hq_record_determinant_ok(const hq_record* record) {
  if (!record) return 0;
  try {
    return hq::verify_record(record->r).ok ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

hq_status hq_verify(const hq_spec* spec, size_t n, hq_engine engine, hq_match* out) {
  HQ_REQUIRE(spec);
  HQ_REQUIRE(out);
  return guard([&] {
    hq::VerifyOptions o;
    o.engine = engine_of(engine);
    const auto rep = hq::differential_verify(spec->s, n, o);
    switch (rep.verdict) {
      case hq::Verdict::Match: out->verdict = HQ_VERDICT_MATCH; break;
      case hq::Verdict::Mismatch: out->verdict = HQ_VERDICT_MISMATCH; break;
      case hq::Verdict::Inconclusive: out->verdict = HQ_VERDICT_INCONCLUSIVE; break;
      case hq::Verdict::Contradiction: out->verdict = HQ_VERDICT_CONTRADICTION; break;
    }
    out->exit_code = hq::exit_code(rep.verdict);
    out->compared = rep.compared;
    out->first_mismatch = rep.first_mismatch.value_or(0);
    out->case_tag = !rep.tag ? HQ_CASE_NONE : (*rep.tag == hq::CaseTag::III1 ? HQ_CASE_III1 : HQ_CASE_III2);
  });
}

hq_status hq_run(const char* config_json, char** text_out, char** json_out, int* exit_code) {
  HQ_REQUIRE(config_json);
  return guard([&] {
    const auto r = hq::run_command(config_json);
    if (text_out) *text_out = dup(r.text);
    if (json_out) *json_out = dup(r.json);
    if (exit_code) *exit_code = r.exit_code;
  });
}

}  // extern "C"
