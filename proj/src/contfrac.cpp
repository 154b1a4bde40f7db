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

#include "contfrac.hpp"

namespace hq {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Direct: return "direct";
    case Provenance::Predicted: return "predicted";
    case Provenance::Rational: return "rational";
  }
  return "?";
}

std::string to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::Complete: return "complete";
    case RecordStatus::Finite: return "finite";
    case RecordStatus::RationalWithinPrecision: return "rational-within-precision";
    case RecordStatus::PrecisionExhausted: return "precision-exhausted";
    case RecordStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

// Reduction modulo m = T^61 - T + 1, using T^61 = T - 1.
FqPoly reduce_m(const FqPoly& a) {
  const Field& F = *a.ring().field;
  std::vector<Elem> r = a.coeffs();
  for (std::size_t e = r.size(); e-- > 61;) {
    const Elem c = r[e];
    if (c == 0) continue;
    r[e - 60] = F.add(r[e - 60], c);
    r[e - 61] = F.sub(r[e - 61], c);
  }
  if (r.size() > 61) r.resize(61);
  return FqPoly(a.ring(), std::move(r));
}

}  // namespace

DeterminantReport check_determinant_modular(const std::vector<FqPoly>& quotients) {
  DeterminantReport rep;
  rep.modular = true;
  if (quotients.empty()) return rep;
  const FqRing ring = quotients[0].ring();
  // Reduction mod any monic m is a ring map, so the identity survives it.
  const FqPoly one = FqPoly::constant(ring, 1);
  FqPoly x_prev = one, y_prev(ring);
  FqPoly x = reduce_m(quotients[0]), y = one;
  for (std::size_t n = 1;; ++n) {
    FqPoly det = reduce_m(x * y_prev - x_prev * y);
    FqPoly expect = FqPoly::constant(ring, n % 2 ? ring.field->neg(1) : 1);
    ++rep.checked;
    if (!(det == expect)) {
      rep.ok = false;
      rep.first_failure = n;
      return rep;
    }
    if (n == quotients.size()) break;
    FqPoly a = reduce_m(quotients[n]);
    FqPoly xn = reduce_m(a * x + x_prev);
    FqPoly yn = reduce_m(a * y + y_prev);
    x_prev = std::move(x);
    y_prev = std::move(y);
    x = std::move(xn);
    y = std::move(yn);
  }
  return rep;
}

DeterminantReport check_determinant_reduced(const FqRecord& rec) {
  DeterminantReport rep;
  rep.modular = true;
  if (rec.numerators.empty()) return rep;
  const FqRing ring = rec.numerators[0].ring();
  FqPoly x_prev = reduce_m(rec.numerators[0]), y_prev = reduce_m(rec.denominators[0]);
  for (std::size_t n = 1; n < rec.numerators.size(); ++n) {
    FqPoly x = reduce_m(rec.numerators[n]), y = reduce_m(rec.denominators[n]);
    FqPoly det = reduce_m(x * y_prev - x_prev * y);
    ++rep.checked;
    if (!(det == FqPoly::constant(ring, n % 2 ? ring.field->neg(1) : 1))) {
      rep.ok = false;
      rep.first_failure = n;
      break;
    }
    x_prev = std::move(x);
    y_prev = std::move(y);
  }
  return rep;
}

bool fill_continuants_bounded(FqRecord& rec, std::size_t max_coefficients) {
  std::size_t total = 0, degx = 0;
  for (const auto& a : rec.quotients) {
    degx += static_cast<std::size_t>(std::max(0L, a.degree()));
    total += 2 * (degx + 1);
    if (total > max_coefficients) {
      rec.numerators.clear();
      rec.denominators.clear();
      return false;
    }
  }
  if (rec.quotients.empty()) return true;
  fill_continuants(rec, rec.quotients[0].ring());
  return true;
}

DeterminantReport verify_record(const FqRecord& rec) {
  // schoolbook products of stored continuants get quadratic; cap the exact path
  if (rec.has_continuants()) {
    double cost = 0;
    for (std::size_t n = 1; n < rec.numerators.size(); ++n)
      cost += 2.0 * static_cast<double>(rec.numerators[n].coeffs().size()) *
              static_cast<double>(rec.denominators[n - 1].coeffs().size());
    if (cost <= kExactDeterminantCost) return check_determinant(rec, rec.quotients[0].ring());
    return check_determinant_reduced(rec);
  }
  return check_determinant_modular(rec.quotients);
}

FqRecord expand_series(const LaurentSeries& alpha, std::size_t n_max) {
  FqRecord rec;
  rec.provenance = Provenance::Direct;
  rec.precision_floor = alpha.floor();
  const FqRing ring{alpha.field()};
  if (n_max == 0) return rec;
  if (alpha.is_exact_zero()) {
    rec.quotients.push_back(FqPoly(ring));
    rec.status = RecordStatus::Finite;
    fill_continuants(rec, ring);
    return rec;
  }
  const bool exact = alpha.is_exact();
  const long F = alpha.floor();
  long lo;
  if (exact) {
    lo = std::min(0L, alpha.top() - static_cast<long>(alpha.size()) + 1);
  } else {
    lo = F + 1;
    if (lo > 0) {
      rec.status = RecordStatus::PrecisionExhausted;
      return rec;
    }
  }
  // alpha truncated to exponents >= lo, as N / T^m.
  const long m = -lo;
  std::vector<Elem> nc;
  if (alpha.has_known_lead() && alpha.top() >= lo) {
    nc.assign(static_cast<std::size_t>(alpha.top() + m + 1), 0);
    for (long e = lo; e <= alpha.top(); ++e) nc[static_cast<std::size_t>(e + m)] = alpha.coeff(e);
  }
  FqPoly a(ring, std::move(nc));
  FqPoly b = FqPoly::monomial(ring, 1, static_cast<std::size_t>(m));

  long degy = 0;
  rec.status = RecordStatus::Complete;
  for (std::size_t j = 1; j <= n_max; ++j) {
    if (b.is_zero()) {
      rec.status = exact ? RecordStatus::Finite : RecordStatus::RationalWithinPrecision;
      break;
    }
    auto qr = divmod(a, b);
    const long degy_prev = degy;
    if (j >= 2) degy += qr.quotient.degree();
    if (!exact && !(F < -2 * degy)) {
      rec.status = (j >= 2 && qr.quotient.degree() >= -F - 2 * degy_prev) ? RecordStatus::RationalWithinPrecision
                                                                         : RecordStatus::PrecisionExhausted;
      break;
    }
    rec.quotients.push_back(std::move(qr.quotient));
    a = std::move(b);
    b = std::move(qr.remainder);
  }
  fill_continuants_bounded(rec, std::size_t{1} << 22);
  return rec;
}

Elem eval_finite_constants(const Field& field, const std::vector<Elem>& values) {
  if (values.empty()) throw ParameterError("empty bracket");
  std::size_t i = values.size() - 1;
  Elem v = values[i];
  for (;;) {
    if (v == 0)
      throw UndefinedBracket("bracket suffix starting at position " + std::to_string(i + 1) + " vanishes", i + 1);
    if (i == 0) return v;
    --i;
    v = field.add(values[i], field.inv(v));
  }
}

FieldElement eval_finite_constants(const std::vector<FieldElement>& values) {
  if (values.empty()) throw ParameterError("empty bracket");
  const FieldPtr& f = values[0].field();
  std::vector<Elem> raw;
  for (const auto& x : values) {
    if (!x.field()->same_as(*f)) throw FieldMismatch();
    raw.push_back(x.value());
  }
  return {f, eval_finite_constants(*f, raw)};
}

}  // namespace hq
