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

// Continued fractions in K((1/T)): partial quotients, continuants and the
// finite brackets of field constants.
//
// Continuants follow x_0 = 1, x_1 = a_1, y_0 = 0, y_1 = 1 and
// K_n = a_n K_{n-1} + K_{n-2}.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "poly.hpp"

namespace hq {

enum class Provenance { Direct, Predicted, Rational };

enum class RecordStatus {
  Complete,                 // the requested number of quotients
  Finite,                   // the expansion terminates (rational input)
  RationalWithinPrecision,  // the input agrees with a convergent to full precision
  PrecisionExhausted,       // the next quotient is not determined by the known digits
  BudgetExceeded,           // an engine resource limit was hit
};

std::string to_string(Provenance p);
std::string to_string(RecordStatus s);

template <class Ring>
struct ExpansionRecord {
  std::vector<Poly<Ring>> quotients;
  // x_0..x_n and y_0..y_n; left empty for records too large to hold them.
  std::vector<Poly<Ring>> numerators;
  std::vector<Poly<Ring>> denominators;
  Provenance provenance = Provenance::Direct;
  RecordStatus status = RecordStatus::Complete;
  long precision_floor = LaurentSeries::kExact;  // of the series the record came from

  std::size_t confirmed() const { return quotients.size(); }
  bool has_continuants() const { return !quotients.empty() && numerators.size() == quotients.size() + 1; }
};

using FqRecord = ExpansionRecord<FqRing>;
using QRecord = ExpansionRecord<QRing>;

template <class Ring>
void fill_continuants(ExpansionRecord<Ring>& rec, const Ring& ring) {
  using P = Poly<Ring>;
  rec.numerators.assign(1, P::constant(ring, ring.one()));
  rec.denominators.assign(1, P(ring));
  if (rec.quotients.empty()) return;
  rec.numerators.push_back(rec.quotients[0]);
  rec.denominators.push_back(P::constant(ring, ring.one()));
  for (std::size_t n = 2; n <= rec.quotients.size(); ++n) {
    const P& a = rec.quotients[n - 1];
    rec.numerators.push_back(a * rec.numerators[n - 1] + rec.numerators[n - 2]);
    rec.denominators.push_back(a * rec.denominators[n - 1] + rec.denominators[n - 2]);
  }
}

// Euclid on numer/denom; the last quotient is whatever Euclid produces.
template <class Ring>
ExpansionRecord<Ring> expand_rational(const Poly<Ring>& numer, const Poly<Ring>& denom) {
  if (denom.is_zero()) throw DivisionByZero("expand_rational: zero denominator");
  ExpansionRecord<Ring> rec;
  rec.provenance = Provenance::Rational;
  rec.status = RecordStatus::Finite;
  Poly<Ring> a = numer, b = denom;
  while (!b.is_zero()) {
    auto qr = divmod(a, b);
    rec.quotients.push_back(std::move(qr.quotient));
    a = std::move(b);
    b = std::move(qr.remainder);
  }
  fill_continuants(rec, numer.ring());
  return rec;
}

struct DeterminantReport {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<std::size_t> first_failure;
  bool modular = false;  // checked in K[T]/(m) because the continuants were not stored
};

// x_n y_{n-1} - x_{n-1} y_n = (-1)^n for every recorded n >= 1.
template <class Ring>
DeterminantReport check_determinant(const ExpansionRecord<Ring>& rec, const Ring& ring) {
  DeterminantReport rep;
  for (std::size_t n = 1; n < rec.numerators.size(); ++n) {
    auto det = rec.numerators[n] * rec.denominators[n - 1] - rec.numerators[n - 1] * rec.denominators[n];
    auto expect = Poly<Ring>::constant(ring, n % 2 ? ring.neg(ring.one()) : ring.one());
    ++rep.checked;
    if (!(det == expect)) {
      rep.ok = false;
      rep.first_failure = n;
      break;
    }
  }
  return rep;
}

// Same identity for the quotient list alone, carried out modulo a fixed
// polynomial so that huge records stay cheap.
DeterminantReport check_determinant_modular(const std::vector<FqPoly>& quotients);

// Stored continuants checked modulo the same polynomial.
DeterminantReport check_determinant_reduced(const FqRecord& rec);

// Fills continuants when their total size stays under the limit (in coefficients).
bool fill_continuants_bounded(FqRecord& rec, std::size_t max_coefficients);

// Coefficient products allowed for the exact check of stored continuants.
inline constexpr double kExactDeterminantCost = 1 << 26;

// Verifies a record: stored continuants exactly when affordable, else reduced; quotients alone otherwise.
DeterminantReport verify_record(const FqRecord& rec);

// First n_max quotients of a series with |a| >= 1; a quotient is emitted only
// when the known digits determine it.
FqRecord expand_series(const LaurentSeries& alpha, std::size_t n_max);

// [c_1, ..., c_m] = c_1 + 1/[c_2, ..., c_m], evaluated back to front. Throws
// UndefinedBracket naming the first (1-based) suffix start whose value is 0.
Elem eval_finite_constants(const Field& field, const std::vector<Elem>& values);
FieldElement eval_finite_constants(const std::vector<FieldElement>& values);

}  // namespace hq
