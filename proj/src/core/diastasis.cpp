// Copyright 2026 The kimm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kimm/diastasis.hpp"

#include <set>

namespace kimm {

BiSeries normalize_to_diastasis(const BiSeries& phi) {
  BiSeries out(phi.arity(), phi.degree());
  for (const auto& [key, c] : phi.terms()) {
    if (key.first != 0 && key.second != 0) out.set(key.first, key.second, c);
  }
  return out;
}

bool is_diastasis(const BiSeries& d) {
  for (const auto& [key, c] : d.terms())
    if (key.first == 0 || key.second == 0) return false;
  return true;
}

BochnerReport check_bochner_form(const BiSeries& d) {
  BochnerReport report;
  const GradedOrder& ord = d.order();
  if (d.degree() == 0) {
    report.defect = std::make_pair(Ordinal(0), Ordinal(0));
    return report;
  }
  std::set<BiSeries::Key> candidates;
  for (Ordinal j = 1; j <= d.arity(); ++j) candidates.insert({j, j});
  for (const auto& [key, c] : d.terms()) {
    if (ord.degree(key.first) == 1 || ord.degree(key.second) == 1) candidates.insert(key);
  }
  for (const auto& key : candidates) {
    CScalar expected = (key.first == key.second && ord.degree(key.first) == 1) ? CScalar(1)
                                                                               : CScalar();
    CScalar got = d.coeff(key.first, key.second);
    if (!(got == expected)) {
      report.defect = key;
      report.defect_value = got;
      return report;
    }
  }
  report.is_bochner = true;
  return report;
}

BiSeries b_transform(const BiSeries& d, const Rational& b) {
  if (sgn(b) == 0) return d;
  BiSeries e = exp_series(d * CScalar(b));
  return e * CScalar(Rational(1) / b);
}

BiSeries inverse_b_transform(const BiSeries& t, const Rational& b) {
  if (sgn(b) == 0) return t;
  return log1p_series(t * CScalar(b)) * CScalar(Rational(1) / b);
}

}  // namespace kimm
