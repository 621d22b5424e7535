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

#include "kimm/einstein.hpp"

#include "kimm/diastasis.hpp"

namespace kimm {

BiSeries mixed_derivative(const BiSeries& d, unsigned alpha, unsigned beta) {
  if (alpha >= d.arity() || beta >= d.arity())
    throw Error(ErrorCode::kOutOfRange, "mixed_derivative: variable out of range");
  if (d.degree() == 0) return BiSeries(d.arity(), 0);
  BiSeries out(d.arity(), d.degree() - 1);
  const GradedOrder& src = d.order();
  const GradedOrder& dst = out.order();
  for (const auto& [key, c] : d.terms()) {
    MultiIndex hol = src.index(key.first);
    MultiIndex anti = src.index(key.second);
    unsigned ea = hol.exponents[alpha];
    unsigned eb = anti.exponents[beta];
    if (ea == 0 || eb == 0) continue;
    hol.exponents[alpha] -= 1;
    anti.exponents[beta] -= 1;
    out.add_to(dst.ordinal(hol), dst.ordinal(anti), c * Rational(ea * eb));
  }
  return out;
}

BiSeries hessian_det(const BiSeries& d, unsigned degree) {
  if (degree == 0 || degree > d.degree())
    throw Error(ErrorCode::kOutOfRange, "hessian_det: degree must be in [1, truncation]");
  BiSeries t = d.truncated(degree);
  const unsigned n = d.arity();
  std::vector<std::vector<BiSeries>> h(n, std::vector<BiSeries>(n, BiSeries(n, degree - 1)));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) h[a][b] = mixed_derivative(t, a, b);
  return det_series(h);
}

EinsteinEstimate einstein_estimate(const BiSeries& d, unsigned degree) {
  if (degree < 2 || degree > d.degree())
    throw Error(ErrorCode::kOutOfRange, "einstein_estimate: degree must be in [2, truncation]");
  BiSeries t = d.truncated(degree);
  BochnerReport bochner = check_bochner_form(t);
  if (!is_diastasis(t) || !bochner.is_bochner)
    throw Error(ErrorCode::kGauge,
                "einstein_estimate: input is not a diastasis in Bochner coordinates; normalize it "
                "and rescale so the linear block is the identity");
  BiSeries h = hessian_det(t, degree);
  h.add_to(0, 0, CScalar(-1));
  BiSeries log_det = log1p_series(h);
  EinsteinEstimate out;
  out.checked_degree = degree - 1;
  out.lambda = Rational(-2) * log_det.coeff(1, 1).re;
  BiSeries expected = t.truncated(degree - 1) * CScalar(-out.lambda / 2);
  BiSeries diff = log_det - expected;
  if (diff.is_zero()) {
    out.einstein = true;
    out.flat = log_det.is_zero();
    return out;
  }
  const auto& key = diff.terms().begin()->first;
  out.j = key.first;
  out.k = key.second;
  out.log_det_coefficient = log_det.coeff(key.first, key.second);
  out.expected_coefficient = expected.coeff(key.first, key.second);
  return out;
}

}  // namespace kimm
