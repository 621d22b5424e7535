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

#ifndef KIMM_EINSTEIN_HPP
#define KIMM_EINSTEIN_HPP

#include "kimm/series.hpp"

namespace kimm {

/// d^2 D / dz_alpha dzbar_beta as a series of degree deg(D) - 1.
BiSeries mixed_derivative(const BiSeries& d, unsigned alpha, unsigned beta);

/// det(d^2 D / dz_alpha dzbar_beta) truncated at degree - 1.
BiSeries hessian_det(const BiSeries& d, unsigned degree);

struct EinsteinEstimate {
  bool einstein = false;
  /// Read from the first linear diagonal coefficient of log det H.
  Rational lambda;
  /// log det H vanishes through the truncation.
  bool flat = false;
  /// Degree through which log det H + (lambda/2) D was compared.
  unsigned checked_degree = 0;
  /// First mismatch (when not einstein).
  Ordinal j = 0;
  Ordinal k = 0;
  CScalar log_det_coefficient;
  CScalar expected_coefficient;
};

/// Requires Bochner form (kGauge otherwise) and degree >= 2.
EinsteinEstimate einstein_estimate(const BiSeries& d, unsigned degree);

}  // namespace kimm

#endif  // KIMM_EINSTEIN_HPP
