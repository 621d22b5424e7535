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

#ifndef KIMM_DIASTASIS_HPP
#define KIMM_DIASTASIS_HPP

#include <optional>

#include "kimm/series.hpp"

namespace kimm {

/// Zeroes row 0 and column 0 (the constant and the pure holomorphic and
/// antiholomorphic parts). Idempotent.
BiSeries normalize_to_diastasis(const BiSeries& phi);

/// True when row 0 and column 0 vanish.
bool is_diastasis(const BiSeries& d);

struct BochnerReport {
  bool is_bochner = false;
  /// First offending (j, k) in ordinal order with its value.
  std::optional<std::pair<Ordinal, Ordinal>> defect;
  CScalar defect_value;
};

/// D = sum |z_a|^2 + terms of bidegree >= (2,2).
BochnerReport check_bochner_form(const BiSeries& d);

/// (exp(b d) - 1) / b, or d itself for b = 0.
BiSeries b_transform(const BiSeries& d, const Rational& b);
/// log(1 + b t) / b, or t itself for b = 0.
BiSeries inverse_b_transform(const BiSeries& t, const Rational& b);

}  // namespace kimm

#endif  // KIMM_DIASTASIS_HPP
