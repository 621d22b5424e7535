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

#ifndef KIMM_IMMERSION_HPP
#define KIMM_IMMERSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "kimm/resolvability.hpp"
#include "kimm/series.hpp"

namespace kimm {

enum class TargetKind { kFlat, kCurved, kIndefinite };

const char* to_string(TargetKind t);

/// sqrt(radicand) * series, counted with `sign` in the pulled-back norm.
struct ImmersionComponent {
  Rational radicand;
  HolSeries series{1, 0};
  int sign = 1;
};

struct ImmersionMap {
  unsigned arity = 0;
  unsigned degree = 0;
  TargetKind target = TargetKind::kFlat;
  /// Target curvature parameter (0 for flat and indefinite targets).
  Rational b;
  std::vector<ImmersionComponent> components;
};

/// sum_h sign_h radicand_h |series_h|^2.
BiSeries pullback(const ImmersionMap& map);

/// Carries the failing verdict when a factorization is refused.
class NotResolvableError : public Error {
 public:
  explicit NotResolvableError(Verdict v);
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

/// Components from the retained LDL* factors of the b-transformed matrix.
ImmersionMap factor_immersion(const BiSeries& d, const Rational& b, unsigned degree);

/// Pairs f_j, f_{-j} (signs +1, -1) whose signed norms telescope to d.
/// Default r is (1, ..., 1). Throws kDomain for r_a <= 0.
ImmersionMap indefinite_immersion(const BiSeries& d, unsigned degree,
                                  std::vector<Rational> r = {});

struct ImmersionCheck {
  bool ok = true;
  Ordinal j = 0;
  Ordinal k = 0;
  CScalar expected;
  CScalar got;
};

/// Compares pullback(map) with b_transform(normalized d, b) through degree.
ImmersionCheck verify_immersion(const ImmersionMap& map, const BiSeries& d, const Rational& b,
                                unsigned degree);

/// Closed-form decision for c times the space form of curvature b into the
/// space form of curvature b_target.
struct SpaceFormDecision {
  bool exists = false;
  /// Empty means infinite rank (only meaningful when exists).
  std::optional<Integer> rank;
  std::string reason;
};

SpaceFormDecision space_form_classification(unsigned n, const Rational& b, const Rational& c,
                                            const Rational& b_target);

/// Diagonal coefficient of |z^m|^2 in (exp(b' D) - 1)/b' for the space form
/// diastasis D of curvature b.
Rational space_form_radicand(const MultiIndex& m, const Rational& b, const Rational& b_target);

struct SpaceFormImmersion {
  SpaceFormDecision decision;
  std::optional<ImmersionMap> map;
  /// First monomial (graded order) with a negative radicand, if any within
  /// the truncation.
  std::optional<MultiIndex> first_negative;
  Rational negative_value;
};

SpaceFormImmersion space_form_immersion(unsigned n, const Rational& b, const Rational& b_target,
                                        unsigned degree);

}  // namespace kimm

#endif  // KIMM_IMMERSION_HPP
