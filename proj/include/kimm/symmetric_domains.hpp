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

#ifndef KIMM_SYMMETRIC_DOMAINS_HPP
#define KIMM_SYMMETRIC_DOMAINS_HPP

#include "kimm/immersion.hpp"
#include "kimm/models.hpp"

namespace kimm {

struct DomainInvariants {
  unsigned rank = 1;
  Rational a;
  unsigned genus = 1;
  unsigned dim = 1;
};

/// Rank, multiplicity a and genus from the standard tables (Faraut-Koranyi
/// normalization). For Omega3[n] the genus is 2(n-1), twice the exponent of
/// det(I - ZZ^*) used by the catalog kernel.
DomainInvariants reference_invariants(const CartanDomain& d);

enum class WallachClass { kDiscrete, kContinuous, kOutside };

const char* to_string(WallachClass c);

struct WallachMembership {
  WallachClass cls = WallachClass::kOutside;
  /// eta = k a / 2 for the discrete class.
  unsigned k = 0;
};

/// Discrete points {k a/2 : 0 <= k <= r-1} are tested first, then the ray
/// eta > (r-1) a / 2.
WallachMembership wallach_membership(const DomainInvariants& inv, const Rational& eta);

/// (r - 1) a / 2.
Rational wallach_threshold(const DomainInvariants& inv);

/// c gamma in W minus {0}. Throws kDomain for c <= 0.
bool bergman_scaling_decision(const DomainInvariants& inv, const Rational& c);

struct CartanHartogsDecision {
  bool induced = true;
  /// First m with (c + m) mu outside W minus {0}.
  unsigned failing_m = 0;
  WallachMembership failing_membership;
  /// Number of m values examined before the continuous part was reached.
  unsigned checked = 0;
};

/// (c + m) mu in W minus {0} for every integer m >= 0.
CartanHartogsDecision cartan_hartogs_decision(const DomainInvariants& inv, const Rational& mu,
                                              const Rational& c);

/// Map of alpha times the Cartan-Hartogs diastasis into the b = 1 space form:
/// w-components sqrt(Poch(alpha, m)/m!) w^m and blocks sqrt(Poch(alpha, m)/m!)
/// h_{mu(alpha+m)/gamma} w^m, with h_k factored from k D_Omega.
/// Throws kNotResolvable when a base scaling is not projectively induced
/// through the truncation.
ImmersionMap ch_immersion(const BiSeries& base_diastasis, unsigned genus, const Rational& mu,
                          const Rational& alpha, unsigned degree);

}  // namespace kimm

#endif  // KIMM_SYMMETRIC_DOMAINS_HPP
