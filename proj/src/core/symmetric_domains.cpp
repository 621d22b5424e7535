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

#include "kimm/symmetric_domains.hpp"

namespace kimm {

DomainInvariants reference_invariants(const CartanDomain& d) {
  DomainInvariants inv;
  inv.dim = cartan_dimension(d);
  switch (d.type) {
    case CartanType::kOmega1:
      inv.rank = std::min(d.m, d.n);
      inv.a = 2;
      inv.genus = d.m + d.n;
      break;
    case CartanType::kOmega2:
      inv.rank = d.n;
      inv.a = 1;
      inv.genus = d.n + 1;
      break;
    case CartanType::kOmega3:
      inv.rank = d.n / 2;
      inv.a = 4;
      inv.genus = 2 * (d.n - 1);
      break;
    case CartanType::kOmega4:
      inv.rank = d.n == 1 ? 1 : 2;
      inv.a = d.n >= 2 ? Rational(d.n - 2) : Rational(0);
      inv.genus = d.n;
      break;
  }
  return inv;
}

const char* to_string(WallachClass c) {
  switch (c) {
    case WallachClass::kDiscrete:
      return "discrete";
    case WallachClass::kContinuous:
      return "continuous";
    case WallachClass::kOutside:
      return "outside";
  }
  return "unknown";
}

Rational wallach_threshold(const DomainInvariants& inv) {
  return Rational(inv.rank - 1) * inv.a / 2;
}

WallachMembership wallach_membership(const DomainInvariants& inv, const Rational& eta) {
  if (inv.rank == 0) throw Error(ErrorCode::kInvalidArgument, "rank must be positive");
  WallachMembership out;
  for (unsigned k = 0; k < inv.rank; ++k) {
    if (eta == Rational(k) * inv.a / 2) {
      out.cls = WallachClass::kDiscrete;
      out.k = k;
      return out;
    }
  }
  out.cls = eta > wallach_threshold(inv) ? WallachClass::kContinuous : WallachClass::kOutside;
  return out;
}

bool bergman_scaling_decision(const DomainInvariants& inv, const Rational& c) {
  if (sgn(c) <= 0) throw Error(ErrorCode::kDomain, "scaling constant must be positive");
  Rational eta = c * inv.genus;
  return sgn(eta) != 0 && wallach_membership(inv, eta).cls != WallachClass::kOutside;
}

CartanHartogsDecision cartan_hartogs_decision(const DomainInvariants& inv, const Rational& mu,
                                              const Rational& c) {
  if (sgn(mu) <= 0 || sgn(c) <= 0)
    throw Error(ErrorCode::kDomain, "mu and c must be positive");
  CartanHartogsDecision out;
  const Rational threshold = wallach_threshold(inv);
  for (unsigned m = 0;; ++m) {
    Rational eta = (c + m) * mu;
    ++out.checked;
    WallachMembership w = wallach_membership(inv, eta);
    if (w.cls == WallachClass::kOutside || sgn(eta) == 0) {
      out.induced = false;
      out.failing_m = m;
      out.failing_membership = w;
      return out;
    }
    if (eta > threshold) return out;
  }
}

namespace {

/// alpha (alpha + 1) ... (alpha + m - 1) / m!.
Rational pochhammer_over_factorial(const Rational& alpha, unsigned m) {
  Rational out = 1;
  for (unsigned i = 0; i < m; ++i) out *= (alpha + i) / Rational(i + 1);
  return out;
}

}  // namespace

ImmersionMap ch_immersion(const BiSeries& base_diastasis, unsigned genus, const Rational& mu,
                          const Rational& alpha, unsigned degree) {
  if (sgn(mu) <= 0 || sgn(alpha) <= 0)
    throw Error(ErrorCode::kDomain, "ch_immersion: mu and alpha must be positive");
  if (degree > base_diastasis.degree())
    throw Error(ErrorCode::kOutOfRange, "ch_immersion: degree exceeds base truncation");
  const unsigned d = base_diastasis.arity();
  std::vector<unsigned> vars(d);
  for (unsigned i = 0; i < d; ++i) vars[i] = i;
  ImmersionMap map;
  map.arity = d + 1;
  map.degree = degree;
  map.target = TargetKind::kCurved;
  map.b = 1;
  for (unsigned m = 0; m <= degree; ++m) {
    Rational weight = pochhammer_over_factorial(alpha, m);
    MultiIndex wm{std::vector<unsigned>(d + 1, 0)};
    wm.exponents[d] = m;
    if (m >= 1) {
      ImmersionComponent s;
      s.radicand = weight;
      s.series = HolSeries::monomial(d + 1, degree, wm, 1);
      map.components.push_back(std::move(s));
    }
    if (m == degree) continue;
    const unsigned base_degree = degree - m;
    Rational k = mu * (alpha + m) / Rational(genus);
    ImmersionMap h;
    try {
      h = factor_immersion(base_diastasis.truncated(base_degree) * CScalar(k), 1, base_degree);
    } catch (const NotResolvableError& e) {
      throw Error(ErrorCode::kNotResolvable,
                  "ch_immersion: base map for scaling " + to_pq(k) + " does not exist: " + e.what());
    }
    for (auto& comp : h.components) {
      ImmersionComponent c;
      c.radicand = weight * comp.radicand;
      c.series = comp.series.embedded(d + 1, vars, degree).times_monomial(wm);
      map.components.push_back(std::move(c));
    }
  }
  return map;
}

}  // namespace kimm
