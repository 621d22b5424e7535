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

#include "kimm/immersion.hpp"

#include "kimm/diastasis.hpp"

namespace kimm {

const char* to_string(TargetKind t) {
  switch (t) {
    case TargetKind::kFlat:
      return "flat";
    case TargetKind::kCurved:
      return "curved";
    case TargetKind::kIndefinite:
      return "indefinite";
  }
  return "unknown";
}

BiSeries pullback(const ImmersionMap& map) {
  BiSeries acc(map.arity, map.degree);
  for (const auto& c : map.components) {
    BiSeries term = BiSeries::outer(c.series, c.series);
    term *= CScalar(c.radicand * c.sign);
    acc += term;
  }
  return acc;
}

NotResolvableError::NotResolvableError(Verdict v)
    : Error(ErrorCode::kNotResolvable,
            "not resolvable at degree " + std::to_string(v.degree) + " (witness value " +
                to_pq(v.psd.value) + ")"),
      verdict_(std::move(v)) {}

ImmersionMap factor_immersion(const BiSeries& d, const Rational& b, unsigned degree) {
  Verdict v = resolvability(d, b, degree);
  if (!v.psd.psd) throw NotResolvableError(std::move(v));
  ImmersionMap map;
  map.arity = d.arity();
  map.degree = degree;
  map.target = sgn(b) == 0 ? TargetKind::kFlat : TargetKind::kCurved;
  map.b = b;
  for (const auto& f : v.psd.factors) {
    ImmersionComponent c;
    c.radicand = f.pivot;
    c.series = HolSeries(d.arity(), degree);
    for (const auto& [i, l] : f.column) c.series.set(i + 1, l);
    map.components.push_back(std::move(c));
  }
  return map;
}

ImmersionMap indefinite_immersion(const BiSeries& d, unsigned degree, std::vector<Rational> r) {
  if (r.empty()) r.assign(d.arity(), Rational(1));
  if (r.size() != d.arity())
    throw Error(ErrorCode::kArityMismatch, "indefinite_immersion: r must have one entry per variable");
  for (const auto& v : r)
    if (sgn(v) <= 0) throw Error(ErrorCode::kDomain, "indefinite_immersion: r must be positive");
  if (degree > d.degree())
    throw Error(ErrorCode::kOutOfRange, "indefinite_immersion: degree exceeds truncation");
  BiSeries t = normalize_to_diastasis(d.truncated(degree));
  ImmersionMap map;
  map.arity = d.arity();
  map.degree = degree;
  map.target = TargetKind::kIndefinite;
  const GradedOrder& ord = t.order();
  Ordinal count = ord.size();
  for (Ordinal j = 1; j < count; ++j) {
    Rational rho = 1;
    const auto& e = ord.index(j).exponents;
    for (unsigned a = 0; a < e.size(); ++a)
      for (unsigned p = 0; p < e[a]; ++p) rho *= r[a];
    const Rational a_jj = t.coeff(j, j).re;
    HolSeries tail(map.arity, degree);
    for (Ordinal k = j + 1; k < count; ++k) {
      CScalar a_kj = t.coeff(k, j);
      if (!a_kj.is_zero()) tail.set(k, a_kj * rho);
    }
    for (int sign : {1, -1}) {
      ImmersionComponent c;
      c.radicand = 1;
      c.sign = sign;
      c.series = tail;
      Rational lead = (a_jj * rho + Rational(sign) / rho) / 2;
      c.series.set(j, CScalar(lead));
      map.components.push_back(std::move(c));
    }
  }
  return map;
}

ImmersionCheck verify_immersion(const ImmersionMap& map, const BiSeries& d, const Rational& b,
                                unsigned degree) {
  if (map.arity != d.arity())
    throw Error(ErrorCode::kArityMismatch, "verify_immersion: arity mismatch");
  unsigned deg = std::min({degree, d.degree(), map.degree});
  BiSeries expected = b_transform(normalize_to_diastasis(d.truncated(deg)), b);
  ImmersionMap cut = map;
  cut.degree = deg;
  for (auto& c : cut.components) c.series = c.series.truncated(deg);
  BiSeries got = pullback(cut);
  ImmersionCheck check;
  BiSeries diff = got - expected;
  if (diff.is_zero()) return check;
  const auto& [key, value] = *diff.terms().begin();
  check.ok = false;
  check.j = key.first;
  check.k = key.second;
  check.expected = expected.coeff(key.first, key.second);
  check.got = got.coeff(key.first, key.second);
  return check;
}

namespace {

Integer binomial_int(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

SpaceFormDecision space_form_classification(unsigned n, const Rational& b, const Rational& c,
                                            const Rational& b_target) {
  if (sgn(c) <= 0) throw Error(ErrorCode::kDomain, "metric scale must be positive");
  Rational beta = b / c;
  SpaceFormDecision out;
  const Rational& bt = b_target;
  if (sgn(beta) <= 0) {
    if (bt == beta) {
      out.exists = true;
      out.rank = Integer(n);
      out.reason = "same curvature: identity immersion";
    } else if (bt > beta) {
      out.exists = true;
      out.reason = "target curvature exceeds source curvature (source non-positive): infinite rank";
    } else {
      out.reason = "target curvature below source curvature";
    }
    return out;
  }
  Rational k = bt / beta;
  if (sgn(bt) > 0 && k.get_den() == 1) {
    Integer kk = k.get_num();
    out.exists = true;
    out.rank = binomial_int(n + static_cast<unsigned>(kk.get_ui()), n) - 1;
    out.reason = "target curvature is " + kk.get_str() + " times the source curvature";
  } else {
    out.reason = "target curvature is not a positive integer multiple of the source curvature";
  }
  return out;
}

Rational space_form_radicand(const MultiIndex& m, const Rational& b, const Rational& b_target) {
  unsigned k = m.degree();
  Rational den = 1;
  for (unsigned e : m.exponents) den *= factorial(e);
  Rational num = 1;
  if (sgn(b_target) != 0) {
    for (unsigned l = 1; l < k; ++l) num *= b_target - Rational(l) * b;
  } else {
    num = factorial(k - 1);
    for (unsigned l = 1; l < k; ++l) num *= -b;
  }
  return num / den;
}

SpaceFormImmersion space_form_immersion(unsigned n, const Rational& b, const Rational& b_target,
                                        unsigned degree) {
  SpaceFormImmersion out;
  out.decision = space_form_classification(n, b, Rational(1), b_target);
  auto ord = graded_order(n, degree);
  ImmersionMap map;
  map.arity = n;
  map.degree = degree;
  map.target = sgn(b_target) == 0 ? TargetKind::kFlat : TargetKind::kCurved;
  map.b = b_target;
  for (Ordinal j = 1; j < ord->size(); ++j) {
    Rational s = space_form_radicand(ord->index(j), b, b_target);
    if (sgn(s) < 0) {
      if (!out.first_negative) {
        out.first_negative = ord->index(j);
        out.negative_value = s;
      }
      continue;
    }
    if (sgn(s) == 0) continue;
    ImmersionComponent c;
    c.radicand = s;
    c.series = HolSeries(n, degree);
    c.series.set(j, CScalar(1));
    map.components.push_back(std::move(c));
  }
  if (out.decision.exists) out.map = std::move(map);
  return out;
}

}  // namespace kimm
