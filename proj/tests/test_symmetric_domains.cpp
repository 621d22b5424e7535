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


#include "doctest.h"
#include "kimm/immersion.hpp"
#include "kimm/models.hpp"
#include "kimm/symmetric_domains.hpp"
#include "support.hpp"

using namespace kimm;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

// Wallach set membership written out from its definition.
bool in_wallach_minus_zero(const DomainInvariants& inv, const Rational& eta) {
  if (sgn(eta) == 0) return false;
  for (unsigned k = 0; k < inv.rank; ++k)
    if (eta == Rational(k) * inv.a / 2) return true;
  return eta > Rational(inv.rank - 1) * inv.a / 2;
}

DomainInvariants synthetic(unsigned r, long a, unsigned gamma) {
  DomainInvariants inv;
  inv.rank = r;
  inv.a = a;
  inv.genus = gamma;
  return inv;
}

}  // namespace

TEST_CASE("reference invariants") {
  DomainInvariants o1 = reference_invariants(parse_cartan_domain("omega1:2,3"));
  CHECK(o1.rank == 2);
  CHECK(o1.a == 2);
  CHECK(o1.genus == 5);
  CHECK(o1.dim == 6);
  DomainInvariants o2 = reference_invariants(parse_cartan_domain("omega2:3"));
  CHECK(o2.rank == 3);
  CHECK(o2.a == 1);
  CHECK(o2.genus == 4);
  DomainInvariants o3 = reference_invariants(parse_cartan_domain("omega3:5"));
  CHECK(o3.rank == 2);
  CHECK(o3.a == 4);
  CHECK(o3.genus == 8);
  DomainInvariants o4 = reference_invariants(parse_cartan_domain("omega4:5"));
  CHECK(o4.rank == 2);
  CHECK(o4.a == 3);
  CHECK(o4.genus == 5);
  CHECK(reference_invariants(parse_cartan_domain("ch:3")).rank == 1);
  CHECK(wallach_threshold(o1) == 1);
}

TEST_CASE("catalog genus and norm agree with the invariants") {
  for (const char* d : {"omega1:2,2", "omega2:2", "omega3:3", "omega3:4", "omega4:3"}) {
    std::string name = d;
    CAPTURE(name);
    CartanDomain dom = parse_cartan_domain(d);
    BergmanDiastasis b = cartan_bergman_diastasis(dom, 2);
    CHECK(b.genus == reference_invariants(dom).genus);
    CHECK(b.log_norm * CScalar(Rational(b.genus)) == b.diastasis);
    if (dom.type != CartanType::kOmega4) CHECK(b.log_norm.coeff(1, 1) == CScalar(1));
  }
}

TEST_CASE("rank one domains accept every positive multiple") {
  std::mt19937 rng(17);
  const char* domains[] = {"ch:1", "ch:2", "ch:4", "omega1:1,3", "omega2:1", "omega3:2", "omega4:1"};
  for (const char* d : domains) {
    DomainInvariants inv = reference_invariants(parse_cartan_domain(d));
    CHECK(inv.rank == 1);
    for (int i = 0; i < 20; ++i)
      CHECK(bergman_scaling_decision(inv, kimm::testing::random_positive_rational(rng, 30, 29)));
  }
  DomainInvariants r1 = synthetic(1, 0, 2);
  CHECK(bergman_scaling_decision(r1, q(7, 3)));
  CHECK_THROWS_AS(bergman_scaling_decision(r1, q(0)), Error);
}

TEST_CASE("synthetic rank two grid") {
  DomainInvariants inv = synthetic(2, 2, 4);
  CHECK(wallach_threshold(inv) == 1);
  CHECK(wallach_membership(inv, q(0)).cls == WallachClass::kDiscrete);
  CHECK(wallach_membership(inv, q(1)).cls == WallachClass::kDiscrete);
  CHECK(wallach_membership(inv, q(1)).k == 1);
  for (long num = 1; num <= 24; ++num) {
    Rational eta = q(num, 8);
    Rational c = eta / 4;
    WallachMembership w = wallach_membership(inv, eta);
    bool decision = bergman_scaling_decision(inv, c);
    if (eta < 1) {
      CHECK(w.cls == WallachClass::kOutside);
      CHECK_FALSE(decision);
    } else if (eta == 1) {
      CHECK(w.cls == WallachClass::kDiscrete);
      CHECK(decision);
    } else {
      CHECK(w.cls == WallachClass::kContinuous);
      CHECK(decision);
    }
  }
}

TEST_CASE("decisions agree with the definition") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<unsigned> rank(1, 4), gamma(1, 9), a(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    DomainInvariants inv = synthetic(rank(rng), a(rng), gamma(rng));
    Rational c = kimm::testing::random_positive_rational(rng, 12, 8);
    CHECK(bergman_scaling_decision(inv, c) == in_wallach_minus_zero(inv, c * inv.genus));
    Rational c2 = c + kimm::testing::random_positive_rational(rng);
    if (bergman_scaling_decision(inv, c) && c2 * inv.genus > wallach_threshold(inv))
      CHECK(bergman_scaling_decision(inv, c2));
  }
}

TEST_CASE("cartan hartogs decision is the m-loop conjunction") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<unsigned> rank(1, 4), gamma(1, 9), a(0, 6);
  int induced = 0;
  for (int trial = 0; trial < 50; ++trial) {
    DomainInvariants inv = synthetic(rank(rng), a(rng), gamma(rng));
    Rational mu = kimm::testing::random_positive_rational(rng, 6, 4);
    Rational c = kimm::testing::random_positive_rational(rng, 6, 4);
    if (trial % 5 == 0) c = q(trial % 3 + 1);
    bool conj = true;
    for (unsigned m = 0; m < 400; ++m)
      conj = conj && bergman_scaling_decision(inv, (c + m) * mu / inv.genus);
    CartanHartogsDecision d = cartan_hartogs_decision(inv, mu, c);
    CHECK(d.induced == conj);
    if (!d.induced) CHECK_FALSE(in_wallach_minus_zero(inv, (c + d.failing_m) * mu));
    induced += d.induced;
  }
  CHECK(induced > 5);
  CHECK(induced < 45);
}

TEST_CASE("cartan hartogs maps") {
  struct Case {
    const char* base;
    Rational mu, alpha;
    unsigned degree;
  } cases[] = {{"ch:1", q(1), q(1), 5},       {"ch:1", q(1, 2), q(3), 4},
               {"ch:2", q(2, 3), q(3, 2), 4}, {"omega1:2,2", q(1), q(2), 3},
               {"omega4:3", q(1), q(1), 3},   {"omega2:2", q(3, 2), q(1), 3}};
  for (const auto& c : cases) {
    CAPTURE(c.base);
    CartanDomain dom = parse_cartan_domain(c.base);
    BergmanDiastasis bd = cartan_bergman_diastasis(dom, c.degree);
    BiSeries target = cartan_hartogs_diastasis(bd.log_norm, c.mu, c.degree);
    ImmersionMap map = ch_immersion(bd.diastasis, bd.genus, c.mu, c.alpha, c.degree);
    CHECK(map.b == 1);
    CHECK(verify_immersion(map, target * CScalar(c.alpha), q(1), c.degree).ok);
    const unsigned w = map.arity - 1;
    auto ord = graded_order(map.arity, c.degree);
    std::vector<int> w_degree;
    for (const auto& comp : map.components) {
      CHECK(sgn(comp.radicand) > 0);
      int deg = -1;
      for (const auto& [j, coeff] : comp.series.terms()) {
        int e = static_cast<int>(ord->index(j).exponents[w]);
        if (deg < 0) deg = e;
        CHECK(e == deg);
      }
      w_degree.push_back(deg);
    }
    CHECK(*std::max_element(w_degree.begin(), w_degree.end()) == int(c.degree));
  }
  BergmanDiastasis o4 = cartan_bergman_diastasis(parse_cartan_domain("omega4:3"), 3);
  CHECK_THROWS_AS(ch_immersion(o4.diastasis, o4.genus, q(1, 4), q(1), 3), Error);
}
