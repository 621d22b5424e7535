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
#include "kimm/diastasis.hpp"
#include "kimm/immersion.hpp"
#include "kimm/models.hpp"
#include "support.hpp"

using namespace kimm;
using kimm::testing::random_hermitian;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

Rational multi_factorial(const MultiIndex& m) {
  Rational f = 1;
  for (unsigned e : m.exponents) f *= factorial(e);
  return f;
}

// Each component is a single monomial with coefficient 1; returns ordinal -> radicand.
std::map<Ordinal, Rational> monomial_radicands(const ImmersionMap& map) {
  std::map<Ordinal, Rational> out;
  for (const auto& c : map.components) {
    REQUIRE(c.series.terms().size() == 1);
    const auto& [j, coeff] = *c.series.terms().begin();
    CHECK(coeff == CScalar(1));
    CHECK(c.sign == 1);
    out[j] = c.radicand;
  }
  return out;
}

}  // namespace

TEST_CASE("hyperbolic and flat embeddings have the classical radicands") {
  for (unsigned n = 1; n <= 2; ++n) {
    for (unsigned deg = 1; deg <= 5; ++deg) {
      CAPTURE(n);
      CAPTURE(deg);
      auto ord = graded_order(n, deg);
      BiSeries hyp = space_form_diastasis(n, q(-1), deg);
      BiSeries flat = space_form_diastasis(n, q(0), deg);
      struct Case {
        const BiSeries* d;
        Rational b;
        int family;
      } cases[] = {{&hyp, q(0), 0}, {&hyp, q(1), 1}, {&flat, q(1), 2}};
      for (const auto& c : cases) {
        ImmersionMap map = factor_immersion(*c.d, c.b, deg);
        CHECK(verify_immersion(map, *c.d, c.b, deg).ok);
        auto rad = monomial_radicands(map);
        CHECK(rad.size() == ord->size() - 1);
        for (const auto& [j, r] : rad) {
          const MultiIndex& m = ord->index(j);
          Rational expected = c.family == 0   ? factorial(m.degree() - 1) / multi_factorial(m)
                              : c.family == 1 ? factorial(m.degree()) / multi_factorial(m)
                                              : Rational(1) / multi_factorial(m);
          CHECK(r == expected);
        }
      }
    }
  }
}

TEST_CASE("closed form space form immersions") {
  SpaceFormImmersion ver = space_form_immersion(1, q(1), q(2), 4);
  REQUIRE(ver.map);
  auto rad = monomial_radicands(*ver.map);
  CHECK(rad.size() == 2);
  CHECK(rad[1] == q(1));
  CHECK(rad[2] == q(1, 2));
  CHECK(verify_immersion(*ver.map, space_form_diastasis(1, q(1), 4), q(2), 4).ok);

  for (unsigned n = 1; n <= 3; ++n) {
    for (long b : {-2, -1, 1, 2}) {
      for (long bt : {-2, -1, 0, 1, 2, 3, 4}) {
        CAPTURE(n);
        CAPTURE(b);
        CAPTURE(bt);
        SpaceFormImmersion s = space_form_immersion(n, q(b), q(bt), 4);
        SpaceFormDecision d = space_form_classification(n, q(b), 1, q(bt));
        CHECK(s.decision.exists == d.exists);
        BiSeries src = space_form_diastasis(n, q(b), 4);
        if (s.map) {
          CHECK(verify_immersion(*s.map, src, q(bt), 4).ok);
          CHECK_FALSE(s.first_negative);
          ImmersionMap f = factor_immersion(src, q(bt), 4);
          CHECK(pullback(f) == pullback(*s.map));
        } else if (s.first_negative) {
          CHECK(resolvability(src, q(bt), s.first_negative->degree()).kind ==
                VerdictKind::kCertifiedNotResolvable);
        }
      }
    }
  }
}

TEST_CASE("space form classification table") {
  auto rank = [](unsigned n, Rational b, Rational c, Rational bt) {
    SpaceFormDecision d = space_form_classification(n, b, c, bt);
    return d;
  };
  SpaceFormDecision a = rank(2, q(1), q(2), q(1));
  CHECK(a.exists);
  REQUIRE(a.rank);
  CHECK(*a.rank == 5);
  CHECK_FALSE(rank(1, q(1), q(1, 2), q(1)).exists);
  CHECK_FALSE(rank(1, q(1), q(3, 2), q(1)).exists);
  CHECK_FALSE(rank(1, q(1), q(1), q(0)).exists);
  CHECK_FALSE(rank(1, q(1), q(1), q(-1)).exists);
  SpaceFormDecision flat = rank(3, q(0), q(1), q(0));
  CHECK(flat.exists);
  REQUIRE(flat.rank);
  CHECK(*flat.rank == 3);
  SpaceFormDecision inf = rank(1, q(0), q(1), q(1));
  CHECK(inf.exists);
  CHECK_FALSE(inf.rank);
  CHECK(rank(2, q(-1), q(1), q(-1)).exists);
  CHECK_FALSE(rank(2, q(-1), q(1), q(-2)).exists);
  CHECK_FALSE(rank(2, q(-1), q(1), q(1)).rank);
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned k = 1; k <= 4; ++k) {
      SpaceFormDecision d = rank(n, q(1), q(k), q(1));
      REQUIRE(d.rank);
      Integer expected;
      mpz_bin_uiui(expected.get_mpz_t(), n + k, n);
      CHECK(*d.rank == expected - 1);
    }
  }
}

TEST_CASE("factor_immersion round trips on resolvable catalog models") {
  int resolvable = 0;
  for (const auto& info : model_catalog()) {
    CAPTURE(info.name);
    const unsigned deg = 6;
    Model model = get_model({info.name, {}, deg});
    for (long b : {-1, 0, 1}) {
      Verdict v = resolvability(model.diastasis, q(b), deg);
      if (v.kind != VerdictKind::kResolvableUpTo) {
        CHECK_THROWS_AS(factor_immersion(model.diastasis, q(b), deg), NotResolvableError);
        continue;
      }
      ++resolvable;
      ImmersionMap map = factor_immersion(model.diastasis, q(b), deg);
      CHECK(map.components.size() == *v.rank);
      CHECK(verify_immersion(map, model.diastasis, q(b), deg).ok);
      ImmersionMap again = factor_immersion(model.diastasis, q(b), deg);
      REQUIRE(again.components.size() == map.components.size());
      for (std::size_t i = 0; i < map.components.size(); ++i) {
        CHECK(again.components[i].radicand == map.components[i].radicand);
        CHECK(again.components[i].series == map.components[i].series);
      }
      for (const auto& c : map.components) CHECK(sgn(c.radicand) > 0);
    }
  }
  CHECK(resolvable > 20);
}

TEST_CASE("indefinite construction reproduces any diastasis") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    unsigned n = 1 + trial % 3;
    unsigned deg = 1 + trial % 4;
    BiSeries d = normalize_to_diastasis(random_hermitian(rng, n, deg, 0.4));
    std::vector<Rational> r;
    for (unsigned i = 0; i < n; ++i) r.push_back(kimm::testing::random_positive_rational(rng));
    ImmersionMap map = indefinite_immersion(d, deg, r);
    CHECK(map.target == TargetKind::kIndefinite);
    CHECK(verify_immersion(map, d, q(0), deg).ok);
    CHECK(pullback(map) == d);
  }
  Model cigar = get_model({"cigar", {}, 6});
  CHECK(verify_immersion(indefinite_immersion(cigar.diastasis, 6), cigar.diastasis, 0, 6).ok);
  CHECK_THROWS_AS(indefinite_immersion(cigar.diastasis, 6, {q(-1)}), Error);
}

TEST_CASE("verification catches a perturbed map") {
  BiSeries d = space_form_diastasis(2, q(-1), 4);
  ImmersionMap map = factor_immersion(d, q(0), 4);
  map.components[2].radicand += q(1, 1000);
  ImmersionCheck c = verify_immersion(map, d, q(0), 4);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.expected == c.got);
}

TEST_CASE("non resolvable input carries its verdict") {
  BiSeries d = space_form_diastasis(1, q(1), 4) * CScalar(q(1, 2));
  try {
    factor_immersion(d, q(1), 4);
    FAIL("expected NotResolvableError");
  } catch (const NotResolvableError& e) {
    CHECK(e.code() == ErrorCode::kNotResolvable);
    CHECK(e.verdict().psd.value == q(-1, 8));
  }
}
