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
#include "kimm/models.hpp"
#include "kimm/resolvability.hpp"
#include "support.hpp"

using namespace kimm;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

MultiIndex mi(std::vector<unsigned> e) { return MultiIndex{std::move(e)}; }

CScalar coeff(const BiSeries& s, std::vector<unsigned> a, std::vector<unsigned> b) {
  return s.coeff(mi(std::move(a)), mi(std::move(b)));
}

BiSeries swapped(const BiSeries& s) { return s.embedded(2, {1, 0}); }

}  // namespace

TEST_CASE("space form diastasis coefficients") {
  BiSeries d = space_form_diastasis(2, q(-1), 4);
  CHECK(coeff(d, {1, 0}, {1, 0}) == CScalar(1));
  CHECK(coeff(d, {2, 0}, {2, 0}) == CScalar(q(1, 2)));
  CHECK(coeff(d, {1, 1}, {1, 1}) == CScalar(1));
  CHECK(coeff(d, {1, 1}, {2, 0}) == CScalar());
  BiSeries f = space_form_diastasis(3, q(0), 4);
  CHECK(f == BiSeries::norm2(3, 4));
  BiSeries cp = space_form_diastasis(1, q(2), 3);
  CHECK(coeff(cp, {2}, {2}) == CScalar(q(-1)));
  CHECK(coeff(cp, {3}, {3}) == CScalar(q(4, 3)));
}

TEST_CASE("cartan domains") {
  for (unsigned n = 1; n <= 3; ++n) {
    BergmanDiastasis b = cartan_bergman_diastasis({CartanType::kOmega1, 1, n}, 4);
    CHECK(b.genus == n + 1);
    CHECK(b.diastasis == space_form_diastasis(n, q(-1), 4) * CScalar(q(n + 1)));
  }
  BiSeries ch1 = space_form_diastasis(1, q(-1), 5);
  CHECK(cartan_bergman_diastasis({CartanType::kOmega2, 1, 1}, 5).diastasis ==
        ch1 * CScalar(q(2)));
  CHECK(cartan_bergman_diastasis({CartanType::kOmega3, 1, 2}, 5).diastasis ==
        ch1 * CScalar(q(2)));
  CHECK(cartan_bergman_diastasis({CartanType::kOmega4, 1, 1}, 5).diastasis ==
        ch1 * CScalar(q(2)));
  CHECK_THROWS_AS(cartan_bergman_diastasis({CartanType::kOmega4, 1, 2}, 3), Error);
  CHECK_THROWS_AS(cartan_bergman_diastasis({CartanType::kOmega1, 4, 4}, 2), Error);

  BergmanDiastasis o4 = cartan_bergman_diastasis({CartanType::kOmega4, 1, 3}, 2);
  CHECK(o4.genus == 3);
  CHECK(coeff(o4.diastasis, {1, 0, 0}, {1, 0, 0}) == CScalar(q(6)));
  CHECK(coeff(o4.diastasis, {2, 0, 0}, {2, 0, 0}) == CScalar(q(3)));
  CHECK(coeff(o4.diastasis, {2, 0, 0}, {0, 2, 0}) == CScalar(q(-3)));

  CHECK(cartan_dimension(parse_cartan_domain("omega1:2,3")) == 6);
  CHECK(cartan_dimension(parse_cartan_domain("omega2:3")) == 6);
  CHECK(cartan_dimension(parse_cartan_domain("omega3:4")) == 6);
  CHECK(cartan_dimension(parse_cartan_domain("omega4:5")) == 5);
  CHECK(cartan_dimension(parse_cartan_domain("ch:2")) == 2);
  CHECK(to_string(parse_cartan_domain("omega1:2,3")) == "omega1:2,3");
  CHECK_THROWS_AS(parse_cartan_domain("omega5:2"), Error);
  CHECK_THROWS_AS(parse_cartan_domain("omega1:2"), Error);
  CHECK_THROWS_AS(parse_cartan_domain("omega2"), Error);
}

TEST_CASE("hartogs type models") {
  BiSeries springer = hartogs_diastasis(hartogs_profile_springer(4), 2, 4);
  CHECK(coeff(springer, {1, 0}, {1, 0}) == CScalar(1));
  CHECK(coeff(springer, {0, 1}, {0, 1}) == CScalar(1));
  CHECK(coeff(springer, {1, 1}, {1, 1}) == CScalar(1));
  CHECK(coeff(springer, {2, 0}, {2, 0}) == CScalar());
  CHECK(coeff(springer, {0, 2}, {0, 2}) == CScalar(q(1, 2)));
  CHECK(springer == fbh_diastasis(1, 1, q(1), q(0), 4));

  CHECK(hartogs_diastasis(hartogs_profile_tp(q(1), 4), 3, 4) ==
        space_form_diastasis(3, q(-1), 4));
  CHECK(hartogs_diastasis(hartogs_profile_alpha(q(1), 4), 1, 4) ==
        space_form_diastasis(1, q(1), 4));

  UniSeries rhp = hartogs_profile_rhp_cubic(3);
  CHECK(rhp[0] == q(33, 16));
  CHECK(rhp[1] == q(-1, 16));
  CHECK(rhp[2] == q(-3));
  CHECK(rhp[3] == q(1));
  UniSeries a = hartogs_profile_alpha(q(2), 3);
  CHECK(a[1] == q(-1, 2));
  CHECK(a[2] == q(1, 4));

  BiSeries ch = cartan_hartogs_diastasis(
      cartan_bergman_diastasis({CartanType::kOmega1, 1, 1}, 4).log_norm, q(1), 4);
  CHECK(ch == space_form_diastasis(2, q(-1), 4));
}

TEST_CASE("taub-nut") {
  BiSeries slice0 = taubnut_potential(q(0), TaubNutMode::kSlice, 5);
  CHECK(slice0 == BiSeries::norm2(1, 5));
  BiSeries full0 = taubnut_potential(q(0), TaubNutMode::kFull, 4);
  CHECK(full0 == BiSeries::norm2(2, 4));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Rational alpha = kimm::testing::random_positive_rational(rng);
    Rational m = kimm::testing::random_positive_rational(rng);
    BiSeries phi = taubnut_potential(m, TaubNutMode::kSlice, 3);
    BiSeries e = b_transform(phi * CScalar(alpha), q(1));
    CHECK(coeff(e, {2}, {2}) == CScalar(alpha * (alpha - 2 * m) / 2));
    CHECK(coeff(phi, {2}, {2}) == CScalar(-m));
    Verdict v = resolvability(phi * CScalar(alpha), q(1), 2);
    CHECK((v.kind == VerdictKind::kCertifiedNotResolvable) == (m > alpha / 2));
    BiSeries full = taubnut_potential(m, TaubNutMode::kFull, 3);
    CHECK(swapped(full) == full);
    CHECK(full.is_hermitian());
  }
}

TEST_CASE("cigar and phi_B") {
  BiSeries c = cigar_diastasis(6);
  CHECK(c.terms().size() == 6);
  for (unsigned j = 1; j <= 6; ++j)
    CHECK(c.coeff(j, j) == CScalar(make_rational(j % 2 ? 1 : -1, long(j * j))));
  BiSeries b = phi_b_diastasis(2);
  CHECK(coeff(b, {1, 0, 0}, {1, 0, 0}) == CScalar(q(3)));
  CHECK(coeff(b, {2, 0, 0}, {2, 0, 0}) == CScalar(q(3, 2)));
  CHECK(coeff(b, {0, 0, 2}, {0, 0, 2}) == CScalar(q(3, 2)));
  CHECK(coeff(b, {0, 2, 0}, {0, 2, 0}) == CScalar(q(3)));
  CHECK(coeff(b, {1, 0, 1}, {1, 0, 1}) == CScalar());
  CHECK(coeff(b, {1, 1, 0}, {1, 1, 0}) == CScalar(q(6)));
  CHECK(coeff(b, {0, 1, 1}, {0, 1, 1}) == CScalar(q(6)));
  CHECK(coeff(b, {1, 0, 1}, {0, 2, 0}) == CScalar(q(3)));
  CHECK(coeff(b, {0, 2, 0}, {1, 0, 1}) == CScalar(q(3)));
}

TEST_CASE("calabi tube") {
  CalabiTube t = calabi_tube(2, 6);
  CHECK(t.y[0] == 0);
  CHECK(t.y[2] == q(1, 2));
  CHECK(t.y[4] == q(1, 32));
  for (unsigned k = 1; k < t.y.coeffs().size(); k += 2) CHECK(t.y[k] == 0);
  for (unsigned n = 1; n <= 4; ++n) {
    CalabiTube u = calabi_tube(n, 6);
    UniSeries res = calabi_residual(u.y_t, n);
    for (const auto& c : res.coeffs()) CHECK(c == 0);
    CHECK(u.y_t[1] == q(1, 2));
    CHECK(is_diastasis(u.diastasis));
    CHECK(u.diastasis.is_hermitian());
  }
  UniSeries bad = calabi_tube(2, 4).y_t;
  bad[2] += 1;
  CHECK_FALSE(calabi_residual(bad, 2)[1] == 0);
}

TEST_CASE("model catalog") {
  const auto& catalog = model_catalog();
  CHECK(catalog.size() == 20);
  for (const auto& info : catalog) {
    CAPTURE(info.name);
    bool has_scale = false;
    for (const auto& p : info.params) has_scale = has_scale || p.name == "scale";
    CHECK(has_scale);
    Model m = get_model({info.name, {}, 3});
    CHECK(m.diastasis.degree() == 3);
    CHECK(is_diastasis(m.diastasis));
    CHECK(m.diastasis.is_hermitian());
    CHECK_FALSE(m.diastasis.is_zero());
    Model scaled = get_model({info.name, {{"scale", "3/2"}}, 3});
    CHECK(scaled.diastasis == m.diastasis * CScalar(q(3, 2)));
    if (info.name != "calabi_tube") CHECK(build_matrix(m.diastasis, 3).circular);
  }
  Model sf = get_model({"cp", {{"n", "2"}, {"b", "3"}}, 3});
  REQUIRE(sf.space_form);
  CHECK(sf.space_form->n == 2);
  CHECK(sf.space_form->b == 3);
  Model ch = get_model({"cartan_hartogs", {{"base", "omega4:3"}, {"mu", "1/2"}}, 2});
  CHECK(ch.diastasis.arity() == 4);
  CHECK(*ch.genus == 3);

  CHECK_THROWS_AS(get_model({"nope", {}, 3}), Error);
  CHECK_THROWS_AS(get_model({"cp", {{"q", "1"}}, 3}), Error);
  CHECK_THROWS_AS(get_model({"cp", {{"b", "-1"}}, 3}), Error);
  CHECK_THROWS_AS(get_model({"ch", {{"b", "1"}}, 3}), Error);
  CHECK_THROWS_AS(get_model({"cp", {{"n", "x"}}, 3}), Error);
  CHECK_THROWS_AS(get_model({"cp", {{"scale", "0"}}, 3}), Error);
  CHECK_THROWS_AS(get_model({"cp", {{"scale", "0.5"}}, 3}), Error);
  CHECK_THROWS_AS(get_model({"omega4", {{"n", "2"}}, 3}), Error);
  CHECK_THROWS_AS(get_model({"taubnut", {{"mode", "half"}}, 3}), Error);
}
