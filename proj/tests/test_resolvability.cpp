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
using kimm::testing::random_cscalar;
using kimm::testing::random_hermitian;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

using Dense = std::vector<std::vector<CScalar>>;

HermMatrix from_dense(const Dense& a) {
  HermMatrix m;
  m.arity = 1;
  m.degree = static_cast<unsigned>(a.size());
  for (unsigned i = 0; i < a.size(); ++i) m.basis.push_back(i + 1);
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned j = 0; j < a.size(); ++j)
      if (!a[i][j].is_zero()) m.entries.emplace(std::make_pair(i, j), a[i][j]);
  return m;
}

unsigned row_rank(Dense rows) {
  unsigned rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      CScalar f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

CScalar dense_form(const Dense& a, const std::vector<CScalar>& w) {
  CScalar acc;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) acc += w[i].conj() * a[i][j] * w[j];
  return acc;
}

void check_witness(const HermMatrix& m, const PsdVerdict& v) {
  REQUIRE_FALSE(v.psd);
  REQUIRE(v.witness.size() == m.size());
  std::size_t first = 0;
  while (first < v.witness.size() && v.witness[first].is_zero()) ++first;
  REQUIRE(first < v.witness.size());
  CHECK(v.witness[first] == CScalar(1));
  CScalar value = quadratic_form(m, v.witness);
  CHECK(value.is_real());
  CHECK(value.re == v.value);
  CHECK(sgn(v.value) < 0);
}

}  // namespace

TEST_CASE("gram matrices are certified with the row rank") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    unsigned size = 1 + trial % 8;
    unsigned rows = 1 + (trial / 8) % size;
    Dense b(rows, std::vector<CScalar>(size));
    std::bernoulli_distribution zero(0.3);
    for (auto& row : b)
      for (auto& x : row) x = zero(rng) ? CScalar() : random_cscalar(rng, trial % 3 == 0);
    Dense a(size, std::vector<CScalar>(size));
    for (unsigned i = 0; i < size; ++i)
      for (unsigned j = 0; j < size; ++j)
        for (unsigned l = 0; l < rows; ++l) a[i][j] += b[l][i].conj() * b[l][j];
    PsdVerdict v = psd_certify(from_dense(a), {false, false});
    CHECK(v.psd);
    CHECK(v.rank == row_rank(b));
    CHECK(v.pivots.size() == v.rank);
  }
}

TEST_CASE("negative witnesses re-evaluate exactly") {
  std::mt19937 rng(4);
  int negatives = 0;
  for (int trial = 0; trial < 120; ++trial) {
    unsigned size = 2 + trial % 6;
    Dense a(size, std::vector<CScalar>(size));
    for (unsigned i = 0; i < size; ++i) {
      a[i][i] = CScalar(kimm::testing::random_rational(rng));
      for (unsigned j = i + 1; j < size; ++j) {
        a[i][j] = random_cscalar(rng);
        a[j][i] = a[i][j].conj();
      }
    }
    HermMatrix m = from_dense(a);
    PsdVerdict v = psd_certify(m, {false, false});
    if (v.psd) continue;
    ++negatives;
    check_witness(m, v);
    CScalar value = dense_form(a, v.witness);
    CHECK(value == CScalar(v.value));
  }
  CHECK(negatives > 50);
}

TEST_CASE("zero diagonal with coupling gives a two by two witness") {
  Dense a(2, std::vector<CScalar>(2));
  a[0][1] = CScalar(q(2), q(1));
  a[1][0] = a[0][1].conj();
  a[1][1] = CScalar(q(3));
  HermMatrix m = from_dense(a);
  PsdVerdict v = psd_certify(m);
  check_witness(m, v);
}

TEST_CASE("diagonal fast path agrees with pivoting") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    unsigned size = 1 + trial % 7;
    Dense a(size, std::vector<CScalar>(size));
    for (unsigned i = 0; i < size; ++i)
      if (trial % 4) a[i][i] = CScalar(kimm::testing::random_rational(rng));
      else a[i][i] = CScalar(kimm::testing::random_positive_rational(rng));
    HermMatrix m = from_dense(a);
    PsdVerdict fast = psd_certify(m);
    PsdVerdict slow = psd_certify(m, {false, false});
    CHECK(fast.psd == slow.psd);
    bool all_nonneg = true;
    for (unsigned i = 0; i < size; ++i) all_nonneg = all_nonneg && sgn(a[i][i].re) >= 0;
    CHECK(fast.psd == all_nonneg);
    if (fast.psd) {
      CHECK(fast.rank == slow.rank);
    } else {
      check_witness(m, fast);
      check_witness(m, slow);
    }
  }
}

TEST_CASE("circular models certify the same block-wise and monolithically") {
  const char* names[] = {"cp", "ch", "flat", "springer", "hartogs_alpha", "hartogs_invsqrt",
                         "hartogs_tp", "rhp_cubic", "omega1", "omega2", "omega3", "omega4",
                         "cartan_hartogs", "fbh", "cigar", "taubnut", "phiB"};
  for (const char* name : names) {
    CAPTURE(name);
    ModelSpec spec{name, {}, 4};
    Model model = get_model(spec);
    for (long b : {-1, 0, 1, 2}) {
      CAPTURE(b);
      HermMatrix m = build_matrix(b_transform(model.diastasis, q(b)), 4);
      CHECK(m.circular);
      PsdVerdict blocks = psd_certify(m);
      PsdVerdict mono = psd_certify(m, {false, false});
      CHECK(blocks.psd == mono.psd);
      if (blocks.psd) {
        CHECK(blocks.rank == mono.rank);
      } else {
        check_witness(m, blocks);
        check_witness(m, mono);
      }
    }
  }
  Model tube = get_model({"calabi_tube", {}, 4});
  CHECK_FALSE(build_matrix(tube.diastasis, 4).circular);
}

TEST_CASE("build_matrix rejects potentials") {
  BiSeries phi = BiSeries::norm2(1, 2);
  phi.set(1, 0, CScalar(q(1)));
  phi.set(0, 1, CScalar(q(1)));
  CHECK_THROWS_AS(build_matrix(phi, 2), Error);
  CHECK_THROWS_AS(build_matrix(BiSeries::norm2(1, 2), 3), Error);
}

TEST_CASE("space form ranks") {
  struct Case {
    unsigned n, k, rank;
  } cases[] = {{1, 1, 1}, {1, 2, 2}, {1, 3, 3}, {2, 1, 2}, {2, 2, 5}};
  for (const auto& c : cases) {
    BiSeries d = space_form_diastasis(c.n, q(1), 2 * c.k) * CScalar(q(c.k));
    Verdict v = resolvability(d, q(1), 2 * c.k);
    CHECK(v.kind == VerdictKind::kResolvableUpTo);
    REQUIRE(v.rank);
    CHECK(*v.rank == c.rank);
  }
  for (long num : {1, 3}) {
    BiSeries d = space_form_diastasis(1, q(1), 4) * CScalar(q(num, 2));
    Verdict v = resolvability(d, q(1), 4);
    CHECK(v.kind == VerdictKind::kCertifiedNotResolvable);
    // (1 + |z|^2)^c - 1 has first negative coefficient C(c, 2) = -1/8 or C(c, 3) = -1/16.
    CHECK(v.witness_degree == (num == 1 ? 2u : 3u));
    CHECK(v.psd.value == (num == 1 ? q(-1, 8) : q(-1, 16)));
  }
}

TEST_CASE("negative verdicts persist at higher degree") {
  std::mt19937 rng(31);
  int seen = 0;
  for (int trial = 0; trial < 40; ++trial) {
    BiSeries d = normalize_to_diastasis(random_hermitian(rng, 2, 5, 0.25));
    Rational b = q(trial % 3 - 1);
    for (unsigned d0 = 1; d0 <= 4; ++d0) {
      Verdict v = resolvability(d, b, d0);
      if (v.kind != VerdictKind::kCertifiedNotResolvable) continue;
      ++seen;
      for (unsigned e = d0 + 1; e <= 5; ++e)
        CHECK(resolvability(d, b, e).kind == VerdictKind::kCertifiedNotResolvable);
      break;
    }
  }
  CHECK(seen > 10);
  BiSeries half = space_form_diastasis(1, q(1), 8) * CScalar(q(1, 2));
  for (unsigned e = 2; e <= 8; ++e)
    CHECK(resolvability(half, q(1), e).kind == VerdictKind::kCertifiedNotResolvable);
}

TEST_CASE("named certificates") {
  Model omega4 = get_model({"omega4", {{"n", "3"}}, 2});
  Verdict v = resolvability(omega4.diastasis, 0, 2);
  REQUIRE(v.kind == VerdictKind::kCertifiedNotResolvable);
  CHECK(v.psd.value == q(-9));
  HermMatrix m = build_matrix(omega4.diastasis, 2);
  auto ord = graded_order(3, 2);
  for (unsigned i = 0; i < m.size(); ++i) {
    const MultiIndex& mi = ord->index(m.basis[i]);
    bool square = mi.degree() == 2 &&
                  std::count(mi.exponents.begin(), mi.exponents.end(), 2u) == 1;
    CHECK(v.psd.witness[i] == (square ? CScalar(1) : CScalar()));
  }

  Model phib = get_model({"phiB", {}, 3});
  Verdict w = resolvability(phib.diastasis, 0, 3);
  REQUIRE(w.kind == VerdictKind::kCertifiedNotResolvable);
  CHECK(w.witness_degree == 2);
  CHECK(w.psd.value == q(-3));
}

TEST_CASE("hartogs criterion") {
  for (Rational p : {q(1, 2), q(1), q(3)})
    for (Rational c : {q(1, 3), q(1), q(5, 2)})
      CHECK(hartogs_criterion(hartogs_profile_tp(p, 8), c, 8, 8).passed);

  UniSeries inv = hartogs_profile_alpha(1, 8);
  for (long c2 = 1; c2 <= 8; ++c2) {
    HartogsVerdict v = hartogs_criterion(inv, q(c2, 2), 8, 8);
    CHECK(v.passed == (c2 % 2 == 0));
  }
  HartogsVerdict w = hartogs_criterion(inv, q(3, 2), 8, 8);
  CHECK(w.j == 3);
  CHECK(w.k == 0);
  CHECK(w.coefficient == q(-1, 16));

  UniSeries rhp = hartogs_profile_rhp_cubic(25);
  for (Rational c : {q(1, 2), q(1), q(2), q(5)}) {
    HartogsVerdict v = hartogs_criterion(rhp, c, 25, 25);
    CHECK_FALSE(v.passed);
    CHECK(v.j == 3);
    CHECK(v.k == 0);
    CHECK(sgn(v.coefficient) < 0);
  }
  CHECK(hartogs_criterion(rhp, q(1), 25, 25).coefficient == q(-14255, 35937));

  UniSeries isq = hartogs_profile_invpow(q(1, 2), 8);
  CHECK_FALSE(hartogs_criterion(isq, q(1), 8, 8).passed);
  CHECK_FALSE(hartogs_criterion(isq, q(2), 8, 8).passed);
  for (long c : {1, 2}) {
    Model m = get_model({"hartogs_invsqrt", {{"scale", std::to_string(c)}}, 4});
    for (long b : {-1, 0, 1})
      CHECK(resolvability(m.diastasis, q(b), 4).kind == VerdictKind::kCertifiedNotResolvable);
  }
}

TEST_CASE("hartogs metric check") {
  CHECK(hartogs_metric_check(hartogs_profile_springer(4)));
  CHECK(hartogs_metric_check(hartogs_profile_tp(q(1, 2), 4)));
  CHECK(hartogs_metric_check(hartogs_profile_rhp_cubic(4)));
  UniSeries up(std::vector<Rational>{q(1), q(1)});
  CHECK_FALSE(hartogs_metric_check(up));
}
