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

#include "kimm/bell.hpp"

#include <cmath>

#include "kimm/models.hpp"
#include "kimm/series.hpp"

namespace kimm {

namespace {

Rational binomial_uint(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

}  // namespace

BellTable::BellTable(unsigned n_max, std::vector<Rational> x) : n_max_(n_max), x_(std::move(x)) {
  x_.resize(std::max<std::size_t>(x_.size(), n_max));
  b_.assign(n_max + 1, std::vector<Rational>(n_max + 1));
  b_[0][0] = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      Rational acc;
      for (unsigned i = 1; i + k - 1 <= n; ++i) {
        const Rational& prev = b_[n - i][k - 1];
        if (sgn(prev) == 0 || sgn(x_[i - 1]) == 0) continue;
        acc += binomial_uint(n - 1, i - 1) * x_[i - 1] * prev;
      }
      b_[n][k] = acc;
    }
  }
}

const Rational& BellTable::partial(unsigned n, unsigned k) const {
  if (n > n_max_ || k > n) throw Error(ErrorCode::kOutOfRange, "Bell index out of range");
  return b_[n][k];
}

Rational BellTable::complete(unsigned n) const {
  if (n > n_max_) throw Error(ErrorCode::kOutOfRange, "Bell index out of range");
  Rational acc;
  for (unsigned k = 1; k <= n; ++k) acc += b_[n][k];
  return acc;
}

Rational bell_partial(unsigned n, unsigned k, const std::vector<Rational>& x) {
  if (k < 1 || k > n) throw Error(ErrorCode::kOutOfRange, "bell_partial needs 1 <= k <= n");
  if (x.size() < n - k + 1)
    throw Error(ErrorCode::kOutOfRange,
                "bell_partial needs at least " + std::to_string(n - k + 1) + " values");
  return BellTable(n, x).partial(n, k);
}

Rational bell_complete(unsigned n, const std::vector<Rational>& x) {
  if (n == 0) return 0;
  if (x.size() < n)
    throw Error(ErrorCode::kOutOfRange, "bell_complete needs " + std::to_string(n) + " values");
  return BellTable(n, x).complete(n);
}

CigarScan cigar_scan(const Rational& c, unsigned n_max) {
  if (sgn(c) <= 0) throw Error(ErrorCode::kDomain, "cigar_scan: c must be positive");
  if (n_max == 0) throw Error(ErrorCode::kOutOfRange, "cigar_scan: n_max must be positive");
  std::vector<Rational> a(n_max);
  for (unsigned j = 1; j <= n_max; ++j) a[j - 1] = -c * factorial(j) / Rational(j * j);
  BellTable table(n_max, a);
  BiSeries e = exp_series(cigar_diastasis(n_max) * CScalar(c));
  CigarScan out;
  out.c = c;
  out.n_max = n_max;
  for (unsigned n = 1; n <= n_max; ++n) {
    Rational y = table.complete(n);
    Rational coeff = y / factorial(n);
    if (n % 2) coeff = -coeff;
    if (!(e.coeff(n, n) == CScalar(coeff)))
      throw Error(ErrorCode::kDivergence, "cigar_scan: Bell and series paths disagree at n = " +
                                              std::to_string(n));
    out.coefficients.push_back(coeff);
    if (!out.first_negative_n && n % 2 == 0 && sgn(y) < 0) {
      out.first_negative_n = n;
      out.bell_value = y;
      out.coefficient = coeff;
    }
  }
  return out;
}

namespace {

/// atan(1/q) enclosure from the alternating Taylor series.
RationalInterval atan_inverse(unsigned q, const Rational& eps) {
  Rational x(1, q);
  Rational x2 = x * x;
  Rational term = x;
  Rational sum;
  for (unsigned k = 0;; ++k) {
    Rational t = term / Rational(2 * k + 1);
    if (t < eps) {
      // Alternating with decreasing terms: the next term bounds the error.
      return k % 2 ? RationalInterval{sum, sum + t} : RationalInterval{sum - t, sum};
    }
    sum += k % 2 ? -t : t;
    term *= x2;
  }
}

}  // namespace

RationalInterval pi_enclosure(unsigned digits) {
  Integer ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, digits + 2);
  Rational eps = Rational(1) / Rational(ten);
  RationalInterval a = atan_inverse(5, eps);
  RationalInterval b = atan_inverse(239, eps);
  return {Rational(16) * a.lo - Rational(4) * b.hi, Rational(16) * a.hi - Rational(4) * b.lo};
}

CigarLimit cigar_limit(const Rational& c, unsigned terms) {
  if (terms == 0) throw Error(ErrorCode::kOutOfRange, "cigar_limit: terms must be positive");
  if (sgn(c) <= 0) throw Error(ErrorCode::kDomain, "cigar_limit: c must be positive");
  RationalInterval pi = pi_enclosure(40);
  RationalInterval z{pi.lo * pi.lo / 6, pi.hi * pi.hi / 6};
  CigarLimit out;
  out.c = c;
  out.terms = terms;
  Rational plo = 1, phi = 1, fact = 1, cpow = 1;
  for (unsigned k = 1; k <= terms + 1; ++k) {
    plo *= z.lo;
    phi *= z.hi;
    fact *= k;
    cpow *= c;
    Rational tlo = cpow * plo / fact;
    Rational thi = cpow * phi / fact;
    if (k == terms + 1) {
      // Later terms shrink at least geometrically with ratio c z / (terms + 2).
      Rational ratio = c * z.hi / Rational(terms + 2);
      if (ratio >= 1)
        throw Error(ErrorCode::kOutOfRange, "cigar_limit: too few terms for a tail bound");
      out.tail_bound = thi / (1 - ratio);
      break;
    }
    if (k % 2) {
      out.partial_sum.lo += tlo;
      out.partial_sum.hi += thi;
    } else {
      out.partial_sum.lo -= thi;
      out.partial_sum.hi -= tlo;
    }
  }
  out.value = Rational((out.partial_sum.lo + out.partial_sum.hi) / 2).get_d();
  const long double pi_ld = 3.141592653589793238462643383279502884L;
  out.reference =
      static_cast<double>(1.0L - std::exp(-static_cast<long double>(c.get_d()) * pi_ld * pi_ld / 6.0L));
  return out;
}

}  // namespace kimm
