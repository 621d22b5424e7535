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

#ifndef KIMM_BELL_HPP
#define KIMM_BELL_HPP

#include <optional>
#include <vector>

#include "kimm/scalar.hpp"

namespace kimm {

/// B(n, k) for 0 <= k <= n <= n_max from the convolution recurrence
/// B(n, k) = sum_i C(n-1, i-1) x_i B(n-i, k-1), with B(0, 0) = 1.
class BellTable {
 public:
  /// x[0] is x_1. Missing entries count as zero.
  BellTable(unsigned n_max, std::vector<Rational> x);

  unsigned n_max() const { return n_max_; }
  const Rational& partial(unsigned n, unsigned k) const;
  /// sum_{k=1}^n B(n, k); Y_0 = 0.
  Rational complete(unsigned n) const;

 private:
  unsigned n_max_;
  std::vector<Rational> x_;
  std::vector<std::vector<Rational>> b_;
};

/// Throws kOutOfRange unless 1 <= k <= n and x has at least n - k + 1 entries.
Rational bell_partial(unsigned n, unsigned k, const std::vector<Rational>& x);
/// Y_n(x); n = 0 gives 0.
Rational bell_complete(unsigned n, const std::vector<Rational>& x);

struct CigarScan {
  Rational c;
  unsigned n_max = 0;
  std::optional<unsigned> first_negative_n;
  /// Y_n at first_negative_n.
  Rational bell_value;
  /// |z|^{2n} coefficient of exp(c D) - 1 at first_negative_n.
  Rational coefficient;
  /// (-1)^n Y_n / n! for n = 1..n_max.
  std::vector<Rational> coefficients;
};

/// Scans Y_n(a) for a_j = -c j!/j^2 and cross-checks every coefficient
/// against the series exponential of c times the cigar diastasis.
CigarScan cigar_scan(const Rational& c, unsigned n_max);

struct RationalInterval {
  Rational lo;
  Rational hi;
};

/// pi enclosure from Machin's formula with an error below 10^-digits.
RationalInterval pi_enclosure(unsigned digits);

struct CigarLimit {
  Rational c;
  unsigned terms = 0;
  /// Enclosure of sum_{k=1}^{terms} (-1)^{k+1} c^k / k! (pi^2/6)^k.
  RationalInterval partial_sum;
  /// Bound on the omitted alternating tail.
  Rational tail_bound;
  double value = 0;
  /// 1 - exp(-c pi^2 / 6) in long double.
  double reference = 0;
};

CigarLimit cigar_limit(const Rational& c, unsigned terms);

}  // namespace kimm

#endif  // KIMM_BELL_HPP
