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

#ifndef KIMM_SCALAR_HPP
#define KIMM_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace kimm {

/// Arbitrary precision rational, always canonical (lowest terms, q > 0).
using Rational = mpq_class;
using Integer = mpz_class;

enum class ErrorCode {
  kInvalidArgument = 1,
  kOutOfRange,
  kDomain,
  kArityMismatch,
  kNotADiastasis,
  kNotResolvable,
  kDivergence,
  kParse,
  kGauge,
};

/// Single exception type thrown by the core; the C API maps `code()` to a
/// status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

Rational make_rational(long p, long q = 1);

/// Parses "p", "p/q", "-p/q" (whitespace tolerant). Decimal points are
/// rejected: load-bearing parameters are exact.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form (q is printed even when it is 1).
std::string to_pq(const Rational& q);

/// Exact Gaussian rational re + im*i.
struct CScalar {
  Rational re;
  Rational im;

  CScalar() = default;
  CScalar(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  CScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  CScalar(long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  CScalar conj() const { return {re, -im}; }
  /// |q|^2 = re^2 + im^2.
  Rational norm2() const { return re * re + im * im; }
  CScalar inverse() const;

  CScalar& operator+=(const CScalar& o);
  CScalar& operator-=(const CScalar& o);
  CScalar& operator*=(const CScalar& o);
  CScalar& operator*=(const Rational& o);

  friend bool operator==(const CScalar& a, const CScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
};

CScalar operator+(CScalar a, const CScalar& b);
CScalar operator-(CScalar a, const CScalar& b);
CScalar operator-(const CScalar& a);
CScalar operator*(const CScalar& a, const CScalar& b);
CScalar operator*(CScalar a, const Rational& b);
CScalar operator/(const CScalar& a, const CScalar& b);

/// "p/q+p/q i" (imaginary part always present; sign folded into the '+').
std::string to_string(const CScalar& z);
/// Accepts the to_string() form as well as a bare rational.
CScalar parse_cscalar(std::string_view text);

/// Generalized binomial coefficient C(e, k) for rational e.
Rational binomial(const Rational& e, unsigned k);
Rational factorial(unsigned k);

}  // namespace kimm

#endif  // KIMM_SCALAR_HPP
