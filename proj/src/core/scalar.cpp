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

#include "kimm/scalar.hpp"

#include <cctype>

namespace kimm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational make_rational(long p, long q) {
  if (q == 0) throw Error(ErrorCode::kDomain, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  auto num = trim(s.substr(0, slash));
  if (!valid_integer(num))
    throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
  Rational r;
  if (slash == std::string_view::npos) {
    r = Rational(parse_integer(num));
  } else {
    auto den = trim(s.substr(slash + 1));
    if (!valid_integer(den) || den.front() == '-')
      throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
    r = Rational(parse_integer(num), d);
    r.canonicalize();
  }
  return r;
}

std::string to_pq(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

CScalar CScalar::inverse() const {
  Rational n = norm2();
  if (sgn(n) == 0) throw Error(ErrorCode::kDomain, "division by zero");
  return {re / n, -im / n};
}

CScalar& CScalar::operator+=(const CScalar& o) {
  re += o.re;
  if (sgn(o.im) != 0) im += o.im;
  return *this;
}

CScalar& CScalar::operator-=(const CScalar& o) {
  re -= o.re;
  if (sgn(o.im) != 0) im -= o.im;
  return *this;
}

CScalar& CScalar::operator*=(const CScalar& o) {
  *this = *this * o;
  return *this;
}

CScalar& CScalar::operator*=(const Rational& o) {
  re *= o;
  if (sgn(im) != 0) im *= o;
  return *this;
}

CScalar operator+(CScalar a, const CScalar& b) { return a += b; }
CScalar operator-(CScalar a, const CScalar& b) { return a -= b; }
CScalar operator-(const CScalar& a) { return {-a.re, -a.im}; }

CScalar operator*(const CScalar& a, const CScalar& b) {
  // Most coefficients in this library are real; skip the cross terms then.
  if (a.is_real() && b.is_real()) return CScalar(a.re * b.re);
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CScalar operator*(CScalar a, const Rational& b) { return a *= b; }

CScalar operator/(const CScalar& a, const CScalar& b) {
  if (b.is_real()) {
    if (sgn(b.re) == 0) throw Error(ErrorCode::kDomain, "division by zero");
    return {a.re / b.re, a.im / b.re};
  }
  return a * b.inverse();
}

std::string to_string(const CScalar& z) {
  std::string out = to_pq(z.re);
  if (sgn(z.im) < 0) {
    out += "-" + to_pq(Rational(-z.im));
  } else {
    out += "+" + to_pq(z.im);
  }
  return out + " i";
}

CScalar parse_cscalar(std::string_view text) {
  auto s = trim(text);
  if (s.empty() || s.back() != 'i') return CScalar(parse_rational(s));
  s.remove_suffix(1);
  s = trim(s);
  // Split at the sign that starts the imaginary part (not the leading sign).
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos)
    return CScalar(Rational(0), parse_rational(s));
  return CScalar(parse_rational(s.substr(0, split)), parse_rational(s.substr(split)));
}

Rational binomial(const Rational& e, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) {
    out *= (e - i);
    out /= (i + 1);
  }
  return out;
}

Rational factorial(unsigned k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

}  // namespace kimm
