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

#ifndef KIMM_SERIES_HPP
#define KIMM_SERIES_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kimm/multi_index.hpp"
#include "kimm/scalar.hpp"

namespace kimm {

class HolSeries;

/// Truncated germ sum_{j,k} a_{jk} z^{m_j} zbar^{m_k} with |m_j| <= d and
/// |m_k| <= d. Zero coefficients are never stored.
///
/// The truncation is per index (holomorphic degree and antiholomorphic degree
/// each bounded by d). Monomials outside that box form an ideal, so every ring
/// operation below is exact on the coefficients it keeps.
class BiSeries {
 public:
  using Key = std::pair<Ordinal, Ordinal>;
  using Terms = std::map<Key, CScalar>;

  BiSeries(unsigned arity, unsigned degree);

  static BiSeries constant(unsigned arity, unsigned degree, const CScalar& c);
  static BiSeries monomial(unsigned arity, unsigned degree, const MultiIndex& hol,
                           const MultiIndex& anti, const CScalar& c);
  /// |z_var|^2.
  static BiSeries norm2(unsigned arity, unsigned degree, unsigned var);
  /// sum_{v in vars} |z_v|^2; all variables when `vars` is empty.
  static BiSeries norm2(unsigned arity, unsigned degree, const std::vector<unsigned>& vars = {});
  static BiSeries holomorphic(const HolSeries& h);
  /// conj(h) as a function of zbar.
  static BiSeries antiholomorphic(const HolSeries& h);
  /// f * conj(g), truncated.
  static BiSeries outer(const HolSeries& f, const HolSeries& g);

  unsigned arity() const { return arity_; }
  unsigned degree() const { return degree_; }
  const GradedOrder& order() const { return *order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CScalar coeff(Ordinal j, Ordinal k) const;
  CScalar coeff(const MultiIndex& hol, const MultiIndex& anti) const;
  void set(Ordinal j, Ordinal k, const CScalar& c);
  void add_to(Ordinal j, Ordinal k, const CScalar& c);

  /// a_{jk} = conj(a_{kj}) for every stored entry.
  bool is_hermitian() const;
  /// Smallest |m_j| + |m_k| over nonzero entries (0 for the zero series).
  unsigned valuation() const;

  BiSeries truncated(unsigned degree) const;
  /// Re-expresses the series in `new_arity` variables; variable i goes to
  /// var_map[i].
  BiSeries embedded(unsigned new_arity, const std::vector<unsigned>& var_map) const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  BiSeries& operator*=(const CScalar& c);

  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  unsigned arity_;
  unsigned degree_;
  std::shared_ptr<const GradedOrder> order_;
  Terms terms_;
};

BiSeries operator+(BiSeries a, const BiSeries& b);
BiSeries operator-(BiSeries a, const BiSeries& b);
BiSeries operator-(BiSeries a);
BiSeries operator*(BiSeries a, const CScalar& c);
BiSeries operator*(const CScalar& c, BiSeries a);
/// Product truncated at min(d_a, d_b). Throws kArityMismatch.
BiSeries mul(const BiSeries& a, const BiSeries& b);
inline BiSeries operator*(const BiSeries& a, const BiSeries& b) { return mul(a, b); }

/// sum_k coeffs[k] a^k by Horner's rule; a must have zero constant term.
BiSeries compose(const std::vector<Rational>& coeffs, const BiSeries& a);
/// exp(a) - 1. Throws kDomain when a_{00} != 0.
BiSeries exp_series(const BiSeries& a);
/// log(1 + a).
BiSeries log1p_series(const BiSeries& a);
/// (1 + a)^e - 1 via the generalized binomial series.
BiSeries pow1p_series(const BiSeries& a, const Rational& e);

/// Determinant by Laplace expansion with memoized minors; entries must share
/// arity, result degree is the minimum entry degree.
BiSeries det_series(const std::vector<std::vector<BiSeries>>& m);

/// Text format: one line per coefficient, "m_j ; m_k ; re ; im", rationals as
/// p/q, graded-lex order on j then k. A leading "# kimm-biseries arity=N
/// degree=D" comment carries the truncation.
std::string to_text(const BiSeries& s);
/// Parses the text format. `degree` overrides the header; when neither is
/// given the largest degree present is used. Errors carry line numbers.
BiSeries parse_biseries(std::string_view text, int degree = -1);

/// Holomorphic truncated series sum_j c_j z^{m_j}.
class HolSeries {
 public:
  HolSeries(unsigned arity, unsigned degree);

  static HolSeries monomial(unsigned arity, unsigned degree, const MultiIndex& m,
                            const CScalar& c);

  unsigned arity() const { return arity_; }
  unsigned degree() const { return degree_; }
  const GradedOrder& order() const { return *order_; }
  const std::map<Ordinal, CScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CScalar coeff(Ordinal j) const;
  void set(Ordinal j, const CScalar& c);
  void add_to(Ordinal j, const CScalar& c);

  /// Multiplies by z^m, dropping terms beyond the degree.
  HolSeries times_monomial(const MultiIndex& m) const;
  HolSeries truncated(unsigned degree) const;
  HolSeries embedded(unsigned new_arity, const std::vector<unsigned>& var_map,
                     unsigned new_degree) const;
  HolSeries& operator+=(const HolSeries& o);
  HolSeries& operator*=(const CScalar& c);

  friend bool operator==(const HolSeries& a, const HolSeries& b) {
    return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  unsigned arity_;
  unsigned degree_;
  std::shared_ptr<const GradedOrder> order_;
  std::map<Ordinal, CScalar> terms_;
};

/// "m ; re ; im" lines, same conventions as the BiSeries format.
std::string to_text(const HolSeries& s);
HolSeries parse_holseries(std::string_view text, unsigned arity, unsigned degree);

/// Exact univariate power series sum_{k<=degree} c_k x^k with rational
/// coefficients. Used for radial profiles (Hartogs functions, ODE jets).
class UniSeries {
 public:
  explicit UniSeries(unsigned degree) : c_(degree + 1) {}
  explicit UniSeries(std::vector<Rational> coeffs);

  static UniSeries x(unsigned degree);
  static UniSeries constant(unsigned degree, const Rational& c);

  unsigned degree() const { return static_cast<unsigned>(c_.size() - 1); }
  const Rational& operator[](unsigned k) const { return c_[k]; }
  Rational& operator[](unsigned k) { return c_[k]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  UniSeries truncated(unsigned degree) const;
  UniSeries derivative() const;
  /// x * f(x).
  UniSeries shifted() const;

  UniSeries& operator+=(const UniSeries& o);
  UniSeries& operator-=(const UniSeries& o);
  UniSeries& operator*=(const Rational& c);

  friend bool operator==(const UniSeries&, const UniSeries&) = default;

 private:
  std::vector<Rational> c_;
};

UniSeries operator+(UniSeries a, const UniSeries& b);
UniSeries operator-(UniSeries a, const UniSeries& b);
UniSeries operator*(UniSeries a, const Rational& c);
UniSeries operator*(const UniSeries& a, const UniSeries& b);
/// exp(u) with u_0 = 0 (result has constant term 1).
UniSeries exp(const UniSeries& u);
/// log(1 + u) with u_0 = 0.
UniSeries log1p(const UniSeries& u);
/// (1 + u)^e with u_0 = 0 (result has constant term 1).
UniSeries pow1p(const UniSeries& u, const Rational& e);
/// f(u) for u with zero constant term.
UniSeries compose(const UniSeries& f, const UniSeries& u);

/// sum_k f_k (sum_{v in vars} |z_v|^2)^k as a BiSeries (constant term kept).
BiSeries radial(const UniSeries& f, unsigned arity, unsigned degree,
                const std::vector<unsigned>& vars = {});

/// Iterates x <- map(x) from `seed` until a fixed point is reached. The map
/// must fix one more graded degree per application, so at most degree + 1
/// applications are needed; otherwise kDivergence is thrown.
template <class Series, class Map>
Series solve_graded_fixed_point(Map&& map, Series seed, unsigned degree) {
  for (unsigned it = 0; it <= degree; ++it) {
    Series next = map(seed);
    if (next == seed) return next;
    seed = std::move(next);
  }
  Series check = map(seed);
  if (check == seed) return check;
  throw Error(ErrorCode::kDivergence,
              "graded fixed point did not stabilize after " + std::to_string(degree + 2) +
                  " applications");
}

}  // namespace kimm

#endif  // KIMM_SERIES_HPP
