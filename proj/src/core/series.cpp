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

#include "kimm/series.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace kimm {

namespace {

void require_same_arity(unsigned a, unsigned b) {
  if (a != b)
    throw Error(ErrorCode::kArityMismatch,
                "arity mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

// ---------------------------------------------------------------- BiSeries

BiSeries::BiSeries(unsigned arity, unsigned degree)
    : arity_(arity), degree_(degree), order_(graded_order(arity, degree)) {}

BiSeries BiSeries::constant(unsigned arity, unsigned degree, const CScalar& c) {
  BiSeries s(arity, degree);
  s.set(0, 0, c);
  return s;
}

BiSeries BiSeries::monomial(unsigned arity, unsigned degree, const MultiIndex& hol,
                            const MultiIndex& anti, const CScalar& c) {
  BiSeries s(arity, degree);
  s.set(s.order().ordinal(hol), s.order().ordinal(anti), c);
  return s;
}

BiSeries BiSeries::norm2(unsigned arity, unsigned degree, unsigned var) {
  if (var >= arity) throw Error(ErrorCode::kOutOfRange, "variable index out of range");
  BiSeries s(arity, degree);
  if (degree == 0) return s;
  MultiIndex m{std::vector<unsigned>(arity, 0)};
  m.exponents[var] = 1;
  Ordinal j = s.order().ordinal(m);
  s.set(j, j, CScalar(1));
  return s;
}

BiSeries BiSeries::norm2(unsigned arity, unsigned degree, const std::vector<unsigned>& vars) {
  BiSeries s(arity, degree);
  if (vars.empty()) {
    for (unsigned v = 0; v < arity; ++v) s += norm2(arity, degree, v);
  } else {
    for (unsigned v : vars) s += norm2(arity, degree, v);
  }
  return s;
}

BiSeries BiSeries::holomorphic(const HolSeries& h) {
  BiSeries s(h.arity(), h.degree());
  for (const auto& [j, c] : h.terms()) s.set(j, 0, c);
  return s;
}

BiSeries BiSeries::antiholomorphic(const HolSeries& h) {
  BiSeries s(h.arity(), h.degree());
  for (const auto& [j, c] : h.terms()) s.set(0, j, c.conj());
  return s;
}

BiSeries BiSeries::outer(const HolSeries& f, const HolSeries& g) {
  require_same_arity(f.arity(), g.arity());
  BiSeries s(f.arity(), std::min(f.degree(), g.degree()));
  Ordinal limit = s.order().size();
  for (const auto& [j, a] : f.terms()) {
    if (j >= limit) break;
    for (const auto& [k, b] : g.terms()) {
      if (k >= limit) break;
      s.set(j, k, a * b.conj());
    }
  }
  return s;
}

CScalar BiSeries::coeff(Ordinal j, Ordinal k) const {
  auto it = terms_.find({j, k});
  return it == terms_.end() ? CScalar() : it->second;
}

CScalar BiSeries::coeff(const MultiIndex& hol, const MultiIndex& anti) const {
  return coeff(order_->ordinal(hol), order_->ordinal(anti));
}

void BiSeries::set(Ordinal j, Ordinal k, const CScalar& c) {
  if (j >= order_->size() || k >= order_->size())
    throw Error(ErrorCode::kOutOfRange, "ordinal beyond truncation degree");
  if (c.is_zero()) {
    terms_.erase({j, k});
  } else {
    terms_[{j, k}] = c;
  }
}

void BiSeries::add_to(Ordinal j, Ordinal k, const CScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({j, k}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool BiSeries::is_hermitian() const {
  for (const auto& [key, c] : terms_) {
    if (!(coeff(key.second, key.first) == c.conj())) return false;
  }
  return true;
}

unsigned BiSeries::valuation() const {
  unsigned best = 0;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    unsigned v = order_->degree(key.first) + order_->degree(key.second);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

BiSeries BiSeries::truncated(unsigned degree) const {
  BiSeries s(arity_, std::min(degree, degree_));
  Ordinal limit = s.order().size();
  for (const auto& [key, c] : terms_) {
    if (key.first < limit && key.second < limit) s.terms_.emplace(key, c);
  }
  return s;
}

BiSeries BiSeries::embedded(unsigned new_arity, const std::vector<unsigned>& var_map) const {
  if (var_map.size() != arity_)
    throw Error(ErrorCode::kArityMismatch, "variable map size differs from arity");
  for (unsigned v : var_map)
    if (v >= new_arity) throw Error(ErrorCode::kOutOfRange, "variable map target out of range");
  BiSeries s(new_arity, degree_);
  std::unordered_map<Ordinal, Ordinal> memo;
  auto remap = [&](Ordinal j) {
    auto it = memo.find(j);
    if (it != memo.end()) return it->second;
    MultiIndex m{std::vector<unsigned>(new_arity, 0)};
    const auto& src = order_->index(j).exponents;
    for (unsigned i = 0; i < arity_; ++i) m.exponents[var_map[i]] += src[i];
    Ordinal o = s.order().ordinal(m);
    memo.emplace(j, o);
    return o;
  };
  for (const auto& [key, c] : terms_) s.add_to(remap(key.first), remap(key.second), c);
  return s;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  require_same_arity(arity_, o.arity_);
  if (o.degree_ < degree_) *this = truncated(o.degree_);
  Ordinal limit = order_->size();
  for (const auto& [key, c] : o.terms_) {
    if (key.first < limit && key.second < limit) add_to(key.first, key.second, c);
  }
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  require_same_arity(arity_, o.arity_);
  if (o.degree_ < degree_) *this = truncated(o.degree_);
  Ordinal limit = order_->size();
  for (const auto& [key, c] : o.terms_) {
    if (key.first < limit && key.second < limit) add_to(key.first, key.second, -c);
  }
  return *this;
}

BiSeries& BiSeries::operator*=(const CScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
BiSeries operator-(BiSeries a) { return a *= CScalar(-1); }
BiSeries operator*(BiSeries a, const CScalar& c) { return a *= c; }
BiSeries operator*(const CScalar& c, BiSeries a) { return a *= c; }

BiSeries mul(const BiSeries& a, const BiSeries& b) {
  require_same_arity(a.arity(), b.arity());
  BiSeries out(a.arity(), std::min(a.degree(), b.degree()));
  const GradedOrder& ord = out.order();
  Ordinal limit = ord.size();
  std::map<BiSeries::Key, CScalar> acc;
  for (const auto& [ka, ca] : a.terms()) {
    if (ka.first >= limit || ka.second >= limit) continue;
    for (const auto& [kb, cb] : b.terms()) {
      if (kb.first >= limit || kb.second >= limit) continue;
      Ordinal j = ord.add(ka.first, kb.first);
      if (j == kNoOrdinal) continue;
      Ordinal k = ord.add(ka.second, kb.second);
      if (k == kNoOrdinal) continue;
      auto [it, inserted] = acc.try_emplace({j, k}, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  for (auto& [key, c] : acc) out.set(key.first, key.second, c);
  return out;
}

BiSeries compose(const std::vector<Rational>& coeffs, const BiSeries& a) {
  if (!a.coeff(0, 0).is_zero())
    throw Error(ErrorCode::kDomain, "series composition needs a zero constant term");
  BiSeries acc(a.arity(), a.degree());
  if (coeffs.empty()) return acc;
  // a^K vanishes in the truncated ring once K exceeds 2d / valuation(a).
  std::size_t top = coeffs.size() - 1;
  unsigned v = a.valuation();
  if (v > 0) top = std::min<std::size_t>(top, (2 * a.degree()) / v);
  for (std::size_t i = top + 1; i-- > 0;) {
    acc = mul(acc, a);
    acc.add_to(0, 0, CScalar(coeffs[i]));
  }
  return acc;
}

namespace {

std::size_t nilpotency_bound(const BiSeries& a) {
  unsigned v = a.valuation();
  if (v == 0) return 1;
  return (2 * a.degree()) / v + 1;
}

}  // namespace

BiSeries exp_series(const BiSeries& a) {
  if (!a.coeff(0, 0).is_zero())
    throw Error(ErrorCode::kDomain, "exp_series: nonzero constant term");
  std::size_t n = nilpotency_bound(a);
  std::vector<Rational> c(n + 1);
  Rational f = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    f /= Rational(static_cast<long>(k));
    c[k] = f;
  }
  return compose(c, a);
}

BiSeries log1p_series(const BiSeries& a) {
  if (!a.coeff(0, 0).is_zero())
    throw Error(ErrorCode::kDomain, "log1p_series: nonzero constant term");
  std::size_t n = nilpotency_bound(a);
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 1; k <= n; ++k)
    c[k] = Rational(k % 2 ? 1 : -1, static_cast<long>(k));
  return compose(c, a);
}

BiSeries pow1p_series(const BiSeries& a, const Rational& e) {
  if (!a.coeff(0, 0).is_zero())
    throw Error(ErrorCode::kDomain, "pow1p_series: nonzero constant term");
  std::size_t n = nilpotency_bound(a);
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 1; k <= n; ++k) c[k] = binomial(e, static_cast<unsigned>(k));
  return compose(c, a);
}

BiSeries det_series(const std::vector<std::vector<BiSeries>>& m) {
  std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "det_series: empty matrix");
  if (n > 20) throw Error(ErrorCode::kInvalidArgument, "det_series: matrix too large");
  unsigned arity = m[0].empty() ? 0 : m[0][0].arity();
  unsigned degree = m[0].empty() ? 0 : m[0][0].degree();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorCode::kInvalidArgument, "det_series: non-square input");
    for (const auto& e : row) {
      require_same_arity(arity, e.arity());
      degree = std::min(degree, e.degree());
    }
  }
  // Expansion along rows top to bottom; the minor of the remaining rows is
  // determined by the set of still-unused columns.
  std::unordered_map<std::uint32_t, BiSeries> memo;
  std::function<BiSeries(std::size_t, std::uint32_t)> minor =
      [&](std::size_t row, std::uint32_t cols) -> BiSeries {
    if (row == n) return BiSeries::constant(arity, degree, CScalar(1));
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    BiSeries acc(arity, degree);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      const BiSeries& e = m[row][c];
      if (!e.is_zero()) {
        BiSeries term = mul(e, minor(row + 1, cols & ~(1u << c)));
        if (sign > 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return minor(0, (1u << n) - 1u).truncated(degree);
}

// ---------------------------------------------------------- text formats

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t p = line.find(';', start);
    out.push_back(line.substr(start, p == std::string_view::npos ? p : p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    fn(line_no, strip(line));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
}

Error line_error(std::size_t line_no, const std::string& what) {
  return Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + what);
}

bool read_header_field(std::string_view comment, std::string_view key, long& out) {
  std::size_t p = comment.find(key);
  if (p == std::string_view::npos) return false;
  p += key.size();
  std::size_t e = p;
  while (e < comment.size() && comment[e] >= '0' && comment[e] <= '9') ++e;
  if (e == p) return false;
  out = std::stol(std::string(comment.substr(p, e - p)));
  return true;
}

}  // namespace

std::string to_text(const BiSeries& s) {
  std::ostringstream os;
  os << "# kimm-biseries arity=" << s.arity() << " degree=" << s.degree() << "\n";
  for (const auto& [key, c] : s.terms()) {
    os << to_string(s.order().index(key.first)) << " ; " << to_string(s.order().index(key.second))
       << " ; " << to_pq(c.re) << " ; " << to_pq(c.im) << "\n";
  }
  return os.str();
}

BiSeries parse_biseries(std::string_view text, int degree) {
  struct Row {
    std::size_t line;
    MultiIndex j, k;
    CScalar c;
  };
  std::vector<Row> rows;
  long header_arity = -1;
  long header_degree = -1;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (line.empty()) return;
    if (line.front() == '#') {
      long v;
      if (read_header_field(line, "arity=", v)) header_arity = v;
      if (read_header_field(line, "degree=", v)) header_degree = v;
      return;
    }
    auto f = split_fields(line);
    if (f.size() != 4) throw line_error(line_no, "expected 'm_j ; m_k ; re ; im'");
    Row r;
    r.line = line_no;
    try {
      r.j = parse_multi_index(strip(f[0]));
      r.k = parse_multi_index(strip(f[1]));
      r.c = CScalar(parse_rational(strip(f[2])), parse_rational(strip(f[3])));
    } catch (const Error& e) {
      throw line_error(line_no, e.what());
    }
    rows.push_back(std::move(r));
  });
  long arity = header_arity;
  long max_deg = 0;
  for (const auto& r : rows) {
    if (arity < 0) arity = r.j.arity();
    if (r.j.arity() != unsigned(arity) || r.k.arity() != unsigned(arity))
      throw line_error(r.line, "multi-index arity differs from " + std::to_string(arity));
    max_deg = std::max<long>(max_deg, std::max(r.j.degree(), r.k.degree()));
  }
  if (arity <= 0) throw Error(ErrorCode::kParse, "series text has no arity (empty input)");
  long d = degree >= 0 ? degree : (header_degree >= 0 ? header_degree : max_deg);
  BiSeries s(static_cast<unsigned>(arity), static_cast<unsigned>(d));
  for (const auto& r : rows) {
    if (r.j.degree() > unsigned(d) || r.k.degree() > unsigned(d)) continue;
    s.add_to(s.order().ordinal(r.j), s.order().ordinal(r.k), r.c);
  }
  return s;
}

// --------------------------------------------------------------- HolSeries

HolSeries::HolSeries(unsigned arity, unsigned degree)
    : arity_(arity), degree_(degree), order_(graded_order(arity, degree)) {}

HolSeries HolSeries::monomial(unsigned arity, unsigned degree, const MultiIndex& m,
                              const CScalar& c) {
  HolSeries h(arity, degree);
  h.set(h.order().ordinal(m), c);
  return h;
}

CScalar HolSeries::coeff(Ordinal j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? CScalar() : it->second;
}

void HolSeries::set(Ordinal j, const CScalar& c) {
  if (j >= order_->size()) throw Error(ErrorCode::kOutOfRange, "ordinal beyond truncation degree");
  if (c.is_zero()) {
    terms_.erase(j);
  } else {
    terms_[j] = c;
  }
}

void HolSeries::add_to(Ordinal j, const CScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(j, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HolSeries HolSeries::times_monomial(const MultiIndex& m) const {
  require_same_arity(arity_, m.arity());
  HolSeries out(arity_, degree_);
  if (m.degree() > degree_) return out;
  Ordinal mo = order_->ordinal(m);
  for (const auto& [j, c] : terms_) {
    Ordinal t = order_->add(j, mo);
    if (t != kNoOrdinal) out.terms_.emplace(t, c);
  }
  return out;
}

HolSeries HolSeries::truncated(unsigned degree) const {
  HolSeries out(arity_, std::min(degree, degree_));
  Ordinal limit = out.order().size();
  for (const auto& [j, c] : terms_)
    if (j < limit) out.terms_.emplace(j, c);
  return out;
}

HolSeries HolSeries::embedded(unsigned new_arity, const std::vector<unsigned>& var_map,
                              unsigned new_degree) const {
  if (var_map.size() != arity_)
    throw Error(ErrorCode::kArityMismatch, "variable map size differs from arity");
  HolSeries out(new_arity, new_degree);
  for (const auto& [j, c] : terms_) {
    const auto& src = order_->index(j).exponents;
    MultiIndex m{std::vector<unsigned>(new_arity, 0)};
    for (unsigned i = 0; i < arity_; ++i) {
      if (var_map[i] >= new_arity)
        throw Error(ErrorCode::kOutOfRange, "variable map target out of range");
      m.exponents[var_map[i]] += src[i];
    }
    if (m.degree() > new_degree) continue;
    out.add_to(out.order().ordinal(m), c);
  }
  return out;
}

HolSeries& HolSeries::operator+=(const HolSeries& o) {
  require_same_arity(arity_, o.arity_);
  if (o.degree_ < degree_) *this = truncated(o.degree_);
  Ordinal limit = order_->size();
  for (const auto& [j, c] : o.terms_)
    if (j < limit) add_to(j, c);
  return *this;
}

HolSeries& HolSeries::operator*=(const CScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [j, v] : terms_) v *= c;
  return *this;
}

std::string to_text(const HolSeries& s) {
  std::ostringstream os;
  os << "# kimm-holseries arity=" << s.arity() << " degree=" << s.degree() << "\n";
  for (const auto& [j, c] : s.terms())
    os << to_string(s.order().index(j)) << " ; " << to_pq(c.re) << " ; " << to_pq(c.im) << "\n";
  return os.str();
}

HolSeries parse_holseries(std::string_view text, unsigned arity, unsigned degree) {
  HolSeries h(arity, degree);
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (line.empty() || line.front() == '#') return;
    auto f = split_fields(line);
    if (f.size() != 3) throw line_error(line_no, "expected 'm ; re ; im'");
    try {
      MultiIndex m = parse_multi_index(strip(f[0]));
      if (m.arity() != arity) throw Error(ErrorCode::kParse, "multi-index arity mismatch");
      if (m.degree() > degree) return;
      h.add_to(h.order().ordinal(m),
               CScalar(parse_rational(strip(f[1])), parse_rational(strip(f[2]))));
    } catch (const Error& e) {
      throw line_error(line_no, e.what());
    }
  });
  return h;
}

// --------------------------------------------------------------- UniSeries

UniSeries::UniSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.resize(1);
}

UniSeries UniSeries::x(unsigned degree) {
  UniSeries u(degree);
  if (degree >= 1) u[1] = 1;
  return u;
}

UniSeries UniSeries::constant(unsigned degree, const Rational& c) {
  UniSeries u(degree);
  u[0] = c;
  return u;
}

UniSeries UniSeries::truncated(unsigned degree) const {
  UniSeries u(std::min(degree, this->degree()));
  for (unsigned k = 0; k <= u.degree(); ++k) u[k] = c_[k];
  return u;
}

UniSeries UniSeries::derivative() const {
  UniSeries u(degree() == 0 ? 0 : degree() - 1);
  for (unsigned k = 1; k <= degree(); ++k) u[k - 1] = c_[k] * k;
  return u;
}

UniSeries UniSeries::shifted() const {
  UniSeries u(degree());
  for (unsigned k = 1; k <= degree(); ++k) u[k] = c_[k - 1];
  return u;
}

UniSeries& UniSeries::operator+=(const UniSeries& o) {
  if (o.degree() < degree()) *this = truncated(o.degree());
  for (unsigned k = 0; k <= degree(); ++k) c_[k] += o[k];
  return *this;
}

UniSeries& UniSeries::operator-=(const UniSeries& o) {
  if (o.degree() < degree()) *this = truncated(o.degree());
  for (unsigned k = 0; k <= degree(); ++k) c_[k] -= o[k];
  return *this;
}

UniSeries& UniSeries::operator*=(const Rational& c) {
  for (auto& v : c_) v *= c;
  return *this;
}

UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }
UniSeries operator*(UniSeries a, const Rational& c) { return a *= c; }

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
  unsigned d = std::min(a.degree(), b.degree());
  UniSeries out(d);
  for (unsigned i = 0; i <= d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (unsigned j = 0; i + j <= d; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

namespace {

void require_zero_constant(const UniSeries& u, const char* op) {
  if (sgn(u[0]) != 0)
    throw Error(ErrorCode::kDomain, std::string(op) + ": nonzero constant term");
}

}  // namespace

UniSeries exp(const UniSeries& u) {
  require_zero_constant(u, "exp");
  unsigned d = u.degree();
  UniSeries g(d);
  g[0] = 1;
  for (unsigned n = 1; n <= d; ++n) {
    Rational s;
    for (unsigned k = 1; k <= n; ++k) s += Rational(k) * u[k] * g[n - k];
    g[n] = s / n;
  }
  return g;
}

UniSeries log1p(const UniSeries& u) {
  require_zero_constant(u, "log1p");
  unsigned d = u.degree();
  UniSeries l(d);
  for (unsigned n = 1; n <= d; ++n) {
    Rational s = Rational(n) * u[n];
    for (unsigned k = 1; k < n; ++k) s -= Rational(k) * l[k] * u[n - k];
    l[n] = s / n;
  }
  return l;
}

UniSeries pow1p(const UniSeries& u, const Rational& e) {
  require_zero_constant(u, "pow1p");
  unsigned d = u.degree();
  UniSeries g(d);
  g[0] = 1;
  // g = (1+u)^e satisfies (1+u) g' = e u' g.
  for (unsigned n = 1; n <= d; ++n) {
    Rational s;
    for (unsigned k = 1; k <= n; ++k) s += (e * k - Rational(n - k)) * u[k] * g[n - k];
    g[n] = s / n;
  }
  return g;
}

UniSeries compose(const UniSeries& f, const UniSeries& u) {
  require_zero_constant(u, "compose");
  unsigned d = std::min(f.degree(), u.degree());
  UniSeries acc(d);
  for (unsigned i = f.degree() + 1; i-- > 0;) {
    acc = acc * u.truncated(d);
    acc[0] += f[i];
  }
  return acc;
}

BiSeries radial(const UniSeries& f, unsigned arity, unsigned degree,
                const std::vector<unsigned>& vars) {
  BiSeries rho = BiSeries::norm2(arity, degree, vars);
  BiSeries out = BiSeries::constant(arity, degree, CScalar(f[0]));
  BiSeries power = BiSeries::constant(arity, degree, CScalar(1));
  for (unsigned k = 1; k <= std::min(f.degree(), degree); ++k) {
    power = mul(power, rho);
    if (sgn(f[k]) != 0) out += power * CScalar(f[k]);
  }
  return out;
}

}  // namespace kimm
