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

#include "kimm/resolvability.hpp"

#include <algorithm>

#include "kimm/diastasis.hpp"

namespace kimm {

CScalar HermMatrix::at(unsigned i, unsigned j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? CScalar() : it->second;
}

HermMatrix build_matrix(const BiSeries& d, unsigned degree) {
  if (degree > d.degree())
    throw Error(ErrorCode::kOutOfRange, "matrix degree " + std::to_string(degree) +
                                            " exceeds series truncation " +
                                            std::to_string(d.degree()));
  HermMatrix m;
  m.arity = d.arity();
  m.degree = degree;
  Ordinal count = d.order().count_upto(degree);
  for (Ordinal j = 1; j < count; ++j) m.basis.push_back(j);
  m.circular = true;
  for (const auto& [key, c] : d.terms()) {
    if (key.first == 0 || key.second == 0) {
      const auto& ord = d.order();
      throw Error(ErrorCode::kNotADiastasis,
                  "nonzero pure coefficient at (" + to_string(ord.index(key.first)) + " ; " +
                      to_string(ord.index(key.second)) + "); normalize the potential first");
    }
    if (key.first >= count || key.second >= count) continue;
    m.entries.emplace(std::make_pair(key.first - 1, key.second - 1), c);
    if (d.order().degree(key.first) != d.order().degree(key.second)) m.circular = false;
  }
  return m;
}

CScalar quadratic_form(const HermMatrix& a, const std::vector<CScalar>& w) {
  CScalar acc;
  for (const auto& [key, c] : a.entries) {
    const CScalar& wi = w[key.first];
    const CScalar& wj = w[key.second];
    if (wi.is_zero() || wj.is_zero()) continue;
    acc += wi.conj() * c * wj;
  }
  return acc;
}

namespace {

class DenseHerm {
 public:
  explicit DenseHerm(unsigned n) : n_(n), v_(std::size_t(n) * n) {}
  unsigned size() const { return n_; }
  CScalar& at(unsigned i, unsigned j) { return v_[std::size_t(i) * n_ + j]; }
  const CScalar& at(unsigned i, unsigned j) const { return v_[std::size_t(i) * n_ + j]; }

 private:
  unsigned n_;
  std::vector<CScalar> v_;
};

Rational form_value(const DenseHerm& s, const std::vector<CScalar>& w) {
  CScalar acc;
  for (unsigned i = 0; i < s.size(); ++i) {
    if (w[i].is_zero()) continue;
    CScalar row;
    for (unsigned j = 0; j < s.size(); ++j) {
      if (w[j].is_zero() || s.at(i, j).is_zero()) continue;
      row += s.at(i, j) * w[j];
    }
    acc += w[i].conj() * row;
  }
  return acc.re;
}

struct LocalFactor {
  unsigned pivot;
  Rational d;
  std::vector<CScalar> l;
};

struct BlockResult {
  bool psd = true;
  std::vector<LocalFactor> factors;
  std::vector<CScalar> witness;
  Rational value;
};

std::vector<CScalar> lift(const std::vector<LocalFactor>& factors, std::vector<CScalar> w) {
  for (std::size_t h = factors.size(); h-- > 0;) {
    const LocalFactor& f = factors[h];
    CScalar s;
    for (unsigned i = 0; i < w.size(); ++i) {
      if (i == f.pivot || f.l[i].is_zero() || w[i].is_zero()) continue;
      s += f.l[i].conj() * w[i];
    }
    w[f.pivot] = -s;
  }
  return w;
}

int sign_of(const Rational& q) { return sgn(q) > 0 ? 1 : (sgn(q) < 0 ? -1 : 0); }

void canonicalize_witness(const DenseHerm& original, std::vector<CScalar>& w, Rational& value) {
  std::vector<CScalar> simple(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    simple[i] = CScalar(Rational(sign_of(w[i].re)), Rational(sign_of(w[i].im)));
  if (sgn(form_value(original, simple)) < 0) w = std::move(simple);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_zero()) continue;
    CScalar lead = w[i];
    for (auto& c : w)
      if (!c.is_zero()) c = c / lead;
    break;
  }
  value = form_value(original, w);
}

BlockResult certify_dense(const DenseHerm& original) {
  const unsigned n = original.size();
  DenseHerm s = original;
  std::vector<bool> active(n, true);
  BlockResult res;
  for (;;) {
    std::vector<CScalar> u(n);
    bool found = false;
    for (unsigned i = 0; i < n && !found; ++i) {
      if (active[i] && sgn(s.at(i, i).re) < 0) {
        u[i] = CScalar(1);
        found = true;
      }
    }
    for (unsigned i = 0; i < n && !found; ++i) {
      if (!active[i] || sgn(s.at(i, i).re) != 0) continue;
      for (unsigned j = 0; j < n; ++j) {
        if (j == i || !active[j] || s.at(i, j).is_zero()) continue;
        const CScalar& a = s.at(i, j);
        const Rational& c = s.at(j, j).re;
        if (sgn(c) == 0) {
          u[i] = -a;
        } else {
          u[i] = -a * Rational(c / a.norm2());
        }
        u[j] = CScalar(1);
        found = true;
        break;
      }
    }
    if (found) {
      res.psd = false;
      res.witness = lift(res.factors, std::move(u));
      canonicalize_witness(original, res.witness, res.value);
      return res;
    }
    int best = -1;
    for (unsigned i = 0; i < n; ++i) {
      if (!active[i] || sgn(s.at(i, i).re) <= 0) continue;
      if (best < 0 || s.at(i, i).re > s.at(best, best).re) best = static_cast<int>(i);
    }
    if (best < 0) return res;
    unsigned p = static_cast<unsigned>(best);
    LocalFactor f{p, s.at(p, p).re, std::vector<CScalar>(n)};
    for (unsigned i = 0; i < n; ++i)
      if (active[i] && !s.at(i, p).is_zero()) f.l[i] = s.at(i, p) / CScalar(f.d);
    f.l[p] = CScalar(1);
    active[p] = false;
    for (unsigned i = 0; i < n; ++i) {
      if (!active[i] || f.l[i].is_zero()) continue;
      CScalar li_d = f.l[i] * f.d;
      for (unsigned j = 0; j < n; ++j) {
        if (!active[j] || f.l[j].is_zero()) continue;
        s.at(i, j) -= li_d * f.l[j].conj();
      }
    }
    res.factors.push_back(std::move(f));
  }
}

bool is_diagonal(const HermMatrix& a) {
  for (const auto& [key, c] : a.entries)
    if (key.first != key.second) return false;
  return true;
}

PsdVerdict certify_diagonal(const HermMatrix& a) {
  PsdVerdict v;
  std::vector<std::pair<Rational, unsigned>> positive;
  for (const auto& [key, c] : a.entries) {
    if (sgn(c.re) < 0) {
      v.psd = false;
      v.witness.assign(a.size(), CScalar());
      v.witness[key.first] = CScalar(1);
      v.value = c.re;
      v.pivots.clear();
      v.factors.clear();
      return v;
    }
    positive.emplace_back(c.re, key.first);
  }
  std::stable_sort(positive.begin(), positive.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  for (const auto& [d, i] : positive) {
    LdlFactor f;
    f.pivot_index = i;
    f.pivot = d;
    f.column.emplace(i, CScalar(1));
    v.factors.push_back(std::move(f));
    v.pivots.push_back(a.basis[i]);
  }
  v.rank = static_cast<unsigned>(v.factors.size());
  return v;
}

}  // namespace

PsdVerdict psd_certify(const HermMatrix& a, const PsdOptions& options) {
  for (const auto& [key, c] : a.entries) {
    if (!(a.at(key.second, key.first) == c.conj()))
      throw Error(ErrorCode::kInvalidArgument, "psd_certify: matrix is not Hermitian");
  }
  if (options.use_diagonal_fast_path && is_diagonal(a)) return certify_diagonal(a);

  std::vector<std::vector<unsigned>> blocks;
  if (options.use_blocks && a.circular) {
    auto ord = graded_order(a.arity, a.degree);
    for (unsigned i = 0; i < a.size(); ++i) {
      unsigned deg = ord->degree(a.basis[i]);
      if (blocks.size() < deg) blocks.resize(deg);
      blocks[deg - 1].push_back(i);
    }
  } else {
    blocks.emplace_back();
    for (unsigned i = 0; i < a.size(); ++i) blocks.back().push_back(i);
  }

  PsdVerdict v;
  for (const auto& idx : blocks) {
    if (idx.empty()) continue;
    std::vector<unsigned> local(a.size(), ~0u);
    for (unsigned i = 0; i < idx.size(); ++i) local[idx[i]] = i;
    DenseHerm s(static_cast<unsigned>(idx.size()));
    for (const auto& [key, c] : a.entries) {
      unsigned i = local[key.first], j = local[key.second];
      if (i != ~0u && j != ~0u) s.at(i, j) = c;
    }
    BlockResult r = certify_dense(s);
    if (!r.psd) {
      v.psd = false;
      v.rank = 0;
      v.pivots.clear();
      v.factors.clear();
      v.witness.assign(a.size(), CScalar());
      for (unsigned i = 0; i < idx.size(); ++i) v.witness[idx[i]] = r.witness[i];
      v.value = r.value;
      return v;
    }
    for (auto& f : r.factors) {
      LdlFactor g;
      g.pivot_index = idx[f.pivot];
      g.pivot = f.d;
      for (unsigned i = 0; i < idx.size(); ++i)
        if (!f.l[i].is_zero()) g.column.emplace(idx[i], f.l[i]);
      v.pivots.push_back(a.basis[g.pivot_index]);
      v.factors.push_back(std::move(g));
    }
  }
  v.rank = static_cast<unsigned>(v.factors.size());
  return v;
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::kResolvableUpTo:
      return "resolvable_up_to";
    case VerdictKind::kCertifiedNotResolvable:
      return "certified_not_resolvable";
    case VerdictKind::kCertifiedResolvable:
      return "certified_resolvable";
  }
  return "unknown";
}

Verdict resolvability(const BiSeries& d, const Rational& b, unsigned degree,
                      const PsdOptions& options) {
  if (degree > d.degree())
    throw Error(ErrorCode::kOutOfRange, "requested degree " + std::to_string(degree) +
                                            " exceeds series truncation " +
                                            std::to_string(d.degree()));
  BiSeries t = b_transform(normalize_to_diastasis(d.truncated(degree)), b);
  HermMatrix m = build_matrix(t, degree);
  Verdict v;
  v.degree = degree;
  v.psd = psd_certify(m, options);
  if (v.psd.psd) {
    v.kind = VerdictKind::kResolvableUpTo;
    v.rank = v.psd.rank;
  } else {
    v.kind = VerdictKind::kCertifiedNotResolvable;
    auto ord = graded_order(m.arity, m.degree);
    for (unsigned i = 0; i < m.size(); ++i)
      if (!v.psd.witness[i].is_zero())
        v.witness_degree = std::max(v.witness_degree, ord->degree(m.basis[i]));
  }
  return v;
}

HartogsVerdict hartogs_criterion(const UniSeries& f, const Rational& c, unsigned jmax,
                                 unsigned kmax) {
  if (sgn(f[0]) <= 0) throw Error(ErrorCode::kDomain, "hartogs_criterion: F(0) must be positive");
  if (f.degree() < jmax)
    throw Error(ErrorCode::kOutOfRange, "hartogs_criterion: F known only to degree " +
                                            std::to_string(f.degree()));
  UniSeries u = f.truncated(jmax) * (Rational(1) / f[0]);
  u[0] = 0;
  std::vector<UniSeries> powers;
  for (unsigned k = 0; k <= kmax; ++k) powers.push_back(pow1p(u, -(c + k)));
  HartogsVerdict v;
  v.jmax = jmax;
  v.kmax = kmax;
  for (unsigned j = 0; j <= jmax; ++j) {
    for (unsigned k = 0; k <= kmax; ++k) {
      if (sgn(powers[k][j]) < 0) {
        v.passed = false;
        v.j = j;
        v.k = k;
        v.coefficient = powers[k][j];
        return v;
      }
    }
  }
  return v;
}

bool hartogs_metric_check(const UniSeries& f) {
  if (sgn(f[0]) <= 0)
    throw Error(ErrorCode::kDomain, "hartogs_metric_check: F(0) must be positive");
  if (f.degree() == 0) return false;
  return sgn(-f[1] / f[0]) > 0;
}

}  // namespace kimm
