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

// Shared generators for property tests. Every generator takes the engine by
// reference so a failing seed reproduces.

#ifndef KIMM_TESTS_SUPPORT_HPP
#define KIMM_TESTS_SUPPORT_HPP

#include <map>
#include <random>
#include <vector>

#include "kimm/series.hpp"

namespace kimm::testing {

inline Rational random_rational(std::mt19937& rng, int num_range = 9, int den_range = 6) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return make_rational(num(rng), den(rng));
}

inline Rational random_positive_rational(std::mt19937& rng, int num_range = 9,
                                         int den_range = 6) {
  std::uniform_int_distribution<int> num(1, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return make_rational(num(rng), den(rng));
}

inline CScalar random_cscalar(std::mt19937& rng, bool real = false) {
  if (real) return CScalar(random_rational(rng));
  return CScalar(random_rational(rng), random_rational(rng));
}

/// Sparse Hermitian series with roughly `density` of the upper triangle
/// populated; the constant term is zero unless `with_constant`.
inline BiSeries random_hermitian(std::mt19937& rng, unsigned arity, unsigned degree,
                                 double density = 0.3, bool with_constant = false,
                                 bool real = false) {
  BiSeries s(arity, degree);
  std::bernoulli_distribution keep(density);
  Ordinal n = s.order().size();
  for (Ordinal j = 0; j < n; ++j) {
    for (Ordinal k = j; k < n; ++k) {
      if (j == 0 && k == 0 && !with_constant) continue;
      if (!keep(rng)) continue;
      CScalar c = (j == k) ? CScalar(random_rational(rng)) : random_cscalar(rng, real);
      s.set(j, k, c);
      s.set(k, j, c.conj());
    }
  }
  return s;
}

inline HolSeries random_holomorphic(std::mt19937& rng, unsigned arity, unsigned degree,
                                    double density = 0.5) {
  HolSeries h(arity, degree);
  std::bernoulli_distribution keep(density);
  for (Ordinal j = 0; j < h.order().size(); ++j)
    if (keep(rng)) h.set(j, random_cscalar(rng));
  return h;
}

/// Independent dense model: exponent-tuple pair -> coefficient.
using DenseKey = std::pair<std::vector<unsigned>, std::vector<unsigned>>;
using Dense = std::map<DenseKey, CScalar>;

inline Dense to_dense(const BiSeries& s) {
  Dense d;
  for (const auto& [key, c] : s.terms())
    d[{s.order().index(key.first).exponents, s.order().index(key.second).exponents}] = c;
  return d;
}

inline unsigned tuple_degree(const std::vector<unsigned>& e) {
  unsigned s = 0;
  for (unsigned v : e) s += v;
  return s;
}

inline Dense dense_mul(const Dense& a, const Dense& b, unsigned degree) {
  Dense out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      std::vector<unsigned> j = ka.first, k = ka.second;
      for (std::size_t i = 0; i < j.size(); ++i) {
        j[i] += kb.first[i];
        k[i] += kb.second[i];
      }
      if (tuple_degree(j) > degree || tuple_degree(k) > degree) continue;
      out[{j, k}] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace kimm::testing

#endif  // KIMM_TESTS_SUPPORT_HPP
