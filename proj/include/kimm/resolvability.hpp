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

#ifndef KIMM_RESOLVABILITY_HPP
#define KIMM_RESOLVABILITY_HPP

#include <map>
#include <optional>
#include <vector>

#include "kimm/series.hpp"

namespace kimm {

/// Graded Hermitian coefficient matrix over the basis m_1, ..., m_M (the
/// constant monomial excluded). Row/column i corresponds to ordinal i + 1.
struct HermMatrix {
  unsigned arity = 0;
  unsigned degree = 0;
  std::vector<Ordinal> basis;
  std::map<std::pair<unsigned, unsigned>, CScalar> entries;
  bool circular = false;

  unsigned size() const { return static_cast<unsigned>(basis.size()); }
  CScalar at(unsigned i, unsigned j) const;
};

/// Throws kNotADiastasis when row 0 or column 0 is nonzero.
HermMatrix build_matrix(const BiSeries& d, unsigned degree);

/// One retained LDL* step: A = sum_h pivot_h l_h l_h^* on the PSD path, with
/// l_h[pivot_index] = 1.
struct LdlFactor {
  unsigned pivot_index = 0;
  Rational pivot;
  std::map<unsigned, CScalar> column;
};

struct PsdVerdict {
  bool psd = true;
  unsigned rank = 0;
  std::vector<Ordinal> pivots;
  std::vector<LdlFactor> factors;
  /// Over the full basis, first nonzero component 1; value = w^* A w < 0.
  std::vector<CScalar> witness;
  Rational value;
};

struct PsdOptions {
  bool use_blocks = true;
  bool use_diagonal_fast_path = true;
};

PsdVerdict psd_certify(const HermMatrix& a, const PsdOptions& options = {});

/// w^* A w evaluated directly from the entries.
CScalar quadratic_form(const HermMatrix& a, const std::vector<CScalar>& w);

enum class VerdictKind {
  kResolvableUpTo,
  kCertifiedNotResolvable,
  kCertifiedResolvable,
};

const char* to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::kResolvableUpTo;
  unsigned degree = 0;
  /// Empty means infinite rank.
  std::optional<unsigned> rank;
  PsdVerdict psd;
  /// Degree of the first failing block (certified-not only).
  unsigned witness_degree = 0;
};

/// b_transform -> build_matrix -> psd_certify on the normalized input.
Verdict resolvability(const BiSeries& d, const Rational& b, unsigned degree,
                      const PsdOptions& options = {});

struct HartogsVerdict {
  bool passed = true;
  unsigned jmax = 0;
  unsigned kmax = 0;
  /// First (j, k) with a negative coefficient; j varies slowest.
  unsigned j = 0;
  unsigned k = 0;
  Rational coefficient;
};

/// Signs of the x^j coefficients of (F(x)/F(0))^{-(c+k)}, j <= jmax,
/// k <= kmax. Throws kDomain when F(0) <= 0 and kOutOfRange when F is
/// truncated below jmax.
HartogsVerdict hartogs_criterion(const UniSeries& f, const Rational& c, unsigned jmax,
                                 unsigned kmax);

/// Constant term of -(x F'/F)' is positive. Throws kDomain when F(0) <= 0.
bool hartogs_metric_check(const UniSeries& f);

}  // namespace kimm

#endif  // KIMM_RESOLVABILITY_HPP
