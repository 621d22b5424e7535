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

#ifndef KIMM_MULTI_INDEX_HPP
#define KIMM_MULTI_INDEX_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace kimm {

using Ordinal = std::uint32_t;
inline constexpr Ordinal kNoOrdinal = 0xffffffffu;

struct MultiIndex {
  std::vector<unsigned> exponents;

  unsigned arity() const { return static_cast<unsigned>(exponents.size()); }
  unsigned degree() const;
  bool operator==(const MultiIndex&) const = default;
  auto operator<=>(const MultiIndex&) const = default;
};

/// "a,b,c" form used by the text and JSON formats.
std::string to_string(const MultiIndex& m);
MultiIndex parse_multi_index(std::string_view text);

/// Multi-indices of arity n and degree <= d, ordered degree-major and
/// lexicographically ascending within a degree: for n = 2 the order starts
/// (0,0), (0,1), (1,0), (0,2), (1,1), (2,0).
///
/// The ordinal of a multi-index does not depend on d, so series truncated at
/// different degrees share ordinals.
class GradedOrder {
 public:
  GradedOrder(unsigned arity, unsigned max_degree);

  unsigned arity() const { return arity_; }
  unsigned max_degree() const { return max_degree_; }
  Ordinal size() const { return static_cast<Ordinal>(indices_.size()); }

  /// Throws kOutOfRange when |m| exceeds max_degree or the arity differs.
  Ordinal ordinal(const MultiIndex& m) const;
  const MultiIndex& index(Ordinal j) const { return indices_.at(j); }
  unsigned degree(Ordinal j) const { return degrees_[j]; }

  /// Number of multi-indices with degree <= d (d clamped to max_degree).
  Ordinal count_upto(unsigned d) const;
  /// Ordinal of m_j + m_k, or kNoOrdinal when the sum exceeds max_degree.
  Ordinal add(Ordinal j, Ordinal k) const { return sums_[std::size_t(j) * size() + k]; }

 private:
  unsigned arity_;
  unsigned max_degree_;
  std::vector<MultiIndex> indices_;
  std::vector<unsigned> degrees_;
  std::vector<Ordinal> degree_starts_;
  std::map<std::vector<unsigned>, Ordinal> lookup_;
  std::vector<Ordinal> sums_;
};

/// Shared immutable order for (arity, degree); built once per process.
std::shared_ptr<const GradedOrder> graded_order(unsigned arity, unsigned max_degree);

}  // namespace kimm

#endif  // KIMM_MULTI_INDEX_HPP
