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

#include "kimm/multi_index.hpp"

#include <mutex>
#include <numeric>

#include "kimm/scalar.hpp"

namespace kimm {

unsigned MultiIndex::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

std::string to_string(const MultiIndex& m) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(m.exponents[i]);
  }
  return out;
}

MultiIndex parse_multi_index(std::string_view text) {
  MultiIndex m;
  std::string cur;
  auto flush = [&] {
    std::size_t b = cur.find_first_not_of(" \t");
    std::size_t e = cur.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw Error(ErrorCode::kParse, "empty exponent in '" + std::string(text) + "'");
    std::string t = cur.substr(b, e - b + 1);
    for (char c : t)
      if (c < '0' || c > '9')
        throw Error(ErrorCode::kParse, "malformed exponent in '" + std::string(text) + "'");
    m.exponents.push_back(static_cast<unsigned>(std::stoul(t)));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return m;
}

namespace {

void enumerate_degree(unsigned arity, unsigned degree, std::vector<unsigned>& prefix,
                      std::vector<MultiIndex>& out) {
  if (prefix.size() + 1 == arity) {
    prefix.push_back(degree);
    out.push_back({prefix});
    prefix.pop_back();
    return;
  }
  for (unsigned first = 0; first <= degree; ++first) {
    prefix.push_back(first);
    enumerate_degree(arity, degree - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

GradedOrder::GradedOrder(unsigned arity, unsigned max_degree)
    : arity_(arity), max_degree_(max_degree) {
  if (arity == 0) throw Error(ErrorCode::kInvalidArgument, "arity must be positive");
  std::vector<unsigned> prefix;
  for (unsigned d = 0; d <= max_degree; ++d) {
    degree_starts_.push_back(static_cast<Ordinal>(indices_.size()));
    enumerate_degree(arity, d, prefix, indices_);
  }
  degree_starts_.push_back(static_cast<Ordinal>(indices_.size()));
  degrees_.reserve(indices_.size());
  for (Ordinal j = 0; j < size(); ++j) {
    degrees_.push_back(indices_[j].degree());
    lookup_.emplace(indices_[j].exponents, j);
  }
  sums_.assign(std::size_t(size()) * size(), kNoOrdinal);
  std::vector<unsigned> e(arity);
  for (Ordinal j = 0; j < size(); ++j) {
    for (Ordinal k = 0; k < size(); ++k) {
      if (degrees_[j] + degrees_[k] > max_degree) continue;
      for (unsigned a = 0; a < arity; ++a)
        e[a] = indices_[j].exponents[a] + indices_[k].exponents[a];
      sums_[std::size_t(j) * size() + k] = lookup_.at(e);
    }
  }
}

Ordinal GradedOrder::ordinal(const MultiIndex& m) const {
  if (m.arity() != arity_)
    throw Error(ErrorCode::kArityMismatch, "multi-index arity " + std::to_string(m.arity()) +
                                               " != " + std::to_string(arity_));
  auto it = lookup_.find(m.exponents);
  if (it == lookup_.end())
    throw Error(ErrorCode::kOutOfRange, "multi-index (" + to_string(m) +
                                            ") exceeds degree " + std::to_string(max_degree_));
  return it->second;
}

Ordinal GradedOrder::count_upto(unsigned d) const {
  if (d >= max_degree_) return size();
  return degree_starts_[d + 1];
}

std::shared_ptr<const GradedOrder> graded_order(unsigned arity, unsigned max_degree) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const GradedOrder>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{arity, max_degree}];
  if (!slot) slot = std::make_shared<const GradedOrder>(arity, max_degree);
  return slot;
}

}  // namespace kimm
