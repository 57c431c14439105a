// Copyright 2026 The Authors.
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

// Descent-set combinatorics. Positions and ground elements are 1-based
// throughout: the descent at position i compares entries i and i + 1.

#ifndef CHOW_COMBINAT_H_
#define CHOW_COMBINAT_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "chow/poly.h"

namespace chow {

// A finite set of positive integers stored in increasing order.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> elements);
  // Throws std::invalid_argument unless elements are strictly increasing
  // and all >= 1.
  explicit IndexSet(std::vector<int> elements);

  // Element i is present iff bit i - 1 of mask is set.
  static IndexSet FromMask(std::uint64_t mask);
  // {lo, lo + 1, ..., hi}; empty when hi < lo.
  static IndexSet Range(int lo, int hi);

  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }
  bool contains(int i) const;
  // Both require a nonempty set.
  int min() const { return elements_.front(); }
  int max() const { return elements_.back(); }
  std::uint64_t ToMask() const;
  std::string ToString() const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> elements_;
};

// One-line notation of a permutation of {1..n}.
using Permutation = std::vector<int>;

// A bijection on a finite support S = {s_1 < ... < s_k}, stored in one-line
// notation sigma_i = sigma(s_i).
class SubsetPermutation {
 public:
  // Throws std::invalid_argument unless one_line is a rearrangement of the
  // support.
  SubsetPermutation(IndexSet support, std::vector<int> one_line);

  const IndexSet& support() const { return support_; }
  const std::vector<int>& one_line() const { return one_line_; }

  friend bool operator==(const SubsetPermutation&,
                         const SubsetPermutation&) = default;
  friend auto operator<=>(const SubsetPermutation&,
                          const SubsetPermutation&) = default;

 private:
  IndexSet support_;
  std::vector<int> one_line_;
};

BigInt Factorial(int n);
// Zero when b < 0 or b > a.
BigInt Binomial(long a, long b);
// (sum parts)! / prod(part!). Throws std::domain_error on a negative part.
BigInt Multinomial(std::span<const int> parts);

// Maximal runs of consecutive integers, ordered by their minima.
// Throws std::domain_error on the empty set.
std::vector<IndexSet> RunsPartition(const IndexSet& set);

// n! / ((m_1 - 1)! (m_2 - m_1)! ... (m_s - m_{s-1})! (n + 1 - m_s)!) where
// m_1 < ... < m_s are the minima of the runs of the set; 1 for the empty
// set. Throws std::domain_error when the set is not contained in {1..n}.
BigInt DeltaMultinomial(int n, const IndexSet& set);

// Subsets of {1..m} without two consecutive integers, ordered by size and
// then lexicographically. With exclude_one, sets containing 1 are dropped.
std::vector<IndexSet> NoConsecutiveSubsets(int m, bool exclude_one);

IndexSet DescentSet(std::span<const int> sequence);

// Number of permutations of {1..n} whose descent set is exactly `descents`,
// by inclusion-exclusion over the subsets of `descents`. Throws
// std::domain_error when `descents` is not contained in {1..n-1}.
BigInt EulerianFixedDescents(int n, const IndexSet& descents);

// Descent generating polynomial over all permutations of {1..n}; A_0 = 1.
UniPoly EulerianPolynomial(int n);

// Excedance generating polynomial over the fixpoint-free permutations of
// {1..n}; d_0 = 1, d_1 = 0. Explicit enumeration up to n = 10; above that
// d_n = A_n - sum_{j<n} C(n,j) d_j. Results are cached process-wide.
UniPoly DerangementPolynomial(int n);

// sigma_1 ... sigma_k followed by the complement of the support in
// increasing order. Throws std::domain_error unless the support lies in
// {1..n}.
Permutation Extend(const SubsetPermutation& sigma, int n);

// Order-preserving relabeling of sigma onto {1..k}.
Permutation Standardize(const SubsetPermutation& sigma);

// Calls visit with every permutation of {1..n} in lexicographic order.
void ForEachPermutation(int n,
                        const std::function<void(const Permutation&)>& visit);

}  // namespace chow

#endif  // CHOW_COMBINAT_H_
