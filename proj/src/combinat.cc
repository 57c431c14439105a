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

#include "chow/combinat.h"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace chow {

IndexSet::IndexSet(std::initializer_list<int> elements)
    : IndexSet(std::vector<int>(elements)) {}

IndexSet::IndexSet(std::vector<int> elements) : elements_(std::move(elements)) {
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1) {
      throw std::invalid_argument("index set elements must be >= 1");
    }
    if (i > 0 && elements_[i - 1] >= elements_[i]) {
      throw std::invalid_argument("index set must be strictly increasing");
    }
  }
}

IndexSet IndexSet::FromMask(std::uint64_t mask) {
  std::vector<int> elements;
  for (int i = 0; i < 64; ++i) {
    if ((mask >> i) & 1) elements.push_back(i + 1);
  }
  return IndexSet(std::move(elements));
}

IndexSet IndexSet::Range(int lo, int hi) {
  std::vector<int> elements;
  for (int i = lo; i <= hi; ++i) elements.push_back(i);
  return IndexSet(std::move(elements));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

std::uint64_t IndexSet::ToMask() const {
  std::uint64_t mask = 0;
  for (int e : elements_) {
    if (e > 64) throw std::domain_error("element too large for a mask");
    mask |= std::uint64_t{1} << (e - 1);
  }
  return mask;
}

std::string IndexSet::ToString() const {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out << ",";
    out << elements_[i];
  }
  out << "}";
  return out.str();
}

SubsetPermutation::SubsetPermutation(IndexSet support,
                                     std::vector<int> one_line)
    : support_(std::move(support)), one_line_(std::move(one_line)) {
  std::vector<int> sorted = one_line_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != support_.elements()) {
    throw std::invalid_argument("one-line notation is not a bijection on " +
                                support_.ToString());
  }
}

BigInt Factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt Binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), a, b);
  return result;
}

BigInt Multinomial(std::span<const int> parts) {
  int total = 0;
  for (int part : parts) {
    if (part < 0) throw std::domain_error("negative multinomial part");
    total += part;
  }
  BigInt result = Factorial(total);
  for (int part : parts) result /= Factorial(part);
  return result;
}

std::vector<IndexSet> RunsPartition(const IndexSet& set) {
  if (set.empty()) {
    throw std::domain_error("empty set has no run partition");
  }
  std::vector<IndexSet> runs;
  std::vector<int> current;
  for (int e : set) {
    if (!current.empty() && current.back() + 1 != e) {
      runs.emplace_back(std::move(current));
      current.clear();
    }
    current.push_back(e);
  }
  runs.emplace_back(std::move(current));
  return runs;
}

BigInt DeltaMultinomial(int n, const IndexSet& set) {
  if (set.empty()) return 1;
  if (set.max() > n) {
    throw std::domain_error("element " + std::to_string(set.max()) +
                            " exceeds n = " + std::to_string(n));
  }
  std::vector<int> parts;
  int previous_min = 1;
  for (const IndexSet& run : RunsPartition(set)) {
    parts.push_back(run.min() - previous_min);
    previous_min = run.min();
  }
  parts.push_back(n + 1 - previous_min);
  return Multinomial(parts);
}

std::vector<IndexSet> NoConsecutiveSubsets(int m, bool exclude_one) {
  if (m < 0) return {IndexSet()};
  if (m > 62) throw std::domain_error("m too large");
  std::vector<IndexSet> subsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if ((mask & (mask >> 1)) != 0) continue;
    if (exclude_one && (mask & 1)) continue;
    subsets.push_back(IndexSet::FromMask(mask));
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const IndexSet& a, const IndexSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.elements() < b.elements();
            });
  return subsets;
}

IndexSet DescentSet(std::span<const int> sequence) {
  std::vector<int> descents;
  for (size_t i = 0; i + 1 < sequence.size(); ++i) {
    if (sequence[i] > sequence[i + 1]) descents.push_back(i + 1);
  }
  return IndexSet(std::move(descents));
}

namespace {

// Permutations of {1..n} whose descent set lies inside `allowed`: one
// increasing block per gap between consecutive allowed positions.
BigInt DescentsWithin(int n, const std::vector<int>& allowed) {
  std::vector<int> parts;
  int previous = 0;
  for (int position : allowed) {
    parts.push_back(position - previous);
    previous = position;
  }
  parts.push_back(n - previous);
  return Multinomial(parts);
}

}  // namespace

BigInt EulerianFixedDescents(int n, const IndexSet& descents) {
  if (n < 0) throw std::domain_error("negative n");
  if (!descents.empty() && descents.max() > n - 1) {
    throw std::domain_error("descent set " + descents.ToString() +
                            " not contained in {1.." + std::to_string(n - 1) +
                            "}");
  }
  const int size = descents.size();
  BigInt total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < size; ++i) {
      if ((mask >> i) & 1) subset.push_back(descents.elements()[i]);
    }
    const bool odd = (size - static_cast<int>(subset.size())) % 2 == 1;
    if (odd) {
      total -= DescentsWithin(n, subset);
    } else {
      total += DescentsWithin(n, subset);
    }
  }
  return total;
}

UniPoly EulerianPolynomial(int n) {
  if (n < 0) throw std::domain_error("negative n");
  // Row j holds A(j, d) for d = 0..j-1; A(j, d) = (d + 1) A(j-1, d) +
  // (j - d) A(j-1, d-1).
  std::vector<BigInt> row{1};
  for (int j = 2; j <= n; ++j) {
    std::vector<BigInt> next(j);
    for (int d = 0; d < j; ++d) {
      if (d < j - 1) next[d] += (d + 1) * row[d];
      if (d > 0) next[d] += (j - d) * row[d - 1];
    }
    row = std::move(next);
  }
  return UniPoly(std::move(row));
}

namespace {

constexpr int kDerangementEnumerationLimit = 10;

void EnumerateDerangements(int n, int position, std::uint32_t used,
                           int excedances, std::vector<BigInt>& counts) {
  if (position > n) {
    counts[excedances] += 1;
    return;
  }
  for (int value = 1; value <= n; ++value) {
    if (value == position || (used >> value) & 1) continue;
    EnumerateDerangements(n, position + 1, used | (1u << value),
                          excedances + (value > position ? 1 : 0), counts);
  }
}

UniPoly DerangementByEnumeration(int n) {
  std::vector<BigInt> counts(n + 1);
  EnumerateDerangements(n, 1, 0, 0, counts);
  return UniPoly(std::move(counts));
}

}  // namespace

UniPoly DerangementPolynomial(int n) {
  if (n < 0) throw std::domain_error("negative n");
  static std::mutex mu;
  static std::vector<UniPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    const int j = static_cast<int>(cache.size());
    if (j <= kDerangementEnumerationLimit) {
      cache.push_back(DerangementByEnumeration(j));
      continue;
    }
    UniPoly d = EulerianPolynomial(j);
    for (int i = 0; i < j; ++i) d -= cache[i].Scaled(Binomial(j, i));
    cache.push_back(std::move(d));
  }
  return cache[n];
}

Permutation Extend(const SubsetPermutation& sigma, int n) {
  if (!sigma.support().empty() && sigma.support().max() > n) {
    throw std::domain_error("support exceeds {1.." + std::to_string(n) + "}");
  }
  Permutation extended = sigma.one_line();
  for (int i = 1; i <= n; ++i) {
    if (!sigma.support().contains(i)) extended.push_back(i);
  }
  return extended;
}

Permutation Standardize(const SubsetPermutation& sigma) {
  const std::vector<int>& support = sigma.support().elements();
  Permutation standardized;
  standardized.reserve(sigma.one_line().size());
  for (int value : sigma.one_line()) {
    auto it = std::lower_bound(support.begin(), support.end(), value);
    standardized.push_back(static_cast<int>(it - support.begin()) + 1);
  }
  return standardized;
}

void ForEachPermutation(int n,
                        const std::function<void(const Permutation&)>& visit) {
  Permutation w(std::max(n, 0));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace chow
