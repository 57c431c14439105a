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

#include "chow/schubert.h"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>

namespace chow {

void ValidateSchubertSpec(const SchubertSpec& spec) {
  if (spec.n < 0 || spec.n > kMaxGroundSetSize) {
    throw std::invalid_argument("ground set size out of range");
  }
  if (static_cast<int>(spec.order.size()) != spec.n) {
    throw std::invalid_argument("order must have length n");
  }
  std::vector<int> sorted = spec.order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < spec.n; ++i) {
    if (sorted[i] != i + 1) {
      throw std::invalid_argument("order is not a permutation of {1..n}");
    }
  }
  if (!spec.subset.empty() && spec.subset.max() > spec.n) {
    throw std::invalid_argument("subset not contained in {1..n}");
  }
}

namespace {

// Position of each element in the order, 1-based; index 0 unused.
std::vector<int> Positions(const Permutation& order) {
  std::vector<int> position(order.size() + 1);
  for (size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = static_cast<int>(i) + 1;
  }
  return position;
}

// True iff the sorted members of `lower` are componentwise <= those of
// `upper`; both masks have the same popcount.
bool Dominates(ElementMask upper, ElementMask lower) {
  while (lower != 0) {
    if (std::countr_zero(upper) < std::countr_zero(lower)) return false;
    lower &= lower - 1;
    upper &= upper - 1;
  }
  return true;
}

ElementMask MaskOfPositions(const std::vector<int>& position,
                            const IndexSet& subset) {
  ElementMask mask = 0;
  for (int e : subset) mask |= ElementMask{1} << (position[e] - 1);
  return mask;
}

// Maps a mask of positions to the mask of elements at those positions.
ElementMask ElementsAtPositions(const Permutation& order,
                                ElementMask positions) {
  ElementMask elements = 0;
  for (; positions != 0; positions &= positions - 1) {
    elements |= ElementMask{1} << (order[std::countr_zero(positions)] - 1);
  }
  return elements;
}

}  // namespace

Matroid SchubertMatroid(const SchubertSpec& spec) {
  ValidateSchubertSpec(spec);
  const std::vector<int> position = Positions(spec.order);
  const ElementMask lower = MaskOfPositions(position, spec.subset);
  const int k = spec.subset.size();
  std::vector<ElementMask> bases;
  const ElementMask full = (ElementMask{1} << spec.n) - 1;
  for (ElementMask q = 0;; ++q) {
    if (std::popcount(q) == k && Dominates(q, lower)) {
      bases.push_back(ElementsAtPositions(spec.order, q));
    }
    if (q == full) break;
  }
  return Matroid::FromBasisMasksUnchecked(spec.n, std::move(bases));
}

SchubertInvariants SchubertInvariantsFormula(const SchubertSpec& spec) {
  ValidateSchubertSpec(spec);
  if (spec.subset.empty()) {
    throw std::domain_error("formula requires nonempty I");
  }
  const std::vector<int> position = Positions(spec.order);
  int first = spec.n + 1;
  int last = 0;
  for (int e : spec.subset) {
    first = std::min(first, position[e]);
    last = std::max(last, position[e]);
  }
  std::vector<int> loops(spec.order.begin(), spec.order.begin() + first - 1);
  std::sort(loops.begin(), loops.end());
  return {IndexSet(std::move(loops)), spec.n + 1 - last};
}

BigInt SchubertCount(int n, int m, int loops, int k) {
  if (loops < 0 || loops >= k || k > n || m < 1) return 0;
  const int lo = loops + 1;
  BigInt total = 0;
  // Subsets of {lo..k} containing lo and k, as masks over offsets from lo.
  const int width = k - lo + 1;
  const std::uint64_t ends =
      (std::uint64_t{1} << (width - 1)) | std::uint64_t{1};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << width); ++mask) {
    if ((mask & ends) != ends || std::popcount(mask) != m) continue;
    std::vector<int> elements;
    for (int i = 0; i < width; ++i) {
      if ((mask >> i) & 1) elements.push_back(lo + i);
    }
    total += DeltaMultinomial(n, IndexSet(std::move(elements)));
  }
  return total;
}

std::uint64_t CensusTable::Count(const CensusKey& key) const {
  auto it = cells.find(key);
  return it == cells.end() ? 0 : it->second;
}

std::uint64_t CensusTable::CountRankCogirthAbove(int rank, int threshold,
                                                 bool loopless_only) const {
  std::uint64_t total_count = 0;
  for (const auto& [key, count] : cells) {
    if (key.rank != rank || key.cogirth <= threshold) continue;
    if (loopless_only && key.loops != 0) continue;
    total_count += count;
  }
  return total_count;
}

namespace {

// Indicator of the basis collection over all 2^n subsets.
using BasisKey = std::vector<std::uint64_t>;

struct BasisKeyHash {
  std::size_t operator()(const BasisKey& key) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t word : key) {
      h ^= std::hash<std::uint64_t>{}(word) + 0x9e3779b97f4a7c15ull +
           (h << 6) + (h >> 2);
    }
    return h;
  }
};

using BasisKeySet = std::unordered_set<BasisKey, BasisKeyHash>;

class CensusWorker {
 public:
  CensusWorker(int n, const std::vector<std::vector<ElementMask>>& dominating)
      : n_(n),
        words_(std::max<std::size_t>(1, (std::size_t{1} << n) / 64)),
        dominating_(dominating) {}

  // Adds every S_{I,pi}, pi in S_n, for the subset with the given mask.
  void AddSubset(ElementMask subset_mask) {
    const IndexSet subset = MaskToIndexSet(subset_mask);
    Permutation order(n_);
    for (int i = 0; i < n_; ++i) order[i] = i + 1;
    std::vector<int> position(n_ + 1);
    do {
      for (int i = 0; i < n_; ++i) position[order[i]] = i + 1;
      const ElementMask lower = MaskOfPositions(position, subset);
      BasisKey key(words_, 0);
      for (ElementMask q : dominating_[lower]) {
        const ElementMask basis = ElementsAtPositions(order, q);
        key[basis / 64] |= std::uint64_t{1} << (basis % 64);
      }
      seen_.insert(std::move(key));
    } while (std::next_permutation(order.begin(), order.end()));
  }

  BasisKeySet& seen() { return seen_; }

 private:
  int n_;
  std::size_t words_;
  const std::vector<std::vector<ElementMask>>& dominating_;
  BasisKeySet seen_;
};

}  // namespace

CensusTable RunCensus(int n, const CensusOptions& options) {
  const int limit = std::min(options.max_n, kHardCensusMaxN);
  if (n < 1 || n > limit) {
    throw ResourceGuardError("census needs 1 <= n <= " +
                             std::to_string(limit) + ", got n = " +
                             std::to_string(n));
  }
  const ElementMask full = (ElementMask{1} << n) - 1;

  // dominating[p] lists the position sets q with |q| = |p| dominating p.
  std::vector<std::vector<ElementMask>> dominating(std::size_t{1} << n);
  for (ElementMask p = 0; p <= full; ++p) {
    for (ElementMask q = 0; q <= full; ++q) {
      if (std::popcount(q) == std::popcount(p) && Dominates(q, p)) {
        dominating[p].push_back(q);
      }
    }
  }

  const int jobs = std::max(1, options.jobs);
  std::vector<CensusWorker> workers;
  workers.reserve(jobs);
  for (int j = 0; j < jobs; ++j) workers.emplace_back(n, dominating);
  std::vector<std::thread> threads;
  for (int j = 0; j < jobs; ++j) {
    threads.emplace_back([&, j] {
      for (ElementMask subset = j; subset <= full; subset += jobs) {
        workers[j].AddSubset(subset);
      }
    });
  }
  for (std::thread& t : threads) t.join();

  BasisKeySet distinct = std::move(workers[0].seen());
  for (int j = 1; j < jobs; ++j) {
    distinct.merge(workers[j].seen());
  }

  CensusTable table;
  table.n = n;
  for (const BasisKey& key : distinct) {
    std::vector<ElementMask> bases;
    for (std::size_t w = 0; w < key.size(); ++w) {
      for (std::uint64_t bits = key[w]; bits != 0; bits &= bits - 1) {
        bases.push_back(
            static_cast<ElementMask>(w * 64 + std::countr_zero(bits)));
      }
    }
    const Matroid m = Matroid::FromBasisMasksUnchecked(n, std::move(bases));
    ++table.cells[{m.rank(), Loops(m).size(), Cogirth(m)}];
    ++table.total;
  }
  return table;
}

bool SchubertExpansionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CoefficientCheck& c) { return c.ok(); });
}

SchubertExpansionReport VerifySchubertExpansion(int k, int n,
                                                const CensusTable& census) {
  CheckUniformParameters(k, n, ChowKind::kChow);
  if (census.n != n) {
    throw std::invalid_argument("census was taken for a different n");
  }
  SchubertExpansionReport report{k, n, {}};
  const UniPoly chow = ClosedForm(k, n, FormMethod::kMonomial, ChowKind::kChow);
  for (int m = 0; m <= k - 1; ++m) {
    report.checks.push_back({ChowKind::kChow, m, chow.Coefficient(m),
                             census.CountRankCogirthAbove(m + 1, n - k, true)});
  }
  const UniPoly augmented =
      ClosedForm(k, n, FormMethod::kMonomial, ChowKind::kAugmented);
  for (int m = 0; m <= k; ++m) {
    report.checks.push_back({ChowKind::kAugmented, m, augmented.Coefficient(m),
                             census.CountRankCogirthAbove(m, n - k, false)});
  }
  return report;
}

std::vector<CountingFormulaCheck> CompareWithCountingFormula(
    const CensusTable& census) {
  const int n = census.n;
  std::map<CensusKey, CountingFormulaCheck> checks;
  for (int k = 1; k <= n; ++k) {
    for (int loops = 0; loops < k; ++loops) {
      for (int m = 1; m <= k - loops; ++m) {
        const CensusKey key{m, loops, n + 1 - k};
        BigInt formula = SchubertCount(n, m, loops, k);
        if (formula == 0 && census.Count(key) == 0) continue;
        checks.insert_or_assign(
            key, CountingFormulaCheck{key, std::move(formula), census.Count(key)});
      }
    }
  }
  for (const auto& [key, count] : census.cells) {
    if (key.rank == 0 || checks.contains(key)) continue;
    // A cell the formula never produces.
    checks.insert_or_assign(key, CountingFormulaCheck{key, 0, count});
  }
  std::vector<CountingFormulaCheck> result;
  for (auto& [key, check] : checks) result.push_back(std::move(check));
  return result;
}

bool ContainsPattern(const Permutation& w, const Permutation& pattern) {
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(pattern.size());
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<int> chosen(k);
  for (int i = 0; i < k; ++i) chosen[i] = i;
  while (true) {
    bool matches = true;
    for (int a = 0; a < k && matches; ++a) {
      for (int b = a + 1; b < k && matches; ++b) {
        matches = (w[chosen[a]] < w[chosen[b]]) == (pattern[a] < pattern[b]);
      }
    }
    if (matches) return true;
    int i = k - 1;
    while (i >= 0 && chosen[i] == n - k + i) --i;
    if (i < 0) return false;
    ++chosen[i];
    for (int j = i + 1; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

BigInt GrassmannianAvoidingCount(int n, const Permutation& pattern) {
  if (DescentSet(pattern).size() != 1) {
    throw std::invalid_argument("pattern must have exactly one descent");
  }
  if (n < 0 || n > 9) throw std::domain_error("need 0 <= n <= 9");
  std::uint64_t count = 0;
  ForEachPermutation(n, [&](const Permutation& w) {
    if (DescentSet(w).size() <= 1 && !ContainsPattern(w, pattern)) ++count;
  });
  return BigInt(static_cast<unsigned long>(count));
}

}  // namespace chow
