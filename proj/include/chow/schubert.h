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

// Schubert matroids S_{I,pi} on {1..n}, their loops and cogirth, the
// counting formula by (rank, loops, cogirth), and an exhaustive census of
// all distinct Schubert matroids on {1..n}.
//
// The total order <=_pi ranks element pi(i) at position i. A k-subset J is
// a basis of S_{I,pi} iff, after sorting both I and J by <=_pi, the i-th
// element of I is <=_pi the i-th element of J for every i.

#ifndef CHOW_SCHUBERT_H_
#define CHOW_SCHUBERT_H_

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "chow/chow_forms.h"
#include "chow/combinat.h"
#include "chow/matroid.h"
#include "chow/poly.h"

namespace chow {

struct SchubertSpec {
  int n = 0;
  IndexSet subset;    // I
  Permutation order;  // pi, one-line
};

// Throws std::invalid_argument unless the order is a permutation of {1..n}
// and the subset lies in {1..n}.
void ValidateSchubertSpec(const SchubertSpec& spec);

// I = {} gives the rank-0 matroid whose single basis is empty.
Matroid SchubertMatroid(const SchubertSpec& spec);

struct SchubertInvariants {
  IndexSet loops;
  int cogirth;
};

// Loops are the elements strictly <=_pi-below every element of I; the
// cogirth is n + 1 - c where pi(c) is the <=_pi-largest element of I.
// Throws std::domain_error on an empty I.
SchubertInvariants SchubertInvariantsFormula(const SchubertSpec& spec);

// Number of Schubert matroids on {1..n} of rank m with `loops` loops and
// cogirth n + 1 - k: the sum of DeltaMultinomial(n, I) over m-subsets I of
// {loops + 1..k} containing both loops + 1 and k. Zero outside
// 0 <= loops < k <= n, m >= 1.
BigInt SchubertCount(int n, int m, int loops, int k);

struct CensusKey {
  int rank;
  int loops;
  int cogirth;  // kInfiniteGirth for the rank-0 matroid

  friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
};

struct CensusTable {
  int n = 0;
  // Row order is lexicographic on (rank, loops, cogirth).
  std::map<CensusKey, std::uint64_t> cells;
  std::uint64_t total = 0;

  std::uint64_t Count(const CensusKey& key) const;
  // Matroids of the given rank with cogirth > threshold (infinity counts),
  // restricted to loopless ones when loopless_only is set.
  std::uint64_t CountRankCogirthAbove(int rank, int threshold,
                                      bool loopless_only) const;
};

inline constexpr int kDefaultCensusMaxN = 8;
inline constexpr int kHardCensusMaxN = 12;

class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CensusOptions {
  int jobs = 1;
  // Raising this above kDefaultCensusMaxN is unsupported territory; values
  // above kHardCensusMaxN are always rejected.
  int max_n = kDefaultCensusMaxN;
};

// Builds S_{I,pi} for every I in {1..n} and pi in S_n, deduplicates by
// basis collection, and classifies the distinct matroids by rank, loops,
// and cogirth using the generic matroid engine. Work is partitioned by I;
// the result does not depend on `jobs`. Throws ResourceGuardError when n is
// outside [1, max_n].
CensusTable RunCensus(int n, const CensusOptions& options = {});

struct CoefficientCheck {
  ChowKind kind;
  int degree;             // m in [x^m]
  BigInt polynomial;      // coefficient of the closed form
  std::uint64_t census;   // number of matching Schubert matroids
  bool ok() const { return polynomial == census; }
};

struct SchubertExpansionReport {
  int k = 0;
  int n = 0;
  std::vector<CoefficientCheck> checks;
  bool passed() const;
};

// Compares every coefficient of the Chow polynomial of U_{k,n} with the
// loopless Schubert matroids of rank m + 1 and cogirth > n - k, and every
// coefficient of the augmented one with all Schubert matroids of rank m
// and cogirth > n - k. Requires 1 <= k <= n = census.n.
SchubertExpansionReport VerifySchubertExpansion(int k, int n,
                                                const CensusTable& census);

struct CountingFormulaCheck {
  CensusKey key;
  BigInt formula;
  std::uint64_t census;
  bool ok() const { return formula == census; }
};

// One entry per key that is nonzero in the census or in SchubertCount,
// excluding the rank-0 cell (which the formula does not cover).
std::vector<CountingFormulaCheck> CompareWithCountingFormula(
    const CensusTable& census);

// True iff some subsequence of w is order-isomorphic to pattern.
bool ContainsPattern(const Permutation& w, const Permutation& pattern);

// Permutations of {1..n} with at most one descent avoiding the pattern.
// Throws std::invalid_argument unless the pattern has exactly one descent,
// and std::domain_error when n > 9.
BigInt GrassmannianAvoidingCount(int n, const Permutation& pattern);

}  // namespace chow

#endif  // CHOW_SCHUBERT_H_
