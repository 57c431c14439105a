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

// Small matroids on the ground set {1..n}, n <= 16, given by their bases.
// Element e is bit e - 1 of an ElementMask.

#ifndef CHOW_MATROID_H_
#define CHOW_MATROID_H_

#include <cstdint>
#include <limits>
#include <vector>

#include "chow/combinat.h"

namespace chow {

using ElementMask = std::uint32_t;

inline constexpr int kMaxGroundSetSize = 16;
// Exchange-axiom validation runs on construction up to this size.
inline constexpr int kMaxValidatedGroundSetSize = 12;
// Girth of a matroid without circuits.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

class Matroid {
 public:
  // Throws std::invalid_argument when the collection is empty, has bases of
  // different sizes, repeats a basis, mentions an element outside {1..n},
  // or violates basis exchange (checked for n <= 12). The message names the
  // offending bases.
  static Matroid FromBases(int n, const std::vector<std::vector<int>>& bases);
  static Matroid FromBasisMasks(int n, std::vector<ElementMask> bases);
  // Skips the exchange-axiom check; for constructions that are matroids by
  // theory (uniform, Schubert, duals, relabelings).
  static Matroid FromBasisMasksUnchecked(int n, std::vector<ElementMask> bases);

  int ground_set_size() const { return n_; }
  int rank() const { return rank_; }
  // Sorted increasingly by mask value.
  const std::vector<ElementMask>& bases() const { return bases_; }
  ElementMask ground_set() const;
  bool IsBasis(ElementMask set) const;

  // Bases are the complements of the bases of this matroid.
  Matroid Dual() const;
  // Element e becomes relabeling[e - 1].
  Matroid Relabeled(const Permutation& relabeling) const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(int n, int rank, std::vector<ElementMask> bases)
      : n_(n), rank_(rank), bases_(std::move(bases)) {}

  int n_;
  int rank_;
  std::vector<ElementMask> bases_;
};

// All k-subsets of {1..n}. Throws std::domain_error unless 0 <= k <= n.
Matroid UniformMatroid(int k, int n);

// Indicator over all 2^n subsets: entry S is 1 iff S lies in some basis.
std::vector<std::uint8_t> IndependenceTable(const Matroid& m);
// Rank of every subset, indexed by mask.
std::vector<int> RankTable(const Matroid& m);

IndexSet Loops(const Matroid& m);
IndexSet Coloops(const Matroid& m);
// Minimal dependent sets in increasing mask order.
std::vector<ElementMask> Circuits(const Matroid& m);
// kInfiniteGirth when there is no circuit.
int Girth(const Matroid& m);
int Cogirth(const Matroid& m);

struct MatroidInvariants {
  int rank;
  IndexSet loops;
  IndexSet coloops;
  std::vector<ElementMask> circuits;
  int girth;
  int cogirth;
  Matroid dual;
};

MatroidInvariants ComputeInvariants(const Matroid& m);

IndexSet MaskToIndexSet(ElementMask mask);
ElementMask IndexSetToMask(const IndexSet& set);

}  // namespace chow

#endif  // CHOW_MATROID_H_
