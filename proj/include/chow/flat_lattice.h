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

// Lattice of flats with the minimal-atom edge labeling, maximal-chain
// enumeration, and the chain-sum evaluation of Chow polynomials that serves
// as the brute-force oracle for the uniform closed forms.

#ifndef CHOW_FLAT_LATTICE_H_
#define CHOW_FLAT_LATTICE_H_

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "chow/chow_forms.h"
#include "chow/combinat.h"
#include "chow/matroid.h"
#include "chow/poly.h"

namespace chow {

class FlatLattice {
 public:
  struct Cover {
    int upper;  // flat id
    int label;  // minimal-atom label of the cover
  };

  // Closes all 2^n subsets of the ground set.
  explicit FlatLattice(const Matroid& m);

  int size() const { return static_cast<int>(flats_.size()); }
  // Rank of the matroid, i.e. the length of every maximal chain.
  int rank() const { return rank_; }
  // Flats are numbered by increasing (rank, mask).
  ElementMask flat(int id) const { return flats_[id]; }
  int flat_rank(int id) const { return ranks_[id]; }
  const std::vector<ElementMask>& flats() const { return flats_; }
  const std::vector<Cover>& upper_covers(int id) const { return covers_[id]; }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  // Atoms ordered by the smallest element they add to the bottom flat.
  const std::vector<int>& atoms() const { return atoms_; }

  std::optional<int> Find(ElementMask flat) const;
  bool IsCover(ElementMask lower, ElementMask upper) const;

  // Smallest j (1-based) such that atom j lies below upper but not below
  // lower. For a uniform matroid this is min(upper \ lower). Throws
  // std::invalid_argument when (lower, upper) is not a cover.
  int Label(ElementMask lower, ElementMask upper) const;

 private:
  int ComputeLabel(int lower, int upper) const;

  int rank_ = 0;
  std::vector<ElementMask> flats_;
  std::vector<int> ranks_;
  std::vector<std::vector<Cover>> covers_;
  std::vector<int> atoms_;
  std::unordered_map<ElementMask, int> index_;
};

struct LabeledChain {
  std::vector<ElementMask> flats;  // bottom to top, rank + 1 entries
  std::vector<int> labels;         // labels[i] is the label of flats[i] < flats[i+1]
};

// Depth-first over upper covers, in cover order.
void ForEachMaximalChain(const FlatLattice& lattice,
                         const std::function<void(const LabeledChain&)>& visit);

// Sum over maximal chains whose label sequence has no two consecutive
// descents (and, for the Chow polynomial, no descent at position 1) of
// x^des (1 + x)^(d - 2 des), d = rank - 1 or rank. Throws
// std::domain_error unless the matroid is loopless of rank >= 1.
UniPoly ChainChow(const Matroid& m, ChowKind kind);

// Same chains, weighted by prod_{i in Des} x_i times prod (1 + x_i) over
// the window indices with i, i + 1 not in Des.
SqfMultiPoly ChainChowMultivariate(const Matroid& m, ChowKind kind);

// Subset permutations sigma of k-subsets S of {1..n} with
// {1, ..., sigma(max S)} contained in S, sorted by (support, one-line).
// These are exactly the label sequences of maximal chains of the flats of
// U_{k,n}.
std::vector<SubsetPermutation> UniformChainLabelImage(int k, int n);

}  // namespace chow

#endif  // CHOW_FLAT_LATTICE_H_
