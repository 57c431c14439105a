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

#include "chow/matroid.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace chow {
namespace {

ElementMask FullMask(int n) {
  return n >= 32 ? ~ElementMask{0} : (ElementMask{1} << n) - 1;
}

void CheckGroundSetSize(int n) {
  if (n < 0 || n > kMaxGroundSetSize) {
    throw std::invalid_argument("ground set size must be in [0, " +
                                std::to_string(kMaxGroundSetSize) + "]");
  }
}

std::string MaskString(ElementMask mask) {
  return MaskToIndexSet(mask).ToString();
}

// First violation of basis exchange, as an error message; empty if none.
std::string FindExchangeViolation(int n,
                                  const std::vector<ElementMask>& bases) {
  std::vector<std::uint8_t> is_basis(std::size_t{1} << n, 0);
  for (ElementMask b : bases) is_basis[b] = 1;
  for (ElementMask b1 : bases) {
    for (ElementMask b2 : bases) {
      const ElementMask only_in_b2 = b2 & ~b1;
      for (ElementMask rest = b1 & ~b2; rest != 0; rest &= rest - 1) {
        const ElementMask x = rest & -rest;
        bool found = false;
        for (ElementMask cand = only_in_b2; cand != 0; cand &= cand - 1) {
          const ElementMask y = cand & -cand;
          if (is_basis[(b1 & ~x) | y]) {
            found = true;
            break;
          }
        }
        if (!found) {
          return "basis exchange fails for B1 = " + MaskString(b1) +
                 ", B2 = " + MaskString(b2) + ", x = " +
                 std::to_string(std::countr_zero(x) + 1);
        }
      }
    }
  }
  return "";
}

}  // namespace

IndexSet MaskToIndexSet(ElementMask mask) { return IndexSet::FromMask(mask); }

ElementMask IndexSetToMask(const IndexSet& set) {
  if (!set.empty() && set.max() > kMaxGroundSetSize) {
    throw std::invalid_argument("element exceeds the ground set limit");
  }
  return static_cast<ElementMask>(set.ToMask());
}

Matroid Matroid::FromBases(int n,
                           const std::vector<std::vector<int>>& bases) {
  CheckGroundSetSize(n);
  std::vector<ElementMask> masks;
  masks.reserve(bases.size());
  for (const std::vector<int>& basis : bases) {
    ElementMask mask = 0;
    for (int e : basis) {
      if (e < 1 || e > n) {
        throw std::invalid_argument("element " + std::to_string(e) +
                                    " outside the ground set");
      }
      const ElementMask bit = ElementMask{1} << (e - 1);
      if (mask & bit) {
        throw std::invalid_argument("repeated element " + std::to_string(e) +
                                    " in a basis");
      }
      mask |= bit;
    }
    masks.push_back(mask);
  }
  return FromBasisMasks(n, std::move(masks));
}

Matroid Matroid::FromBasisMasks(int n, std::vector<ElementMask> bases) {
  CheckGroundSetSize(n);
  if (bases.empty()) throw std::invalid_argument("empty basis collection");
  std::sort(bases.begin(), bases.end());
  const int rank = std::popcount(bases.front());
  for (size_t i = 0; i < bases.size(); ++i) {
    if ((bases[i] & ~FullMask(n)) != 0) {
      throw std::invalid_argument("basis " + MaskString(bases[i]) +
                                  " leaves the ground set");
    }
    if (std::popcount(bases[i]) != rank) {
      throw std::invalid_argument("bases of unequal size: " +
                                  MaskString(bases.front()) + " and " +
                                  MaskString(bases[i]));
    }
    if (i > 0 && bases[i] == bases[i - 1]) {
      throw std::invalid_argument("repeated basis " + MaskString(bases[i]));
    }
  }
  if (n <= kMaxValidatedGroundSetSize) {
    std::string violation = FindExchangeViolation(n, bases);
    if (!violation.empty()) throw std::invalid_argument(violation);
  }
  return Matroid(n, rank, std::move(bases));
}

Matroid Matroid::FromBasisMasksUnchecked(int n,
                                         std::vector<ElementMask> bases) {
  CheckGroundSetSize(n);
  if (bases.empty()) throw std::invalid_argument("empty basis collection");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int rank = std::popcount(bases.front());
  return Matroid(n, rank, std::move(bases));
}

ElementMask Matroid::ground_set() const { return FullMask(n_); }

bool Matroid::IsBasis(ElementMask set) const {
  return std::binary_search(bases_.begin(), bases_.end(), set);
}

Matroid Matroid::Dual() const {
  std::vector<ElementMask> complements;
  complements.reserve(bases_.size());
  for (ElementMask b : bases_) complements.push_back(ground_set() & ~b);
  return FromBasisMasksUnchecked(n_, std::move(complements));
}

Matroid Matroid::Relabeled(const Permutation& relabeling) const {
  if (static_cast<int>(relabeling.size()) != n_) {
    throw std::invalid_argument("relabeling has the wrong length");
  }
  std::vector<ElementMask> relabeled;
  relabeled.reserve(bases_.size());
  for (ElementMask b : bases_) {
    ElementMask image = 0;
    for (int e = 1; e <= n_; ++e) {
      if ((b >> (e - 1)) & 1) image |= ElementMask{1} << (relabeling[e - 1] - 1);
    }
    relabeled.push_back(image);
  }
  return FromBasisMasksUnchecked(n_, std::move(relabeled));
}

Matroid UniformMatroid(int k, int n) {
  CheckGroundSetSize(n);
  if (k < 0 || k > n) {
    throw std::domain_error("uniform matroid needs 0 <= k <= n");
  }
  std::vector<ElementMask> bases;
  for (ElementMask mask = 0; mask <= FullMask(n); ++mask) {
    if (std::popcount(mask) == k) bases.push_back(mask);
    if (mask == FullMask(n)) break;
  }
  return Matroid::FromBasisMasksUnchecked(n, std::move(bases));
}

std::vector<std::uint8_t> IndependenceTable(const Matroid& m) {
  const int n = m.ground_set_size();
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> independent(size, 0);
  for (ElementMask b : m.bases()) independent[b] = 1;
  // Supersets have larger mask values, so a descending sweep sees them first.
  for (std::size_t s = size; s-- > 0;) {
    if (independent[s]) continue;
    for (int e = 0; e < n; ++e) {
      const std::size_t bit = std::size_t{1} << e;
      if ((s & bit) == 0 && independent[s | bit]) {
        independent[s] = 1;
        break;
      }
    }
  }
  return independent;
}

std::vector<int> RankTable(const Matroid& m) {
  const int n = m.ground_set_size();
  const std::vector<std::uint8_t> independent = IndependenceTable(m);
  std::vector<int> rank(independent.size(), 0);
  for (std::size_t s = 0; s < independent.size(); ++s) {
    if (independent[s]) {
      rank[s] = std::popcount(s);
      continue;
    }
    for (int e = 0; e < n; ++e) {
      const std::size_t bit = std::size_t{1} << e;
      if (s & bit) rank[s] = std::max(rank[s], rank[s & ~bit]);
    }
  }
  return rank;
}

IndexSet Loops(const Matroid& m) {
  ElementMask covered = 0;
  for (ElementMask b : m.bases()) covered |= b;
  return MaskToIndexSet(m.ground_set() & ~covered);
}

IndexSet Coloops(const Matroid& m) {
  ElementMask common = m.ground_set();
  for (ElementMask b : m.bases()) common &= b;
  return MaskToIndexSet(common);
}

std::vector<ElementMask> Circuits(const Matroid& m) {
  const int n = m.ground_set_size();
  const std::vector<std::uint8_t> independent = IndependenceTable(m);
  std::vector<ElementMask> circuits;
  for (std::size_t s = 0; s < independent.size(); ++s) {
    if (independent[s]) continue;
    bool minimal = true;
    for (int e = 0; e < n && minimal; ++e) {
      const std::size_t bit = std::size_t{1} << e;
      if ((s & bit) && !independent[s & ~bit]) minimal = false;
    }
    if (minimal) circuits.push_back(static_cast<ElementMask>(s));
  }
  return circuits;
}

int Girth(const Matroid& m) {
  // The smallest dependent set is automatically a circuit.
  const std::vector<std::uint8_t> independent = IndependenceTable(m);
  int girth = kInfiniteGirth;
  for (std::size_t s = 0; s < independent.size(); ++s) {
    if (!independent[s]) girth = std::min(girth, std::popcount(s));
  }
  return girth;
}

int Cogirth(const Matroid& m) { return Girth(m.Dual()); }

MatroidInvariants ComputeInvariants(const Matroid& m) {
  Matroid dual = m.Dual();
  return MatroidInvariants{
      .rank = m.rank(),
      .loops = Loops(m),
      .coloops = Coloops(m),
      .circuits = Circuits(m),
      .girth = Girth(m),
      .cogirth = Girth(dual),
      .dual = std::move(dual),
  };
}

}  // namespace chow
