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

#include "chow/flat_lattice.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace chow {

FlatLattice::FlatLattice(const Matroid& m) : rank_(m.rank()) {
  const int n = m.ground_set_size();
  const std::vector<int> rank = RankTable(m);
  std::vector<std::pair<int, ElementMask>> found;
  for (std::size_t s = 0; s < rank.size(); ++s) {
    bool closed = true;
    for (int e = 0; e < n && closed; ++e) {
      const std::size_t bit = std::size_t{1} << e;
      if ((s & bit) == 0 && rank[s | bit] == rank[s]) closed = false;
    }
    if (closed) found.emplace_back(rank[s], static_cast<ElementMask>(s));
  }
  std::sort(found.begin(), found.end());
  for (const auto& [r, mask] : found) {
    index_[mask] = static_cast<int>(flats_.size());
    flats_.push_back(mask);
    ranks_.push_back(r);
  }

  // Atoms, ordered by the first element they add to the bottom flat.
  const ElementMask bottom_flat = flats_.front();
  for (int id = 0; id < size(); ++id) {
    if (ranks_[id] == ranks_.front() + 1) atoms_.push_back(id);
  }
  std::sort(atoms_.begin(), atoms_.end(), [&](int a, int b) {
    return std::countr_zero(flats_[a] & ~bottom_flat) <
           std::countr_zero(flats_[b] & ~bottom_flat);
  });

  covers_.resize(flats_.size());
  for (int lower = 0; lower < size(); ++lower) {
    for (int upper = lower + 1; upper < size(); ++upper) {
      if (ranks_[upper] != ranks_[lower] + 1) continue;
      if ((flats_[lower] & ~flats_[upper]) != 0) continue;
      covers_[lower].push_back({upper, ComputeLabel(lower, upper)});
    }
  }
}

std::optional<int> FlatLattice::Find(ElementMask flat) const {
  auto it = index_.find(flat);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FlatLattice::IsCover(ElementMask lower, ElementMask upper) const {
  const std::optional<int> lo = Find(lower);
  const std::optional<int> up = Find(upper);
  if (!lo || !up) return false;
  return (lower & ~upper) == 0 && ranks_[*up] == ranks_[*lo] + 1;
}

int FlatLattice::ComputeLabel(int lower, int upper) const {
  for (size_t j = 0; j < atoms_.size(); ++j) {
    const ElementMask atom = flats_[atoms_[j]];
    const bool below_upper = (atom & ~flats_[upper]) == 0;
    const bool below_lower = (atom & ~flats_[lower]) == 0;
    if (below_upper && !below_lower) return static_cast<int>(j) + 1;
  }
  throw std::logic_error("cover without a new atom");
}

int FlatLattice::Label(ElementMask lower, ElementMask upper) const {
  if (!IsCover(lower, upper)) {
    throw std::invalid_argument("not a cover relation: " +
                                MaskToIndexSet(lower).ToString() + " < " +
                                MaskToIndexSet(upper).ToString());
  }
  return ComputeLabel(*Find(lower), *Find(upper));
}

void ForEachMaximalChain(
    const FlatLattice& lattice,
    const std::function<void(const LabeledChain&)>& visit) {
  LabeledChain chain;
  chain.flats.push_back(lattice.flat(lattice.bottom()));
  std::function<void(int)> descend = [&](int id) {
    if (id == lattice.top()) {
      visit(chain);
      return;
    }
    for (const FlatLattice::Cover& cover : lattice.upper_covers(id)) {
      chain.flats.push_back(lattice.flat(cover.upper));
      chain.labels.push_back(cover.label);
      descend(cover.upper);
      chain.flats.pop_back();
      chain.labels.pop_back();
    }
  };
  descend(lattice.bottom());
}

namespace {

void CheckOracleInput(const Matroid& m) {
  if (!Loops(m).empty()) {
    throw std::domain_error("oracle requires loopless input");
  }
  if (m.rank() < 1) throw std::domain_error("oracle requires rank >= 1");
}

// Descent mask of a label sequence (bit i for position i) if it qualifies
// for the chain sum, otherwise nullopt.
std::optional<VarMask> QualifyingDescents(const std::vector<int>& labels,
                                          ChowKind kind) {
  VarMask descents = 0;
  for (size_t i = 0; i + 1 < labels.size(); ++i) {
    if (labels[i] > labels[i + 1]) descents |= VarMask{1} << (i + 1);
  }
  if ((descents & (descents >> 1)) != 0) return std::nullopt;
  if (kind == ChowKind::kChow && (descents & 2) != 0) return std::nullopt;
  return descents;
}

}  // namespace

UniPoly ChainChow(const Matroid& m, ChowKind kind) {
  CheckOracleInput(m);
  const FlatLattice lattice(m);
  const int d = kind == ChowKind::kChow ? m.rank() - 1 : m.rank();
  std::vector<BigInt> by_des(m.rank() + 1);
  ForEachMaximalChain(lattice, [&](const LabeledChain& chain) {
    if (auto descents = QualifyingDescents(chain.labels, kind)) {
      by_des[std::popcount(*descents)] += 1;
    }
  });
  UniPoly result;
  for (int des = 0; des <= m.rank(); ++des) {
    if (by_des[des] == 0) continue;
    result += UniPoly::Monomial(by_des[des], des) *
              UniPoly::OnePlusXPower(d - 2 * des);
  }
  return result;
}

SqfMultiPoly ChainChowMultivariate(const Matroid& m, ChowKind kind) {
  CheckOracleInput(m);
  const FlatLattice lattice(m);
  std::unordered_map<VarMask, BigInt> by_descents;
  ForEachMaximalChain(lattice, [&](const LabeledChain& chain) {
    if (auto descents = QualifyingDescents(chain.labels, kind)) {
      by_descents[*descents] += 1;
    }
  });
  SqfMultiPoly result(kind == ChowKind::kChow ? 1 : 0, m.rank() - 1);
  for (const auto& [descents, count] : by_descents) {
    const IndexSet positions = IndexSet::FromMask(descents >> 1);
    result += MultivariateGammaTerm(positions.elements(), m.rank(), kind)
                  .Scaled(count);
  }
  return result;
}

std::vector<SubsetPermutation> UniformChainLabelImage(int k, int n) {
  if (k < 1 || k > n) throw std::domain_error("need 1 <= k <= n");
  if (n > 20) throw std::domain_error("n too large");
  std::vector<SubsetPermutation> image;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    const IndexSet support = IndexSet::FromMask(mask);
    std::vector<int> one_line = support.elements();
    do {
      // {1, ..., sigma(max S)} must lie inside S.
      const int last = one_line.back();
      if (last <= k && support.elements()[last - 1] == last) {
        image.emplace_back(support, one_line);
      }
    } while (std::next_permutation(one_line.begin(), one_line.end()));
  }
  std::sort(image.begin(), image.end());
  return image;
}

}  // namespace chow
