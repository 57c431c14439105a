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

// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check: permutation statistics are counted directly over
// std::next_permutation, and the matroid corpus is built from graphs,
// direct sums, and relabelings.

#ifndef CHOW_TESTS_TEST_SUPPORT_H_
#define CHOW_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "chow/matroid.h"
#include "chow/poly.h"

namespace chow {

// gtest printers.
inline void PrintTo(const UniPoly& p, std::ostream* os) { *os << p.ToString(); }
inline void PrintTo(const SqfMultiPoly& p, std::ostream* os) {
  *os << p.ToString();
}

}  // namespace chow

namespace chow::testing {

inline int CountDescents(const std::vector<int>& w) {
  int d = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

// Descent polynomial over all n! permutations.
inline UniPoly BruteForceEulerian(int n) {
  std::vector<BigInt> counts(std::max(n, 1));
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    counts[CountDescents(w)] += 1;
  } while (std::next_permutation(w.begin(), w.end()));
  return UniPoly(std::move(counts));
}

// Excedance polynomial over fixpoint-free permutations.
inline UniPoly BruteForceDerangement(int n) {
  std::vector<BigInt> counts(n + 1);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    bool fixed = false;
    int exc = 0;
    for (int i = 0; i < n; ++i) {
      fixed |= w[i] == i + 1;
      exc += w[i] > i + 1;
    }
    if (!fixed) counts[exc] += 1;
  } while (std::next_permutation(w.begin(), w.end()));
  return UniPoly(std::move(counts));
}

// Descent mask (bit i-1 for position i) -> number of permutations of n.
inline std::vector<std::uint64_t> BruteForceDescentSetCounts(int n) {
  std::vector<std::uint64_t> counts(std::size_t{1} << std::max(n - 1, 0));
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    std::uint64_t mask = 0;
    for (int i = 0; i + 1 < n; ++i) {
      if (w[i] > w[i + 1]) mask |= std::uint64_t{1} << i;
    }
    ++counts[mask];
  } while (std::next_permutation(w.begin(), w.end()));
  return counts;
}

// Cycle matroid of a multigraph (no self-loops): bases are spanning forests.
inline Matroid GraphicMatroid(int vertices,
                              const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  auto forest_size = [&](ElementMask set) {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int merged = 0;
    bool acyclic = true;
    for (int e = 0; e < n; ++e) {
      if (((set >> e) & 1) == 0) continue;
      const int a = find(edges[e].first);
      const int b = find(edges[e].second);
      if (a == b) {
        acyclic = false;
      } else {
        parent[a] = b;
        ++merged;
      }
    }
    return std::make_pair(acyclic, merged);
  };
  const int rank = forest_size((ElementMask{1} << n) - 1).second;
  std::vector<ElementMask> bases;
  for (ElementMask s = 0; s < (ElementMask{1} << n); ++s) {
    if (std::popcount(s) != rank) continue;
    if (forest_size(s).first) bases.push_back(s);
  }
  return Matroid::FromBasisMasks(n, bases);
}

inline Matroid DirectSum(const Matroid& a, const Matroid& b) {
  const int shift = a.ground_set_size();
  std::vector<ElementMask> bases;
  for (ElementMask x : a.bases()) {
    for (ElementMask y : b.bases()) bases.push_back(x | (y << shift));
  }
  return Matroid::FromBasisMasks(shift + b.ground_set_size(), bases);
}

inline std::vector<int> RandomPermutation(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Loopless matroids on at most max_n elements: cycle matroids of random
// multigraphs, direct sums of uniform matroids, and random relabelings.
// Deterministic for a given seed; duplicates removed.
inline std::vector<Matroid> LooplessCorpus(int count, int max_n,
                                           unsigned seed = 20261016) {
  std::mt19937 rng(seed);
  std::vector<Matroid> corpus;
  std::set<std::pair<int, std::vector<ElementMask>>> seen;
  auto add = [&](const Matroid& m) {
    if (m.rank() < 1 || m.ground_set_size() > max_n) return;
    ElementMask covered = 0;
    for (ElementMask b : m.bases()) covered |= b;
    if (covered != m.ground_set()) return;  // has loops
    if (seen.insert({m.ground_set_size(), m.bases()}).second) {
      corpus.push_back(m);
    }
  };
  int attempts = 0;
  while (static_cast<int>(corpus.size()) < count && attempts < 100 * count) {
    ++attempts;
    switch (attempts % 3) {
      case 0: {
        const int vertices = 2 + static_cast<int>(rng() % 4);
        const int edges = 1 + static_cast<int>(rng() % max_n);
        std::vector<std::pair<int, int>> list;
        for (int e = 0; e < edges; ++e) {
          int a = static_cast<int>(rng() % vertices);
          int b = static_cast<int>(rng() % (vertices - 1));
          if (b >= a) ++b;
          list.emplace_back(a, b);
        }
        add(GraphicMatroid(vertices, list));
        break;
      }
      case 1: {
        const int n1 = 1 + static_cast<int>(rng() % (max_n - 1));
        const int n2 = 1 + static_cast<int>(rng() % (max_n - n1));
        const int k1 = 1 + static_cast<int>(rng() % n1);
        const int k2 = 1 + static_cast<int>(rng() % n2);
        Matroid sum = DirectSum(UniformMatroid(k1, n1), UniformMatroid(k2, n2));
        add(sum.Relabeled(RandomPermutation(sum.ground_set_size(), rng)));
        break;
      }
      default: {
        const int vertices = 3 + static_cast<int>(rng() % 3);
        const int edges = 3 + static_cast<int>(rng() % (max_n - 2));
        std::vector<std::pair<int, int>> list;
        for (int e = 0; e < edges; ++e) {
          int a = static_cast<int>(rng() % vertices);
          int b = static_cast<int>(rng() % (vertices - 1));
          if (b >= a) ++b;
          list.emplace_back(a, b);
        }
        Matroid g = GraphicMatroid(vertices, list);
        add(g.Relabeled(RandomPermutation(g.ground_set_size(), rng)));
        break;
      }
    }
  }
  return corpus;
}

}  // namespace chow::testing

#endif  // CHOW_TESTS_TEST_SUPPORT_H_
