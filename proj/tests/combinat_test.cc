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
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.h"

namespace chow {
namespace {

std::uint64_t Fact(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// n! over the factorials of the gaps between run minima, written out
// directly from the run structure.
std::uint64_t GapMultinomial(int n, std::uint64_t mask) {
  std::vector<int> run_minima;
  for (int i = 1; i <= n; ++i) {
    const bool in = (mask >> (i - 1)) & 1;
    const bool prev = i > 1 && ((mask >> (i - 2)) & 1);
    if (in && !prev) run_minima.push_back(i);
  }
  if (run_minima.empty()) return 1;
  std::uint64_t value = Fact(n) / Fact(run_minima.front() - 1);
  for (size_t j = 1; j < run_minima.size(); ++j) {
    value /= Fact(run_minima[j] - run_minima[j - 1]);
  }
  return value / Fact(n + 1 - run_minima.back());
}

TEST(IndexSetTest, Validation) {
  EXPECT_THROW(IndexSet({2, 1}), std::invalid_argument);
  EXPECT_THROW(IndexSet({0, 1}), std::invalid_argument);
  EXPECT_THROW(IndexSet({1, 1}), std::invalid_argument);
  EXPECT_EQ(IndexSet::FromMask(0b1011), IndexSet({1, 2, 4}));
  EXPECT_EQ(IndexSet({1, 2, 4}).ToMask(), 0b1011u);
  EXPECT_EQ(IndexSet::Range(3, 5), IndexSet({3, 4, 5}));
  EXPECT_TRUE(IndexSet::Range(3, 2).empty());
  EXPECT_EQ(IndexSet({2, 3}).ToString(), "{2,3}");
}

TEST(RunsPartitionTest, Examples) {
  EXPECT_EQ(RunsPartition(IndexSet({2, 3, 5, 7, 8})),
            (std::vector<IndexSet>{{2, 3}, {5}, {7, 8}}));
  EXPECT_EQ(RunsPartition(IndexSet({1, 2, 3})),
            (std::vector<IndexSet>{{1, 2, 3}}));
  EXPECT_EQ(RunsPartition(IndexSet({1, 3, 5})),
            (std::vector<IndexSet>{{1}, {3}, {5}}));
}

TEST(RunsPartitionTest, EmptyRejected) {
  try {
    RunsPartition(IndexSet());
    FAIL() << "expected an error";
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "empty set has no run partition");
  }
}

TEST(DeltaMultinomialTest, Examples) {
  EXPECT_EQ(DeltaMultinomial(8, IndexSet({2, 3, 5, 7, 8})), 1680);
  EXPECT_EQ(DeltaMultinomial(8, IndexSet({2, 3, 5, 7, 8})),
            Fact(8) / (Fact(1) * Fact(3) * Fact(2) * Fact(2)));
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(DeltaMultinomial(n, IndexSet()), 1);
  EXPECT_EQ(DeltaMultinomial(5, IndexSet({1})), 1);
  EXPECT_THROW(DeltaMultinomial(4, IndexSet({2, 5})), std::domain_error);
}

TEST(DeltaMultinomialTest, MatchesGapFormulaExhaustively) {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ASSERT_EQ(DeltaMultinomial(n, IndexSet::FromMask(mask)),
                GapMultinomial(n, mask))
          << "n=" << n << " I=" << IndexSet::FromMask(mask).ToString();
    }
  }
}

TEST(NoConsecutiveSubsetsTest, Examples) {
  EXPECT_EQ(NoConsecutiveSubsets(2, false),
            (std::vector<IndexSet>{{}, {1}, {2}}));
  EXPECT_EQ(NoConsecutiveSubsets(2, true), (std::vector<IndexSet>{{}, {2}}));
  EXPECT_EQ(NoConsecutiveSubsets(0, false), (std::vector<IndexSet>{{}}));
  EXPECT_EQ(NoConsecutiveSubsets(0, true), (std::vector<IndexSet>{{}}));
}

TEST(NoConsecutiveSubsetsTest, MatchesFilterAndFibonacci) {
  std::uint64_t fib_prev = 1;  // F(1)
  std::uint64_t fib = 2;       // F(3), count for m = 1
  for (int m = 1; m <= 12; ++m) {
    for (bool exclude_one : {false, true}) {
      std::vector<IndexSet> expected;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (mask & (mask >> 1)) continue;
        if (exclude_one && (mask & 1)) continue;
        expected.push_back(IndexSet::FromMask(mask));
      }
      std::sort(expected.begin(), expected.end(),
                [](const IndexSet& a, const IndexSet& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
                });
      EXPECT_EQ(NoConsecutiveSubsets(m, exclude_one), expected) << m;
    }
    EXPECT_EQ(NoConsecutiveSubsets(m, false).size(), fib) << m;
    const std::uint64_t next = fib + fib_prev;
    fib_prev = fib;
    fib = next;
  }
}

TEST(DescentSetTest, Examples) {
  EXPECT_EQ(DescentSet(std::vector<int>{3, 6, 4, 1}), IndexSet({2, 3}));
  EXPECT_EQ(DescentSet(std::vector<int>{1, 4, 7}), IndexSet());
  EXPECT_EQ(DescentSet(std::vector<int>{5, 4, 3, 2}), IndexSet({1, 2, 3}));
  EXPECT_EQ(DescentSet(std::vector<int>{}), IndexSet());
}

TEST(EulerianFixedDescentsTest, Examples) {
  EXPECT_EQ(EulerianFixedDescents(5, IndexSet({2})), 9);
  EXPECT_EQ(EulerianFixedDescents(5, IndexSet()), 1);
  EXPECT_EQ(EulerianFixedDescents(4, IndexSet({1, 2, 3})), 1);
  EXPECT_THROW(EulerianFixedDescents(4, IndexSet({4})), std::domain_error);
}

TEST(EulerianFixedDescentsTest, MatchesBruteForce) {
  for (int n = 1; n <= 8; ++n) {
    const std::vector<std::uint64_t> counts =
        testing::BruteForceDescentSetCounts(n);
    BigInt total = 0;
    for (std::uint64_t mask = 0; mask < counts.size(); ++mask) {
      const BigInt e = EulerianFixedDescents(n, IndexSet::FromMask(mask));
      ASSERT_EQ(e, counts[mask]) << "n=" << n << " mask=" << mask;
      total += e;
    }
    EXPECT_EQ(total, Factorial(n));
  }
}

TEST(EulerianPolynomialTest, Examples) {
  EXPECT_EQ(EulerianPolynomial(0), UniPoly::Constant(1));
  EXPECT_EQ(EulerianPolynomial(2), UniPoly({1, 1}));
  EXPECT_EQ(EulerianPolynomial(5), UniPoly({1, 26, 66, 26, 1}));
}

TEST(EulerianPolynomialTest, MatchesBruteForce) {
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(EulerianPolynomial(n), testing::BruteForceEulerian(n)) << n;
  }
}

TEST(DerangementPolynomialTest, Examples) {
  EXPECT_EQ(DerangementPolynomial(0), UniPoly::Constant(1));
  EXPECT_TRUE(DerangementPolynomial(1).IsZero());
  EXPECT_EQ(DerangementPolynomial(3), UniPoly({0, 1, 1}));
}

TEST(DerangementPolynomialTest, MatchesBruteForce) {
  for (int n = 0; n <= 9; ++n) {
    EXPECT_EQ(DerangementPolynomial(n), testing::BruteForceDerangement(n))
        << n;
  }
}

// d_n = (n-1) x (d_{n-1} + d_{n-2}) + x (1 - x) d'_{n-1}, checked past the
// range where the library enumerates.
TEST(DerangementPolynomialTest, SatisfiesRecurrenceBeyondEnumeration) {
  const UniPoly x = UniPoly::Monomial(1, 1);
  const UniPoly x_one_minus_x({0, 1, -1});
  for (int n = 2; n <= 14; ++n) {
    const UniPoly prev = DerangementPolynomial(n - 1);
    std::vector<BigInt> derivative;
    for (int i = 1; i <= prev.degree(); ++i) {
      derivative.push_back(prev.Coefficient(i) * i);
    }
    const UniPoly expected =
        (x * (prev + DerangementPolynomial(n - 2))).Scaled(n - 1) +
        x_one_minus_x * UniPoly(derivative);
    EXPECT_EQ(DerangementPolynomial(n), expected) << n;
  }
}

TEST(DerangementPolynomialTest, BinomialIdentity) {
  for (int n = 0; n <= 13; ++n) {
    UniPoly sum;
    for (int j = 0; j <= n; ++j) {
      sum += DerangementPolynomial(j).Scaled(Binomial(n, j));
    }
    EXPECT_EQ(sum, EulerianPolynomial(n)) << n;
  }
}

TEST(SubsetPermutationTest, Validation) {
  EXPECT_NO_THROW(SubsetPermutation(IndexSet({1, 3}), {3, 1}));
  EXPECT_THROW(SubsetPermutation(IndexSet({1, 3}), {3, 2}),
               std::invalid_argument);
  EXPECT_THROW(SubsetPermutation(IndexSet({1, 3}), {3}),
               std::invalid_argument);
}

TEST(ExtendTest, Examples) {
  const SubsetPermutation sigma(IndexSet({1, 3, 4, 6}), {3, 6, 4, 1});
  EXPECT_EQ(Extend(sigma, 8), (Permutation{3, 6, 4, 1, 2, 5, 7, 8}));
  EXPECT_EQ(Extend(SubsetPermutation(IndexSet({1, 2, 3}), {2, 3, 1}), 3),
            (Permutation{2, 3, 1}));
  EXPECT_EQ(Extend(SubsetPermutation(IndexSet(), {}), 3),
            (Permutation{1, 2, 3}));
  EXPECT_THROW(Extend(sigma, 5), std::domain_error);
}

TEST(StandardizeTest, Examples) {
  EXPECT_EQ(
      Standardize(SubsetPermutation(IndexSet({1, 3, 4, 6}), {3, 6, 4, 1})),
      (Permutation{2, 4, 3, 1}));
  EXPECT_EQ(Standardize(SubsetPermutation(IndexSet({2, 5, 9}), {2, 5, 9})),
            (Permutation{1, 2, 3}));
  EXPECT_EQ(Standardize(SubsetPermutation(IndexSet({5, 8}), {8, 5})),
            (Permutation{2, 1}));
}

// Standardizing keeps descents; extending keeps descents inside the prefix
// and adds at most one at the junction.
TEST(ExtendStandardizeTest, DescentProperties) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
    IndexSet support = IndexSet::FromMask(mask);
    std::vector<int> line(support.begin(), support.end());
    std::shuffle(line.begin(), line.end(), rng);
    const SubsetPermutation sigma(support, line);

    EXPECT_EQ(DescentSet(Standardize(sigma)), DescentSet(line));
    const Permutation extended = Extend(sigma, n);
    std::vector<int> sorted = extended;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 1);
    ASSERT_EQ(sorted, identity);
    const IndexSet ext_descents = DescentSet(extended);
    for (int d : ext_descents) {
      EXPECT_LE(d, support.size());
    }
    for (int d : DescentSet(line)) EXPECT_TRUE(ext_descents.contains(d));
  }
}

TEST(ForEachPermutationTest, VisitsAllOnce) {
  for (int n = 0; n <= 6; ++n) {
    std::vector<Permutation> seen;
    ForEachPermutation(n, [&](const Permutation& p) { seen.push_back(p); });
    EXPECT_EQ(seen.size(), Fact(n));
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
  }
}

TEST(ArithmeticTest, FactorialBinomialMultinomial) {
  EXPECT_EQ(Factorial(0), 1);
  EXPECT_EQ(Factorial(20), Fact(20));
  EXPECT_EQ(Binomial(6, 3), 20);
  EXPECT_EQ(Binomial(3, 5), 0);
  EXPECT_EQ(Binomial(3, -1), 0);
  const std::vector<int> parts{1, 3, 2, 2};
  EXPECT_EQ(Multinomial(parts), 1680);
}

}  // namespace
}  // namespace chow
