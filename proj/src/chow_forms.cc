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

#include "chow/chow_forms.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chow/combinat.h"

namespace chow {

std::string_view FormMethodName(FormMethod method) {
  switch (method) {
    case FormMethod::kMonomial:
      return "monomial";
    case FormMethod::kGammaEulerian:
      return "gamma-eulerian";
    case FormMethod::kGammaPermutation:
      return "gamma-perm";
    case FormMethod::kConvolution:
      return "convolution";
  }
  return "unknown";
}

FormMethod ParseFormMethod(std::string_view name) {
  for (FormMethod method : kAllFormMethods) {
    if (FormMethodName(method) == name) return method;
  }
  throw std::invalid_argument("unknown method: " + std::string(name));
}

std::string_view MultivariateBasisName(MultivariateBasis basis) {
  switch (basis) {
    case MultivariateBasis::kMonomial:
      return "monomial";
    case MultivariateBasis::kGammaEulerian:
      return "gamma-eulerian";
    case MultivariateBasis::kGammaPermutation:
      return "gamma-perm";
  }
  return "unknown";
}

void CheckUniformParameters(int k, int n, ChowKind kind) {
  const int lowest = kind == ChowKind::kChow ? 1 : 0;
  if (k < lowest || k > n) {
    throw std::domain_error("need " + std::to_string(lowest) +
                            " <= k <= n, got k = " + std::to_string(k) +
                            ", n = " + std::to_string(n));
  }
  if (k > SqfMultiPoly::kMaxVariable) {
    throw std::domain_error("k too large");
  }
}

namespace {

// Gamma-expansion exponent d: the polynomial has degree d.
int CenterDegree(int k, ChowKind kind) {
  return kind == ChowKind::kChow ? k - 1 : k;
}

UniPoly MonomialForm(int k, int n, ChowKind kind) {
  std::vector<BigInt> coeffs(k + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    const int size = std::popcount(mask);
    if (kind == ChowKind::kChow) {
      if ((mask & 1) == 0) continue;
      coeffs[size - 1] += DeltaMultinomial(n, IndexSet::FromMask(mask));
    } else {
      coeffs[size] += DeltaMultinomial(n, IndexSet::FromMask(mask));
    }
  }
  return UniPoly(std::move(coeffs));
}

UniPoly GammaEulerianForm(int k, int n, ChowKind kind) {
  const int d = CenterDegree(k, kind);
  UniPoly result;
  for (const IndexSet& descents :
       NoConsecutiveSubsets(k - 1, kind == ChowKind::kChow)) {
    const int size = descents.size();
    result += UniPoly::Monomial(EulerianFixedDescents(n, descents), size) *
              UniPoly::OnePlusXPower(d - 2 * size);
  }
  return result;
}

// Tallies permutations sigma of {1..k} whose descent set has no two
// consecutive positions (and, for the Chow polynomial, sigma_1 < sigma_2),
// keyed by (descent mask, sigma_k). Bit i - 1 of the mask is position i.
// Filled in position by position, tracking the rank r of the newest entry
// among those placed so far: appending an entry of rank r' makes a descent
// iff r' <= r. After k steps the rank of the last entry is sigma_k.
class PermutationTally {
 public:
  PermutationTally(int k, ChowKind kind)
      : k_(k), counts_((std::size_t{1} << std::max(k - 1, 0)) * (k + 1)) {
    // by_mask[mask][r]: prefixes of the current length ending at rank r.
    std::map<std::uint64_t, std::vector<std::uint64_t>> by_mask;
    by_mask[0] = {0, 1};
    for (int length = 1; length < k; ++length) {
      std::map<std::uint64_t, std::vector<std::uint64_t>> next;
      for (const auto& [mask, ranks] : by_mask) {
        const bool last_was_descent =
            length >= 2 && ((mask >> (length - 2)) & 1);
        for (int r = 1; r <= length; ++r) {
          if (ranks[r] == 0) continue;
          for (int placed = 1; placed <= length + 1; ++placed) {
            const bool descent = placed <= r;
            std::uint64_t new_mask = mask;
            if (descent) {
              if (last_was_descent) continue;
              if (kind == ChowKind::kChow && length == 1) continue;
              new_mask |= std::uint64_t{1} << (length - 1);
            }
            std::vector<std::uint64_t>& slot = next[new_mask];
            slot.resize(length + 2);
            slot[placed] += ranks[r];
          }
        }
      }
      by_mask = std::move(next);
    }
    for (const auto& [mask, ranks] : by_mask) {
      for (int r = 1; r < static_cast<int>(ranks.size()); ++r) {
        counts_[mask * (k_ + 1) + r] = ranks[r];
      }
    }
  }

  std::uint64_t count(std::uint64_t descents, int last) const {
    return counts_[descents * (k_ + 1) + last];
  }
  std::size_t num_masks() const { return counts_.size() / (k_ + 1); }

 private:
  int k_;
  std::vector<std::uint64_t> counts_;
};

UniPoly GammaPermutationForm(int k, int n, ChowKind kind) {
  const int d = CenterDegree(k, kind);
  const PermutationTally tally(k, kind);
  // Aggregate by (des, sigma_k) first; the expansion only sees those.
  std::vector<std::vector<BigInt>> by_des(k + 1, std::vector<BigInt>(k + 1));
  for (std::uint64_t mask = 0; mask < tally.num_masks(); ++mask) {
    for (int last = 1; last <= k; ++last) {
      const std::uint64_t c = tally.count(mask, last);
      if (c == 0) continue;
      by_des[std::popcount(mask)][last] += BigInt(static_cast<unsigned long>(c));
    }
  }
  UniPoly result;
  for (int des = 0; des <= k; ++des) {
    BigInt weight = 0;
    for (int last = 1; last <= k; ++last) {
      if (by_des[des][last] == 0) continue;
      weight += by_des[des][last] * Binomial(n - last, k - last);
    }
    if (weight == 0) continue;
    result += UniPoly::Monomial(weight, des) *
              UniPoly::OnePlusXPower(d - 2 * des);
  }
  return result;
}

UniPoly ConvolutionForm(int k, int n, ChowKind kind) {
  UniPoly sum;
  for (int j = 0; j <= k - 1; ++j) {
    const UniPoly& inner = kind == ChowKind::kChow ? DerangementPolynomial(j)
                                                   : EulerianPolynomial(j);
    sum += inner.Scaled(Binomial(n, j)) * UniPoly::GeometricSum(k - 1 - j);
  }
  if (kind == ChowKind::kChow) return sum;
  return UniPoly::Constant(1) + UniPoly::Monomial(1, 1) * sum;
}

int FirstVariable(ChowKind kind) { return kind == ChowKind::kChow ? 1 : 0; }

SqfMultiPoly MultivariateMonomialForm(int k, int n, ChowKind kind) {
  SqfMultiPoly result(FirstVariable(kind), k - 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (kind == ChowKind::kChow && (mask & 1) == 0) continue;
    // Element i of I contributes x_{i-1}, which is bit i - 1: the mask of I
    // itself, without element 1 in the Chow case.
    const VarMask vars = kind == ChowKind::kChow ? mask & ~VarMask{1} : mask;
    result.AddTerm(vars, DeltaMultinomial(n, IndexSet::FromMask(mask)));
  }
  return result;
}

SqfMultiPoly MultivariateGammaEulerianForm(int k, int n, ChowKind kind) {
  SqfMultiPoly result(FirstVariable(kind), k - 1);
  for (const IndexSet& descents :
       NoConsecutiveSubsets(k - 1, kind == ChowKind::kChow)) {
    result += MultivariateGammaTerm(descents.elements(), k, kind)
                  .Scaled(EulerianFixedDescents(n, descents));
  }
  return result;
}

SqfMultiPoly MultivariateGammaPermutationForm(int k, int n, ChowKind kind) {
  const PermutationTally tally(k, kind);
  SqfMultiPoly result(FirstVariable(kind), k - 1);
  for (std::uint64_t mask = 0; mask < tally.num_masks(); ++mask) {
    BigInt weight = 0;
    for (int last = 1; last <= k; ++last) {
      const std::uint64_t c = tally.count(mask, last);
      if (c == 0) continue;
      weight += BigInt(static_cast<unsigned long>(c)) *
                Binomial(n - last, k - last);
    }
    if (weight == 0) continue;
    result += MultivariateGammaTerm(IndexSet::FromMask(mask).elements(), k,
                                    kind)
                  .Scaled(weight);
  }
  return result;
}

}  // namespace

SqfMultiPoly MultivariateGammaTerm(std::span<const int> descents, int rank,
                                   ChowKind kind) {
  const int first = FirstVariable(kind);
  const int last = rank - 1;
  VarMask descent_mask = 0;
  for (int i : descents) descent_mask |= VarMask{1} << i;
  SqfMultiPoly term = SqfMultiPoly::Term(first, last, descent_mask, 1);
  for (int i = first; i <= last; ++i) {
    const bool blocked =
        ((descent_mask >> i) & 1) || (i + 1 <= 63 && (descent_mask >> (i + 1)) & 1);
    if (blocked) continue;
    term = term * SqfMultiPoly::OnePlusVariable(first, last, i);
  }
  return term;
}

UniPoly ClosedForm(int k, int n, FormMethod method, ChowKind kind) {
  CheckUniformParameters(k, n, kind);
  if (k == 0) return UniPoly::Constant(1);
  switch (method) {
    case FormMethod::kMonomial:
      return MonomialForm(k, n, kind);
    case FormMethod::kGammaEulerian:
      return GammaEulerianForm(k, n, kind);
    case FormMethod::kGammaPermutation:
      return GammaPermutationForm(k, n, kind);
    case FormMethod::kConvolution:
      return ConvolutionForm(k, n, kind);
  }
  throw std::invalid_argument("unknown method");
}

SqfMultiPoly MultivariateClosedForm(int k, int n, MultivariateBasis basis,
                                    ChowKind kind) {
  CheckUniformParameters(k, n, kind);
  if (k == 0) return SqfMultiPoly::Constant(0, -1, 1);
  switch (basis) {
    case MultivariateBasis::kMonomial:
      return MultivariateMonomialForm(k, n, kind);
    case MultivariateBasis::kGammaEulerian:
      return MultivariateGammaEulerianForm(k, n, kind);
    case MultivariateBasis::kGammaPermutation:
      return MultivariateGammaPermutationForm(k, n, kind);
  }
  throw std::invalid_argument("unknown basis");
}

namespace {

// n! / (a! b! c!) with a + b + c = n; zero if any part is negative.
BigInt Trinomial(int n, int a, int b) {
  const int c = n - a - b;
  if (a < 0 || b < 0 || c < 0) return 0;
  const int parts[] = {a, b, c};
  return Multinomial(parts);
}

}  // namespace

BigInt CoefficientFormula(int k, int n, int m, ChowKind kind) {
  CheckUniformParameters(k, n, kind);
  if (m != 1 && m != 2) {
    throw std::invalid_argument("coefficient formula only for m = 1, 2");
  }
  BigInt c = 0;
  if (kind == ChowKind::kChow) {
    // The leading 1 is the single run {1..m+1}, present only when k > m.
    if (k > m) c += 1;
    if (m == 1) {
      for (int i = 2; i <= k - 1; ++i) c += Binomial(n, i);
      return c;
    }
    for (int i = 3; i <= k - 1; ++i) c += Binomial(n, i);
    for (int i = 2; i <= k - 2; ++i) c += Binomial(n, i);
    for (int i = 2; i <= k - 3; ++i) {
      for (int j = 2; j <= k - i - 1; ++j) c += Trinomial(n, i, j);
    }
    return c;
  }
  if (m == 1) {
    for (int i = 0; i <= k - 1; ++i) c += Binomial(n, i);
    return c;
  }
  for (int i = 1; i <= k - 1; ++i) c += Binomial(n, i - 1);
  for (int i = 1; i <= k - 2; ++i) {
    for (int j = 2; j <= k - i; ++j) c += Trinomial(n, i - 1, j);
  }
  return c;
}

}  // namespace chow
