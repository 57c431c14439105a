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

// Closed forms for the Chow polynomial and the augmented Chow polynomial of
// the uniform matroid U_{k,n}.
//
// Every univariate method computes the same polynomial; they differ only in
// the expansion being summed:
//
//   kMonomial         sum over I in {1..k} of DeltaMultinomial(n, I) x^|I|
//                     (Chow: 1 in I, exponent |I| - 1)
//   kGammaEulerian    sum over descent sets D without consecutive entries of
//                     E(n, D) x^|D| (1 + x)^(d - 2|D|)
//   kGammaPermutation sum over sigma in S_k whose descents are not
//                     consecutive of C(n - sigma_k, k - sigma_k) x^des
//                     (1 + x)^(d - 2 des)
//   kConvolution      derangement (Chow) or Eulerian (augmented) polynomials
//                     convolved with truncated geometric series
//
// where d = k - 1 for the Chow polynomial and d = k for the augmented one.

#ifndef CHOW_CHOW_FORMS_H_
#define CHOW_CHOW_FORMS_H_

#include <span>
#include <string_view>

#include "chow/poly.h"

namespace chow {

enum class ChowKind { kChow, kAugmented };

enum class FormMethod {
  kMonomial,
  kGammaEulerian,
  kGammaPermutation,
  kConvolution,
};

inline constexpr FormMethod kAllFormMethods[] = {
    FormMethod::kMonomial, FormMethod::kGammaEulerian,
    FormMethod::kGammaPermutation, FormMethod::kConvolution};

std::string_view FormMethodName(FormMethod method);
// Throws std::invalid_argument on an unknown name.
FormMethod ParseFormMethod(std::string_view name);

enum class MultivariateBasis { kMonomial, kGammaEulerian, kGammaPermutation };

inline constexpr MultivariateBasis kAllMultivariateBases[] = {
    MultivariateBasis::kMonomial, MultivariateBasis::kGammaEulerian,
    MultivariateBasis::kGammaPermutation};

std::string_view MultivariateBasisName(MultivariateBasis basis);

// Requires 1 <= k <= n for the Chow polynomial and 0 <= k <= n for the
// augmented one (k = 0 gives the constant 1). Throws std::domain_error
// otherwise.
void CheckUniformParameters(int k, int n, ChowKind kind);

UniPoly ClosedForm(int k, int n, FormMethod method, ChowKind kind);

// Multivariate versions over x_1..x_{k-1} (Chow) or x_0..x_{k-1}
// (augmented). Setting every variable to x recovers ClosedForm.
SqfMultiPoly MultivariateClosedForm(int k, int n, MultivariateBasis basis,
                                    ChowKind kind);

// Coefficient of x^m for m in {1, 2} from the binomial-sum formulas.
// Throws std::invalid_argument for other m.
BigInt CoefficientFormula(int k, int n, int m, ChowKind kind);

// Term multiplying the coefficient of a descent set D in the multivariate
// gamma expansion: prod_{i in D} x_i * prod (1 + x_i) over the window
// indices i with i, i + 1 not in D. The window is {1..rank-1} for the Chow
// polynomial and {0..rank-1} for the augmented one.
SqfMultiPoly MultivariateGammaTerm(std::span<const int> descents, int rank,
                                   ChowKind kind);

}  // namespace chow

#endif  // CHOW_CHOW_FORMS_H_
