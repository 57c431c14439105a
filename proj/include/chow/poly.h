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

// Exact polynomials over arbitrary-precision integers.
//
// UniPoly is a dense univariate polynomial. SqfMultiPoly is a sparse
// polynomial whose monomials are squarefree products of indexed variables
// x_i, with i drawn from a declared inclusive range.

#ifndef CHOW_POLY_H_
#define CHOW_POLY_H_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chow {

using BigInt = mpz_class;

class UniPoly {
 public:
  // The zero polynomial.
  UniPoly() = default;
  // coeffs[i] is the coefficient of x^i. Trailing zeros are trimmed.
  explicit UniPoly(std::vector<BigInt> coeffs);

  static UniPoly Constant(const BigInt& c);
  static UniPoly Monomial(const BigInt& c, int exponent);
  // (1 + x)^exponent.
  static UniPoly OnePlusXPower(int exponent);
  // 1 + x + ... + x^top; zero when top < 0.
  static UniPoly GeometricSum(int top);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool IsZero() const { return coeffs_.empty(); }
  // Zero outside the stored range.
  BigInt Coefficient(int i) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly Scaled(const BigInt& factor) const;

  // True iff coefficient(i) == coefficient(d - i) for all i and the degree
  // does not exceed d. The zero polynomial is palindromic for every d >= 0.
  bool IsPalindromic(int d) const;

  // "c0 + c1*x + c2*x^2"; zero terms are skipped and unit coefficients on
  // non-constant terms are omitted.
  std::string ToString() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void Trim();

  std::vector<BigInt> coeffs_;
};

UniPoly operator+(UniPoly a, const UniPoly& b);
UniPoly operator-(UniPoly a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);

// Coefficients (g_0, ..., g_{d/2}) with p = sum g_i x^i (1 + x)^(d - 2i).
// Peels leading terms off the low end, checking that every remainder stays
// palindromic about d/2. Throws std::domain_error when p is not palindromic
// of degree d.
std::vector<BigInt> GammaVector(const UniPoly& p, int d);

// Inverse of GammaVector.
UniPoly FromGammaVector(std::span<const BigInt> gamma, int d);

// Bit i of a VarMask stands for the variable x_i.
using VarMask = std::uint64_t;

class NonSquarefreeProduct : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SqfMultiPoly {
 public:
  static constexpr int kMaxVariable = 63;

  // The zero polynomial over variables x_first..x_last. An empty range
  // (last < first) admits only constants.
  SqfMultiPoly(int first_var, int last_var);

  static SqfMultiPoly Constant(int first_var, int last_var, const BigInt& c);
  // The single monomial prod_{i in vars} x_i with coefficient c.
  static SqfMultiPoly Term(int first_var, int last_var, VarMask vars,
                           const BigInt& c);
  // 1 + x_var.
  static SqfMultiPoly OnePlusVariable(int first_var, int last_var, int var);

  int first_var() const { return first_var_; }
  int last_var() const { return last_var_; }
  const std::map<VarMask, BigInt>& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  // Union of the variable sets of all monomials.
  VarMask Support() const;
  BigInt Coefficient(VarMask monomial) const;

  void AddTerm(VarMask monomial, const BigInt& c);

  SqfMultiPoly& operator+=(const SqfMultiPoly& other);
  SqfMultiPoly Scaled(const BigInt& factor) const;

  // Sets every variable to x: the monomial over a set S becomes x^|S|.
  UniPoly Specialize() const;

  // "1 + 2*x1 + x1*x2", monomials in increasing mask order.
  std::string ToString() const;

  friend bool operator==(const SqfMultiPoly& a, const SqfMultiPoly& b) {
    return a.first_var_ == b.first_var_ && a.last_var_ == b.last_var_ &&
           a.terms_ == b.terms_;
  }

 private:
  VarMask RangeMask() const;

  int first_var_;
  int last_var_;
  std::map<VarMask, BigInt> terms_;
};

// Throws std::invalid_argument when the variable ranges differ.
SqfMultiPoly operator+(SqfMultiPoly a, const SqfMultiPoly& b);
// Throws NonSquarefreeProduct when the supports of a and b intersect, and
// std::invalid_argument when the variable ranges differ.
SqfMultiPoly operator*(const SqfMultiPoly& a, const SqfMultiPoly& b);

}  // namespace chow

#endif  // CHOW_POLY_H_
