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

#include "chow/poly.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

namespace chow {

UniPoly::UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  Trim();
}

UniPoly UniPoly::Constant(const BigInt& c) { return UniPoly({c}); }

UniPoly UniPoly::Monomial(const BigInt& c, int exponent) {
  if (exponent < 0) throw std::domain_error("negative exponent");
  std::vector<BigInt> coeffs(exponent + 1);
  coeffs[exponent] = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::OnePlusXPower(int exponent) {
  if (exponent < 0) throw std::domain_error("negative exponent");
  std::vector<BigInt> coeffs(exponent + 1);
  for (int i = 0; i <= exponent; ++i) {
    mpz_bin_uiui(coeffs[i].get_mpz_t(), exponent, i);
  }
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::GeometricSum(int top) {
  if (top < 0) return UniPoly();
  return UniPoly(std::vector<BigInt>(top + 1, BigInt(1)));
}

BigInt UniPoly::Coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

void UniPoly::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  Trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  Trim();
  return *this;
}

UniPoly UniPoly::Scaled(const BigInt& factor) const {
  std::vector<BigInt> coeffs = coeffs_;
  for (BigInt& c : coeffs) c *= factor;
  return UniPoly(std::move(coeffs));
}

bool UniPoly::IsPalindromic(int d) const {
  if (d < 0 || degree() > d) return false;
  for (int i = 0; i <= d / 2; ++i) {
    if (Coefficient(i) != Coefficient(d - i)) return false;
  }
  return true;
}

std::string UniPoly::ToString() const {
  if (IsZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << "*";
    out << "x";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

UniPoly operator+(UniPoly a, const UniPoly& b) {
  a += b;
  return a;
}

UniPoly operator-(UniPoly a, const UniPoly& b) {
  a -= b;
  return a;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.IsZero() || b.IsZero()) return UniPoly();
  std::vector<BigInt> product(a.coeffs().size() + b.coeffs().size() - 1);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j) {
      product[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return UniPoly(std::move(product));
}

std::vector<BigInt> GammaVector(const UniPoly& p, int d) {
  if (!p.IsPalindromic(d)) {
    throw std::domain_error("not palindromic of degree " + std::to_string(d));
  }
  std::vector<BigInt> gamma;
  UniPoly remainder = p;
  for (int i = 0; i <= d / 2; ++i) {
    BigInt g = remainder.Coefficient(i);
    remainder -= UniPoly::Monomial(g, i) * UniPoly::OnePlusXPower(d - 2 * i);
    if (remainder.Coefficient(i) != 0 || !remainder.IsPalindromic(d)) {
      throw std::domain_error("not palindromic of degree " +
                              std::to_string(d));
    }
    gamma.push_back(std::move(g));
  }
  if (!remainder.IsZero()) {
    throw std::domain_error("not palindromic of degree " + std::to_string(d));
  }
  return gamma;
}

UniPoly FromGammaVector(std::span<const BigInt> gamma, int d) {
  UniPoly p;
  for (size_t i = 0; i < gamma.size(); ++i) {
    const int exponent = d - 2 * static_cast<int>(i);
    if (exponent < 0) throw std::domain_error("gamma vector too long");
    p += UniPoly::Monomial(gamma[i], static_cast<int>(i)) *
         UniPoly::OnePlusXPower(exponent);
  }
  return p;
}

SqfMultiPoly::SqfMultiPoly(int first_var, int last_var)
    : first_var_(first_var), last_var_(last_var) {
  if (first_var < 0 || last_var > kMaxVariable) {
    throw std::invalid_argument("variable range outside [0, 63]");
  }
}

SqfMultiPoly SqfMultiPoly::Constant(int first_var, int last_var,
                                    const BigInt& c) {
  SqfMultiPoly p(first_var, last_var);
  p.AddTerm(0, c);
  return p;
}

SqfMultiPoly SqfMultiPoly::Term(int first_var, int last_var, VarMask vars,
                                const BigInt& c) {
  SqfMultiPoly p(first_var, last_var);
  p.AddTerm(vars, c);
  return p;
}

SqfMultiPoly SqfMultiPoly::OnePlusVariable(int first_var, int last_var,
                                           int var) {
  SqfMultiPoly p(first_var, last_var);
  p.AddTerm(0, 1);
  p.AddTerm(VarMask{1} << var, 1);
  return p;
}

VarMask SqfMultiPoly::RangeMask() const {
  VarMask mask = 0;
  for (int i = first_var_; i <= last_var_; ++i) mask |= VarMask{1} << i;
  return mask;
}

VarMask SqfMultiPoly::Support() const {
  VarMask support = 0;
  for (const auto& [monomial, c] : terms_) support |= monomial;
  return support;
}

BigInt SqfMultiPoly::Coefficient(VarMask monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SqfMultiPoly::AddTerm(VarMask monomial, const BigInt& c) {
  if ((monomial & ~RangeMask()) != 0) {
    throw std::invalid_argument("monomial uses a variable outside the range");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SqfMultiPoly& SqfMultiPoly::operator+=(const SqfMultiPoly& other) {
  if (first_var_ != other.first_var_ || last_var_ != other.last_var_) {
    throw std::invalid_argument("variable ranges differ");
  }
  for (const auto& [monomial, c] : other.terms_) AddTerm(monomial, c);
  return *this;
}

SqfMultiPoly SqfMultiPoly::Scaled(const BigInt& factor) const {
  SqfMultiPoly p(first_var_, last_var_);
  for (const auto& [monomial, c] : terms_) p.AddTerm(monomial, c * factor);
  return p;
}

UniPoly SqfMultiPoly::Specialize() const {
  UniPoly p;
  for (const auto& [monomial, c] : terms_) {
    p += UniPoly::Monomial(c, std::popcount(monomial));
  }
  return p;
}

std::string SqfMultiPoly::ToString() const {
  if (IsZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [monomial, c] : terms_) {
    BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (monomial == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << "*";
    bool first_var = true;
    for (int i = 0; i <= kMaxVariable; ++i) {
      if (((monomial >> i) & 1) == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << "x" << i;
    }
  }
  return out.str();
}

SqfMultiPoly operator+(SqfMultiPoly a, const SqfMultiPoly& b) {
  a += b;
  return a;
}

SqfMultiPoly operator*(const SqfMultiPoly& a, const SqfMultiPoly& b) {
  if (a.first_var() != b.first_var() || a.last_var() != b.last_var()) {
    throw std::invalid_argument("variable ranges differ");
  }
  if ((a.Support() & b.Support()) != 0) {
    throw NonSquarefreeProduct("non-squarefree product");
  }
  SqfMultiPoly product(a.first_var(), a.last_var());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) product.AddTerm(ma | mb, ca * cb);
  }
  return product;
}

}  // namespace chow
