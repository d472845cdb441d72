// Copyright 2026 The veronese-hilbert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VERONESE_POLYNOMIAL_HPP
#define VERONESE_POLYNOMIAL_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "veronese/bigcomb.hpp"

namespace veronese {

// Dense univariate polynomial over ExactInt.  coeffs()[k] is the
// coefficient of T^k.  Canonical form: the highest stored coefficient
// is nonzero, or the coefficient vector is empty (the zero polynomial).
class IntPolynomial {
 public:
  // The zero polynomial.
  IntPolynomial() = default;

  // Canonicalizes (strips trailing zero coefficients).
  explicit IntPolynomial(std::vector<ExactInt> coeffs);

  static IntPolynomial constant(ExactInt c);
  static IntPolynomial one();

  bool is_zero() const { return coeffs_.empty(); }

  // Degree; nullopt is the "minus infinity" degree of the zero
  // polynomial, never a number.
  std::optional<std::int64_t> degree() const;

  // Coefficient of T^k; zero outside the stored range.
  const ExactInt& coeff(std::int64_t k) const;

  std::span<const ExactInt> coeffs() const { return coeffs_; }

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::vector<ExactInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

// Coefficient-wise sum, in canonical form.
IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q);

// c * p.
IntPolynomial poly_scale(const IntPolynomial& p, const ExactInt& c);

// Convolution product.  Schoolbook O(deg p * deg q); every polynomial
// here is dense and of modest degree, so no asymptotic tricks.
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);

// p^n by repeated squaring.  p^0 = 1.  Requires n >= 0.
IntPolynomial poly_pow(const IntPolynomial& p, std::int64_t n);

// 1 + T + ... + T^(e-1).  Requires e >= 1.
IntPolynomial geometric_block(std::int64_t e);

// Full coefficient array of (1 + T + ... + T^(e-1))^n, degree n(e-1).
// Entry i counts sequences of n integers in [0, e-1] summing to i.
// Requires n >= 1, e >= 1.
IntPolynomial a_coefficients(std::int64_t n, std::int64_t e);

// Keeps every e-th coefficient: result coefficient l is the coefficient
// of T^(l*e) in p.  Requires e >= 1.
IntPolynomial stride_extract(const IntPolynomial& p, std::int64_t e);

// Sum of all coefficients.
ExactInt eval_at_one(const IntPolynomial& p);

// Palindromic coefficient sequence?  True for the zero polynomial.
bool is_reciprocal(const IntPolynomial& p);

}  // namespace veronese

#endif  // VERONESE_POLYNOMIAL_HPP
