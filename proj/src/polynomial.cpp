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

#include "veronese/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace veronese {

namespace {
const ExactInt kZero = 0;
}  // namespace

IntPolynomial::IntPolynomial(std::vector<ExactInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(ExactInt c) {
  std::vector<ExactInt> v;
  if (c != 0) v.push_back(std::move(c));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one() { return constant(1); }

std::optional<std::int64_t> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<std::int64_t>(coeffs_.size()) - 1;
}

const ExactInt& IntPolynomial::coeff(std::int64_t k) const {
  if (k < 0 || k >= static_cast<std::int64_t>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  os << '[';
  bool first = true;
  for (const auto& c : p.coeffs()) {
    if (!first) os << ", ";
    os << c;
    first = false;
  }
  return os << ']';
}

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<ExactInt> out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < a.size()) out[k] += a[k];
    if (k < b.size()) out[k] += b[k];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_scale(const IntPolynomial& p, const ExactInt& c) {
  if (c == 0 || p.is_zero()) return IntPolynomial();
  std::vector<ExactInt> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : out) x *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return IntPolynomial();
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<ExactInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_pow(const IntPolynomial& p, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("poly_pow: exponent must be >= 0");
  IntPolynomial acc = IntPolynomial::one();
  IntPolynomial base = p;
  while (n > 0) {
    if (n & 1) acc = poly_mul(acc, base);
    n >>= 1;
    if (n > 0) base = poly_mul(base, base);
  }
  return acc;
}

IntPolynomial geometric_block(std::int64_t e) {
  if (e < 1) throw std::invalid_argument("geometric_block: e must be >= 1");
  return IntPolynomial(std::vector<ExactInt>(static_cast<std::size_t>(e), 1));
}

IntPolynomial a_coefficients(std::int64_t n, std::int64_t e) {
  if (n < 1) throw std::invalid_argument("a_coefficients: n must be >= 1");
  if (e < 1) throw std::invalid_argument("a_coefficients: e must be >= 1");
  return poly_pow(geometric_block(e), n);
}

IntPolynomial stride_extract(const IntPolynomial& p, std::int64_t e) {
  if (e < 1) throw std::invalid_argument("stride_extract: e must be >= 1");
  if (p.is_zero()) return IntPolynomial();
  std::vector<ExactInt> out;
  const std::int64_t deg = *p.degree();
  out.reserve(static_cast<std::size_t>(deg / e) + 1);
  for (std::int64_t k = 0; k <= deg; k += e) out.push_back(p.coeff(k));
  return IntPolynomial(std::move(out));
}

ExactInt eval_at_one(const IntPolynomial& p) {
  ExactInt sum = 0;
  for (const auto& c : p.coeffs()) sum += c;
  return sum;
}

bool is_reciprocal(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size() / 2; ++i)
    if (c[i] != c[c.size() - 1 - i]) return false;
  return true;
}

}  // namespace veronese
