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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "veronese/bigcomb.hpp"
#include "veronese/polynomial.hpp"

using veronese::ExactInt;
using veronese::IntPolynomial;
using veronese::a_coefficients;
using veronese::binomial;
using veronese::eval_at_one;
using veronese::geometric_block;
using veronese::is_reciprocal;
using veronese::poly_add;
using veronese::poly_mul;
using veronese::poly_pow;
using veronese::poly_scale;
using veronese::stride_extract;

namespace {

IntPolynomial make(std::vector<long> coeffs) {
  std::vector<ExactInt> v(coeffs.begin(), coeffs.end());
  return IntPolynomial(std::move(v));
}

bool is_unimodal(const IntPolynomial& p) {
  const auto c = p.coeffs();
  for (std::size_t i = 0; i + 1 <= c.size() / 2; ++i)
    if (c[i] > c[i + 1]) return false;
  return true;
}

IntPolynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg_dist(0, 20);
  std::uniform_int_distribution<long> coeff_dist(-1000, 1000);
  std::vector<ExactInt> coeffs(static_cast<std::size_t>(deg_dist(rng)) + 1);
  for (auto& c : coeffs) c = coeff_dist(rng);
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("canonical form") {
  CHECK(make({1, 2, 0, 0}) == make({1, 2}));
  CHECK(make({0}).is_zero());
  CHECK(IntPolynomial().is_zero());
  CHECK(!IntPolynomial().degree().has_value());
  CHECK(make({0, 0, 5}).degree() == 2);
  CHECK(make({3, -1}).coeff(0) == 3);
  CHECK(make({3, -1}).coeff(7) == 0);
  CHECK(make({3, -1}).coeff(-1) == 0);
  CHECK(IntPolynomial::constant(0).is_zero());
  CHECK(IntPolynomial::one() == make({1}));
}

TEST_CASE("poly_add") {
  CHECK(poly_add(make({1, 1}), make({1, -1})) == make({2}));
  const auto p = make({4, 0, 7});
  CHECK(poly_add(p, IntPolynomial()) == p);
  CHECK(poly_add(make({1, 1}), make({-1, -1})).is_zero());
}

TEST_CASE("poly_mul") {
  CHECK(poly_mul(make({1, 1}), make({1, 1})) == make({1, 2, 1}));
  CHECK(poly_mul(make({1, 2, 3}), IntPolynomial()).is_zero());
  CHECK(poly_mul(make({1, 1, 1}), make({1, 1, 1})) == make({1, 2, 3, 2, 1}));
  const auto p = make({2, 5});
  const auto q = make({-1, 0, 4});
  CHECK(poly_mul(p, q).degree() == *p.degree() + *q.degree());
}

TEST_CASE("poly_scale") {
  CHECK(poly_scale(make({1, 2}), ExactInt(-3)) == make({-3, -6}));
  CHECK(poly_scale(make({1, 2}), ExactInt(0)).is_zero());
}

TEST_CASE("geometric_block") {
  CHECK(geometric_block(1) == make({1}));
  CHECK(geometric_block(2) == make({1, 1}));
  CHECK(geometric_block(4) == make({1, 1, 1, 1}));
  CHECK_THROWS_AS(geometric_block(0), std::invalid_argument);
  CHECK_THROWS_AS(geometric_block(-2), std::invalid_argument);
}

TEST_CASE("poly_pow") {
  CHECK(poly_pow(make({1, 1}), 3) == make({1, 3, 3, 1}));
  CHECK(poly_pow(make({5, -2, 9}), 0) == IntPolynomial::one());
  CHECK(poly_pow(make({1, 1, 1}), 2) == make({1, 2, 3, 2, 1}));
  CHECK(poly_pow(IntPolynomial(), 4).is_zero());
  CHECK_THROWS_AS(poly_pow(make({1, 1}), -1), std::invalid_argument);
}

TEST_CASE("a_coefficients") {
  CHECK(a_coefficients(3, 2) == make({1, 3, 3, 1}));
  for (std::int64_t n = 1; n <= 6; ++n) CHECK(a_coefficients(n, 1) == make({1}));
  CHECK(a_coefficients(2, 3) == make({1, 2, 3, 2, 1}));
  CHECK(a_coefficients(5, 4).degree() == 5 * 3);
  CHECK_THROWS_AS(a_coefficients(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(a_coefficients(3, 0), std::invalid_argument);
}

TEST_CASE("stride_extract") {
  CHECK(stride_extract(make({1, 3, 3, 1}), 2) == make({1, 3}));
  const auto p = make({7, -2, 0, 4, 1});
  CHECK(stride_extract(p, 1) == p);
  CHECK(stride_extract(make({1, 2, 3, 2, 1}), 3) == make({1, 2}));
  CHECK(stride_extract(IntPolynomial(), 2).is_zero());
  CHECK_THROWS_AS(stride_extract(p, 0), std::invalid_argument);
}

TEST_CASE("eval_at_one") {
  CHECK(eval_at_one(make({1, 3})) == 4);
  CHECK(eval_at_one(IntPolynomial()) == 0);
  CHECK(eval_at_one(make({1, 2, 1})) == 4);
}

TEST_CASE("is_reciprocal") {
  CHECK(is_reciprocal(make({1, 6, 1})));
  CHECK(is_reciprocal(make({1})));
  CHECK(is_reciprocal(IntPolynomial()));
  CHECK(!is_reciprocal(make({1, 3})));
}

TEST_CASE("a_coefficients arrays are reciprocal and unimodal") {
  for (std::int64_t n = 1; n <= 8; ++n)
    for (std::int64_t e = 1; e <= 8; ++e) {
      CAPTURE(n);
      CAPTURE(e);
      const auto arr = a_coefficients(n, e);
      CHECK(arr.degree() == n * (e - 1));
      CHECK(is_reciprocal(arr));
      CHECK(is_unimodal(arr));
    }
}

TEST_CASE("strided coefficient sums equal e^(n-1)") {
  for (std::int64_t n = 1; n <= 8; ++n)
    for (std::int64_t e = 1; e <= 8; ++e) {
      CAPTURE(n);
      CAPTURE(e);
      CHECK(eval_at_one(stride_extract(a_coefficients(n, e), e)) ==
            veronese::int_pow(ExactInt(e), static_cast<std::uint64_t>(n - 1)));
    }
}

// (1-t)^n * sum_i C(n+id-1, n-1) t^i and the strided coefficient array
// agree as power series; checked on a truncation.
TEST_CASE("strided arrays generate the binomial series") {
  constexpr std::int64_t order = 30;
  for (std::int64_t n = 1; n <= 6; ++n)
    for (std::int64_t d = 1; d <= 6; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      std::vector<ExactInt> series(order + 1);
      for (std::int64_t i = 0; i <= order; ++i)
        series[static_cast<std::size_t>(i)] = binomial(n + i * d - 1, n - 1);
      const auto product =
          poly_mul(poly_pow(make({1, -1}), n), IntPolynomial(series));
      const auto strided = stride_extract(a_coefficients(n, d), d);
      for (std::int64_t k = 0; k <= order - n; ++k) {
        CAPTURE(k);
        CHECK(product.coeff(k) == strided.coeff(k));
      }
    }
}

TEST_CASE("poly_mul is commutative and associative") {
  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_poly(rng);
    const auto q = random_poly(rng);
    const auto r = random_poly(rng);
    CHECK(poly_mul(p, q) == poly_mul(q, p));
    CHECK(poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r)));
  }
}
