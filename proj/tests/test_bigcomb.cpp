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

#include <stdexcept>

#include "veronese/bigcomb.hpp"

using veronese::ExactInt;
using veronese::binomial;
using veronese::ceil_div;
using veronese::floor_div;
using veronese::int_pow;

namespace {

// Independent route: incremental product m(m-1).../1*2..., exact at
// every step.  Never calls the library binomial.
ExactInt binomial_product_formula(std::int64_t m, std::int64_t r) {
  ExactInt result = 1;
  for (std::int64_t k = 1; k <= r; ++k) {
    result *= m - r + k;
    result /= k;
  }
  return result;
}

}  // namespace

TEST_CASE("binomial on standard and convention inputs") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 3) == 0);
  // counts nothing; the generalized binomial would give 1 here
  CHECK(binomial(-1, 2) == 0);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(-5, 0) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == ExactInt("118264581564861424"));
}

TEST_CASE("binomial with big top argument") {
  CHECK(binomial(ExactInt(4), 2) == 6);
  CHECK(binomial(ExactInt(-1), 2) == 0);
  CHECK(binomial(ExactInt(-1), -3) == 0);
  CHECK(binomial(ExactInt("1000000000000000000000"), 1) ==
        ExactInt("1000000000000000000000"));
  CHECK(binomial(ExactInt(2), 3) == 0);
}

TEST_CASE("binomial matches the product formula") {
  for (std::int64_t m = 0; m <= 40; ++m)
    for (std::int64_t r = 0; r <= m; ++r) {
      CAPTURE(m);
      CAPTURE(r);
      CHECK(binomial(m, r) == binomial_product_formula(m, r));
    }
}

TEST_CASE("Pascal identity with the zero convention") {
  for (std::int64_t m = 1; m <= 64; ++m)
    for (std::int64_t r = 1; r <= 64; ++r) {
      CAPTURE(m);
      CAPTURE(r);
      CHECK(binomial(m, r) == binomial(m - 1, r) + binomial(m - 1, r - 1));
    }
}

TEST_CASE("int_pow") {
  CHECK(int_pow(ExactInt(2), 10) == 1024);
  CHECK(int_pow(ExactInt(7), 0) == 1);
  CHECK(int_pow(ExactInt(-3), 3) == -27);
  CHECK(int_pow(ExactInt(10), 40) == ExactInt("1" + std::string(40, '0')));
}

TEST_CASE("ceil_div and floor_div") {
  CHECK(ceil_div(3, 2) == 2);
  CHECK(ceil_div(4, 2) == 2);
  CHECK(ceil_div(-3, 2) == -1);
  CHECK(ceil_div(0, 5) == 0);
  CHECK(floor_div(-3, 2) == -2);
  CHECK(floor_div(3, 2) == 1);
  CHECK_THROWS_AS(ceil_div(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(ceil_div(1, -2), std::invalid_argument);
  CHECK_THROWS_AS(floor_div(1, 0), std::invalid_argument);
}

TEST_CASE("ceil_div is the negated floor_div of the negation") {
  for (std::int64_t p = -100; p <= 100; ++p)
    for (std::int64_t q = 1; q <= 20; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      CHECK(ceil_div(p, q) == -floor_div(-p, q));
    }
}
