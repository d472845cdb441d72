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

#include "veronese/bigcomb.hpp"

#include <stdexcept>

namespace veronese {

ExactInt binomial(std::int64_t m, std::int64_t r) {
  if (r < 0 || m < 0 || m < r) return 0;
  ExactInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m),
               static_cast<unsigned long>(r));
  return out;
}

ExactInt binomial(const ExactInt& m, std::int64_t r) {
  // mpz_bin_ui would evaluate the generalized binomial for m < 0;
  // the zero convention must win here.
  if (r < 0 || sgn(m) < 0 || m < r) return 0;
  ExactInt out;
  mpz_bin_ui(out.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(r));
  return out;
}

ExactInt int_pow(const ExactInt& base, std::uint64_t exp) {
  ExactInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

std::int64_t ceil_div(std::int64_t p, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("ceil_div: divisor must be >= 1");
  std::int64_t t = p / q;
  if (p % q != 0 && p > 0) ++t;
  return t;
}

std::int64_t floor_div(std::int64_t p, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("floor_div: divisor must be >= 1");
  std::int64_t t = p / q;
  if (p % q != 0 && p < 0) --t;
  return t;
}

}  // namespace veronese
