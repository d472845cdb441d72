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

#ifndef VERONESE_BIGCOMB_HPP
#define VERONESE_BIGCOMB_HPP

#include <cstdint>

#include <gmpxx.h>

namespace veronese {

// Every count and coefficient in this library is an exact
// arbitrary-precision signed integer.  No overflow, no rounding.
using ExactInt = mpz_class;

// Binomial coefficient with the combinatorial zero convention:
// binomial(m, r) = m!/(r!(m-r)!) for 0 <= r <= m, and 0 whenever
// r < 0, m < 0, or m < r.  A negative top argument counts nothing;
// the generalized binomial is deliberately not used.
ExactInt binomial(std::int64_t m, std::int64_t r);
ExactInt binomial(const ExactInt& m, std::int64_t r);

// base^exp, exact.  base^0 = 1.
ExactInt int_pow(const ExactInt& base, std::uint64_t exp);

// Exact ceiling / floor of p/q for any sign of p.  Requires q >= 1;
// throws std::invalid_argument otherwise.
std::int64_t ceil_div(std::int64_t p, std::int64_t q);
std::int64_t floor_div(std::int64_t p, std::int64_t q);

}  // namespace veronese

#endif  // VERONESE_BIGCOMB_HPP
