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

#ifndef VERONESE_ORACLE_HPP
#define VERONESE_ORACLE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "veronese/bigcomb.hpp"
#include "veronese/polynomial.hpp"
#include "veronese/veronese.hpp"

// Brute-force verification path.  Everything here counts lattice points
// directly and shares only the ExactInt / IntPolynomial primitives with
// the closed-form path, so agreement is evidence, not tautology.

namespace veronese {

// Thrown when the finite-difference extraction finds a nonzero
// coefficient beyond the expected numerator degree, falsifying the
// degree bound.
class DegreeOverflowError : public std::runtime_error {
 public:
  explicit DegreeOverflowError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Number of integer sequences (alpha_1..alpha_k) with sum = total and
// 0 <= alpha_j <= bounds[j].  Iterative coefficient-array DP truncated
// at index `total`; never recursive enumeration.  Requires total >= 0
// and every bound >= 0.
ExactInt count_bounded_compositions(std::int64_t total,
                                    std::span<const std::int64_t> bounds);

// Degree-i monomial count by direct lattice-point counting:
// count_bounded_compositions(i*d, (i*a_1, ..., i*a_n)).
ExactInt hilbert_function_oracle(const VeroneseType& vt, std::int64_t i);

// Numerator of the Hilbert series recovered as the n-fold finite
// difference of oracle Hilbert values:
//   h_k = sum_{j=0}^{min(k,n)} (-1)^j C(n,j) H(k-j),  k = 0..k_max.
// Requires k_max >= n.  Throws DegreeOverflowError if any h_k with
// k > n is nonzero.
IntPolynomial h_numerator_oracle(const VeroneseType& vt, std::int64_t k_max);

// Same with the default margin k_max = n + 5.
IntPolynomial h_numerator_oracle(const VeroneseType& vt);

// Reference 2^n subset enumeration; the baseline that subset_statistics
// is measured against.  Requires n <= 30.
SubsetStatistics subset_statistics_naive(const VeroneseType& vt);

struct HilbertComparison {
  std::int64_t i = 0;
  ExactInt closed_form;
  ExactInt oracle;
  bool equal = false;
};

struct VerificationReport {
  VeroneseType config;
  std::int64_t max_i = 0;
  std::vector<HilbertComparison> hilbert_matches;
  bool hvector_match = false;
  bool multiplicity_match = false;
  bool overall = false;  // true iff every component comparison is true
};

// Compares the closed forms against the brute-force path: Hilbert
// values for i <= max_i, the series numerator, and the multiplicity
// against eval_at_one of the oracle numerator.  Mismatches (including a
// degree overflow in the oracle extraction) are reported, not raised.
// Requires max_i >= 1.
VerificationReport verify(const VeroneseType& vt, std::int64_t max_i);

}  // namespace veronese

#endif  // VERONESE_ORACLE_HPP
