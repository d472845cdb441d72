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

#ifndef VERONESE_VERONESE_HPP
#define VERONESE_VERONESE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "veronese/bigcomb.hpp"
#include "veronese/polynomial.hpp"

namespace veronese {

// Why a parameter vector was rejected.
class ValidationError : public std::invalid_argument {
 public:
  enum class Kind {
    invalid_degree,     // d < 1
    too_few_variables,  // n < 2
    cap_out_of_range,   // some a_i < 1 or a_i > d
    degenerate_algebra  // sum of caps <= d
  };

  ValidationError(Kind kind, const std::string& msg)
      : std::invalid_argument(msg), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Parameters of an algebra of Veronese type: exponent caps
// 1 <= a_1 <= ... <= a_n <= d with sum a_i > d, and generator degree d.
// Caps are stored sorted ascending; the algebra is symmetric in the
// coordinates, so sorting is a harmless canonical form.
class VeroneseType {
 public:
  std::span<const std::int64_t> caps() const { return caps_; }
  std::int64_t n() const { return static_cast<std::int64_t>(caps_.size()); }
  std::int64_t d() const { return d_; }

  bool operator==(const VeroneseType&) const = default;

  friend VeroneseType make_veronese(std::vector<std::int64_t> caps,
                                    std::int64_t d);

 private:
  VeroneseType(std::vector<std::int64_t> caps, std::int64_t d)
      : caps_(std::move(caps)), d_(d) {}

  std::vector<std::int64_t> caps_;
  std::int64_t d_ = 0;
};

// Sorts the caps and validates every invariant; throws ValidationError.
VeroneseType make_veronese(std::vector<std::int64_t> caps, std::int64_t d);

// table[s][sigma] counts subsets S of {1..n} with |S| = s whose cap sum
// is sigma, restricted to sigma < d.  Cells absent from the closed
// formulas (sigma >= d) are pruned by construction; stored zeros mean
// "no such subset".  Size (n+1) x d.
struct SubsetStatistics {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::vector<std::vector<ExactInt>> table;

  // Zero outside the stored range, like a map lookup miss.
  const ExactInt& count(std::int64_t s, std::int64_t sigma) const;

  bool operator==(const SubsetStatistics&) const = default;
};

// Item-by-item knapsack DP over the caps: each cap is either skipped or
// added, and partial sums >= d are pruned.  O(n^2 d) cells; never
// enumerates the 2^n subsets.
SubsetStatistics subset_statistics(const VeroneseType& vt);

// Rational form of the Hilbert series: numerator / (1-t)^denominator_exponent.
struct HilbertSeries {
  IntPolynomial numerator;
  std::int64_t denominator_exponent = 0;

  bool operator==(const HilbertSeries&) const = default;
};

// Number of degree-i monomials of the algebra under the normalized
// grading (generators in degree one):
//   H(i) = sum over (s, sigma) of (-1)^s N[s][sigma] C(i(d-sigma)-s+n-1, n-1).
ExactInt hilbert_function(const VeroneseType& vt, std::int64_t i);

// Same sum evaluated from a precomputed table; used for index ranges.
ExactInt hilbert_function(const SubsetStatistics& stats, std::int64_t i);

// Lattice-point count of the i-th dilate of the hypersimplex with
// parameters (n, d):
//   sum_{s=0}^{d-1} (-1)^s C(n,s) C(i(d-s)-s+n-1, n-1).
// Requires 1 <= d < n and i >= 0.  Equals hilbert_function of the
// all-ones cap vector.
ExactInt ehrhart_hypersimplex(std::int64_t n, std::int64_t d, std::int64_t i);

// Numerator of the Hilbert series over (1-t)^n: for each table entry
// (s, sigma) with count N and e = d - sigma, accumulates
//   (-1)^s N sum_{j=0}^{s} (-1)^j C(s,j) (1-t)^j G_{n-j,e}(t)
// where G_{m,e} = stride_extract(a_coefficients(m, e), e).  The G
// family is cached per call, keyed by (m, e).
IntPolynomial h_numerator(const VeroneseType& vt);

// Packages h_numerator with denominator exponent n.  Throws
// std::logic_error if the result violates the series invariants
// (constant term 1, degree <= n, positive value at t = 1) — that would
// falsify the implementation, not the input.
HilbertSeries hilbert_series(const VeroneseType& vt);

// sum over (s, sigma) of (-1)^s N[s][sigma] (d - sigma)^(n-1).
// Always positive; equals eval_at_one(h_numerator(vt)).
ExactInt multiplicity(const VeroneseType& vt);

// Degree of the Hilbert series as a rational function:
// degree(h_numerator) - n.  No cancellation of the denominator is
// attempted; eval_at_one(numerator) > 0 certifies none is possible.
std::int64_t a_invariant(const VeroneseType& vt);

struct AInvariantBound {
  std::int64_t bound = 0;   // -ceil(n/d)
  bool applicable = false;  // n >= d
};

// The a-invariant is at most -ceil(n/d) whenever n >= d.  The bound is
// computed unconditionally; `applicable` records the hypothesis.
AInvariantBound a_invariant_bound(const VeroneseType& vt);

struct ClassicalReport {
  bool gorenstein = false;
  ExactInt multiplicity;
  std::int64_t a_invariant = 0;
  IntPolynomial h_vector;
};

// Closed forms for the classical case (all caps equal to d):
// Gorenstein iff d | n, multiplicity d^(n-1), a-invariant -ceil(n/d),
// h-vector = stride_extract(a_coefficients(n, d), d).
// Requires n >= 2, d >= 1.
ClassicalReport classical_report(std::int64_t n, std::int64_t d);

}  // namespace veronese

#endif  // VERONESE_VERONESE_HPP
