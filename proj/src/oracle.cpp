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

#include "veronese/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace veronese {

ExactInt count_bounded_compositions(std::int64_t total,
                                    std::span<const std::int64_t> bounds) {
  if (total < 0)
    throw std::invalid_argument("count_bounded_compositions: total < 0");
  for (auto b : bounds)
    if (b < 0)
      throw std::invalid_argument("count_bounded_compositions: bound < 0");
  // Coefficients 0..total of prod_j (1 + t + ... + t^bounds[j]).
  std::vector<ExactInt> coeffs(static_cast<std::size_t>(total) + 1);
  coeffs[0] = 1;
  for (auto b : bounds) {
    const std::int64_t reach = std::min(b, total);
    std::vector<ExactInt> next(coeffs.size());
    for (std::int64_t k = 0; k <= total; ++k) {
      ExactInt& cell = next[static_cast<std::size_t>(k)];
      for (std::int64_t j = std::max<std::int64_t>(0, k - reach); j <= k; ++j)
        cell += coeffs[static_cast<std::size_t>(j)];
    }
    coeffs = std::move(next);
  }
  return coeffs[static_cast<std::size_t>(total)];
}

ExactInt hilbert_function_oracle(const VeroneseType& vt, std::int64_t i) {
  if (i < 0)
    throw std::invalid_argument("hilbert_function_oracle: index must be >= 0");
  std::vector<std::int64_t> bounds;
  bounds.reserve(static_cast<std::size_t>(vt.n()));
  for (auto cap : vt.caps()) bounds.push_back(i * cap);
  return count_bounded_compositions(i * vt.d(), bounds);
}

IntPolynomial h_numerator_oracle(const VeroneseType& vt, std::int64_t k_max) {
  const std::int64_t n = vt.n();
  if (k_max < n)
    throw std::invalid_argument("h_numerator_oracle: k_max must be >= n");
  std::vector<ExactInt> hilbert_values;
  hilbert_values.reserve(static_cast<std::size_t>(k_max) + 1);
  for (std::int64_t i = 0; i <= k_max; ++i)
    hilbert_values.push_back(hilbert_function_oracle(vt, i));
  std::vector<ExactInt> h(static_cast<std::size_t>(k_max) + 1);
  for (std::int64_t k = 0; k <= k_max; ++k) {
    ExactInt& cell = h[static_cast<std::size_t>(k)];
    for (std::int64_t j = 0; j <= std::min(k, n); ++j) {
      ExactInt term =
          binomial(n, j) * hilbert_values[static_cast<std::size_t>(k - j)];
      if (j % 2 == 0)
        cell += term;
      else
        cell -= term;
    }
    if (k > n && cell != 0)
      throw DegreeOverflowError(
          "finite differences give nonzero coefficient " + cell.get_str() +
          " at index " + std::to_string(k) + " > n = " + std::to_string(n));
  }
  return IntPolynomial(std::move(h));
}

IntPolynomial h_numerator_oracle(const VeroneseType& vt) {
  return h_numerator_oracle(vt, vt.n() + 5);
}

SubsetStatistics subset_statistics_naive(const VeroneseType& vt) {
  const std::int64_t n = vt.n();
  const std::int64_t d = vt.d();
  if (n > 30)
    throw std::invalid_argument(
        "subset_statistics_naive: 2^n enumeration is limited to n <= 30");
  SubsetStatistics stats;
  stats.n = n;
  stats.d = d;
  stats.table.assign(static_cast<std::size_t>(n) + 1,
                     std::vector<ExactInt>(static_cast<std::size_t>(d)));
  const auto caps = vt.caps();
  // Machine-word accumulation: counts fit in 64 bits for n <= 30, and
  // partial sums stop growing once they reach d.
  std::vector<std::vector<std::uint64_t>> raw(
      static_cast<std::size_t>(n) + 1,
      std::vector<std::uint64_t>(static_cast<std::size_t>(d)));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t sum = 0;
    for (std::int64_t bit = 0; bit < n; ++bit) {
      if (mask & (std::uint64_t{1} << bit)) {
        sum += caps[static_cast<std::size_t>(bit)];
        if (sum >= d) break;  // pruned either way
      }
    }
    if (sum < d)
      ++raw[std::popcount(mask)][static_cast<std::size_t>(sum)];
  }
  for (std::int64_t s = 0; s <= n; ++s)
    for (std::int64_t sigma = 0; sigma < d; ++sigma)
      stats.table[static_cast<std::size_t>(s)][static_cast<std::size_t>(sigma)] =
          ExactInt(static_cast<unsigned long>(
              raw[static_cast<std::size_t>(s)][static_cast<std::size_t>(sigma)]));
  return stats;
}

VerificationReport verify(const VeroneseType& vt, std::int64_t max_i) {
  if (max_i < 1) throw std::invalid_argument("verify: max_i must be >= 1");
  VerificationReport report{vt, max_i, {}, false, false, false};
  const SubsetStatistics stats = subset_statistics(vt);
  bool all_hilbert = true;
  for (std::int64_t i = 0; i <= max_i; ++i) {
    HilbertComparison cmp;
    cmp.i = i;
    cmp.closed_form = hilbert_function(stats, i);
    cmp.oracle = hilbert_function_oracle(vt, i);
    cmp.equal = (cmp.closed_form == cmp.oracle);
    all_hilbert = all_hilbert && cmp.equal;
    report.hilbert_matches.push_back(std::move(cmp));
  }
  try {
    const IntPolynomial oracle_num = h_numerator_oracle(vt);
    report.hvector_match = (oracle_num == h_numerator(vt));
    report.multiplicity_match = (multiplicity(vt) == eval_at_one(oracle_num));
  } catch (const DegreeOverflowError&) {
    report.hvector_match = false;
    report.multiplicity_match = false;
  }
  report.overall =
      all_hilbert && report.hvector_match && report.multiplicity_match;
  return report;
}

}  // namespace veronese
