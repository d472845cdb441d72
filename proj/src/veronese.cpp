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

#include "veronese/veronese.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace veronese {

namespace {
const ExactInt kZero = 0;
}  // namespace

VeroneseType make_veronese(std::vector<std::int64_t> caps, std::int64_t d) {
  if (d < 1)
    throw ValidationError(ValidationError::Kind::invalid_degree,
                          "generator degree d must be >= 1, got " +
                              std::to_string(d));
  if (caps.size() < 2)
    throw ValidationError(ValidationError::Kind::too_few_variables,
                          "need at least 2 caps, got " +
                              std::to_string(caps.size()));
  std::sort(caps.begin(), caps.end());
  for (std::size_t k = 0; k < caps.size(); ++k) {
    if (caps[k] < 1 || caps[k] > d)
      throw ValidationError(
          ValidationError::Kind::cap_out_of_range,
          "cap a[" + std::to_string(k + 1) + "] = " + std::to_string(caps[k]) +
              " outside [1, d] with d = " + std::to_string(d));
  }
  ExactInt total = 0;  // exact: the cap sum may exceed 64 bits
  for (auto c : caps) total += c;
  if (total <= d)
    throw ValidationError(ValidationError::Kind::degenerate_algebra,
                          "cap sum " + total.get_str() +
                              " must exceed d = " + std::to_string(d));
  return VeroneseType(std::move(caps), d);
}

const ExactInt& SubsetStatistics::count(std::int64_t s,
                                        std::int64_t sigma) const {
  if (s < 0 || s > n || sigma < 0 || sigma >= d) return kZero;
  return table[static_cast<std::size_t>(s)][static_cast<std::size_t>(sigma)];
}

SubsetStatistics subset_statistics(const VeroneseType& vt) {
  const std::int64_t n = vt.n();
  const std::int64_t d = vt.d();
  SubsetStatistics stats;
  stats.n = n;
  stats.d = d;
  stats.table.assign(static_cast<std::size_t>(n) + 1,
                     std::vector<ExactInt>(static_cast<std::size_t>(d)));
  auto& table = stats.table;
  table[0][0] = 1;  // the empty subset, sum 0 < d
  std::int64_t rows = 0;  // largest subset size reachable so far
  for (std::int64_t cap : vt.caps()) {
    // 0/1 item update; descending s so each cap joins a subset once.
    for (std::int64_t s = std::min(rows, n - 1); s >= 0; --s) {
      for (std::int64_t sigma = d - 1 - cap; sigma >= 0; --sigma) {
        const auto& src =
            table[static_cast<std::size_t>(s)][static_cast<std::size_t>(sigma)];
        if (src != 0)
          table[static_cast<std::size_t>(s + 1)]
               [static_cast<std::size_t>(sigma + cap)] += src;
      }
    }
    ++rows;
  }
  return stats;
}

ExactInt hilbert_function(const SubsetStatistics& stats, std::int64_t i) {
  if (i < 0)
    throw std::invalid_argument("hilbert_function: index must be >= 0");
  const std::int64_t n = stats.n;
  const std::int64_t d = stats.d;
  ExactInt sum = 0;
  for (std::int64_t s = 0; s <= n; ++s) {
    for (std::int64_t sigma = 0; sigma < d; ++sigma) {
      const ExactInt& count = stats.count(s, sigma);
      if (count == 0) continue;
      // i(d - sigma) in exact arithmetic: i is unbounded by contract.
      ExactInt top = ExactInt(i) * (d - sigma) - s + n - 1;
      ExactInt term = count * binomial(top, n - 1);
      if (s % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
  }
  return sum;
}

ExactInt hilbert_function(const VeroneseType& vt, std::int64_t i) {
  return hilbert_function(subset_statistics(vt), i);
}

ExactInt ehrhart_hypersimplex(std::int64_t n, std::int64_t d, std::int64_t i) {
  if (d < 1 || d >= n)
    throw std::invalid_argument("ehrhart_hypersimplex: need 1 <= d < n");
  if (i < 0)
    throw std::invalid_argument("ehrhart_hypersimplex: index must be >= 0");
  ExactInt sum = 0;
  for (std::int64_t s = 0; s < d; ++s) {
    ExactInt top = ExactInt(i) * (d - s) - s + n - 1;
    ExactInt term = binomial(n, s) * binomial(top, n - 1);
    if (s % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

IntPolynomial h_numerator(const VeroneseType& vt) {
  const std::int64_t n = vt.n();
  const std::int64_t d = vt.d();
  const SubsetStatistics stats = subset_statistics(vt);

  // G_{m,e} = stride_extract(a_coefficients(m, e), e), reused heavily
  // across (s, sigma, j) triples.
  std::map<std::pair<std::int64_t, std::int64_t>, IntPolynomial> strided;
  auto g = [&strided](std::int64_t m, std::int64_t e) -> const IntPolynomial& {
    auto it = strided.find({m, e});
    if (it == strided.end())
      it = strided.emplace(std::pair{m, e},
                           stride_extract(a_coefficients(m, e), e))
               .first;
    return it->second;
  };

  // Powers of (1 - t) up to the largest subset size present.
  std::int64_t max_s = 0;
  for (std::int64_t s = 0; s <= n; ++s)
    for (std::int64_t sigma = 0; sigma < d; ++sigma)
      if (stats.count(s, sigma) != 0) max_s = std::max(max_s, s);
  const IntPolynomial one_minus_t(std::vector<ExactInt>{1, -1});
  std::vector<IntPolynomial> omt_pow(static_cast<std::size_t>(max_s) + 1);
  omt_pow[0] = IntPolynomial::one();
  for (std::int64_t j = 1; j <= max_s; ++j)
    omt_pow[static_cast<std::size_t>(j)] =
        poly_mul(omt_pow[static_cast<std::size_t>(j - 1)], one_minus_t);

  IntPolynomial acc;
  for (std::int64_t s = 0; s <= n; ++s) {
    for (std::int64_t sigma = 0; sigma < d; ++sigma) {
      const ExactInt& count = stats.count(s, sigma);
      if (count == 0) continue;
      const std::int64_t e = d - sigma;
      for (std::int64_t j = 0; j <= s; ++j) {
        ExactInt c = count * binomial(s, j);
        if ((s + j) % 2 != 0) c = -c;
        acc = poly_add(
            acc, poly_scale(
                     poly_mul(omt_pow[static_cast<std::size_t>(j)], g(n - j, e)),
                     c));
      }
    }
  }
  return acc;
}

HilbertSeries hilbert_series(const VeroneseType& vt) {
  HilbertSeries series{h_numerator(vt), vt.n()};
  if (series.numerator.coeff(0) != 1)
    throw std::logic_error(
        "hilbert_series: numerator constant term != 1 (implementation error)");
  if (*series.numerator.degree() > series.denominator_exponent)
    throw std::logic_error(
        "hilbert_series: numerator degree exceeds " +
        std::to_string(series.denominator_exponent) + " (implementation error)");
  if (eval_at_one(series.numerator) <= 0)
    throw std::logic_error(
        "hilbert_series: numerator vanishes at t = 1 (implementation error)");
  return series;
}

ExactInt multiplicity(const VeroneseType& vt) {
  const std::int64_t n = vt.n();
  const std::int64_t d = vt.d();
  const SubsetStatistics stats = subset_statistics(vt);
  ExactInt sum = 0;
  for (std::int64_t s = 0; s <= n; ++s) {
    for (std::int64_t sigma = 0; sigma < d; ++sigma) {
      const ExactInt& count = stats.count(s, sigma);
      if (count == 0) continue;
      ExactInt term =
          count * int_pow(ExactInt(d - sigma), static_cast<std::uint64_t>(n - 1));
      if (s % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
  }
  return sum;
}

std::int64_t a_invariant(const VeroneseType& vt) {
  const IntPolynomial num = h_numerator(vt);
  if (num.is_zero())
    throw std::logic_error("a_invariant: zero numerator (implementation error)");
  return *num.degree() - vt.n();
}

AInvariantBound a_invariant_bound(const VeroneseType& vt) {
  return {-ceil_div(vt.n(), vt.d()), vt.n() >= vt.d()};
}

ClassicalReport classical_report(std::int64_t n, std::int64_t d) {
  if (n < 2) throw std::invalid_argument("classical_report: need n >= 2");
  if (d < 1) throw std::invalid_argument("classical_report: need d >= 1");
  ClassicalReport report;
  report.gorenstein = (n % d == 0);
  report.multiplicity = int_pow(ExactInt(d), static_cast<std::uint64_t>(n - 1));
  report.a_invariant = -ceil_div(n, d);
  report.h_vector = stride_extract(a_coefficients(n, d), d);
  return report;
}

}  // namespace veronese
