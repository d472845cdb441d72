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

#include "veronese/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <functional>
#include <limits>
#include <ostream>
#include <random>
#include <string_view>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "veronese/oracle.hpp"
#include "veronese/veronese.hpp"

namespace veronese::cli {
namespace {

using nlohmann::json;

// ExactInt values travel as exact decimal strings: they outgrow every
// native JSON number type.
std::string dec(const ExactInt& v) { return v.get_str(); }

json coeff_strings(const IntPolynomial& p) {
  json arr = json::array();
  if (p.is_zero()) {
    arr.push_back("0");
    return arr;
  }
  for (const auto& c : p.coeffs()) arr.push_back(dec(c));
  return arr;
}

std::string join_strings(const json& arr) {
  std::string out;
  for (const auto& item : arr) {
    if (!out.empty()) out += ' ';
    out += item.get<std::string>();
  }
  return out;
}

struct IndexRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

bool parse_nonneg(std::string_view text, std::int64_t& value) {
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc{} && ptr == end && value >= 0;
}

// "k" or "lo..hi"; both bounds nonnegative, lo <= hi.
bool parse_index_range(const std::string& text, IndexRange& range,
                       std::string& error) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    if (!parse_nonneg(text, range.lo)) {
      error = "expected a nonnegative integer or lo..hi range, got '" + text +
              "'";
      return false;
    }
    range.hi = range.lo;
    return true;
  }
  if (!parse_nonneg(std::string_view(text).substr(0, pos), range.lo) ||
      !parse_nonneg(std::string_view(text).substr(pos + 2), range.hi)) {
    error = "expected a nonnegative integer or lo..hi range, got '" + text +
            "'";
    return false;
  }
  if (range.hi < range.lo) {
    error = "range '" + text + "' is descending";
    return false;
  }
  return true;
}

std::vector<std::int64_t> random_admissible_caps(std::int64_t n,
                                                 std::int64_t d,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> cap_dist(1, d);
  std::vector<std::int64_t> caps(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < 64; ++attempt) {
    ExactInt sum = 0;
    for (auto& c : caps) {
      c = cap_dist(rng);
      sum += c;
    }
    if (sum > d) return caps;
  }
  caps.back() = d;  // with n >= 2 the sum now exceeds d
  return caps;
}

template <typename F>
double time_best_ms(int reps, F&& body) {
  using clock = std::chrono::steady_clock;
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock::now();
    body();
    const auto t1 = clock::now();
    best = std::min(
        best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

json caps_json(std::span<const std::int64_t> caps) {
  json arr = json::array();
  for (auto c : caps) arr.push_back(c);
  return arr;
}

std::string plain_caps(std::span<const std::int64_t> caps) {
  std::string out;
  for (auto c : caps) {
    if (!out.empty()) out += ' ';
    out += std::to_string(c);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Hilbert series calculator for algebras of Veronese type"};
  app.require_subcommand(1);

  bool json_mode = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", json_mode, "emit one JSON document instead of text");
  app.add_option("--seed", seed, "RNG seed for bench cap sampling");

  std::vector<std::int64_t> caps;
  std::int64_t d = 0;
  std::int64_t n = 0;
  std::int64_t max_i = 4;
  std::string index_text;
  bool naive = false;

  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--a", caps, "exponent caps, comma separated")
        ->delimiter(',')
        ->required();
    sub->add_option("--d", d, "generator degree")->required();
  };
  auto add_nd = [&](CLI::App* sub) {
    sub->add_option("--n", n, "number of variables")->required();
    sub->add_option("--d", d, "generator degree")->required();
  };

  auto* cmd_hilbert =
      app.add_subcommand("hilbert", "Hilbert function values H(i)");
  add_caps(cmd_hilbert);
  cmd_hilbert->add_option("--i", index_text, "index or range lo..hi")
      ->required();

  auto* cmd_hvector =
      app.add_subcommand("hvector", "h-vector (Hilbert series numerator)");
  add_caps(cmd_hvector);

  auto* cmd_series =
      app.add_subcommand("series", "Hilbert series as numerator/(1-t)^n");
  add_caps(cmd_series);

  auto* cmd_mult = app.add_subcommand("mult", "multiplicity");
  add_caps(cmd_mult);

  auto* cmd_ainv =
      app.add_subcommand("ainv", "a-invariant and its -ceil(n/d) bound");
  add_caps(cmd_ainv);

  auto* cmd_classical = app.add_subcommand(
      "classical", "report for the classical case (all caps equal d)");
  add_nd(cmd_classical);

  auto* cmd_ehrhart = app.add_subcommand(
      "ehrhart", "lattice-point counts of hypersimplex dilates");
  add_nd(cmd_ehrhart);
  cmd_ehrhart->add_option("--i", index_text, "dilation factor or range lo..hi")
      ->required();

  auto* cmd_verify = app.add_subcommand(
      "verify", "cross-check closed forms against the brute-force oracle");
  add_caps(cmd_verify);
  cmd_verify->add_option("--max-i", max_i,
                         "largest Hilbert index to compare (default 4)");

  auto* cmd_bench = app.add_subcommand(
      "bench", "time the subset-statistics DP against 2^n enumeration");
  add_nd(cmd_bench);
  cmd_bench->add_flag("--naive", naive,
                      "also run the 2^n enumeration (n <= 22)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* parsed = app.get_subcommands().front();
  const std::string command = parsed->get_name();

  json record;
  record["command"] = command;
  std::vector<std::string> lines;

  // Sorted caps are the canonical input echo.
  std::vector<std::int64_t> sorted_caps = caps;
  std::sort(sorted_caps.begin(), sorted_caps.end());
  if (parsed == cmd_classical || parsed == cmd_ehrhart || parsed == cmd_bench)
    record["input"] = {{"n", n}, {"d", d}};
  else
    record["input"] = {{"a", caps_json(sorted_caps)}, {"d", d}};

  // Ranges are argument syntax: reject before any computation.
  IndexRange range;
  if (parsed == cmd_hilbert || parsed == cmd_ehrhart) {
    std::string why;
    if (!parse_index_range(index_text, range, why)) {
      err << "error: --i: " << why << '\n';
      return 2;
    }
  }

  int exit_code = 0;
  try {
    json result;
    if (parsed == cmd_hilbert) {
      const VeroneseType vt = make_veronese(caps, d);
      const SubsetStatistics stats = subset_statistics(vt);
      json values = json::array();
      for (std::int64_t i = range.lo; i <= range.hi; ++i)
        values.push_back(
            {{"i", i}, {"value", dec(hilbert_function(stats, i))}});
      result["values"] = std::move(values);
      std::string line;
      for (const auto& v : result["values"]) {
        if (!line.empty()) line += ' ';
        line += v["value"].get<std::string>();
      }
      lines.push_back(line);
    } else if (parsed == cmd_hvector) {
      const VeroneseType vt = make_veronese(caps, d);
      result["coefficients"] = coeff_strings(h_numerator(vt));
      lines.push_back(join_strings(result["coefficients"]));
    } else if (parsed == cmd_series) {
      const VeroneseType vt = make_veronese(caps, d);
      const HilbertSeries series = hilbert_series(vt);
      result["numerator"] = coeff_strings(series.numerator);
      result["denominator_exponent"] = series.denominator_exponent;
      lines.push_back("numerator: " + join_strings(result["numerator"]));
      lines.push_back("denominator_exponent: " +
                      std::to_string(series.denominator_exponent));
    } else if (parsed == cmd_mult) {
      const VeroneseType vt = make_veronese(caps, d);
      result["multiplicity"] = dec(multiplicity(vt));
      lines.push_back(result["multiplicity"].get<std::string>());
    } else if (parsed == cmd_ainv) {
      const VeroneseType vt = make_veronese(caps, d);
      const auto bound = a_invariant_bound(vt);
      result["a_invariant"] = a_invariant(vt);
      result["bound"] = bound.bound;
      result["applicable"] = bound.applicable;
      lines.push_back("a_invariant: " + result["a_invariant"].dump());
      lines.push_back("bound: " + result["bound"].dump());
      lines.push_back("applicable: " + result["applicable"].dump());
    } else if (parsed == cmd_classical) {
      const ClassicalReport report = classical_report(n, d);
      result["gorenstein"] = report.gorenstein;
      result["multiplicity"] = dec(report.multiplicity);
      result["a_invariant"] = report.a_invariant;
      result["h_vector"] = coeff_strings(report.h_vector);
      lines.push_back("gorenstein: " + result["gorenstein"].dump());
      lines.push_back("multiplicity: " +
                      result["multiplicity"].get<std::string>());
      lines.push_back("a_invariant: " + result["a_invariant"].dump());
      lines.push_back("h_vector: " + join_strings(result["h_vector"]));
    } else if (parsed == cmd_ehrhart) {
      json values = json::array();
      for (std::int64_t i = range.lo; i <= range.hi; ++i)
        values.push_back(
            {{"i", i}, {"value", dec(ehrhart_hypersimplex(n, d, i))}});
      result["values"] = std::move(values);
      std::string line;
      for (const auto& v : result["values"]) {
        if (!line.empty()) line += ' ';
        line += v["value"].get<std::string>();
      }
      lines.push_back(line);
    } else if (parsed == cmd_verify) {
      const VeroneseType vt = make_veronese(caps, d);
      const VerificationReport report = verify(vt, max_i);
      json matches = json::array();
      for (const auto& cmp : report.hilbert_matches) {
        matches.push_back({{"i", cmp.i},
                           {"closed_form", dec(cmp.closed_form)},
                           {"oracle", dec(cmp.oracle)},
                           {"equal", cmp.equal}});
        lines.push_back("hilbert i=" + std::to_string(cmp.i) +
                        ": closed_form=" + dec(cmp.closed_form) +
                        " oracle=" + dec(cmp.oracle) +
                        " equal=" + (cmp.equal ? "true" : "false"));
      }
      result["config"] = {{"a", caps_json(vt.caps())}, {"d", vt.d()}};
      result["max_i"] = report.max_i;
      result["hilbert_matches"] = std::move(matches);
      result["hvector_match"] = report.hvector_match;
      result["multiplicity_match"] = report.multiplicity_match;
      result["overall"] = report.overall;
      lines.push_back("hvector_match: " + result["hvector_match"].dump());
      lines.push_back("multiplicity_match: " +
                      result["multiplicity_match"].dump());
      lines.push_back("overall: " + result["overall"].dump());
      exit_code = report.overall ? 0 : 1;
    } else if (parsed == cmd_bench) {
      if (naive && n > 22)
        throw std::invalid_argument(
            "bench --naive refuses n > 22: 2^n enumeration at that size is "
            "not a benchmark, it is a hang");
      const auto bench_caps = random_admissible_caps(n, d, seed);
      const VeroneseType vt = make_veronese(bench_caps, d);
      SubsetStatistics dp_table;
      const double dp_ms =
          std::max(time_best_ms(16, [&] { dp_table = subset_statistics(vt); }),
                   1e-6);
      result["caps"] = caps_json(vt.caps());
      result["dp_ms"] = dp_ms;
      lines.push_back("caps: " + plain_caps(vt.caps()));
      lines.push_back("dp_ms: " + json(dp_ms).dump());
      if (naive) {
        SubsetStatistics naive_table;
        const double naive_ms = time_best_ms(
            3, [&] { naive_table = subset_statistics_naive(vt); });
        const bool match = (dp_table == naive_table);
        result["naive_ms"] = naive_ms;
        result["speedup"] = naive_ms / dp_ms;
        result["match"] = match;
        lines.push_back("naive_ms: " + json(naive_ms).dump());
        lines.push_back("speedup: " + result["speedup"].dump());
        lines.push_back("match: " + result["match"].dump());
        if (!match)
          throw std::logic_error(
              "subset statistics mismatch between DP and 2^n enumeration");
      }
    }
    record["result"] = std::move(result);
    record["status"] = "ok";
  } catch (const std::exception& e) {
    record["status"] = "error";
    record["error_message"] = e.what();
    record.erase("result");
    if (json_mode) out << record.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (json_mode)
    out << record.dump(2) << '\n';
  else
    for (const auto& line : lines) out << line << '\n';
  return exit_code;
}

}  // namespace veronese::cli
