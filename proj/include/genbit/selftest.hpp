// Copyright 2026 The GenBit Authors
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

#ifndef GENBIT_SELFTEST_HPP
#define GENBIT_SELFTEST_HPP

#include <cmath>
#include <string>
#include <vector>

#include "genbit/bench.hpp"
#include "genbit/codebook.hpp"
#include "genbit/codec.hpp"
#include "genbit/container.hpp"
#include "genbit/metrics.hpp"

namespace genbit {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SelftestOptions {
  /// Test hook: damages the fragment table before the bijection check.
  bool corrupt_codebook = false;
  std::size_t round_trip_cases = 1000;
  std::uint64_t seed = 1;
};

inline std::vector<CheckResult> run_selftest(const SelftestOptions& opt = {}) {
  std::vector<CheckResult> results;

  FragmentTable table = make_fragment_table();
  if (opt.corrupt_codebook) table[27] = table[28];
  results.push_back({"codebook-bijection", is_bijective(table), "256 entries"});

  {
    const auto st = scenario_stats(Scenario::Best, 64);
    results.push_back({"best-case-64 = 1.125", st.total_bits == 72 && st.rate == 1.125,
                       std::to_string(st.total_bits) + " bits, rate " + format_rate(st.rate)});
  }
  {
    const auto st = scenario_stats(Scenario::Worst, 67);
    results.push_back({"worst-case-67 = 2.2388",
                       st.total_bits == 150 && std::abs(st.rate - 2.2388) <= 5e-4,
                       std::to_string(st.total_bits) + " bits, rate " + format_rate(st.rate)});
  }
  {
    const double densities[] = {0.0, 0.25, 0.5, 1.0};
    SyntheticRng lengths(opt.seed);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < opt.round_trip_cases; ++i) {
      BenchConfig cfg{lengths.below(1001), densities[i % 4], opt.seed + i, 1};
      const auto s = generate_synthetic(cfg);
      const auto bits = encode(s);
      const auto framed = read_container(write_container(s.size(), bits));
      if (decode(framed.bits, framed.n) != s) ++failures;
    }
    results.push_back({"round-trip-" + std::to_string(opt.round_trip_cases), failures == 0,
                       std::to_string(failures) + " failures"});
  }
  return results;
}

}  // namespace genbit

#endif  // GENBIT_SELFTEST_HPP
