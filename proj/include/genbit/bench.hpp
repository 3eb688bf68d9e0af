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

#ifndef GENBIT_BENCH_HPP
#define GENBIT_BENCH_HPP

#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "genbit/codebook.hpp"
#include "genbit/error.hpp"
#include "genbit/metrics.hpp"
#include "genbit/sequence.hpp"
#include "json.hpp"

namespace genbit {

struct BenchConfig {
  std::uint64_t length = 0;
  double repeat_density = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;

  void validate() const {
    if (!(repeat_density >= 0.0 && repeat_density <= 1.0)) {
      throw Error(ErrorKind::InvalidArgument, "repeat density must lie in [0, 1]");
    }
    if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  }
};

/// Seeded source for the synthetic corpus. The stream is std::mt19937_64
/// (fully specified by the standard), and both derived draws are spelled out
/// here instead of using <random> distributions, whose output is
/// implementation-defined:
///   below(k): redraw while x < 2^64 mod k, then x mod k
///   unit():   top 53 bits of x scaled by 2^-53, in [0, 1)
class SyntheticRng {
 public:
  explicit SyntheticRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t reject_from = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= reject_from) return x % bound;
    }
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Fragment-level generator. Each fragment after the first copies its
/// predecessor with probability repeat_density unless the predecessor is
/// itself a copy; otherwise it is uniform over the 256 fragments, redrawn
/// while equal to the predecessor. Runs of equal fragments therefore have
/// length at most two and every copy is exactly one collapsed pair.
/// Tail bases are uniform.
inline NucleotideSequence generate_synthetic(const BenchConfig& cfg) {
  cfg.validate();
  SyntheticRng rng(cfg.seed);
  const std::uint64_t fragments = cfg.length / kFragmentLength;
  NucleotideSequence out;
  out.reserve(static_cast<std::size_t>(cfg.length));

  std::uint8_t prev = 0;
  bool prev_copied = false;
  for (std::uint64_t i = 0; i < fragments; ++i) {
    std::uint8_t code;
    if (i > 0 && !prev_copied && rng.unit() < cfg.repeat_density) {
      code = prev;
      prev_copied = true;
    } else {
      do {
        code = static_cast<std::uint8_t>(rng.below(kFragmentCount));
      } while (i > 0 && code == prev);
      prev_copied = false;
    }
    for (Base b : fragment_from_code(code).bases) out.push_back(b);
    prev = code;
  }
  for (std::uint64_t k = 0; k < cfg.length % kFragmentLength; ++k) {
    out.push_back(static_cast<Base>(rng.below(4)));
  }
  return out;
}

struct NamedSequence {
  std::string name;
  NucleotideSequence sequence;
};

/// Predicted rates for the same n, where the scenario applies.
struct ScenarioEnvelope {
  std::optional<double> best;
  std::optional<double> average;
  double worst = 0.0;
};

struct BenchEntry {
  std::string name;
  CompressionStats stats;
  ScenarioEnvelope envelope;
};

struct BenchReport {
  std::vector<BenchEntry> entries;
  double mean_rate = 0.0;
};

inline ScenarioEnvelope envelope_for(std::uint64_t n) {
  ScenarioEnvelope env;
  if (scenario_applies(Scenario::Best, n)) env.best = scenario_stats(Scenario::Best, n).rate;
  if (scenario_applies(Scenario::Average, n)) {
    env.average = scenario_stats(Scenario::Average, n).rate;
  }
  env.worst = scenario_stats(Scenario::Worst, n).rate;
  return env;
}

inline BenchReport run_corpus(const std::vector<NamedSequence>& inputs) {
  if (inputs.empty()) throw Error(ErrorKind::EmptyCorpus, "corpus has no inputs");
  BenchReport report;
  report.entries.reserve(inputs.size());
  double sum = 0.0;
  for (const auto& in : inputs) {
    BenchEntry e{in.name, measure(in.sequence), envelope_for(in.sequence.size())};
    sum += e.stats.rate;
    report.entries.push_back(std::move(e));
  }
  report.mean_rate = sum / static_cast<double>(report.entries.size());
  return report;
}

/// trials sequences, trial i seeded with cfg.seed + i.
inline std::vector<NamedSequence> synthetic_corpus(const BenchConfig& cfg) {
  cfg.validate();
  std::vector<NamedSequence> corpus;
  corpus.reserve(static_cast<std::size_t>(cfg.trials));
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    BenchConfig trial = cfg;
    trial.seed = cfg.seed + t;
    corpus.push_back({"trial-" + std::to_string(t), generate_synthetic(trial)});
  }
  return corpus;
}

inline std::string format_rate(double rate) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << rate;
  return os.str();
}

inline std::string render_table(const BenchReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(16) << "name" << std::right << std::setw(12) << "n"
     << std::setw(5) << "tau" << std::setw(10) << "upsilon" << std::setw(14) << "bits"
     << std::setw(9) << "rate" << std::setw(9) << "best" << std::setw(9) << "worst" << '\n';
  for (const auto& e : report.entries) {
    os << std::left << std::setw(16) << e.name << std::right << std::setw(12) << e.stats.n
       << std::setw(5) << e.stats.tau << std::setw(10) << e.stats.upsilon << std::setw(14)
       << e.stats.total_bits << std::setw(9) << format_rate(e.stats.rate) << std::setw(9)
       << (e.envelope.best ? format_rate(*e.envelope.best) : "-") << std::setw(9)
       << format_rate(e.envelope.worst) << '\n';
  }
  os << "mean rate " << format_rate(report.mean_rate) << " bits/base over "
     << report.entries.size() << " input(s)\n";
  return os.str();
}

inline nlohmann::json stats_json(const CompressionStats& st) {
  return {{"n", st.n},
          {"tau", st.tau},
          {"upsilon", st.upsilon},
          {"bits", st.total_bits},
          {"rate", st.rate}};
}

inline nlohmann::json envelope_json(const ScenarioEnvelope& env) {
  nlohmann::json j;
  j["best"] = env.best ? nlohmann::json(*env.best) : nlohmann::json(nullptr);
  j["average"] = env.average ? nlohmann::json(*env.average) : nlohmann::json(nullptr);
  j["worst"] = env.worst;
  return j;
}

inline nlohmann::json report_json(const BenchReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json j = stats_json(e.stats);
    j["name"] = e.name;
    j["envelope"] = envelope_json(e.envelope);
    entries.push_back(std::move(j));
  }
  return {{"entries", std::move(entries)}, {"mean_rate", report.mean_rate}};
}

}  // namespace genbit

#endif  // GENBIT_BENCH_HPP
