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

#ifndef GENBIT_METRICS_HPP
#define GENBIT_METRICS_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "genbit/codec.hpp"
#include "genbit/error.hpp"
#include "genbit/sequence.hpp"

namespace genbit {

/// Measured or predicted size of an encoding, in bits and bits per base.
struct CompressionStats {
  std::uint64_t n = 0;
  unsigned tau = 0;
  std::uint64_t upsilon = 0;
  std::uint64_t total_bits = 0;
  double rate = 0.0;

  friend bool operator==(const CompressionStats&, const CompressionStats&) = default;
};

enum class Scenario { Best, Average, Worst };

constexpr std::string_view scenario_name(Scenario kind) noexcept {
  switch (kind) {
    case Scenario::Best: return "best";
    case Scenario::Average: return "average";
    case Scenario::Worst: return "worst";
  }
  return "unknown";
}

/// 9/4 (n - tau) + 2 tau - 9 upsilon. Exact, since 4 divides n - tau.
inline std::uint64_t theoretical_total_bits(std::uint64_t n, unsigned tau, std::uint64_t upsilon) {
  if (tau != n % 4) {
    throw Error(ErrorKind::InvalidArgument, "tau must equal n mod 4 (n=" + std::to_string(n) +
                                                ", tau=" + std::to_string(tau) + ")");
  }
  const std::uint64_t body = n - tau;
  if (upsilon > body / 8) {
    throw Error(ErrorKind::InvalidArgument,
                "upsilon " + std::to_string(upsilon) + " exceeds (n - tau) / 8 = " +
                    std::to_string(body / 8));
  }
  return 9 * (body / 4) + 2 * std::uint64_t{tau} - 9 * upsilon;
}

inline double compression_rate(std::uint64_t total_bits, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::UndefinedRate, "rate is undefined for an empty sequence");
  return static_cast<double>(total_bits) / static_cast<double>(n);
}

namespace detail {

inline CompressionStats make_stats(std::uint64_t n, std::uint64_t upsilon) {
  CompressionStats st;
  st.n = n;
  st.tau = static_cast<unsigned>(n % 4);
  st.upsilon = upsilon;
  st.total_bits = theoretical_total_bits(n, st.tau, upsilon);
  st.rate = compression_rate(st.total_bits, n);
  return st;
}

}  // namespace detail

/// Whether scenario_stats(kind, n) is defined.
constexpr bool scenario_applies(Scenario kind, std::uint64_t n) noexcept {
  switch (kind) {
    case Scenario::Best: return n >= 8 && n % 8 == 0;
    case Scenario::Average: return n >= 2 && n % 4 == 2 && (n - 2) % 16 == 0;
    case Scenario::Worst: return n >= 1;
  }
  return false;
}

/// Predicted stats for the three analysed input classes:
///   best    tau = 0,     upsilon = n / 8         (every fragment paired)
///   average tau = 2,     upsilon = (n - 2) / 16
///   worst   tau = n % 4, upsilon = 0             (no adjacent repeats)
inline CompressionStats scenario_stats(Scenario kind, std::uint64_t n) {
  if (!scenario_applies(kind, n)) {
    switch (kind) {
      case Scenario::Best:
        throw Error(ErrorKind::InvalidArgument,
                    "best case requires n divisible by 8 and n >= 8, got " + std::to_string(n));
      case Scenario::Average:
        throw Error(ErrorKind::InvalidArgument,
                    "average case requires n mod 4 = 2 and (n - 2) divisible by 16, got " +
                        std::to_string(n));
      case Scenario::Worst:
        throw Error(ErrorKind::UndefinedRate, "worst case requires n >= 1");
    }
  }
  switch (kind) {
    case Scenario::Best: return detail::make_stats(n, n / 8);
    case Scenario::Average: return detail::make_stats(n, (n - 2) / 16);
    case Scenario::Worst: break;
  }
  return detail::make_stats(n, 0);
}

/// Stats of an actual encoding of s. The encoded size must agree with the
/// closed form; a mismatch is a codec bug and throws std::logic_error.
inline CompressionStats measure(const NucleotideSequence& s) {
  if (s.empty()) throw Error(ErrorKind::UndefinedRate, "cannot measure an empty sequence");
  const TokenStream bits = encode(s);
  const CompressionStats st = detail::make_stats(s.size(), count_collapsed_pairs(s));
  if (bits.size() != st.total_bits) {
    throw std::logic_error("encoded size " + std::to_string(bits.size()) +
                           " disagrees with closed form " + std::to_string(st.total_bits));
  }
  return st;
}

}  // namespace genbit

#endif  // GENBIT_METRICS_HPP
