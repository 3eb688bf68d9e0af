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

#ifndef GENBIT_CODEBOOK_HPP
#define GENBIT_CODEBOOK_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "genbit/error.hpp"

namespace genbit {

// Digit order follows the alphabet "agct": a=0, g=1, c=2, t=3.
enum class Base : std::uint8_t { a = 0, g = 1, c = 2, t = 3 };

inline constexpr std::string_view kAlphabet = "agct";
inline constexpr std::size_t kFragmentLength = 4;
inline constexpr std::size_t kFragmentCount = 256;

constexpr std::uint8_t digit(Base b) noexcept { return static_cast<std::uint8_t>(b); }

constexpr char symbol(Base b) noexcept { return kAlphabet[digit(b)]; }

/// Lowercase symbols only; case folding belongs to ingestion.
constexpr std::optional<Base> base_from_symbol(char ch) noexcept {
  switch (ch) {
    case 'a': return Base::a;
    case 'g': return Base::g;
    case 'c': return Base::c;
    case 't': return Base::t;
    default: return std::nullopt;
  }
}

/// 2-bit code of a base, right-aligned in the returned byte.
constexpr std::uint8_t base_code(Base b) noexcept { return digit(b); }

constexpr Base base_from_code(std::uint8_t code) noexcept {
  return static_cast<Base>(code & 0x3u);
}

/// Four consecutive bases.
struct Fragment {
  std::array<Base, kFragmentLength> bases{};

  static Fragment from_string(std::string_view text) {
    if (text.size() != kFragmentLength) {
      throw Error(ErrorKind::InvalidArgument,
                  "fragment must have 4 bases, got " + std::to_string(text.size()));
    }
    Fragment f;
    for (std::size_t i = 0; i < kFragmentLength; ++i) {
      auto b = base_from_symbol(text[i]);
      if (!b) {
        throw Error(ErrorKind::InvalidBase,
                    std::string("'") + text[i] + "' at offset " + std::to_string(i));
      }
      f.bases[i] = *b;
    }
    return f;
  }

  std::string str() const {
    std::string out(kFragmentLength, ' ');
    for (std::size_t i = 0; i < kFragmentLength; ++i) out[i] = symbol(bases[i]);
    return out;
  }

  friend constexpr bool operator==(const Fragment&, const Fragment&) = default;
};

/// 8-bit code of a fragment: its digits read as a base-4 number, first base
/// most significant. Equivalently the concatenation of the four base codes.
constexpr std::uint8_t fragment_index(const Fragment& f) noexcept {
  return static_cast<std::uint8_t>((digit(f.bases[0]) << 6) | (digit(f.bases[1]) << 4) |
                                   (digit(f.bases[2]) << 2) | digit(f.bases[3]));
}

constexpr Fragment fragment_from_code(std::uint8_t code) noexcept {
  Fragment f;
  f.bases[0] = base_from_code(code >> 6);
  f.bases[1] = base_from_code(code >> 4);
  f.bases[2] = base_from_code(code >> 2);
  f.bases[3] = base_from_code(code);
  return f;
}

inline Fragment index_fragment(unsigned index) {
  if (index >= kFragmentCount) {
    throw Error(ErrorKind::InvalidArgument,
                "fragment index " + std::to_string(index) + " is outside 0..255");
  }
  return fragment_from_code(static_cast<std::uint8_t>(index));
}

/// Materialized index -> fragment table. The codec computes codes directly;
/// the table exists for inspection and for the self test.
using FragmentTable = std::array<Fragment, kFragmentCount>;

constexpr FragmentTable make_fragment_table() noexcept {
  FragmentTable table{};
  for (unsigned i = 0; i < kFragmentCount; ++i) {
    table[i] = fragment_from_code(static_cast<std::uint8_t>(i));
  }
  return table;
}

/// True iff every table slot holds the fragment whose code is the slot index
/// and no fragment appears twice.
constexpr bool is_bijective(const FragmentTable& table) noexcept {
  std::array<bool, kFragmentCount> seen{};
  for (unsigned i = 0; i < kFragmentCount; ++i) {
    const auto code = fragment_index(table[i]);
    if (code != i || seen[code]) return false;
    seen[code] = true;
  }
  return true;
}

}  // namespace genbit

#endif  // GENBIT_CODEBOOK_HPP
