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

#ifndef GENBIT_CODEC_HPP
#define GENBIT_CODEC_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "genbit/bitstring.hpp"
#include "genbit/codebook.hpp"
#include "genbit/error.hpp"
#include "genbit/sequence.hpp"

// Token grammar of an encoded stream for a sequence of n bases, tau = n % 4:
//
//   stream := token* tail
//   token  := code:8 flag:1        flag 1 -> the fragment occurs twice in a row
//   tail   := base:2 {tau}
//
// Tokens continue until n - tau bases are accounted for.

namespace genbit {

using TokenStream = BitString;

inline constexpr unsigned kTokenBits = 9;
inline constexpr unsigned kCodeBits = 8;
inline constexpr unsigned kTailBits = 2;

struct FragmentView {
  std::vector<Fragment> fragments;
  std::vector<Base> tail;
};

inline FragmentView fragmentize(const NucleotideSequence& s) {
  FragmentView view;
  const std::size_t whole = s.size() / kFragmentLength;
  view.fragments.reserve(whole);
  for (std::size_t f = 0; f < whole; ++f) {
    Fragment frag;
    for (std::size_t k = 0; k < kFragmentLength; ++k) {
      frag.bases[k] = s[f * kFragmentLength + k];
    }
    view.fragments.push_back(frag);
  }
  for (std::size_t i = whole * kFragmentLength; i < s.size(); ++i) view.tail.push_back(s[i]);
  return view;
}

namespace detail {

// Greedy left-to-right pairing. Calls emit(fragment, repeated) once per token.
template <typename Emit>
void for_each_token(const std::vector<Fragment>& fragments, Emit&& emit) {
  std::size_t i = 0;
  while (i < fragments.size()) {
    const bool repeated = i + 1 < fragments.size() && fragments[i + 1] == fragments[i];
    emit(fragments[i], repeated);
    i += repeated ? 2 : 1;
  }
}

}  // namespace detail

/// Number of flag-1 tokens the encoder emits for s.
inline std::size_t count_collapsed_pairs(const NucleotideSequence& s) {
  std::size_t pairs = 0;
  detail::for_each_token(fragmentize(s).fragments,
                         [&](const Fragment&, bool repeated) { pairs += repeated; });
  return pairs;
}

inline TokenStream encode(const NucleotideSequence& s) {
  const FragmentView view = fragmentize(s);
  TokenStream out;
  out.reserve(view.fragments.size() * kTokenBits + view.tail.size() * kTailBits);
  detail::for_each_token(view.fragments, [&](const Fragment& f, bool repeated) {
    out.append(fragment_index(f), kCodeBits);
    out.push_back(repeated);
  });
  for (Base b : view.tail) out.append(base_code(b), kTailBits);
  return out;
}

/// Outcome of walking the token grammar over a bit sequence.
struct GrammarScan {
  enum class Status { Ok, Exhausted, Overshoot };
  Status status = Status::Ok;
  /// Bits consumed by tokens and tail when status is Ok.
  std::size_t payload_bits = 0;
  std::size_t tokens = 0;
};

/// Walks tokens and tail for n bases over bits [0, available).
inline GrammarScan scan_grammar(const BitString& bits, std::size_t available, std::uint64_t n) {
  GrammarScan scan;
  const std::uint64_t tau = n % kFragmentLength;
  const std::uint64_t body = n - tau;
  std::uint64_t produced = 0;
  std::size_t pos = 0;
  while (produced < body) {
    if (available - pos < kTokenBits) {
      scan.status = GrammarScan::Status::Exhausted;
      return scan;
    }
    const bool repeated = bits[pos + kCodeBits];
    produced += repeated ? 2 * kFragmentLength : kFragmentLength;
    pos += kTokenBits;
    ++scan.tokens;
    if (produced > body) {
      scan.status = GrammarScan::Status::Overshoot;
      return scan;
    }
  }
  if (available - pos < tau * kTailBits) {
    scan.status = GrammarScan::Status::Exhausted;
    return scan;
  }
  scan.payload_bits = pos + tau * kTailBits;
  return scan;
}

/// Inverse of encode for a declared base count n. Trailing bits past the
/// payload are tolerated only if they are all zero.
inline NucleotideSequence decode(const TokenStream& bits, std::uint64_t n) {
  const GrammarScan scan = scan_grammar(bits, bits.size(), n);
  switch (scan.status) {
    case GrammarScan::Status::Exhausted:
      throw Error(ErrorKind::CorruptStream, "bits exhausted before " + std::to_string(n) +
                                                " bases were produced");
    case GrammarScan::Status::Overshoot:
      throw Error(ErrorKind::CorruptStream,
                  "repeat token overshoots the declared base count " + std::to_string(n));
    case GrammarScan::Status::Ok:
      break;
  }
  for (std::size_t i = scan.payload_bits; i < bits.size(); ++i) {
    if (bits[i]) {
      throw Error(ErrorKind::CorruptStream,
                  "nonzero bit at position " + std::to_string(i) + " past the payload");
    }
  }

  std::vector<Base> out;
  out.reserve(static_cast<std::size_t>(n));
  std::size_t pos = 0;
  for (std::size_t t = 0; t < scan.tokens; ++t, pos += kTokenBits) {
    const Fragment f = fragment_from_code(static_cast<std::uint8_t>(bits.read(pos, kCodeBits)));
    const int copies = bits[pos + kCodeBits] ? 2 : 1;
    for (int c = 0; c < copies; ++c) out.insert(out.end(), f.bases.begin(), f.bases.end());
  }
  for (std::uint64_t k = 0; k < n % kFragmentLength; ++k, pos += kTailBits) {
    out.push_back(base_from_code(static_cast<std::uint8_t>(bits.read(pos, kTailBits))));
  }
  return NucleotideSequence(std::move(out));
}

}  // namespace genbit

#endif  // GENBIT_CODEC_HPP
