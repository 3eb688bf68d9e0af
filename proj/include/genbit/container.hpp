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

#ifndef GENBIT_CONTAINER_HPP
#define GENBIT_CONTAINER_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "genbit/bitstring.hpp"
#include "genbit/codec.hpp"
#include "genbit/error.hpp"

// GBC1 file layout (all multi-byte fields big-endian):
//
//   offset  size  field
//   0       4     magic "GBC1"
//   4       1     version, 0x01
//   5       8     n, number of encoded bases
//   13      ...   token stream packed MSB-first, zero-padded to a byte
//
// The payload bit count is not stored; it follows from n and the token grammar.

namespace genbit {

inline constexpr std::array<std::uint8_t, 4> kContainerMagic = {'G', 'B', 'C', '1'};
inline constexpr std::uint8_t kContainerVersion = 0x01;
inline constexpr std::size_t kContainerHeaderSize = 13;

inline std::vector<std::uint8_t> pack_bits(const BitString& bits) {
  const auto packed = bits.bytes();
  return {packed.begin(), packed.end()};
}

inline BitString unpack_bits(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
  const std::size_t needed = (bit_count + 7) / 8;
  if (needed != bytes.size()) {
    throw Error(ErrorKind::FramingError, std::to_string(bit_count) + " bits do not fit exactly in " +
                                             std::to_string(bytes.size()) + " bytes");
  }
  if (bit_count % 8 != 0) {
    const auto pad_mask = static_cast<std::uint8_t>(0xFFu >> (bit_count % 8));
    if (bytes.back() & pad_mask) {
      throw Error(ErrorKind::CorruptStream, "padding bits are not zero");
    }
  }
  return BitString::from_packed({bytes.begin(), bytes.end()}, bit_count);
}

inline std::vector<std::uint8_t> write_container(std::uint64_t n, const TokenStream& bits) {
  const auto payload = bits.bytes();
  std::vector<std::uint8_t> out(kContainerHeaderSize + payload.size());
  std::copy(kContainerMagic.begin(), kContainerMagic.end(), out.begin());
  out[4] = kContainerVersion;
  for (std::size_t i = 0; i < 8; ++i) {
    out[5 + i] = static_cast<std::uint8_t>(n >> (56 - 8 * i));
  }
  std::copy(payload.begin(), payload.end(), out.begin() + kContainerHeaderSize);
  return out;
}

struct DecodedContainer {
  std::uint64_t n = 0;
  TokenStream bits;

  friend bool operator==(const DecodedContainer&, const DecodedContainer&) = default;
};

inline DecodedContainer read_container(std::span<const std::uint8_t> bytes) {
  const std::size_t magic_seen = std::min(bytes.size(), kContainerMagic.size());
  if (!std::equal(bytes.begin(), bytes.begin() + magic_seen, kContainerMagic.begin())) {
    throw Error(ErrorKind::BadMagic, "not a GBC1 container");
  }
  if (bytes.size() < kContainerHeaderSize) {
    throw Error(ErrorKind::TruncatedFile, "header needs 13 bytes, file has " +
                                              std::to_string(bytes.size()));
  }
  if (bytes[4] != kContainerVersion) {
    throw Error(ErrorKind::UnsupportedVersion, "version " + std::to_string(bytes[4]));
  }
  DecodedContainer result;
  for (std::size_t i = 5; i < kContainerHeaderSize; ++i) result.n = (result.n << 8) | bytes[i];

  const auto payload = bytes.subspan(kContainerHeaderSize);
  const BitString raw = BitString::from_packed({payload.begin(), payload.end()}, payload.size() * 8);
  const GrammarScan scan = scan_grammar(raw, raw.size(), result.n);
  switch (scan.status) {
    case GrammarScan::Status::Exhausted:
      throw Error(ErrorKind::TruncatedFile, "payload ends before " + std::to_string(result.n) +
                                                " bases are accounted for");
    case GrammarScan::Status::Overshoot:
      throw Error(ErrorKind::CorruptStream, "repeat token overshoots the declared base count");
    case GrammarScan::Status::Ok:
      break;
  }
  const std::size_t payload_bytes = (scan.payload_bits + 7) / 8;
  if (payload.size() != payload_bytes) {
    throw Error(ErrorKind::CorruptStream, std::to_string(payload.size() - payload_bytes) +
                                              " unexpected trailing bytes");
  }
  result.bits = unpack_bits(payload, scan.payload_bits);
  return result;
}

}  // namespace genbit

#endif  // GENBIT_CONTAINER_HPP
