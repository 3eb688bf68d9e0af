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

#ifndef GENBIT_BITSTRING_HPP
#define GENBIT_BITSTRING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genbit/error.hpp"

namespace genbit {

/// Ordered bit sequence stored MSB-first in bytes. Bits past size() in the
/// last byte are always zero.
class BitString {
 public:
  BitString() = default;

  /// Parses a string of '0'/'1'. Spaces are ignored so "00000000 1" works.
  static BitString from_string(std::string_view text) {
    BitString bits;
    for (char ch : text) {
      if (ch == ' ') continue;
      if (ch != '0' && ch != '1') {
        throw Error(ErrorKind::InvalidArgument, std::string("not a bit: '") + ch + "'");
      }
      bits.push_back(ch == '1');
    }
    return bits;
  }

  /// Adopts packed bytes holding exactly bit_count bits; the caller has
  /// already checked padding.
  static BitString from_packed(std::vector<std::uint8_t> bytes, std::size_t bit_count) {
    BitString bits;
    bits.bytes_ = std::move(bytes);
    bits.size_ = bit_count;
    return bits;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  void reserve(std::size_t bit_count) { bytes_.reserve((bit_count + 7) / 8); }

  bool operator[](std::size_t i) const noexcept {
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u;
  }

  void push_back(bool bit) {
    if ((size_ & 7) == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ & 7));
    ++size_;
  }

  /// Appends the low `width` bits of value, most significant first.
  void append(std::uint32_t value, unsigned width) {
    for (unsigned k = width; k-- > 0;) push_back((value >> k) & 1u);
  }

  /// Reads `width` bits starting at `pos` as an unsigned number.
  std::uint32_t read(std::size_t pos, unsigned width) const noexcept {
    std::uint32_t value = 0;
    for (unsigned k = 0; k < width; ++k) value = (value << 1) | (*this)[pos + k];
    return value;
  }

  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

  std::string str() const {
    std::string out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out.push_back((*this)[i] ? '1' : '0');
    return out;
  }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;
};

}  // namespace genbit

#endif  // GENBIT_BITSTRING_HPP
