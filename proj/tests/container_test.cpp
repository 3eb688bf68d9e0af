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

#include "genbit/container.hpp"

#include <random>
#include <vector>

#include "genbit/codec.hpp"
#include "gtest/gtest.h"

namespace genbit {
namespace {

using Bytes = std::vector<std::uint8_t>;

ErrorKind read_error(const Bytes& bytes) {
  try {
    read_container(bytes);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "container was accepted";
  return ErrorKind::InvalidArgument;
}

Bytes header(std::uint64_t n) {
  Bytes h = {'G', 'B', 'C', '1', 0x01};
  for (int shift = 56; shift >= 0; shift -= 8) h.push_back(static_cast<std::uint8_t>(n >> shift));
  return h;
}

TEST(PackTest, Examples) {
  EXPECT_EQ(pack_bits(BitString::from_string("000000001")), (Bytes{0x00, 0x80}));
  EXPECT_EQ(pack_bits(BitString{}), Bytes{});
  EXPECT_EQ(pack_bits(BitString::from_string("1111")), Bytes{0xF0});
}

TEST(UnpackTest, Examples) {
  EXPECT_EQ(unpack_bits(Bytes{0x00, 0x80}, 9).str(), "000000001");
  EXPECT_EQ(unpack_bits(Bytes{}, 0).str(), "");
  try {
    unpack_bits(Bytes{0x00, 0x81}, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CorruptStream);
  }
}

TEST(UnpackTest, BitCountOutOfBounds) {
  for (std::size_t count : {0u, 8u, 17u}) {
    try {
      unpack_bits(Bytes{0x00, 0x80}, count);
      FAIL() << count;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::FramingError);
    }
  }
  EXPECT_THROW(unpack_bits(Bytes{}, 1), Error);
}

TEST(PackPropertyTest, RoundTrip) {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    BitString bits;
    const std::size_t len = rng() % 200;
    for (std::size_t i = 0; i < len; ++i) bits.push_back(rng() & 1u);
    const Bytes packed = pack_bits(bits);
    EXPECT_EQ(packed.size(), (len + 7) / 8);
    EXPECT_EQ(unpack_bits(packed, len), bits);
  }
}

TEST(ContainerTest, WriteExamples) {
  EXPECT_EQ(write_container(0, BitString{}),
            (Bytes{0x47, 0x42, 0x43, 0x31, 0x01, 0, 0, 0, 0, 0, 0, 0, 0}));

  Bytes eight = header(8);
  eight.insert(eight.end(), {0x00, 0x80});
  EXPECT_EQ(write_container(8, BitString::from_string("000000001")), eight);

  Bytes one = header(1);
  one.push_back(0xC0);
  EXPECT_EQ(write_container(1, BitString::from_string("11")), one);
}

TEST(ContainerTest, BigEndianCount) {
  const Bytes h = write_container(0x0102030405060708ull, BitString{});
  EXPECT_EQ(Bytes(h.begin() + 5, h.end()), (Bytes{1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(ContainerTest, ReadErrors) {
  EXPECT_EQ(read_error({'X', 'X', 'X', 'X', 1, 0, 0, 0, 0, 0, 0, 0, 0}), ErrorKind::BadMagic);
  EXPECT_EQ(read_error({'G', 'B'}), ErrorKind::TruncatedFile);
  EXPECT_EQ(read_error({'G', 'B', 'C', '1', 1, 0}), ErrorKind::TruncatedFile);

  Bytes v2 = header(0);
  v2[4] = 0x02;
  EXPECT_EQ(read_error(v2), ErrorKind::UnsupportedVersion);

  Bytes cut = header(8);
  cut.push_back(0x00);
  EXPECT_EQ(read_error(cut), ErrorKind::TruncatedFile);

  Bytes padded = header(8);
  padded.insert(padded.end(), {0x00, 0x81});
  EXPECT_EQ(read_error(padded), ErrorKind::CorruptStream);

  Bytes extra = header(8);
  extra.insert(extra.end(), {0x00, 0x80, 0x00});
  EXPECT_EQ(read_error(extra), ErrorKind::CorruptStream);

  // Flag-1 token claims 8 bases, header says 4.
  Bytes overshoot = header(4);
  overshoot.insert(overshoot.end(), {0x00, 0x80});
  EXPECT_EQ(read_error(overshoot), ErrorKind::CorruptStream);
}

TEST(ContainerPropertyTest, RoundTripAndSize) {
  std::mt19937 rng(29);
  for (int iter = 0; iter < 500; ++iter) {
    const std::size_t n = rng() % 500;
    std::vector<Base> bases;
    const unsigned alphabet = 1 + iter % 4;
    for (std::size_t i = 0; i < n; ++i) bases.push_back(static_cast<Base>(rng() % alphabet));
    const NucleotideSequence s(std::move(bases));
    const TokenStream bits = encode(s);
    const Bytes file = write_container(n, bits);
    EXPECT_EQ(file.size(), kContainerHeaderSize + (bits.size() + 7) / 8);
    const DecodedContainer back = read_container(file);
    EXPECT_EQ(back.n, n);
    EXPECT_EQ(back.bits, bits);
    EXPECT_EQ(decode(back.bits, back.n), s);
  }
}

}  // namespace
}  // namespace genbit
