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

#ifndef GENBIT_SEQUENCE_HPP
#define GENBIT_SEQUENCE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genbit/codebook.hpp"
#include "genbit/error.hpp"

namespace genbit {

/// A validated run of bases. Construction from text accepts only lowercase
/// a/g/c/t; use ingest::normalize for anything looser.
class NucleotideSequence {
 public:
  NucleotideSequence() = default;
  explicit NucleotideSequence(std::vector<Base> bases) : bases_(std::move(bases)) {}

  static NucleotideSequence from_string(std::string_view text) {
    std::vector<Base> bases;
    bases.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      auto b = base_from_symbol(text[i]);
      if (!b) {
        throw Error(ErrorKind::InvalidBase,
                    std::string("'") + text[i] + "' at offset " + std::to_string(i));
      }
      bases.push_back(*b);
    }
    return NucleotideSequence(std::move(bases));
  }

  std::size_t size() const noexcept { return bases_.size(); }
  bool empty() const noexcept { return bases_.empty(); }
  Base operator[](std::size_t i) const noexcept { return bases_[i]; }
  std::span<const Base> bases() const noexcept { return bases_; }

  void push_back(Base b) { bases_.push_back(b); }
  void reserve(std::size_t n) { bases_.reserve(n); }

  std::string str() const {
    std::string out(bases_.size(), ' ');
    for (std::size_t i = 0; i < bases_.size(); ++i) out[i] = symbol(bases_[i]);
    return out;
  }

  friend bool operator==(const NucleotideSequence&, const NucleotideSequence&) = default;

 private:
  std::vector<Base> bases_;
};

}  // namespace genbit

#endif  // GENBIT_SEQUENCE_HPP
