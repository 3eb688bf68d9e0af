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

#ifndef GENBIT_INGEST_HPP
#define GENBIT_INGEST_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "genbit/codebook.hpp"
#include "genbit/error.hpp"
#include "genbit/sequence.hpp"

namespace genbit {

struct FastaRecord {
  std::string id;
  std::string description;
  std::string sequence_text;

  friend bool operator==(const FastaRecord&, const FastaRecord&) = default;
};

/// How letters outside {a,c,g,t} are treated by normalize().
struct NormalizationPolicy {
  enum class Mode { Strict, Skip, Substitute };
  Mode mode = Mode::Strict;
  Base substitute = Base::a;

  static NormalizationPolicy strict() { return {}; }
  static NormalizationPolicy skip() { return {Mode::Skip, Base::a}; }
  static NormalizationPolicy substitute_with(Base b) { return {Mode::Substitute, b}; }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline void append_body(std::string& dst, std::string_view line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) dst.push_back(c);
  }
}

}  // namespace detail

/// One record per '>' header. Text without any header becomes a single record
/// with empty id; whitespace-only text yields no records.
inline std::vector<FastaRecord> parse_fasta(std::string_view text) {
  std::vector<FastaRecord> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const std::string_view trimmed = detail::trim(line);
    if (!trimmed.empty() && trimmed.front() == '>') {
      std::string_view header = detail::trim(trimmed.substr(1));
      const std::size_t split = header.find_first_of(" \t");
      FastaRecord rec;
      rec.id = std::string(header.substr(0, split));
      if (split != std::string_view::npos) {
        rec.description = std::string(detail::trim(header.substr(split)));
      }
      if (rec.id.empty()) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line_no) + ": header has an empty id");
      }
      records.push_back(std::move(rec));
      continue;
    }
    if (trimmed.empty()) continue;
    if (records.empty()) {
      records.emplace_back();
    }
    detail::append_body(records.back().sequence_text, trimmed);
  }
  return records;
}

/// Case-folds, drops whitespace and digits, then applies the policy to every
/// remaining character that is not a/c/g/t. Offsets in errors index `text`.
inline NucleotideSequence normalize(std::string_view text,
                                    const NormalizationPolicy& policy = {}) {
  NucleotideSequence out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto uc = static_cast<unsigned char>(text[i]);
    if (std::isspace(uc) || std::isdigit(uc)) continue;
    if (auto b = base_from_symbol(static_cast<char>(std::tolower(uc)))) {
      out.push_back(*b);
      continue;
    }
    switch (policy.mode) {
      case NormalizationPolicy::Mode::Strict:
        throw Error(ErrorKind::InvalidBase,
                    std::string("'") + text[i] + "' at offset " + std::to_string(i));
      case NormalizationPolicy::Mode::Skip:
        break;
      case NormalizationPolicy::Mode::Substitute:
        out.push_back(policy.substitute);
        break;
    }
  }
  return out;
}

}  // namespace genbit

#endif  // GENBIT_INGEST_HPP
