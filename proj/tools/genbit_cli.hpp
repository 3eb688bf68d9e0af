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

#ifndef GENBIT_TOOLS_GENBIT_CLI_HPP
#define GENBIT_TOOLS_GENBIT_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "genbit/genbit.hpp"
#include "json.hpp"

namespace genbit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitUsage = 2;

/// Standard streams for one invocation; '-' paths resolve to these.
struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Raised for flag combinations that are only detectable after reading input.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_all(const std::string& path, Io& io) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("IOError: cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline void write_all(const std::string& path, std::string_view data, Io& io) {
  if (path == "-") {
    io.out.write(data.data(), static_cast<std::streamsize>(data.size()));
    io.out.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("IOError: cannot open '" + path + "' for writing");
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!f) throw std::runtime_error("IOError: write to '" + path + "' failed");
}

inline void check_readable(const std::string& path) {
  if (path == "-") return;
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw std::runtime_error("IOError: input '" + path + "' is not a readable file");
  }
}

inline void check_writable_parent(const std::string& path) {
  if (path == "-") return;
  const auto parent = std::filesystem::absolute(path).parent_path();
  std::error_code ec;
  if (!std::filesystem::is_directory(parent, ec)) {
    throw std::runtime_error("IOError: output directory '" + parent.string() + "' does not exist");
  }
}

inline NormalizationPolicy parse_policy(const std::string& text) {
  if (text == "strict") return NormalizationPolicy::strict();
  if (text == "skip") return NormalizationPolicy::skip();
  constexpr std::string_view prefix = "substitute=";
  if (text.rfind(prefix, 0) == 0 && text.size() == prefix.size() + 1) {
    const char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(text.back())));
    if (auto b = base_from_symbol(ch)) return NormalizationPolicy::substitute_with(*b);
  }
  throw CLI::ValidationError("--policy", "expected strict, skip or substitute=<a|c|g|t>, got '" +
                                             text + "'");
}

struct InputRecord {
  std::string id;
  NucleotideSequence sequence;
};

inline std::vector<InputRecord> load_records(const std::string& text, const std::string& format,
                                             const NormalizationPolicy& policy) {
  std::vector<InputRecord> records;
  if (format == "raw") {
    records.push_back({"", normalize(text, policy)});
    return records;
  }
  for (auto& rec : parse_fasta(text)) {
    records.push_back({rec.id, normalize(rec.sequence_text, policy)});
  }
  if (records.empty()) records.push_back({"", {}});
  return records;
}

inline std::string stats_line(const NucleotideSequence& s) {
  std::ostringstream os;
  if (s.empty()) {
    os << "n=0 tau=0 upsilon=0 bits=0 rate=undefined";
    return os.str();
  }
  const CompressionStats st = measure(s);
  os << "n=" << st.n << " tau=" << st.tau << " upsilon=" << st.upsilon
     << " bits=" << st.total_bits << " rate=" << format_rate(st.rate);
  return os.str();
}

inline std::string envelope_suffix(std::uint64_t n) {
  const ScenarioEnvelope env = envelope_for(n);
  std::string out = " best=" + (env.best ? format_rate(*env.best) : std::string("-"));
  if (env.average) out += " average=" + format_rate(*env.average);
  out += " worst=" + format_rate(env.worst);
  return out;
}

/// "reads.gbc" -> "reads.2.gbc" for the second record.
inline std::string numbered_path(const std::string& path, std::size_t index) {
  std::filesystem::path p(path);
  std::filesystem::path numbered = p.parent_path() / p.stem();
  numbered += "." + std::to_string(index) + p.extension().string();
  return numbered.string();
}

inline std::string fasta_wrap(const std::string& id, const std::string& bases) {
  constexpr std::size_t kWidth = 70;
  std::string out = ">" + id + "\n";
  for (std::size_t i = 0; i < bases.size(); i += kWidth) {
    out.append(bases, i, kWidth);
    out.push_back('\n');
  }
  return out;
}

}  // namespace detail

struct EncodeArgs {
  std::string input = "-";
  std::string output = "-";
  std::string format = "fasta";
  std::string policy = "strict";
};

inline int cmd_encode(const EncodeArgs& a, Io& io) {
  detail::check_readable(a.input);
  detail::check_writable_parent(a.output);
  const NormalizationPolicy policy = detail::parse_policy(a.policy);
  const auto records = detail::load_records(detail::read_all(a.input, io), a.format, policy);
  if (records.size() > 1 && a.output == "-") {
    throw UsageError("multi-record input cannot be encoded to standard output");
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    const auto bytes = write_container(rec.sequence.size(), encode(rec.sequence));
    const std::string path =
        records.size() == 1 ? a.output : detail::numbered_path(a.output, i + 1);
    detail::write_all(path, {reinterpret_cast<const char*>(bytes.data()), bytes.size()}, io);
    io.err << (rec.id.empty() ? "" : rec.id + " ") << detail::stats_line(rec.sequence) << '\n';
  }
  return kExitOk;
}

struct DecodeArgs {
  std::string input = "-";
  std::string output = "-";
  std::string format = "raw";
  std::string id = "decoded";
};

inline int cmd_decode(const DecodeArgs& a, Io& io) {
  detail::check_readable(a.input);
  detail::check_writable_parent(a.output);
  const std::string data = detail::read_all(a.input, io);
  const auto* first = reinterpret_cast<const std::uint8_t*>(data.data());
  const DecodedContainer framed = read_container({first, data.size()});
  const std::string bases = decode(framed.bits, framed.n).str();
  detail::write_all(a.output, a.format == "fasta" ? detail::fasta_wrap(a.id, bases) : bases, io);
  return kExitOk;
}

struct StatsArgs {
  std::string input = "-";
  std::string format = "fasta";
  std::string policy = "strict";
  bool json = false;
};

inline int cmd_stats(const StatsArgs& a, Io& io) {
  detail::check_readable(a.input);
  const NormalizationPolicy policy = detail::parse_policy(a.policy);
  const auto records = detail::load_records(detail::read_all(a.input, io), a.format, policy);
  for (const auto& rec : records) {
    if (rec.sequence.empty()) {
      throw Error(ErrorKind::UndefinedRate,
                  "record '" + rec.id + "' is empty; rate is undefined");
    }
  }
  if (a.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& rec : records) {
      nlohmann::json j = stats_json(measure(rec.sequence));
      j["id"] = rec.id;
      j["rate_text"] = format_rate(j["rate"].get<double>());
      j["envelope"] = envelope_json(envelope_for(rec.sequence.size()));
      list.push_back(std::move(j));
    }
    io.out << nlohmann::json{{"records", std::move(list)}}.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& rec : records) {
    io.out << (rec.id.empty() ? "" : "id=" + rec.id + " ") << detail::stats_line(rec.sequence)
           << detail::envelope_suffix(rec.sequence.size()) << '\n';
  }
  return kExitOk;
}

struct BenchArgs {
  BenchConfig config{1000, 0.0, 1, 1};
  bool json = false;
};

inline int cmd_bench(const BenchArgs& a, Io& io) {
  if (a.config.length == 0) {
    throw CLI::ValidationError("--length", "bench needs a positive length to report a rate");
  }
  const BenchReport report = run_corpus(synthetic_corpus(a.config));
  if (a.json) {
    nlohmann::json j = report_json(report);
    j["config"] = {{"length", a.config.length},
                   {"density", a.config.repeat_density},
                   {"seed", a.config.seed},
                   {"trials", a.config.trials}};
    io.out << j.dump(2) << '\n';
  } else {
    io.out << render_table(report);
  }
  return kExitOk;
}

inline int cmd_selftest(const SelftestOptions& opt, Io& io) {
  bool all_ok = true;
  for (const auto& r : run_selftest(opt)) {
    io.out << r.name << " ... " << (r.ok ? "ok" : "FAILED") << " (" << r.detail << ")\n";
    if (!r.ok) {
      io.err << "selftest failed: " << r.name << '\n';
      all_ok = false;
    }
  }
  return all_ok ? kExitOk : kExitData;
}

/// Parses argv and dispatches. Returns the process exit status.
inline int run(int argc, const char* const* argv, Io io) {
  CLI::App app{"GenBit DNA sequence compressor", "genbit"};
  app.require_subcommand(1);

  const std::vector<std::string> seq_formats{"fasta", "raw"};

  EncodeArgs enc;
  auto* encode_cmd = app.add_subcommand("encode", "Compress sequences into GBC1 containers");
  encode_cmd->add_option("input", enc.input, "Sequence file, '-' for stdin");
  encode_cmd->add_option("output", enc.output,
                         "Container path, '-' for stdout; multi-record input writes NAME.<i>.EXT");
  encode_cmd->add_option("--format", enc.format)->check(CLI::IsMember(seq_formats));
  encode_cmd->add_option("--policy", enc.policy, "strict | skip | substitute=<base>");

  DecodeArgs dec;
  auto* decode_cmd = app.add_subcommand("decode", "Restore a sequence from a GBC1 container");
  decode_cmd->add_option("input", dec.input, "Container file, '-' for stdin");
  decode_cmd->add_option("output", dec.output, "Sequence path, '-' for stdout");
  decode_cmd->add_option("--format", dec.format)->check(CLI::IsMember(seq_formats));
  decode_cmd->add_option("--id", dec.id, "FASTA header used with --format fasta");

  StatsArgs st;
  auto* stats_cmd = app.add_subcommand("stats", "Report bits per base for each sequence");
  stats_cmd->add_option("input", st.input, "Sequence file, '-' for stdin");
  stats_cmd->add_option("--format", st.format)->check(CLI::IsMember(seq_formats));
  stats_cmd->add_option("--policy", st.policy, "strict | skip | substitute=<base>");
  stats_cmd->add_flag("--json", st.json);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Measure synthetic corpora");
  bench_cmd->add_option("--length", bench.config.length)->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--density", bench.config.repeat_density)->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--seed", bench.config.seed);
  bench_cmd->add_option("--trials", bench.config.trials)->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--json", bench.json);

  SelftestOptions self;
  std::string fault;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run built-in consistency checks");
  selftest_cmd->add_option("--inject-fault", fault)
      ->check(CLI::IsMember({"codebook"}))
      ->group("");

  try {
    app.parse(argc, argv);
    self.corrupt_codebook = fault == "codebook";
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (encode_cmd->parsed()) return cmd_encode(enc, io);
    if (decode_cmd->parsed()) return cmd_decode(dec, io);
    if (stats_cmd->parsed()) return cmd_stats(st, io);
    if (bench_cmd->parsed()) return cmd_bench(bench, io);
    return cmd_selftest(self, io);
  } catch (const CLI::ValidationError& e) {
    io.err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    io.err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace genbit::cli

#endif  // GENBIT_TOOLS_GENBIT_CLI_HPP
