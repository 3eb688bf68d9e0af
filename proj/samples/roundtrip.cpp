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

// Encodes a sequence given on the command line, prints the token stream and
// its size, then decodes it back.
//
//   roundtrip_sample agctaaaatt

#include <iostream>

#include "genbit/genbit.hpp"

int main(int argc, char** argv) {
  const char* text = argc > 1 ? argv[1] : "agctaaaatt";
  try {
    const auto seq = genbit::normalize(text);
    const auto bits = genbit::encode(seq);
    std::cout << "bases   " << seq.str() << '\n'
              << "tokens  " << bits.str() << '\n'
              << "bits    " << bits.size() << '\n';
    if (!seq.empty()) {
      std::cout << "rate    " << genbit::format_rate(genbit::measure(seq).rate) << " bits/base\n";
    }
    const auto back = genbit::decode(bits, seq.size());
    std::cout << "decoded " << back.str() << (back == seq ? "  (match)" : "  (MISMATCH)") << '\n';
    return back == seq ? 0 : 1;
  } catch (const genbit::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
