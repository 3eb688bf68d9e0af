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

#ifndef GENBIT_GENBIT_HPP
#define GENBIT_GENBIT_HPP

#include "genbit/bench.hpp"
#include "genbit/bitstring.hpp"
#include "genbit/codebook.hpp"
#include "genbit/codec.hpp"
#include "genbit/container.hpp"
#include "genbit/error.hpp"
#include "genbit/ingest.hpp"
#include "genbit/metrics.hpp"
#include "genbit/selftest.hpp"
#include "genbit/sequence.hpp"

#endif  // GENBIT_GENBIT_HPP
