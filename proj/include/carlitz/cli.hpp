// Copyright 2026 The carlitz-jets Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch front end. Subcommands: density, tensor, omega-verify, omega-dump,
// rep, torsion-level, zariski.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "carlitz/galois_density.hpp"

namespace carlitz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;       // a verification reported FAIL
inline constexpr int kExitBudget = 2;     // budget or precision exhausted
inline constexpr int kExitMismatch = 3;   // brute/formula disagreement
inline constexpr int kExitUsage = 64;     // bad flags or unparsable input

inline constexpr unsigned long long kDefaultSeed = 20210204;

/// Writes the table as csv or json to `out_path` (stdout when empty) and
/// maps the cross-check outcome to an exit code; the first mismatching N
/// goes to `err`.
int write_table(const ImageTable& table, const std::string& format,
                const std::string& out_path, std::ostream& out,
                std::ostream& err);

/// Runs one invocation; `args` excludes the program name. Field specs are
/// resolved against the built-ins and the file named by CARLITZ_CONFIG.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace carlitz::cli
