// Copyright 2026 The ddsynth Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ddsynth::cli {

enum ExitCode : int {
    kPass = 0,
    kVerifyFailed = 1,
    kUnsolvable = 2,
    kInputError = 3,
};

/// Runs `ddsynth <subcommand> ...`. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Parses `a..b` (inclusive) or a comma list. Values below 1 are dropped, so `0..0` is empty.
/// Throws std::invalid_argument for malformed text or a reversed range.
std::vector<std::uint64_t> parse_n_range(const std::string &text);

/// Comma-separated finite non-negative doubles.
std::vector<double> parse_lambda_list(const std::string &text);

}  // namespace ddsynth::cli
