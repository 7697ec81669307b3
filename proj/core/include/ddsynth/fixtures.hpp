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

#include <string>
#include <vector>

namespace ddsynth {

/// One of the bundled reference problems: Hamiltonian, target and its reference scheme.
struct Fixture {
    std::string name;
    std::string scheme_id;
    std::string description;
    std::string hamiltonian;
    std::string target;
    std::string scheme;
};

/// two-qubit, swap, square, chain (in that order).
const std::vector<Fixture> &reference_fixtures();

/// Looks up by fixture name or scheme id (`eq14`, `eq17`, `square`, `chain`); nullptr if unknown.
const Fixture *find_fixture(const std::string &name);

}  // namespace ddsynth
