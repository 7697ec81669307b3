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

#include "ddsynth/fixtures.hpp"

namespace ddsynth {

namespace {

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> out;

    out.push_back({
        "two-qubit",
        "eq14",
        "General two-qubit interaction protected from independent environments; the target "
        "keeps every two-body term and drops all single-qubit couplings.",
        R"(# Two qubits with a general two-body interaction h_ij s_i s_j and arbitrary
# couplings of each qubit to its own environment.
dim 2 sites 2
term 11 1 0
term 12 0.25 0
term 13 -0.5 0
term 21 0.25 0
term 22 0.75 0
term 23 0.125 0
term 31 -0.5 0
term 32 0.125 0
term 33 1.5 0
envterm 10
envterm 20
envterm 30
envterm 01
envterm 02
envterm 03
)",
        R"(dim 2 sites 2
term 11 1 0
term 12 0.25 0
term 13 -0.5 0
term 21 0.25 0
term 22 0.75 0
term 23 0.125 0
term 31 -0.5 0
term 32 0.125 0
term 33 1.5 0
)",
        R"(dim 2
sites 2
scaling 3/1
length 12
0 0 0 1 1 1 2 2 2 3 3 3
0 0 0 1 2 3 1 2 3 1 2 3
)",
    });

    out.push_back({
        "swap",
        "eq17",
        "Heisenberg exchange (sqrt-SWAP generator) with each qubit coupled to an oscillator "
        "through sigma_plus/sigma_minus; only sigma_1 and sigma_2 couplings to the environment.",
        R"(# Heisenberg exchange; the oscillator couplings involve sigma_1 and sigma_2 only.
dim 2 sites 2
term 11 1 0
term 22 1 0
term 33 1 0
envterm 10
envterm 20
envterm 01
envterm 02
)",
        R"(dim 2 sites 2
term 11 1 0
term 22 1 0
term 33 1 0
)",
        R"(dim 2
sites 2
scaling 1/1
length 4
0 1 3 2
0 1 3 2
)",
    });

    out.push_back({
        "square",
        "square",
        "Closed four-qubit chain with ZZ couplings on every pair; both diagonal couplings are removed.",
        R"(# ZZ couplings on the square 1-2-3-4-1 plus both diagonals.
dim 2 sites 4
term 3300 1 0
term 0330 0.9 0
term 0033 1.1 0
term 3003 0.8 0
term 3030 0.5 0
term 0303 0.4 0
)",
        R"(dim 2 sites 4
term 3300 1 0
term 0330 0.9 0
term 0033 1.1 0
term 3003 0.8 0
)",
        R"(dim 2
sites 4
scaling 2/1
length 4
0 0 1 0
0 0 1 1
0 0 0 1
0 0 0 0
)",
    });

    out.push_back({
        "chain",
        "chain",
        "Open four-qubit XX+YY chain; the two outer couplings are halved while the inner one is kept.",
        R"(# Nearest-neighbour XX + YY couplings with J = 1.
dim 2 sites 4
term 1100 1 0
term 2200 1 0
term 0110 1 0
term 0220 1 0
term 0011 1 0
term 0022 1 0
)",
        R"(dim 2 sites 4
term 1100 0.5 0
term 2200 0.5 0
term 0110 1 0
term 0220 1 0
term 0011 0.5 0
term 0022 0.5 0
)",
        R"(dim 2
sites 4
scaling 1/1
length 4
0 0 0 0
0 0 0 3
0 0 0 3
0 0 0 0
)",
    });
    return out;
}

}  // namespace

const std::vector<Fixture> &reference_fixtures() {
    static const std::vector<Fixture> fixtures = build_fixtures();
    return fixtures;
}

const Fixture *find_fixture(const std::string &name) {
    for (const auto &f : reference_fixtures()) {
        if (f.name == name || f.scheme_id == name) {
            return &f;
        }
    }
    return nullptr;
}

}  // namespace ddsynth
