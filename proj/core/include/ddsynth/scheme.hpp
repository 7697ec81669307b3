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
#include <string>
#include <string_view>
#include <vector>

#include "ddsynth/linear_system.hpp"
#include "ddsynth/pauli.hpp"
#include "ddsynth/rational.hpp"

namespace ddsynth {

enum class OrderingPolicy {
    /// Columns by increasing basis index, identity first, repeats adjacent.
    Lexicographic,
    /// The column orders of the bundled reference schemes when the counts match one of
    /// them; lexicographic otherwise.
    Paper,
};

/// Accepts `lexicographic` and `paper`; throws std::invalid_argument otherwise.
OrderingPolicy parse_ordering_policy(std::string_view name);

/// An ordered decoupling sequence. `order` holds the frames g_0..g_{m-1}; `pulses` holds
/// p_0..p_m with g_k = p_k ... p_0 up to phase and the closing pulse returning the frame to
/// the identity. All stored strings have phase 0.
struct DecouplingScheme {
    int dim = 2;
    size_t num_sites = 0;
    CountVector counts;
    std::vector<PauliString> order;
    std::vector<PauliString> pulses;
    Rational scaling{1};

    std::uint64_t length() const { return order.size(); }
};

/// Throws std::invalid_argument for empty counts.
DecouplingScheme materialize(const CountVector &counts, OrderingPolicy policy = OrderingPolicy::Lexicographic);

/// Builds a scheme from an explicit frame order. Throws std::invalid_argument for an
/// empty order or mixed shapes.
DecouplingScheme scheme_from_order(std::vector<PauliString> order, Rational scaling);

/// p_0 = g_0, p_k = g_k g_{k-1}^dagger, p_m = g_{m-1}^dagger, phases discarded.
std::vector<PauliString> derive_pulses(const std::vector<PauliString> &order);

/// Running products p_k ... p_0 for k = 0..m, phases kept.
std::vector<PauliString> accumulate_frames(const std::vector<PauliString> &pulses);

/// Text form:
///
///     dim 2
///     sites 2
///     scaling 3/1
///     length 12
///     <N rows of m labels, one row per site>
///
/// Labels are Pauli digits for d = 2 and `j.k` otherwise. `length` is optional on input.
std::string serialize_scheme(const DecouplingScheme &scheme);

/// Throws ParseError on ragged rows, out-of-range labels, a length mismatch or a missing header.
DecouplingScheme parse_scheme(std::string_view text);

}  // namespace ddsynth
