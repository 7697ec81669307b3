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

#include <random>

#include <gtest/gtest.h>

#include "ddsynth/fixtures.hpp"
#include "ddsynth/hamiltonian.hpp"
#include "ddsynth/scheme.hpp"

namespace ddsynth {
namespace {

std::vector<std::string> digits(const std::vector<PauliString> &strings) {
    std::vector<std::string> out;
    for (const auto &s : strings) {
        out.push_back(to_pauli_digits(s));
    }
    return out;
}

CountVector counts_from(int d, size_t n, const std::vector<std::pair<std::string, std::uint64_t>> &entries,
                        Rational scaling) {
    CountVector c;
    c.dim = d;
    c.num_sites = n;
    c.scaling = scaling;
    for (const auto &[label, count] : entries) {
        c.counts[basis_index(parse_pauli_string(label, d))] = count;
        c.length += count;
    }
    return c;
}

TEST(Materialize, TwoQubitLexicographic) {
    const CountVector c = counts_from(
        2, 2, {{"00", 3}, {"11", 1}, {"12", 1}, {"13", 1}, {"21", 1}, {"22", 1}, {"23", 1}, {"31", 1}, {"32", 1}, {"33", 1}},
        Rational(3));
    const DecouplingScheme s = materialize(c);
    EXPECT_EQ(digits(s.order), (std::vector<std::string>{"00", "00", "00", "11", "12", "13", "21", "22", "23", "31",
                                                          "32", "33"}));
    EXPECT_EQ(serialize_scheme(s), find_fixture("eq14")->scheme);
}

TEST(Materialize, IdentityCounts) {
    const DecouplingScheme s = materialize(counts_from(2, 2, {{"00", 1}}, Rational(1)));
    EXPECT_EQ(s.length(), 1u);
    EXPECT_EQ(digits(s.pulses), (std::vector<std::string>{"00", "00"}));
}

TEST(Materialize, SwapSchemeUsesOnlySigmaOneAndTwoPulses) {
    const CountVector c = counts_from(2, 2, {{"00", 1}, {"11", 1}, {"33", 1}, {"22", 1}}, Rational(1));
    const DecouplingScheme s = materialize(c, OrderingPolicy::Paper);
    EXPECT_EQ(digits(s.order), (std::vector<std::string>{"00", "11", "33", "22"}));
    EXPECT_EQ(digits(s.pulses), (std::vector<std::string>{"00", "11", "22", "11", "22"}));
    for (const auto &p : s.pulses) {
        for (const auto &site : p.sites()) {
            EXPECT_NE(qubit_pauli_index(site), 3);
        }
    }
    // The lexicographic policy keeps the same multiset.
    const DecouplingScheme lex = materialize(c);
    EXPECT_EQ(digits(lex.order), (std::vector<std::string>{"00", "11", "22", "33"}));
    EXPECT_EQ(lex.counts.counts, s.counts.counts);
}

TEST(Materialize, ReferenceOrderingReproducesFixtureSchemes) {
    for (const auto &f : reference_fixtures()) {
        const DecouplingScheme printed = parse_scheme(f.scheme);
        const DecouplingScheme s = materialize(printed.counts, OrderingPolicy::Paper);
        EXPECT_EQ(serialize_scheme(s), f.scheme) << f.name;
    }
}

TEST(Materialize, EmptyCounts) {
    EXPECT_THROW(materialize(CountVector{}), std::invalid_argument);
}

TEST(Pulses, FramesRebuildOrder) {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 2 + trial % 3;
        const size_t n = 1 + static_cast<size_t>(trial % 3);
        std::uniform_int_distribution<std::uint64_t> pick(0, basis_size(d, n) - 1);
        std::vector<PauliString> order;
        for (int i = 0; i < 1 + trial % 7; ++i) {
            order.push_back(basis_from_index(pick(rng), d, n));
        }
        const DecouplingScheme s = scheme_from_order(order, Rational(1));
        const auto frames = accumulate_frames(s.pulses);
        ASSERT_EQ(frames.size(), order.size() + 1);
        for (size_t k = 0; k < order.size(); ++k) {
            EXPECT_TRUE(frames[k].same_basis(order[k]));
        }
        EXPECT_TRUE(frames.back().is_identity_basis());
        for (const auto &p : s.pulses) {
            EXPECT_EQ(p.phase().value(), 0);
        }
    }
}

TEST(SchemeText, ParsesPrintedTwoQubitScheme) {
    const DecouplingScheme s = parse_scheme(find_fixture("eq14")->scheme);
    EXPECT_EQ(s.length(), 12u);
    EXPECT_EQ(s.scaling, Rational(3));
}

TEST(SchemeText, SingleIdentityColumn) {
    const DecouplingScheme s = parse_scheme("dim 2\nsites 3\n0\n0\n0\n");
    EXPECT_EQ(s.length(), 1u);
    EXPECT_TRUE(s.order[0].is_identity_basis());
    EXPECT_EQ(s.scaling, Rational(1));
}

TEST(SchemeText, SquareScheme) {
    const DecouplingScheme s = parse_scheme(find_fixture("square")->scheme);
    EXPECT_EQ(s.length(), 4u);
    EXPECT_EQ(s.scaling, Rational(2));
    EXPECT_EQ(to_pauli_digits(s.order[2]), "1100");
    EXPECT_EQ(to_pauli_digits(s.order[3]), "0110");
}

TEST(SchemeText, RoundTrip) {
    for (const auto &f : reference_fixtures()) {
        EXPECT_EQ(serialize_scheme(parse_scheme(f.scheme)), f.scheme) << f.name;
    }
    const std::string qutrit = "dim 3\nsites 2\nscaling 5/2\nlength 3\n0.0 1.2 2.1\n0.0 0.1 1.0\n";
    EXPECT_EQ(serialize_scheme(parse_scheme(qutrit)), qutrit);
    const DecouplingScheme s = parse_scheme(qutrit);
    EXPECT_EQ(to_string(s.order[1]), "1.2x0.1");
}

TEST(SchemeText, Errors) {
    const std::vector<std::string> bad = {
        "dim 2\nsites 2\n0 1\n0\n",                // ragged
        "dim 2\nsites 2\n0 4\n0 1\n",              // label out of range
        "dim 2\nsites 2\nlength 3\n0 1\n0 1\n",    // length mismatch
        "sites 2\n0 1\n0 1\n",                     // missing dim
        "dim 2\n0 1\n",                            // missing sites
        "dim 2\nsites 2\n0 1\n",                   // too few rows
        "dim 2\nsites 1\n\n",                      // no columns
        "dim 2\nsites 1\nscaling 0/1\n0\n",        // zero scaling
        "dim 2\nsites 1\nscaling -1/2\n0\n",       // negative scaling
        "dim 3\nsites 1\n1.0x0.1\n",               // multi-site token
        "dim 2\nsites 1\n0\nlength 1\n",           // header after rows
    };
    for (const auto &text : bad) {
        EXPECT_THROW(parse_scheme(text), ParseError) << text;
    }
}

TEST(Ordering, PolicyNames) {
    EXPECT_EQ(parse_ordering_policy("paper"), OrderingPolicy::Paper);
    EXPECT_EQ(parse_ordering_policy("lexicographic"), OrderingPolicy::Lexicographic);
    EXPECT_THROW(parse_ordering_policy("random"), std::invalid_argument);
}

}  // namespace
}  // namespace ddsynth
