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

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ddsynth/hamiltonian.hpp"
#include "ddsynth/pauli.hpp"
#include "ddsynth/rational.hpp"

namespace ddsynth {

/// One row of the system matrix: entry(col) = w^{conjugation_exponent(label, basis_from_index(col))}.
/// Columns follow basis_index ordering; column 0 is the identity.
struct SystemRow {
    PauliString label;
    std::vector<PhaseExponent> entries;

    std::complex<double> entry(std::uint64_t column) const;
    /// Sum of the row as a complex number (d^{2N} for the identity row, 0 otherwise).
    std::complex<double> sum() const;
};

/// Generated from the conjugation rule, never from a stored matrix.
SystemRow system_row(const PauliString &label);

/// Exponent of column `column` in the row of `label`, without building the row.
PhaseExponent system_entry(const PauliString &label, std::uint64_t column);

/// Real solution e of A_K e = r. For qubit targets with exact rational ratios the
/// exact values are carried along and `values` mirrors them.
struct SolutionVector {
    int dim = 2;
    size_t num_sites = 0;
    std::vector<double> values;
    std::optional<std::vector<Rational>> exact;

    bool is_exact() const { return exact.has_value(); }
    /// D = sum of entries.
    double scaling() const;
    std::optional<Rational> exact_scaling() const;
    double min_entry() const;
};

/// e_r = d^{-2N} A_K^dagger r before discarding the imaginary part.
std::vector<std::complex<double>> particular_solution_complex(const RatioVector &rv);

/// Real particular solution. Throws std::domain_error when the imaginary part exceeds
/// `imag_tolerance`, which only happens for non-Hermitian input.
SolutionVector particular_solution(const RatioVector &rv, double imag_tolerance = 1e-10);

/// Adds -min(e) to every entry when the minimum is negative (a multiple of the identity row).
SolutionVector shift_nonnegative(const SolutionVector &e);

/// Adds weight * row(label) + conj(weight) * row(-label) so the result stays real. For a
/// label that is its own partner the row is real and the weight must be real.
/// Throws std::invalid_argument when the label (or its partner) is in K.
SolutionVector add_homogeneous(const SolutionVector &e, const RatioVector &rv, const PauliString &label,
                               std::complex<double> weight);

/// Exact variant for qubit solutions: adds weight * row(label).
SolutionVector add_homogeneous(const SolutionVector &e, const RatioVector &rv, const PauliString &label,
                               const Rational &weight);

/// max_k |sum_j a_kj e_j - r_k|.
double residual(const RatioVector &rv, const SolutionVector &e);

/// Exact max-norm residual; nullopt unless both inputs are exact qubit data.
std::optional<Rational> exact_residual(const RatioVector &rv, const SolutionVector &e);

/// Integer pulse counts: c_j occurrences of basis column j, m = sum c_j, scaling D.
struct CountVector {
    int dim = 2;
    size_t num_sites = 0;
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t length = 0;
    Rational scaling{1};
    /// max_j |c_j / m - e_j / D|.
    double rounding_error = 0.0;

    std::uint64_t count(std::uint64_t column) const;
};

inline constexpr std::int64_t kDefaultMaxDenominator = 64;

/// Rounds e_j / D to best rational approximations with bounded denominator and scales by
/// their least common multiple. If the rounded fractions do not sum to one, m is taken as
/// the sum of the counts. An all-zero e becomes the uniform scheme over every basis string
/// with D = 1. Throws std::invalid_argument for max_denominator < 1 or a negative entry,
/// std::overflow_error when m would exceed `max_length`.
CountVector rationalize(const SolutionVector &e, std::int64_t max_denominator = kDefaultMaxDenominator,
                        std::uint64_t max_length = std::uint64_t{1} << 32);

/// A_K as CSV: header `label,<column labels>`, entries rendered as `re+imj`.
std::string dump_system_csv(const RatioVector &rv);

}  // namespace ddsynth
