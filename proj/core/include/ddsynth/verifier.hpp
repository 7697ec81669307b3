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
#include <optional>
#include <string>
#include <vector>

#include "ddsynth/dense.hpp"
#include "ddsynth/hamiltonian.hpp"
#include "ddsynth/scheme.hpp"

namespace ddsynth {

/// Coefficient of one label in the first-order average (1/m) sum_i g_i^dagger H g_i.
struct FirstOrderTerm {
    PauliString label;
    bool env_coupled = false;
    std::complex<double> coefficient;
    std::complex<double> average;
    /// Set when H is qubit data with an exact coefficient.
    std::optional<GaussianRational> exact_average;
};

/// average_k = mu_k (1/m) sum_i w^{conjugation_exponent(k, g_i)}, one entry per term of H.
std::vector<FirstOrderTerm> first_order_average(const HamiltonianSpec &h, const DecouplingScheme &scheme);

struct LabelReport {
    PauliString label;
    bool env_coupled = false;
    /// Present in the target but not in H.
    bool unreachable = false;
    std::complex<double> target;
    /// D times the first-order average.
    std::complex<double> achieved;
    double deviation = 0.0;
};

struct AverageReport {
    std::vector<LabelReport> labels;
    double max_deviation = 0.0;
    double max_env_residual = 0.0;
    double tolerance = 0.0;
    /// Deviations were computed in exact rational arithmetic.
    bool exact = false;
    bool pass = false;
};

inline constexpr double kDefaultFloatingTolerance = 1e-9;

/// Checks (1/m) sum g_i^dagger H g_i = H_id / D label by label. Without an explicit
/// tolerance, exact inputs are held to 0 and floating ones to kDefaultFloatingTolerance.
AverageReport check_decoupling(const HamiltonianSpec &h, const HamiltonianSpec &target,
                               const DecouplingScheme &scheme, std::optional<double> tolerance = std::nullopt);

enum class EnvironmentMode {
    /// Environment-coupled terms are left out.
    SystemOnly,
    /// Each environment-coupled term acts on its own two-level dummy environment through Z.
    DummyQubits,
};

/// Dense H on system (x) dummy environment, from the raw coefficients.
DenseMatrix dense_hamiltonian(const HamiltonianSpec &h, EnvironmentMode mode);

/// Independent oracle: conjugates the dense H by the dense frame matrices and averages.
/// Throws std::length_error when d^N > 256 or the total dimension exceeds 1024.
DenseMatrix dense_oracle_average(const HamiltonianSpec &h, const DecouplingScheme &scheme,
                                 EnvironmentMode mode = EnvironmentMode::DummyQubits);

/// Reassembles symbolic averages into the dense operator the oracle produces.
DenseMatrix dense_from_average(const HamiltonianSpec &h, const std::vector<FirstOrderTerm> &terms,
                               EnvironmentMode mode = EnvironmentMode::DummyQubits);

std::string render_report_table(const AverageReport &report);

/// Columns `label,target,achieved,deviation`; complex values as `re+imj`.
std::string render_report_csv(const AverageReport &report);

}  // namespace ddsynth
