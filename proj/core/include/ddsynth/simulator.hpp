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
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ddsynth/dense.hpp"
#include "ddsynth/hamiltonian.hpp"
#include "ddsynth/scheme.hpp"

namespace ddsynth {

inline constexpr double kDefaultGateTime = std::numbers::pi / 8.0;
inline constexpr int kDefaultFockDim = 8;

/// A dense system (x) environment model. Joint index = system * env_dim + environment.
struct SimulationModel {
    DenseMatrix hamiltonian;
    /// The Hamiltonian whose evolution the pulses should reproduce, on the system alone.
    DenseMatrix ideal;
    Eigen::Index env_dim = 1;
};

/// Two qubits with Heisenberg exchange, each coupled to its own truncated oscillator:
/// H = sum_i s_i s_i + lambda (s+ a + s- a^dagger + s+ b + s- b^dagger) on 2 (x) 2 (x) fock (x) fock.
/// Throws std::invalid_argument for fock_dim < 2.
SimulationModel build_oscillator_model(double lambda, int fock_dim = kDefaultFockDim);

/// A model from the text formats: system terms as given, each environment-coupled term
/// scaled by lambda and attached to its own dummy qubit through Z. The ideal evolution
/// is the target on the system.
SimulationModel build_generic_model(const HamiltonianSpec &h, const HamiltonianSpec &target, double lambda);

/// D tau / (m n).
double pulse_interval(const DecouplingScheme &scheme, std::uint64_t n, double tau);

/// Caches the eigendecomposition of a Hermitian H so that e^{-iHt} is cheap for any t.
/// Throws std::invalid_argument when H is not square or not Hermitian.
class PulsedEvolution {
   public:
    PulsedEvolution(DenseMatrix hamiltonian, Eigen::Index env_dim);

    Eigen::Index dim() const { return eigenvalues_.size(); }
    Eigen::Index env_dim() const { return env_dim_; }

    DenseMatrix propagator(double t) const;

    /// p_m e^{-iH dt} p_{m-1} ... p_1 e^{-iH dt} p_0, repeated n times, dt = pulse_interval.
    DenseMatrix unitary(const DecouplingScheme &scheme, std::uint64_t n, double tau) const;

    /// The same product applied to a joint state without forming the unitary.
    DenseVector evolve(const DenseVector &state, const DecouplingScheme &scheme, std::uint64_t n,
                       double tau) const;

    /// e^{-iHt} applied to a joint state.
    DenseVector evolve_free(const DenseVector &state, double t) const;

   private:
    void apply_system_operator(DenseVector &state, const DenseMatrix &op) const;

    Eigen::VectorXd eigenvalues_;
    DenseMatrix eigenvectors_;
    Eigen::Index env_dim_;
};

/// <ideal| Tr_env |joint><joint| |ideal>. Throws std::invalid_argument for unnormalized inputs
/// or a joint dimension that is not a multiple of the system dimension.
double fidelity(const DenseVector &joint, const DenseVector &ideal_system, double tolerance = 1e-9);

/// |01> for the two-qubit model.
DenseVector default_initial_state();

struct SimulationConfig {
    double lambda = 0.0;
    double tau = kDefaultGateTime;
    std::uint64_t n = 1;
    int fock_dim = kDefaultFockDim;
    /// System state; empty means default_initial_state().
    DenseVector initial_state;
    std::optional<DecouplingScheme> scheme;
    std::string scheme_id;
    bool use_decoupling = true;
};

struct FidelityResult {
    double lambda = 0.0;
    std::uint64_t n = 0;
    double dt = 0.0;
    double fidelity = 0.0;
    std::string scheme_id;
};

/// Runs one configuration on the two-qubit oscillator model.
FidelityResult simulate(const SimulationConfig &config);

/// Runs one configuration on a prepared model. Without decoupling the model evolves
/// freely for tau and dt = tau.
FidelityResult simulate(const SimulationModel &model, const SimulationConfig &config);

struct SweepGrid {
    std::vector<double> lambdas;
    std::vector<std::uint64_t> ns;
    SimulationConfig base;
    /// Builds the model for one lambda; defaults to the two-qubit oscillator model.
    std::function<SimulationModel(double)> model;
    bool parallel = true;
};

/// One result per (lambda, n), sorted by lambda then n. Throws std::invalid_argument for n = 0.
std::vector<FidelityResult> sweep(const SweepGrid &grid);

/// `lambda,n,dt,fidelity,scheme_id` with %.17g numbers.
std::string render_sweep_csv(const std::vector<FidelityResult> &rows);

}  // namespace ddsynth
