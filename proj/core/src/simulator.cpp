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

#include "ddsynth/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <Eigen/Eigenvalues>

#include "ddsynth/verifier.hpp"

namespace ddsynth {

namespace {

DenseMatrix pauli_matrix(int index) {
    DenseMatrix m = DenseMatrix::Zero(2, 2);
    switch (index) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

DenseMatrix annihilation(int fock_dim) {
    DenseMatrix a = DenseMatrix::Zero(fock_dim, fock_dim);
    for (int k = 1; k < fock_dim; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return a;
}

DenseMatrix kron_all(std::initializer_list<DenseMatrix> factors) {
    DenseMatrix out = DenseMatrix::Identity(1, 1);
    for (const auto &f : factors) {
        out = kron(out, f);
    }
    return out;
}

}  // namespace

SimulationModel build_oscillator_model(double lambda, int fock_dim) {
    if (fock_dim < 2) {
        throw std::invalid_argument("fock_dim must be at least 2");
    }
    const DenseMatrix id2 = DenseMatrix::Identity(2, 2);
    const DenseMatrix idf = DenseMatrix::Identity(fock_dim, fock_dim);
    const DenseMatrix a = annihilation(fock_dim);
    const DenseMatrix ad = a.adjoint();
    const DenseMatrix sp = (pauli_matrix(1) + Complex(0, 1) * pauli_matrix(2)) / 2.0;
    const DenseMatrix sm = (pauli_matrix(1) - Complex(0, 1) * pauli_matrix(2)) / 2.0;

    SimulationModel model;
    model.env_dim = static_cast<Eigen::Index>(fock_dim) * fock_dim;
    model.ideal = DenseMatrix::Zero(4, 4);
    for (int i = 1; i <= 3; ++i) {
        model.ideal += kron(pauli_matrix(i), pauli_matrix(i));
    }
    model.hamiltonian = kron(model.ideal, DenseMatrix::Identity(model.env_dim, model.env_dim));
    if (lambda != 0.0) {
        model.hamiltonian += lambda * (kron_all({sp, id2, a, idf}) + kron_all({sm, id2, ad, idf}) +
                                       kron_all({id2, sp, idf, a}) + kron_all({id2, sm, idf, ad}));
    }
    return model;
}

SimulationModel build_generic_model(const HamiltonianSpec &h, const HamiltonianSpec &target, double lambda) {
    if (h.dim() != target.dim() || h.num_sites() != target.num_sites()) {
        throw std::invalid_argument("H and the target have different shapes");
    }
    const DenseMatrix sys = dense_hamiltonian(h, EnvironmentMode::SystemOnly);
    const DenseMatrix full = dense_hamiltonian(h, EnvironmentMode::DummyQubits);
    SimulationModel model;
    model.env_dim = full.rows() / sys.rows();
    const DenseMatrix sys_part = kron(sys, DenseMatrix::Identity(model.env_dim, model.env_dim));
    model.hamiltonian = sys_part + lambda * (full - sys_part);
    model.ideal = dense_hamiltonian(target, EnvironmentMode::SystemOnly);
    return model;
}

double pulse_interval(const DecouplingScheme &scheme, std::uint64_t n, double tau) {
    if (n == 0 || scheme.order.empty()) {
        throw std::invalid_argument("pulse interval needs n >= 1 and a non-empty scheme");
    }
    const double m = static_cast<double>(scheme.order.size());
    return to_double(scheme.scaling) * tau / (m * static_cast<double>(n));
}

PulsedEvolution::PulsedEvolution(DenseMatrix hamiltonian, Eigen::Index env_dim) : env_dim_(env_dim) {
    if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() == 0) {
        throw std::invalid_argument("Hamiltonian must be a non-empty square matrix");
    }
    if (env_dim < 1 || hamiltonian.rows() % env_dim != 0) {
        throw std::invalid_argument("environment dimension does not divide the Hamiltonian dimension");
    }
    const double scale = std::max(1.0, hamiltonian.cwiseAbs().maxCoeff());
    if (max_abs_diff(hamiltonian, hamiltonian.adjoint()) > 1e-12 * scale) {
        throw std::invalid_argument("Hamiltonian is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(hamiltonian);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

DenseMatrix PulsedEvolution::propagator(double t) const {
    DenseVector phases(eigenvalues_.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        phases(i) = std::exp(Complex(0.0, -eigenvalues_(i) * t));
    }
    return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

DenseVector PulsedEvolution::evolve_free(const DenseVector &state, double t) const {
    DenseVector coeffs = eigenvectors_.adjoint() * state;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        coeffs(i) *= std::exp(Complex(0.0, -eigenvalues_(i) * t));
    }
    return eigenvectors_ * coeffs;
}

void PulsedEvolution::apply_system_operator(DenseVector &state, const DenseMatrix &op) const {
    // Column-major view: rows are environment states, columns system states.
    Eigen::Map<DenseMatrix> joint(state.data(), env_dim_, op.rows());
    joint = (joint * op.transpose()).eval();
}

namespace {

std::vector<DenseMatrix> pulse_matrices(const DecouplingScheme &scheme, Eigen::Index sys_dim) {
    std::vector<DenseMatrix> out;
    out.reserve(scheme.pulses.size());
    for (const auto &p : scheme.pulses) {
        out.push_back(dense_matrix(p));
        if (out.back().rows() != sys_dim) {
            throw std::invalid_argument("scheme does not match the model's system dimension");
        }
    }
    return out;
}

}  // namespace

DenseMatrix PulsedEvolution::unitary(const DecouplingScheme &scheme, std::uint64_t n, double tau) const {
    const double dt = pulse_interval(scheme, n, tau);
    const DenseMatrix step = propagator(dt);
    const DenseMatrix env_id = DenseMatrix::Identity(env_dim_, env_dim_);
    const auto pulses = pulse_matrices(scheme, dim() / env_dim_);

    DenseMatrix period = kron(pulses.front(), env_id);
    for (size_t k = 1; k < pulses.size(); ++k) {
        period = (kron(pulses[k], env_id) * (step * period)).eval();
    }
    DenseMatrix out = DenseMatrix::Identity(dim(), dim());
    for (std::uint64_t r = 0; r < n; ++r) {
        out = (period * out).eval();
    }
    return out;
}

DenseVector PulsedEvolution::evolve(const DenseVector &state, const DecouplingScheme &scheme, std::uint64_t n,
                                    double tau) const {
    if (state.size() != dim()) {
        throw std::invalid_argument("state dimension does not match the Hamiltonian");
    }
    const double dt = pulse_interval(scheme, n, tau);
    DenseVector phases(eigenvalues_.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        phases(i) = std::exp(Complex(0.0, -eigenvalues_(i) * dt));
    }
    const auto pulses = pulse_matrices(scheme, dim() / env_dim_);

    DenseVector psi = state;
    for (std::uint64_t r = 0; r < n; ++r) {
        apply_system_operator(psi, pulses.front());
        for (size_t k = 1; k < pulses.size(); ++k) {
            DenseVector coeffs = eigenvectors_.adjoint() * psi;
            psi = eigenvectors_ * phases.cwiseProduct(coeffs);
            apply_system_operator(psi, pulses[k]);
        }
    }
    return psi;
}

double fidelity(const DenseVector &joint, const DenseVector &ideal_system, double tolerance) {
    if (ideal_system.size() == 0 || joint.size() % ideal_system.size() != 0) {
        throw std::invalid_argument("joint state dimension is not a multiple of the system dimension");
    }
    if (std::abs(joint.norm() - 1.0) > tolerance || std::abs(ideal_system.norm() - 1.0) > tolerance) {
        throw std::invalid_argument("fidelity needs normalized states");
    }
    const Eigen::Index env = joint.size() / ideal_system.size();
    const Eigen::Map<const DenseMatrix> phi(joint.data(), env, ideal_system.size());
    // Component a of the environment-side amplitude: sum_s conj(ideal_s) phi(a, s).
    const DenseVector amp = phi * ideal_system.conjugate();
    return std::clamp(amp.squaredNorm(), 0.0, 1.0);
}

DenseVector default_initial_state() {
    DenseVector psi = DenseVector::Zero(4);
    psi(1) = 1.0;
    return psi;
}

FidelityResult simulate(const SimulationConfig &config) {
    return simulate(build_oscillator_model(config.lambda, config.fock_dim), config);
}

namespace {

void check_config(const SimulationConfig &config) {
    if (config.n == 0) {
        throw std::invalid_argument("n must be at least 1");
    }
    if (config.use_decoupling && !config.scheme) {
        throw std::invalid_argument("decoupling requested without a scheme");
    }
}

FidelityResult run_point(const SimulationModel &model, const PulsedEvolution &evolution,
                         const SimulationConfig &config) {
    check_config(config);
    const Eigen::Index sys_dim = model.ideal.rows();
    const DenseVector psi = config.initial_state.size() ? config.initial_state : default_initial_state();
    if (psi.size() != sys_dim) {
        throw std::invalid_argument("initial state does not match the system dimension");
    }
    DenseVector joint = DenseVector::Zero(evolution.dim());
    for (Eigen::Index s = 0; s < sys_dim; ++s) {
        joint(s * evolution.env_dim()) = psi(s);
    }

    FidelityResult result;
    result.lambda = config.lambda;
    result.n = config.n;
    if (config.use_decoupling) {
        result.dt = pulse_interval(*config.scheme, config.n, config.tau);
        result.scheme_id = config.scheme_id;
        joint = evolution.evolve(joint, *config.scheme, config.n, config.tau);
    } else {
        result.dt = config.tau;
        result.scheme_id = "none";
        joint = evolution.evolve_free(joint, config.tau);
    }
    PulsedEvolution ideal(model.ideal, 1);
    const DenseVector target = ideal.evolve_free(psi, config.tau);
    result.fidelity = fidelity(joint, target);
    return result;
}

}  // namespace

FidelityResult simulate(const SimulationModel &model, const SimulationConfig &config) {
    check_config(config);
    return run_point(model, PulsedEvolution(model.hamiltonian, model.env_dim), config);
}

std::vector<FidelityResult> sweep(const SweepGrid &grid) {
    for (auto n : grid.ns) {
        if (n == 0) {
            throw std::invalid_argument("n must be at least 1");
        }
    }
    std::vector<double> lambdas = grid.lambdas;
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    std::vector<std::uint64_t> ns = grid.ns;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    if (lambdas.empty() || ns.empty()) {
        return {};
    }

    auto run_lambda = [&](double lambda) {
        const SimulationModel model =
            grid.model ? grid.model(lambda) : build_oscillator_model(lambda, grid.base.fock_dim);
        const PulsedEvolution evolution(model.hamiltonian, model.env_dim);
        std::vector<FidelityResult> rows;
        for (auto n : ns) {
            SimulationConfig config = grid.base;
            config.lambda = lambda;
            config.n = n;
            rows.push_back(run_point(model, evolution, config));
        }
        return rows;
    };

    std::vector<std::vector<FidelityResult>> per_lambda(lambdas.size());
    if (grid.parallel && lambdas.size() > 1) {
        std::vector<std::future<std::vector<FidelityResult>>> jobs;
        for (double lambda : lambdas) {
            jobs.push_back(std::async(std::launch::async, run_lambda, lambda));
        }
        for (size_t i = 0; i < jobs.size(); ++i) {
            per_lambda[i] = jobs[i].get();
        }
    } else {
        for (size_t i = 0; i < lambdas.size(); ++i) {
            per_lambda[i] = run_lambda(lambdas[i]);
        }
    }
    std::vector<FidelityResult> out;
    for (auto &rows : per_lambda) {
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

std::string render_sweep_csv(const std::vector<FidelityResult> &rows) {
    std::ostringstream out;
    out << "lambda,n,dt,fidelity,scheme_id\n";
    char buf[160];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%llu,%.17g,%.17g,", r.lambda, static_cast<unsigned long long>(r.n),
                      r.dt, r.fidelity);
        out << buf << r.scheme_id << "\n";
    }
    return out.str();
}

}  // namespace ddsynth
