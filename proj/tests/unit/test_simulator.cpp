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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ddsynth/fixtures.hpp"
#include "ddsynth/simulator.hpp"
#include "ddsynth/verifier.hpp"
#include "support/oracles.hpp"

namespace ddsynth {
namespace {

using oracle::Complex;
using oracle::Matrix;

DecouplingScheme scheme_named(const std::string &id) { return parse_scheme(find_fixture(id)->scheme); }

Matrix annihilation(int f) {
    Matrix a = Matrix::Zero(f, f);
    for (int k = 1; k < f; ++k) {
        a(k - 1, k) = std::sqrt(double(k));
    }
    return a;
}

Matrix heisenberg() {
    Matrix h = Matrix::Zero(4, 4);
    for (int i = 1; i <= 3; ++i) {
        h += oracle::kron(oracle::pauli(i), oracle::pauli(i));
    }
    return h;
}

// sigma_+ = |0><1| in the computational basis.
Matrix oracle_model(double lambda, int f) {
    Matrix sp = Matrix::Zero(2, 2);
    sp(0, 1) = 1.0;
    const Matrix sm = sp.adjoint();
    const Matrix i2 = Matrix::Identity(2, 2), iff = Matrix::Identity(f, f);
    const Matrix a = annihilation(f), ad = a.adjoint();
    auto k4 = [](const Matrix &p, const Matrix &q, const Matrix &r, const Matrix &s) {
        return oracle::kron(oracle::kron(oracle::kron(p, q), r), s);
    };
    return oracle::kron(heisenberg(), Matrix::Identity(f * f, f * f)) +
           lambda * (k4(sp, i2, a, iff) + k4(sm, i2, ad, iff) + k4(i2, sp, iff, a) + k4(i2, sm, iff, ad));
}

// Toggling-frame product: one cycle is prod_l g_l^dag V g_l with V = exp(-iH dt).
Matrix oracle_unitary(const Matrix &h, Eigen::Index env, const DecouplingScheme &s, int n, double tau) {
    const double dt = to_double(s.scaling) * tau / double(s.order.size() * n);
    const Matrix v = oracle::expm_hermitian(h, dt);
    Matrix cycle = Matrix::Identity(h.rows(), h.cols());
    for (const auto &frame : s.order) {
        const Matrix g = oracle::kron(oracle::pauli_string(to_pauli_digits(frame)), Matrix::Identity(env, env));
        cycle = g.adjoint() * v * g * cycle;
    }
    Matrix u = Matrix::Identity(h.rows(), h.cols());
    for (int i = 0; i < n; ++i) {
        u = cycle * u;
    }
    return u;
}

double oracle_fidelity(const Matrix &u, Eigen::Index env, double tau) {
    oracle::Vector psi = oracle::Vector::Zero(u.rows());
    psi(1 * env) = 1.0;  // |01> with the environment in its vacuum
    const oracle::Vector out = u * psi;
    oracle::Vector ideal = oracle::expm_hermitian(heisenberg(), tau).col(1);
    double f = 0.0;
    for (Eigen::Index e = 0; e < env; ++e) {
        Complex amp = 0.0;
        for (Eigen::Index s = 0; s < 4; ++s) {
            amp += std::conj(ideal(s)) * out(s * env + e);
        }
        f += std::norm(amp);
    }
    return f;
}

DenseVector vacuum_joint(const DenseVector &sys, Eigen::Index env) {
    DenseVector v = DenseVector::Zero(sys.size() * env);
    for (Eigen::Index s = 0; s < sys.size(); ++s) {
        v(s * env) = sys(s);
    }
    return v;
}

TEST(OscillatorModel, MatchesIndependentConstruction) {
    for (double lambda : {0.0, 0.5, 1.0}) {
        const SimulationModel m = build_oscillator_model(lambda, 3);
        EXPECT_EQ(m.env_dim, 9);
        EXPECT_LT(oracle::max_abs(m.hamiltonian - oracle_model(lambda, 3)), 1e-15) << lambda;
        EXPECT_LT(oracle::max_abs(m.ideal - heisenberg()), 1e-15);
    }
}

TEST(OscillatorModel, HermitianAtSmallTruncation) {
    const SimulationModel m = build_oscillator_model(1.0, 2);
    ASSERT_EQ(m.hamiltonian.rows(), 16);
    EXPECT_LT(oracle::max_abs(m.hamiltonian - m.hamiltonian.adjoint()), 1e-15);
    EXPECT_THROW(build_oscillator_model(1.0, 1), std::invalid_argument);
}

TEST(PulsedEvolution, UnitaryMatchesOracle) {
    const double lambda = 0.7;
    const SimulationModel m = build_oscillator_model(lambda, 4);
    const PulsedEvolution ev(m.hamiltonian, m.env_dim);
    for (const std::string id : {"eq14", "eq17"}) {
        const DecouplingScheme s = scheme_named(id);
        for (int n : {1, 3}) {
            const Matrix u = ev.unitary(s, n, kDefaultGateTime);
            EXPECT_LT(oracle::max_abs(u * u.adjoint() - Matrix::Identity(u.rows(), u.cols())), 1e-10);
            EXPECT_LT(oracle::max_abs(u - oracle_unitary(oracle_model(lambda, 4), m.env_dim, s, n, kDefaultGateTime)),
                      1e-10)
                << id << " n=" << n;
        }
    }
}

TEST(PulsedEvolution, EvolveAgreesWithUnitaryAndKeepsNorm) {
    const SimulationModel m = build_oscillator_model(0.5, 4);
    const PulsedEvolution ev(m.hamiltonian, m.env_dim);
    std::mt19937 rng(4);
    std::normal_distribution<double> g;
    DenseVector psi(ev.dim());
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        psi(i) = Complex(g(rng), g(rng));
    }
    psi.normalize();
    const DecouplingScheme s = scheme_named("eq14");
    const DenseVector out = ev.evolve(psi, s, 2, kDefaultGateTime);
    EXPECT_NEAR(out.norm(), 1.0, 1e-12);
    EXPECT_LT((out - ev.unitary(s, 2, kDefaultGateTime) * psi).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((ev.evolve_free(psi, 0.3) - oracle::expm_hermitian(m.hamiltonian, 0.3) * psi).cwiseAbs().maxCoeff(),
              1e-12);
}

TEST(PulsedEvolution, IdentitySchemeIsScaledFreeEvolution) {
    const SimulationModel m = build_oscillator_model(0.5, 3);
    const PulsedEvolution ev(m.hamiltonian, m.env_dim);
    const DecouplingScheme s = scheme_from_order({PauliString::identity(2, 2)}, Rational(3));
    EXPECT_LT(oracle::max_abs(ev.unitary(s, 1, 0.4) - oracle::expm_hermitian(m.hamiltonian, 1.2)), 1e-12);
    EXPECT_LT(oracle::max_abs(ev.unitary(s, 4, 0.4) - oracle::expm_hermitian(m.hamiltonian, 1.2)), 1e-12);
}

TEST(PulsedEvolution, RejectsNonHermitian) {
    Matrix h = Matrix::Zero(4, 4);
    h(0, 1) = 1.0;
    EXPECT_THROW(PulsedEvolution(h, 1), std::invalid_argument);
}

TEST(PulseInterval, Relation) {
    const DecouplingScheme eq14 = scheme_named("eq14");
    const DecouplingScheme eq17 = scheme_named("eq17");
    for (std::uint64_t n : {1u, 2u, 7u}) {
        EXPECT_DOUBLE_EQ(pulse_interval(eq14, n, kDefaultGateTime),
                         3.0 * kDefaultGateTime / (12.0 * double(n)));
        EXPECT_DOUBLE_EQ(pulse_interval(eq17, n, kDefaultGateTime), kDefaultGateTime / (4.0 * double(n)));
    }
    EXPECT_THROW(pulse_interval(eq17, 0, 1.0), std::invalid_argument);
}

TEST(Fidelity, EdgeCases) {
    DenseVector ideal = DenseVector::Zero(4);
    ideal(1) = 1.0;
    EXPECT_NEAR(fidelity(vacuum_joint(ideal, 5), ideal), 1.0, 1e-15);
    DenseVector other = DenseVector::Zero(4);
    other(2) = 1.0;
    EXPECT_NEAR(fidelity(vacuum_joint(other, 5), ideal), 0.0, 1e-15);
    EXPECT_THROW(fidelity(2.0 * vacuum_joint(ideal, 5), ideal), std::invalid_argument);
    // Entangled with the environment: partial overlap.
    DenseVector joint = DenseVector::Zero(20);
    joint(1 * 5 + 0) = std::sqrt(0.5);
    joint(2 * 5 + 3) = std::sqrt(0.5);
    EXPECT_NEAR(fidelity(joint, ideal), 0.5, 1e-15);
}

TEST(Simulate, ZeroCouplingIsPerfect) {
    SimulationConfig c;
    c.lambda = 0.0;
    c.scheme = scheme_named("eq17");
    c.scheme_id = "eq17";
    for (std::uint64_t n : {1u, 4u}) {
        c.n = n;
        EXPECT_NEAR(simulate(c).fidelity, 1.0, 1e-12);
    }
}

TEST(Simulate, MatchesOracleValues) {
    const Matrix h = oracle_model(0.5, 8);
    for (const std::string id : {"eq14", "eq17"}) {
        SimulationConfig c;
        c.lambda = 0.5;
        c.n = 4;
        c.scheme = scheme_named(id);
        c.scheme_id = id;
        const FidelityResult r = simulate(c);
        const double expected = oracle_fidelity(oracle_unitary(h, 64, *c.scheme, 4, kDefaultGateTime), 64,
                                                kDefaultGateTime);
        EXPECT_NEAR(r.fidelity, expected, 1e-10) << id;
        EXPECT_EQ(r.scheme_id, id);
        EXPECT_DOUBLE_EQ(r.dt, pulse_interval(*c.scheme, 4, kDefaultGateTime));
    }
}

TEST(Simulate, ReferenceValues) {
    SimulationConfig c;
    c.lambda = 0.5;
    c.use_decoupling = false;
    const FidelityResult base = simulate(c);
    EXPECT_NEAR(base.fidelity, 0.9655303045578104, 1e-9);
    EXPECT_EQ(base.scheme_id, "none");
    EXPECT_DOUBLE_EQ(base.dt, kDefaultGateTime);
    c.use_decoupling = true;
    c.n = 4;
    c.scheme = scheme_named("eq14");
    EXPECT_NEAR(simulate(c).fidelity, 0.9996031879071747, 1e-9);
    c.scheme = scheme_named("eq17");
    EXPECT_NEAR(simulate(c).fidelity, 0.9999234717220691, 1e-9);
}

TEST(Simulate, TruncationIsStable) {
    for (double lambda : {0.25, 1.0}) {
        SimulationConfig c;
        c.lambda = lambda;
        c.scheme = scheme_named("eq17");
        c.fock_dim = 8;
        const double f8 = simulate(c).fidelity;
        c.fock_dim = 16;
        EXPECT_NEAR(f8, simulate(c).fidelity, 1e-6) << lambda;
    }
}

TEST(Sweep, SortedDeterministicAndValidated) {
    SweepGrid grid;
    grid.lambdas = {1.0, 0.25, 0.25};
    grid.ns = {3, 1, 2};
    grid.base.scheme = scheme_named("eq17");
    grid.base.scheme_id = "eq17";
    grid.base.fock_dim = 4;
    const auto rows = sweep(grid);
    ASSERT_EQ(rows.size(), 6u);
    for (size_t i = 1; i < rows.size(); ++i) {
        EXPECT_TRUE(rows[i - 1].lambda < rows[i].lambda ||
                    (rows[i - 1].lambda == rows[i].lambda && rows[i - 1].n < rows[i].n));
    }
    grid.parallel = false;
    EXPECT_EQ(render_sweep_csv(rows), render_sweep_csv(sweep(grid)));
    grid.ns = {};
    EXPECT_TRUE(sweep(grid).empty());
    grid.ns = {0};
    EXPECT_THROW(sweep(grid), std::invalid_argument);
}

TEST(Sweep, CsvFormat) {
    const std::vector<FidelityResult> rows = {{0.5, 2, 0.125, 0.75, "eq17"}};
    EXPECT_EQ(render_sweep_csv(rows), "lambda,n,dt,fidelity,scheme_id\n0.5,2,0.125,0.75,eq17\n");
    EXPECT_EQ(render_sweep_csv({}), "lambda,n,dt,fidelity,scheme_id\n");
}

TEST(GenericModel, DummyEnvironmentScaling) {
    const Fixture *f = find_fixture("swap");
    const HamiltonianSpec h = parse_hamiltonian(f->hamiltonian);
    const HamiltonianSpec t = parse_hamiltonian(f->target, HamiltonianRole::Target);
    const SimulationModel zero = build_generic_model(h, t, 0.0);
    EXPECT_LT(oracle::max_abs(zero.hamiltonian - oracle::kron(heisenberg(), Matrix::Identity(zero.env_dim, zero.env_dim))),
              1e-15);
    const SimulationModel one = build_generic_model(h, t, 1.0);
    EXPECT_LT(oracle::max_abs(one.hamiltonian - dense_hamiltonian(h, EnvironmentMode::DummyQubits)), 1e-15);
    EXPECT_LT(oracle::max_abs(one.ideal - heisenberg()), 1e-15);
}

}  // namespace
}  // namespace ddsynth
