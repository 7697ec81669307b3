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

#include <benchmark/benchmark.h>

#include "ddsynth/fixtures.hpp"
#include "ddsynth/hamiltonian.hpp"
#include "ddsynth/linear_system.hpp"
#include "ddsynth/lp_solver.hpp"
#include "ddsynth/simulator.hpp"
#include "ddsynth/verifier.hpp"

namespace {

using namespace ddsynth;

HamiltonianSpec fixture_h(const char *name) { return parse_hamiltonian(find_fixture(name)->hamiltonian); }
HamiltonianSpec fixture_target(const char *name) {
    return parse_hamiltonian(find_fixture(name)->target, HamiltonianRole::Target);
}

// Row generation for N qubits (d = 2) or qutrits (d = 3).
void BM_SystemRow(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    const auto n = static_cast<size_t>(state.range(1));
    const PauliString label = basis_from_index(basis_size(d, n) - 1, d, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(system_row(label));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(basis_size(d, n)));
}
BENCHMARK(BM_SystemRow)->Args({2, 2})->Args({2, 4})->Args({2, 6})->Args({3, 2})->Args({3, 4});

void BM_MinimizeScaling(benchmark::State &state, const char *name) {
    const RatioVector rv = target_ratio_vector(fixture_h(name), fixture_target(name));
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimize_scaling(rv));
    }
}
BENCHMARK_CAPTURE(BM_MinimizeScaling, two_qubit, "two-qubit");
BENCHMARK_CAPTURE(BM_MinimizeScaling, square, "square");
BENCHMARK_CAPTURE(BM_MinimizeScaling, chain, "chain");

void BM_ParticularSolution(benchmark::State &state) {
    const RatioVector rv = target_ratio_vector(fixture_h("chain"), fixture_target("chain"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rationalize(shift_nonnegative(particular_solution(rv)), 4096));
    }
}
BENCHMARK(BM_ParticularSolution);

void BM_CheckDecoupling(benchmark::State &state) {
    const HamiltonianSpec h = fixture_h("two-qubit");
    const HamiltonianSpec t = fixture_target("two-qubit");
    const DecouplingScheme s = parse_scheme(find_fixture("two-qubit")->scheme);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_decoupling(h, t, s));
    }
}
BENCHMARK(BM_CheckDecoupling);

// One fidelity point of the oscillator model, including the eigendecomposition.
void BM_Simulate(benchmark::State &state) {
    SimulationConfig c;
    c.lambda = 0.5;
    c.fock_dim = static_cast<int>(state.range(0));
    c.n = static_cast<std::uint64_t>(state.range(1));
    c.scheme = parse_scheme(find_fixture("eq17")->scheme);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(c));
    }
}
BENCHMARK(BM_Simulate)->Args({4, 1})->Args({8, 1})->Args({8, 10})->Unit(benchmark::kMillisecond);

void BM_Evolve(benchmark::State &state) {
    const SimulationModel m = build_oscillator_model(0.5, 8);
    const PulsedEvolution ev(m.hamiltonian, m.env_dim);
    const DecouplingScheme s = parse_scheme(find_fixture("eq17")->scheme);
    DenseVector psi = DenseVector::Zero(ev.dim());
    psi(m.env_dim) = 1.0;
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev.evolve(psi, s, n, kDefaultGateTime));
    }
}
BENCHMARK(BM_Evolve)->Arg(1)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
