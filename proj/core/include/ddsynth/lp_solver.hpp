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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddsynth/hamiltonian.hpp"
#include "ddsynth/linear_system.hpp"
#include "ddsynth/rational.hpp"

namespace ddsynth {

/// minimize cost . x  subject to  rows x = rhs,  x >= 0.
template <class T>
struct StandardFormLp {
    size_t num_vars = 0;
    std::vector<std::vector<T>> rows;
    std::vector<T> rhs;
    std::vector<T> cost;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class T>
struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<T> x;
    T objective{};
    /// Basic variable per constraint row; indices >= num_vars are leftover artificials
    /// sitting in redundant rows.
    std::vector<size_t> basis;
    /// Simplex multipliers y = c_B B^{-1}, relative to the rows as given.
    std::vector<T> duals;
    size_t iterations = 0;
    std::vector<std::string> pivot_log;
};

struct LpOptions {
    /// Tolerance for reduced costs, pivots and feasibility in floating mode.
    double tolerance = 1e-9;
    bool record_pivots = false;
    size_t max_iterations = 1000000;
};

/// Two-phase revised simplex with Bland's rule: the lowest-index improving column enters,
/// ratio ties leave by lowest basic index. Deterministic for a given problem.
template <class T>
LpSolution<T> solve_lp(const StandardFormLp<T> &problem, const LpOptions &options = {});

extern template LpSolution<double> solve_lp(const StandardFormLp<double> &, const LpOptions &);
extern template LpSolution<Rational> solve_lp(const StandardFormLp<Rational> &, const LpOptions &);

/// The scaling problem min sum e_j s.t. A_K e = r, e >= 0. Qubit problems with exact ratios
/// get a rational copy; complex rows are split into real and imaginary equations with
/// conjugate-partner duplicates removed.
struct LpProblem {
    StandardFormLp<double> floating;
    std::optional<StandardFormLp<Rational>> exact;
    /// `re:<label>` / `im:<label>` per constraint row.
    std::vector<std::string> row_names;

    size_t num_constraints() const { return floating.rows.size(); }
};

LpProblem build_lp_problem(const RatioVector &rv, double tolerance = 1e-9);

class InfeasibleError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ScalingResult {
    SolutionVector solution;
    size_t iterations = 0;
    std::vector<std::string> pivot_log;
    std::vector<size_t> basis;
    std::vector<double> duals;
    std::optional<std::vector<Rational>> exact_duals;
};

/// Minimal-D solution. Throws InfeasibleError if the constraints cannot be met, which
/// only happens for targets that skipped validation.
ScalingResult minimize_scaling_detailed(const RatioVector &rv, const LpOptions &options = {});

inline SolutionVector minimize_scaling(const RatioVector &rv, const LpOptions &options = {}) {
    return minimize_scaling_detailed(rv, options).solution;
}

}  // namespace ddsynth
