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

#include "ddsynth/lp_solver.hpp"

#include <cmath>
#include <sstream>

#include "ddsynth/dense.hpp"

namespace ddsynth {

namespace {

template <class T>
struct Arith;

template <>
struct Arith<double> {
    double tol;
    bool negative(double v) const { return v < -tol; }
    bool positive(double v) const { return v > tol; }
    bool zero(double v) const { return std::abs(v) <= tol; }
};

template <>
struct Arith<Rational> {
    double tol;
    bool negative(const Rational &v) const { return v < 0; }
    bool positive(const Rational &v) const { return v > 0; }
    bool zero(const Rational &v) const { return v == 0; }
};

template <class T>
class RevisedSimplex {
   public:
    RevisedSimplex(const StandardFormLp<T> &p, const LpOptions &options)
        : n_(p.num_vars), m_(p.rows.size()), a_(p.rows), b_(p.rhs), sign_(m_, 1), options_(options),
          arith_{options.tolerance} {
        for (size_t i = 0; i < m_; ++i) {
            if (a_[i].size() != n_) {
                throw std::invalid_argument("constraint row has the wrong length");
            }
            if (b_[i] < T(0)) {
                sign_[i] = -1;
                b_[i] = -b_[i];
                for (auto &v : a_[i]) {
                    v = -v;
                }
            }
        }
        binv_.assign(m_, std::vector<T>(m_, T(0)));
        for (size_t i = 0; i < m_; ++i) {
            binv_[i][i] = T(1);
        }
        basis_.resize(m_);
        for (size_t i = 0; i < m_; ++i) {
            basis_[i] = n_ + i;
        }
        is_basic_.assign(n_ + m_, false);
        for (size_t i = 0; i < m_; ++i) {
            is_basic_[n_ + i] = true;
        }
        xb_ = b_;
    }

    LpSolution<T> solve(const std::vector<T> &cost) {
        LpSolution<T> out;
        if (cost.size() != n_) {
            throw std::invalid_argument("cost vector has the wrong length");
        }

        // Phase 1: minimize the sum of artificials.
        std::vector<T> phase1(n_ + m_, T(0));
        for (size_t i = 0; i < m_; ++i) {
            phase1[n_ + i] = T(1);
        }
        auto status = iterate(phase1, 1, /*stop_at_zero=*/true);
        T infeasibility(0);
        for (size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) {
                infeasibility += xb_[i];
            }
        }
        if (status != LpStatus::Optimal || arith_.positive(infeasibility)) {
            out.status = LpStatus::Infeasible;
            out.iterations = iterations_;
            out.pivot_log = std::move(log_);
            return out;
        }
        drive_out_artificials();

        // Phase 2. Artificials left in redundant rows stay at zero.
        std::vector<T> phase2(n_ + m_, T(0));
        for (size_t j = 0; j < n_; ++j) {
            phase2[j] = cost[j];
        }
        status = iterate(phase2, 2, false);
        out.status = status;
        out.iterations = iterations_;
        out.pivot_log = std::move(log_);
        out.basis = basis_;
        if (status != LpStatus::Optimal) {
            return out;
        }
        out.x.assign(n_, T(0));
        for (size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) {
                out.x[basis_[i]] = xb_[i];
            }
        }
        out.objective = T(0);
        for (size_t j = 0; j < n_; ++j) {
            out.objective += cost[j] * out.x[j];
        }
        out.duals = multipliers(phase2);
        for (size_t i = 0; i < m_; ++i) {
            if (sign_[i] < 0) {
                out.duals[i] = -out.duals[i];
            }
        }
        return out;
    }

   private:
    T column_entry(size_t row, size_t col) const {
        if (col < n_) {
            return a_[row][col];
        }
        return col - n_ == row ? T(1) : T(0);
    }

    // u = B^{-1} A_col
    std::vector<T> transformed_column(size_t col) const {
        std::vector<T> u(m_, T(0));
        if (col >= n_) {
            for (size_t i = 0; i < m_; ++i) {
                u[i] = binv_[i][col - n_];
            }
            return u;
        }
        for (size_t i = 0; i < m_; ++i) {
            T s(0);
            for (size_t k = 0; k < m_; ++k) {
                if (!arith_.zero(a_[k][col])) {
                    s += binv_[i][k] * a_[k][col];
                }
            }
            u[i] = s;
        }
        return u;
    }

    std::vector<T> multipliers(const std::vector<T> &cost) const {
        std::vector<T> y(m_, T(0));
        for (size_t r = 0; r < m_; ++r) {
            const T &cb = cost[basis_[r]];
            if (cb == T(0)) {
                continue;
            }
            for (size_t i = 0; i < m_; ++i) {
                y[i] += cb * binv_[r][i];
            }
        }
        return y;
    }

    void pivot(size_t row, size_t col, const std::vector<T> &u) {
        const T pivot_value = u[row];
        for (size_t k = 0; k < m_; ++k) {
            binv_[row][k] /= pivot_value;
        }
        xb_[row] /= pivot_value;
        for (size_t i = 0; i < m_; ++i) {
            if (i == row || arith_.zero(u[i])) {
                continue;
            }
            const T factor = u[i];
            for (size_t k = 0; k < m_; ++k) {
                binv_[i][k] -= factor * binv_[row][k];
            }
            xb_[i] -= factor * xb_[row];
        }
        is_basic_[basis_[row]] = false;
        is_basic_[col] = true;
        basis_[row] = col;
    }

    LpStatus iterate(const std::vector<T> &cost, int phase, bool stop_at_zero) {
        while (true) {
            if (stop_at_zero) {
                bool all_zero = true;
                for (size_t i = 0; i < m_ && all_zero; ++i) {
                    all_zero = basis_[i] < n_ || arith_.zero(xb_[i]);
                }
                if (all_zero) {
                    return LpStatus::Optimal;
                }
            }
            if (iterations_ >= options_.max_iterations) {
                throw std::runtime_error("simplex iteration limit reached");
            }
            const auto y = multipliers(cost);
            size_t entering = n_;
            for (size_t j = 0; j < n_; ++j) {
                if (is_basic_[j]) {
                    continue;
                }
                T reduced = cost[j];
                for (size_t i = 0; i < m_; ++i) {
                    if (!arith_.zero(a_[i][j])) {
                        reduced -= y[i] * a_[i][j];
                    }
                }
                if (arith_.negative(reduced)) {
                    entering = j;
                    break;
                }
            }
            if (entering == n_) {
                return LpStatus::Optimal;
            }
            const auto u = transformed_column(entering);
            size_t leaving = m_;
            T best_ratio(0);
            for (size_t i = 0; i < m_; ++i) {
                if (!arith_.positive(u[i])) {
                    continue;
                }
                T ratio = xb_[i] / u[i];
                bool better = leaving == m_;
                if (!better) {
                    const T diff = ratio - best_ratio;
                    better = arith_.negative(diff) || (arith_.zero(diff) && basis_[i] < basis_[leaving]);
                }
                if (better) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == m_) {
                return LpStatus::Unbounded;
            }
            ++iterations_;
            if (options_.record_pivots) {
                std::ostringstream line;
                line << "iter " << iterations_ << " phase " << phase << ": enter x" << entering << " leave x"
                     << basis_[leaving] << " (row " << leaving << ")";
                log_.push_back(line.str());
            }
            pivot(leaving, entering, u);
            if constexpr (std::is_same_v<T, double>) {
                for (auto &v : xb_) {
                    if (std::abs(v) <= options_.tolerance * 1e-3) {
                        v = 0.0;
                    }
                }
            }
        }
    }

    void drive_out_artificials() {
        for (size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) {
                continue;
            }
            for (size_t j = 0; j < n_; ++j) {
                if (is_basic_[j]) {
                    continue;
                }
                T v(0);
                for (size_t k = 0; k < m_; ++k) {
                    if (!arith_.zero(a_[k][j])) {
                        v += binv_[r][k] * a_[k][j];
                    }
                }
                if (!arith_.zero(v)) {
                    ++iterations_;
                    if (options_.record_pivots) {
                        std::ostringstream line;
                        line << "iter " << iterations_ << " cleanup: enter x" << j << " leave x" << basis_[r]
                             << " (row " << r << ")";
                        log_.push_back(line.str());
                    }
                    pivot(r, j, transformed_column(j));
                    break;
                }
            }
        }
    }

    size_t n_;
    size_t m_;
    std::vector<std::vector<T>> a_;
    std::vector<T> b_;
    std::vector<int> sign_;
    LpOptions options_;
    Arith<T> arith_;
    std::vector<std::vector<T>> binv_;
    std::vector<size_t> basis_;
    std::vector<bool> is_basic_;
    std::vector<T> xb_;
    size_t iterations_ = 0;
    std::vector<std::string> log_;
};

}  // namespace

template <class T>
LpSolution<T> solve_lp(const StandardFormLp<T> &problem, const LpOptions &options) {
    if (problem.rows.size() != problem.rhs.size()) {
        throw std::invalid_argument("row and rhs counts differ");
    }
    RevisedSimplex<T> simplex(problem, options);
    return simplex.solve(problem.cost);
}

template LpSolution<double> solve_lp(const StandardFormLp<double> &, const LpOptions &);
template LpSolution<Rational> solve_lp(const StandardFormLp<Rational> &, const LpOptions &);

LpProblem build_lp_problem(const RatioVector &rv, double tolerance) {
    const std::uint64_t size = basis_size(rv.dim, rv.num_sites);
    LpProblem out;
    out.floating.num_vars = size;
    out.floating.cost.assign(size, 1.0);
    const bool exact = rv.exact_real();
    if (exact) {
        out.exact.emplace();
        out.exact->num_vars = size;
        out.exact->cost.assign(size, Rational(1));
    }
    auto label_text = [&](const PauliString &p) { return rv.dim == 2 ? to_pauli_digits(p) : to_string(p); };

    for (size_t k = 0; k < rv.size(); ++k) {
        const PauliString &label = rv.labels[k];
        const PauliString partner = conjugate_partner(label);
        const bool self_partner = partner.same_basis(label);
        if (!self_partner) {
            if (auto p = rv.position(partner); p && *p < k) {
                // Conjugate of an equation already present.
                continue;
            }
        }
        const SystemRow row = system_row(label);
        std::vector<double> re(size), im(size);
        for (std::uint64_t col = 0; col < size; ++col) {
            const auto a = row.entry(col);
            re[col] = a.real();
            im[col] = a.imag();
        }
        out.floating.rows.push_back(re);
        out.floating.rhs.push_back(rv.values[k].real());
        out.row_names.push_back("re:" + label_text(label));
        if (exact) {
            std::vector<Rational> exact_row(size);
            for (std::uint64_t col = 0; col < size; ++col) {
                exact_row[col] = row.entries[col].value() == 0 ? Rational(1) : Rational(-1);
            }
            out.exact->rows.push_back(std::move(exact_row));
            out.exact->rhs.push_back((*rv.exact)[k].re);
        }
        if (self_partner) {
            // Real row: the imaginary equation reads 0 = Im r.
            if (std::abs(rv.values[k].imag()) > tolerance) {
                throw InfeasibleError("ratio for " + label_text(label) +
                                      " has an imaginary part but its system row is real");
            }
            continue;
        }
        out.floating.rows.push_back(im);
        out.floating.rhs.push_back(rv.values[k].imag());
        out.row_names.push_back("im:" + label_text(label));
    }
    return out;
}

ScalingResult minimize_scaling_detailed(const RatioVector &rv, const LpOptions &options) {
    const LpProblem problem = build_lp_problem(rv, options.tolerance);
    ScalingResult result;
    result.solution.dim = rv.dim;
    result.solution.num_sites = rv.num_sites;

    if (problem.exact) {
        const auto lp = solve_lp(*problem.exact, options);
        if (lp.status != LpStatus::Optimal) {
            throw InfeasibleError("no non-negative solution satisfies the decoupling equations");
        }
        result.solution.exact = lp.x;
        for (const auto &q : lp.x) {
            result.solution.values.push_back(to_double(q));
        }
        result.iterations = lp.iterations;
        result.pivot_log = lp.pivot_log;
        result.basis = lp.basis;
        result.exact_duals = lp.duals;
        for (const auto &q : lp.duals) {
            result.duals.push_back(to_double(q));
        }
        return result;
    }

    const auto lp = solve_lp(problem.floating, options);
    if (lp.status != LpStatus::Optimal) {
        throw InfeasibleError("no non-negative solution satisfies the decoupling equations");
    }
    result.solution.values = lp.x;
    for (auto &v : result.solution.values) {
        if (v < 0.0) {
            v = 0.0;
        }
    }
    result.iterations = lp.iterations;
    result.pivot_log = lp.pivot_log;
    result.basis = lp.basis;
    result.duals = lp.duals;
    return result;
}

}  // namespace ddsynth
