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

#include "ddsynth/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ddsynth {

std::vector<FirstOrderTerm> first_order_average(const HamiltonianSpec &h, const DecouplingScheme &scheme) {
    if (h.dim() != scheme.dim || h.num_sites() != scheme.num_sites) {
        throw std::invalid_argument("scheme and Hamiltonian have different shapes");
    }
    const auto m = static_cast<long long>(scheme.order.size());
    std::vector<FirstOrderTerm> out;
    out.reserve(h.terms().size());
    for (const auto &term : h.terms()) {
        FirstOrderTerm t{term.label, term.env_coupled, term.coeff.value, {}, std::nullopt};
        std::complex<double> sum{};
        long long sign_sum = 0;
        for (const auto &g : scheme.order) {
            const PhaseExponent e = conjugation_exponent(term.label, g);
            sum += root_of_unity(e);
            sign_sum += e.value() == 0 ? 1 : -1;
        }
        t.average = term.coeff.value * sum / static_cast<double>(m);
        if (h.dim() == 2 && term.coeff.exact) {
            t.exact_average = *term.coeff.exact * GaussianRational(Rational(sign_sum, m));
            t.average = t.exact_average->to_complex();
        }
        out.push_back(std::move(t));
    }
    return out;
}

AverageReport check_decoupling(const HamiltonianSpec &h, const HamiltonianSpec &target,
                               const DecouplingScheme &scheme, std::optional<double> tolerance) {
    if (h.dim() != target.dim() || h.num_sites() != target.num_sites()) {
        throw std::invalid_argument("H and the target have different shapes");
    }
    const auto averages = first_order_average(h, scheme);
    const Rational &scale = scheme.scaling;
    const double scale_d = to_double(scale);

    AverageReport report;
    report.exact = true;
    std::vector<bool> exact_zero;
    for (const auto &avg : averages) {
        LabelReport entry;
        entry.label = avg.label;
        entry.env_coupled = avg.env_coupled;
        const HamTerm *wanted = target.find(avg.label);
        std::optional<GaussianRational> wanted_exact;
        if (wanted) {
            entry.target = wanted->coeff.value;
            wanted_exact = wanted->coeff.exact;
        } else {
            wanted_exact = GaussianRational();
        }
        if (avg.exact_average && wanted_exact) {
            const GaussianRational achieved = *avg.exact_average * GaussianRational(scale);
            const GaussianRational diff = achieved - *wanted_exact;
            entry.achieved = achieved.to_complex();
            entry.target = wanted_exact->to_complex();
            entry.deviation = std::abs(diff.to_complex());
            exact_zero.push_back(diff.is_zero());
        } else {
            report.exact = false;
            entry.achieved = avg.average * scale_d;
            entry.deviation = std::abs(entry.achieved - entry.target);
            exact_zero.push_back(entry.deviation == 0.0);
        }
        report.labels.push_back(std::move(entry));
    }
    for (const auto &t : target.terms()) {
        if (h.find(t.label)) {
            continue;
        }
        LabelReport entry;
        entry.label = t.label;
        entry.unreachable = true;
        entry.target = t.coeff.value;
        entry.deviation = std::abs(t.coeff.value);
        report.labels.push_back(std::move(entry));
        exact_zero.push_back(false);
    }

    report.tolerance = tolerance.value_or(report.exact ? 0.0 : kDefaultFloatingTolerance);
    report.pass = true;
    for (size_t i = 0; i < report.labels.size(); ++i) {
        const auto &entry = report.labels[i];
        if (entry.env_coupled) {
            report.max_env_residual = std::max(report.max_env_residual, entry.deviation);
        } else {
            report.max_deviation = std::max(report.max_deviation, entry.deviation);
        }
        const bool ok = exact_zero[i] || (report.tolerance > 0.0 && entry.deviation <= report.tolerance);
        report.pass = report.pass && ok;
    }
    return report;
}

namespace {

constexpr Eigen::Index kMaxSystemDim = 256;
constexpr Eigen::Index kMaxTotalDim = 1024;

struct EnvLayout {
    std::vector<int> env_slot;  // per term, -1 for system terms
    size_t env_qubits = 0;
};

EnvLayout env_layout(const HamiltonianSpec &h, EnvironmentMode mode) {
    EnvLayout layout;
    for (const auto &term : h.terms()) {
        if (term.env_coupled && mode == EnvironmentMode::DummyQubits) {
            layout.env_slot.push_back(static_cast<int>(layout.env_qubits++));
        } else {
            layout.env_slot.push_back(-1);
        }
    }
    return layout;
}

Eigen::Index system_dim(const HamiltonianSpec &h) {
    double dim = std::pow(static_cast<double>(h.dim()), static_cast<double>(h.num_sites()));
    if (dim > static_cast<double>(kMaxSystemDim)) {
        throw std::length_error("dense oracle limited to d^N <= 256");
    }
    return static_cast<Eigen::Index>(dim);
}

// Builds the env-diagonal blocks: block a holds sum_k c_k S_k * z_k(a), where z_k(a) = +-1 is
// the Z eigenvalue of term k's dummy qubit in environment basis state a.
template <class CoeffOf>
std::vector<DenseMatrix> env_blocks(const HamiltonianSpec &h, EnvironmentMode mode, CoeffOf coeff_of) {
    const EnvLayout layout = env_layout(h, mode);
    const Eigen::Index sys = system_dim(h);
    const Eigen::Index env = Eigen::Index{1} << layout.env_qubits;
    if (sys * env > kMaxTotalDim) {
        throw std::length_error("dense oracle limited to total dimension 1024");
    }
    std::vector<DenseMatrix> blocks(static_cast<size_t>(env), DenseMatrix::Zero(sys, sys));
    for (size_t t = 0; t < h.terms().size(); ++t) {
        const auto &term = h.terms()[t];
        const int slot = layout.env_slot[t];
        if (term.env_coupled && slot < 0) {
            continue;
        }
        const DenseMatrix s = dense_matrix(term.label) * coeff_of(t);
        for (Eigen::Index a = 0; a < env; ++a) {
            double z = 1.0;
            if (slot >= 0) {
                // Dummy qubit `slot` is the slot-th most significant environment bit.
                const auto bit = (a >> (layout.env_qubits - 1 - static_cast<size_t>(slot))) & 1;
                z = bit ? -1.0 : 1.0;
            }
            blocks[static_cast<size_t>(a)] += z * s;
        }
    }
    return blocks;
}

DenseMatrix assemble(const std::vector<DenseMatrix> &blocks) {
    const auto env = static_cast<Eigen::Index>(blocks.size());
    const Eigen::Index sys = blocks.front().rows();
    DenseMatrix out = DenseMatrix::Zero(sys * env, sys * env);
    // system (x) environment ordering: row index = s * env + a.
    for (Eigen::Index a = 0; a < env; ++a) {
        const auto &b = blocks[static_cast<size_t>(a)];
        for (Eigen::Index r = 0; r < sys; ++r) {
            for (Eigen::Index c = 0; c < sys; ++c) {
                out(r * env + a, c * env + a) = b(r, c);
            }
        }
    }
    return out;
}

}  // namespace

DenseMatrix dense_hamiltonian(const HamiltonianSpec &h, EnvironmentMode mode) {
    return assemble(env_blocks(h, mode, [&](size_t t) { return h.terms()[t].coeff.value; }));
}

DenseMatrix dense_oracle_average(const HamiltonianSpec &h, const DecouplingScheme &scheme, EnvironmentMode mode) {
    if (h.dim() != scheme.dim || h.num_sites() != scheme.num_sites) {
        throw std::invalid_argument("scheme and Hamiltonian have different shapes");
    }
    auto blocks = env_blocks(h, mode, [&](size_t t) { return h.terms()[t].coeff.value; });
    std::vector<DenseMatrix> frames;
    frames.reserve(scheme.order.size());
    for (const auto &g : scheme.order) {
        frames.push_back(dense_matrix(g));
    }
    for (auto &block : blocks) {
        DenseMatrix acc = DenseMatrix::Zero(block.rows(), block.cols());
        for (const auto &g : frames) {
            acc.noalias() += g.adjoint() * block * g;
        }
        block = acc / static_cast<double>(frames.size());
    }
    return assemble(blocks);
}

DenseMatrix dense_from_average(const HamiltonianSpec &h, const std::vector<FirstOrderTerm> &terms,
                               EnvironmentMode mode) {
    if (terms.size() != h.terms().size()) {
        throw std::invalid_argument("average terms do not match the Hamiltonian");
    }
    return assemble(env_blocks(h, mode, [&](size_t t) { return terms[t].average; }));
}

namespace {

int sigma2_count(const PauliString &label) {
    int n = 0;
    for (const auto &s : label.sites()) {
        n += (s.j == 1 && s.k == 1) ? 1 : 0;
    }
    return n;
}

// Qubit values are shown relative to the Hermitian Pauli basis.
std::complex<double> display_value(const PauliString &label, std::complex<double> raw) {
    if (label.dim() != 2) {
        return raw;
    }
    static const std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return raw * powers[sigma2_count(label) % 4];
}

std::string label_text(const PauliString &p) { return p.dim() == 2 ? to_pauli_digits(p) : to_string(p); }

std::string complex_text(std::complex<double> v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gj", v.real() == 0.0 ? 0.0 : v.real(), v.imag() == 0.0 ? 0.0 : v.imag());
    return buf;
}

std::string short_complex(std::complex<double> v) {
    char buf[64];
    if (std::abs(v.imag()) < 1e-15) {
        std::snprintf(buf, sizeof buf, "%.6g", v.real() == 0.0 ? 0.0 : v.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.6g%+.6gi", v.real(), v.imag());
    }
    return buf;
}

}  // namespace

std::string render_report_table(const AverageReport &report) {
    std::ostringstream out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-16s %-5s %-20s %-20s %s\n", "label", "env", "target", "achieved", "deviation");
    out << buf;
    for (const auto &e : report.labels) {
        std::snprintf(buf, sizeof buf, "%-16s %-5s %-20s %-20s %.3g%s\n", label_text(e.label).c_str(),
                      e.env_coupled ? "yes" : "no", short_complex(display_value(e.label, e.target)).c_str(),
                      short_complex(display_value(e.label, e.achieved)).c_str(), e.deviation,
                      e.unreachable ? "  (absent from H)" : "");
        out << buf;
    }
    std::snprintf(buf, sizeof buf, "max deviation %.3g, max environment residual %.3g, tolerance %.3g (%s): %s\n",
                  report.max_deviation, report.max_env_residual, report.tolerance,
                  report.exact ? "exact" : "floating", report.pass ? "PASS" : "FAIL");
    out << buf;
    return out.str();
}

std::string render_report_csv(const AverageReport &report) {
    std::ostringstream out;
    out << "label,target,achieved,deviation\n";
    char buf[64];
    for (const auto &e : report.labels) {
        std::snprintf(buf, sizeof buf, "%.17g", e.deviation);
        out << label_text(e.label) << "," << complex_text(display_value(e.label, e.target)) << ","
            << complex_text(display_value(e.label, e.achieved)) << "," << buf << "\n";
    }
    return out.str();
}

}  // namespace ddsynth
