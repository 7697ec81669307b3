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

#include "ddsynth/linear_system.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ddsynth/dense.hpp"

namespace ddsynth {

namespace {

// Column exponents for one row, computed digit by digit.
std::vector<int> row_exponents(const PauliString &label) {
    const int d = label.dim();
    const size_t n = label.num_sites();
    const std::uint64_t size = basis_size(d, n);
    const int per_site = d * d;

    // Per-site table: exponent contribution of column digit c at site i.
    std::vector<std::vector<int>> site_table(n, std::vector<int>(per_site));
    for (size_t i = 0; i < n; ++i) {
        const auto [s, t] = label[i];
        for (int c = 0; c < per_site; ++c) {
            const auto [j, k] = label_from_site_digit(c, d);
            site_table[i][c] = ((j * t - k * s) % d + d) % d;
        }
    }
    std::vector<int> out(size);
    for (std::uint64_t col = 0; col < size; ++col) {
        std::uint64_t rest = col;
        int e = 0;
        for (size_t i = n; i-- > 0;) {
            e += site_table[i][rest % per_site];
            rest /= per_site;
        }
        out[col] = e % d;
    }
    return out;
}

void require_same_shape(const RatioVector &rv, const SolutionVector &e) {
    if (rv.dim != e.dim || rv.num_sites != e.num_sites || e.values.size() != basis_size(rv.dim, rv.num_sites)) {
        throw std::invalid_argument("solution vector does not match the ratio vector");
    }
}

SolutionVector from_exact(int dim, size_t num_sites, std::vector<Rational> exact) {
    SolutionVector out;
    out.dim = dim;
    out.num_sites = num_sites;
    out.values.reserve(exact.size());
    for (const auto &q : exact) {
        out.values.push_back(to_double(q));
    }
    out.exact = std::move(exact);
    return out;
}

}  // namespace

std::complex<double> SystemRow::entry(std::uint64_t column) const { return root_of_unity(entries.at(column)); }

std::complex<double> SystemRow::sum() const {
    std::complex<double> s{};
    for (const auto &e : entries) {
        s += root_of_unity(e);
    }
    return s;
}

SystemRow system_row(const PauliString &label) {
    SystemRow row{label.basis(), {}};
    const auto exps = row_exponents(label);
    row.entries.reserve(exps.size());
    for (int e : exps) {
        row.entries.emplace_back(e, label.dim());
    }
    return row;
}

PhaseExponent system_entry(const PauliString &label, std::uint64_t column) {
    return conjugation_exponent(label, basis_from_index(column, label.dim(), label.num_sites()));
}

double SolutionVector::scaling() const {
    double s = 0.0;
    for (double v : values) {
        s += v;
    }
    return s;
}

std::optional<Rational> SolutionVector::exact_scaling() const {
    if (!exact) {
        return std::nullopt;
    }
    Rational s = 0;
    for (const auto &q : *exact) {
        s += q;
    }
    return s;
}

double SolutionVector::min_entry() const {
    return values.empty() ? 0.0 : *std::min_element(values.begin(), values.end());
}

std::vector<std::complex<double>> particular_solution_complex(const RatioVector &rv) {
    const std::uint64_t size = basis_size(rv.dim, rv.num_sites);
    std::vector<std::complex<double>> e(size);
    for (size_t k = 0; k < rv.size(); ++k) {
        if (rv.values[k] == std::complex<double>{}) {
            continue;
        }
        const auto exps = row_exponents(rv.labels[k]);
        for (std::uint64_t col = 0; col < size; ++col) {
            e[col] += std::conj(root_of_unity(exps[col], rv.dim)) * rv.values[k];
        }
    }
    const double scale = 1.0 / static_cast<double>(size);
    for (auto &v : e) {
        v *= scale;
    }
    return e;
}

SolutionVector particular_solution(const RatioVector &rv, double imag_tolerance) {
    const std::uint64_t size = basis_size(rv.dim, rv.num_sites);
    if (rv.exact_real()) {
        std::vector<Rational> e(size, Rational(0));
        for (size_t k = 0; k < rv.size(); ++k) {
            const Rational &r = (*rv.exact)[k].re;
            if (r == 0) {
                continue;
            }
            const auto exps = row_exponents(rv.labels[k]);
            for (std::uint64_t col = 0; col < size; ++col) {
                e[col] += exps[col] == 0 ? r : Rational(-r);
            }
        }
        for (auto &q : e) {
            q /= Rational(Integer(size));
        }
        return from_exact(rv.dim, rv.num_sites, std::move(e));
    }

    const auto complex_e = particular_solution_complex(rv);
    SolutionVector out;
    out.dim = rv.dim;
    out.num_sites = rv.num_sites;
    out.values.reserve(size);
    for (const auto &v : complex_e) {
        if (std::abs(v.imag()) > imag_tolerance) {
            throw std::domain_error("particular solution has an imaginary part; the input is not Hermitian");
        }
        out.values.push_back(v.real());
    }
    return out;
}

SolutionVector shift_nonnegative(const SolutionVector &e) {
    SolutionVector out = e;
    if (e.exact) {
        const Rational lowest = *std::min_element(e.exact->begin(), e.exact->end());
        if (lowest >= 0) {
            return out;
        }
        for (auto &q : *out.exact) {
            q -= lowest;
        }
        for (size_t i = 0; i < out.values.size(); ++i) {
            out.values[i] = to_double((*out.exact)[i]);
        }
        return out;
    }
    const double lowest = e.min_entry();
    if (lowest >= 0.0) {
        return out;
    }
    for (auto &v : out.values) {
        v -= lowest;
    }
    // The minimum lands on exactly zero.
    for (size_t i = 0; i < out.values.size(); ++i) {
        if (e.values[i] == lowest) {
            out.values[i] = 0.0;
        }
    }
    return out;
}

namespace {

void require_outside_k(const RatioVector &rv, const PauliString &label) {
    if (label.dim() != rv.dim || label.num_sites() != rv.num_sites) {
        throw std::invalid_argument("label does not match the system");
    }
    if (rv.position(label) || rv.position(conjugate_partner(label))) {
        throw std::invalid_argument("label " + to_string(label) +
                                    " is in K; only rows outside K solve the homogeneous system");
    }
}

}  // namespace

SolutionVector add_homogeneous(const SolutionVector &e, const RatioVector &rv, const PauliString &label,
                               std::complex<double> weight) {
    require_same_shape(rv, e);
    require_outside_k(rv, label);
    const bool self_partner = conjugate_partner(label).same_basis(label);
    if (self_partner && weight.imag() != 0.0) {
        throw std::invalid_argument("row of " + to_string(label) + " is real; the weight must be real");
    }
    SolutionVector out = e;
    out.exact.reset();
    if (weight == std::complex<double>{}) {
        out.exact = e.exact;
        return out;
    }
    const auto exps = row_exponents(label);
    for (size_t col = 0; col < exps.size(); ++col) {
        const auto a = root_of_unity(exps[col], rv.dim);
        // w a + conj(w a) for a distinct partner row; w a for a real row.
        out.values[col] += self_partner ? (weight * a).real() : 2.0 * (weight * a).real();
    }
    return out;
}

SolutionVector add_homogeneous(const SolutionVector &e, const RatioVector &rv, const PauliString &label,
                               const Rational &weight) {
    require_same_shape(rv, e);
    require_outside_k(rv, label);
    if (rv.dim != 2) {
        throw std::invalid_argument("exact homogeneous shifts are only defined for qubits");
    }
    if (!e.exact) {
        return add_homogeneous(e, rv, label, std::complex<double>(to_double(weight), 0.0));
    }
    std::vector<Rational> exact = *e.exact;
    const auto exps = row_exponents(label);
    for (size_t col = 0; col < exps.size(); ++col) {
        exact[col] += exps[col] == 0 ? weight : Rational(-weight);
    }
    return from_exact(e.dim, e.num_sites, std::move(exact));
}

double residual(const RatioVector &rv, const SolutionVector &e) {
    require_same_shape(rv, e);
    double worst = 0.0;
    for (size_t k = 0; k < rv.size(); ++k) {
        const auto exps = row_exponents(rv.labels[k]);
        std::complex<double> s{};
        for (size_t col = 0; col < exps.size(); ++col) {
            s += root_of_unity(exps[col], rv.dim) * e.values[col];
        }
        worst = std::max(worst, std::abs(s - rv.values[k]));
    }
    return worst;
}

std::optional<Rational> exact_residual(const RatioVector &rv, const SolutionVector &e) {
    require_same_shape(rv, e);
    if (!rv.exact_real() || !e.exact) {
        return std::nullopt;
    }
    Rational worst = 0;
    for (size_t k = 0; k < rv.size(); ++k) {
        const auto exps = row_exponents(rv.labels[k]);
        Rational s = 0;
        for (size_t col = 0; col < exps.size(); ++col) {
            s += exps[col] == 0 ? (*e.exact)[col] : Rational(-(*e.exact)[col]);
        }
        worst = std::max(worst, Rational(abs(s - (*rv.exact)[k].re)));
    }
    return worst;
}

std::uint64_t CountVector::count(std::uint64_t column) const {
    auto it = counts.find(column);
    return it == counts.end() ? 0 : it->second;
}

CountVector rationalize(const SolutionVector &e, std::int64_t max_denominator, std::uint64_t max_length) {
    if (max_denominator < 1) {
        throw std::invalid_argument("max_denominator must be at least 1");
    }
    const size_t size = e.values.size();
    CountVector out;
    out.dim = e.dim;
    out.num_sites = e.num_sites;

    std::vector<Rational> x(size);
    Rational scaling;
    if (e.exact) {
        scaling = *e.exact_scaling();
        for (size_t j = 0; j < size; ++j) {
            if ((*e.exact)[j] < 0) {
                throw std::invalid_argument("rationalize needs a non-negative solution");
            }
        }
        if (scaling != 0) {
            for (size_t j = 0; j < size; ++j) {
                x[j] = (*e.exact)[j] / scaling;
            }
        }
    } else {
        const double d = e.scaling();
        for (double v : e.values) {
            if (v < -1e-12 * std::max(1.0, std::abs(d))) {
                throw std::invalid_argument("rationalize needs a non-negative solution");
            }
        }
        if (d > 1e-15) {
            for (size_t j = 0; j < size; ++j) {
                x[j] = rational_from_double(std::max(0.0, e.values[j]) / d);
            }
            scaling = best_rational_approximation(rational_from_double(d), Integer(1000000));
        } else {
            scaling = 0;
        }
    }

    if (scaling == 0) {
        // Nothing to keep: every basis string once averages all of H away.
        if (size > max_length) {
            throw std::overflow_error("uniform scheme longer than max_length");
        }
        for (size_t j = 0; j < size; ++j) {
            out.counts[j] = 1;
        }
        out.length = size;
        out.scaling = 1;
        out.rounding_error = 0.0;
        return out;
    }

    std::vector<Rational> approx(size);
    Integer m = 1;
    for (size_t j = 0; j < size; ++j) {
        approx[j] = best_rational_approximation(x[j], Integer(max_denominator));
        if (approx[j] != 0) {
            m = lcm(m, denominator(approx[j]));
            if (m > max_length) {
                throw std::overflow_error("scheme length exceeds max_length; lower max_denominator");
            }
        }
    }
    Integer total = 0;
    for (size_t j = 0; j < size; ++j) {
        if (approx[j] != 0) {
            Integer c = numerator(approx[j]) * (m / denominator(approx[j]));
            out.counts[j] = c.convert_to<std::uint64_t>();
            total += c;
        }
    }
    if (total == 0) {
        // Every entry rounded away; keep the dominant one.
        size_t best = static_cast<size_t>(std::max_element(x.begin(), x.end()) - x.begin());
        out.counts[best] = 1;
        total = 1;
    }
    out.length = total.convert_to<std::uint64_t>();
    out.scaling = scaling;

    double worst = 0.0;
    for (size_t j = 0; j < size; ++j) {
        Rational achieved(Integer(out.count(j)), Integer(out.length));
        worst = std::max(worst, to_double(Rational(abs(achieved - x[j]))));
    }
    out.rounding_error = worst;
    return out;
}

std::string dump_system_csv(const RatioVector &rv) {
    const std::uint64_t size = basis_size(rv.dim, rv.num_sites);
    auto label_text = [&](const PauliString &p) { return rv.dim == 2 ? to_pauli_digits(p) : to_string(p); };
    std::ostringstream out;
    out << "label";
    for (std::uint64_t col = 0; col < size; ++col) {
        out << "," << label_text(basis_from_index(col, rv.dim, rv.num_sites));
    }
    out << "\n";
    char buf[64];
    for (const auto &label : rv.labels) {
        const auto exps = row_exponents(label);
        out << label_text(label);
        for (int e : exps) {
            const auto a = root_of_unity(e, rv.dim);
            std::snprintf(buf, sizeof buf, ",%.17g%+.17gj", a.real(), a.imag());
            out << buf;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace ddsynth
