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

#include "ddsynth/hamiltonian.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "ddsynth/dense.hpp"

namespace ddsynth {

ParseError::ParseError(const std::string &message, size_t line)
    : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

Coefficient Coefficient::conj() const {
    Coefficient out(std::conj(value));
    if (exact) {
        out.exact = exact->conj();
    }
    return out;
}

Coefficient Coefficient::times_i_power(int power) const {
    if (exact) {
        return Coefficient(exact->times_i_power(power));
    }
    static const std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return Coefficient(value * powers[((power % 4) + 4) % 4]);
}

Coefficient operator+(const Coefficient &a, const Coefficient &b) {
    if (a.exact && b.exact) {
        return Coefficient(*a.exact + *b.exact);
    }
    return Coefficient(a.value + b.value);
}

bool operator==(const Coefficient &a, const Coefficient &b) {
    if (a.exact.has_value() != b.exact.has_value()) {
        return false;
    }
    return a.exact ? *a.exact == *b.exact : a.value == b.value;
}

namespace {

int count_sigma2(const PauliString &label) {
    int n = 0;
    for (const auto &s : label.sites()) {
        n += (s.j == 1 && s.k == 1) ? 1 : 0;
    }
    return n;
}

}  // namespace

Coefficient HamTerm::pauli_coefficient() const {
    // sigma_2 = -i sigma_{1,1}, so mu_raw = p * (-i)^{n2} and p = mu_raw * i^{n2}.
    return label.dim() == 2 ? coeff.times_i_power(count_sigma2(label)) : coeff;
}

HamiltonianSpec::HamiltonianSpec(int dim, size_t num_sites) : dim_(dim), num_sites_(num_sites) {
    if (dim < 2) {
        throw std::invalid_argument("local dimension must be at least 2");
    }
    if (num_sites == 0) {
        throw std::invalid_argument("a Hamiltonian needs at least one site");
    }
    basis_size(dim, num_sites);
}

void HamiltonianSpec::add_term(const PauliString &label, const Coefficient &raw_coeff, bool env_coupled,
                               bool explicit_coefficient) {
    if (label.dim() != dim_ || label.num_sites() != num_sites_) {
        throw std::invalid_argument("term label " + to_string(label) + " does not match dim " +
                                    std::to_string(dim_) + " sites " + std::to_string(num_sites_));
    }
    if (label.is_identity_basis()) {
        throw std::invalid_argument("the identity label is excluded (Hamiltonians are traceless)");
    }
    if (raw_coeff.is_zero()) {
        throw std::invalid_argument("zero coefficient for label " + to_string(label));
    }
    const auto key = basis_index(label);
    if (auto it = index_.find(key); it != index_.end()) {
        HamTerm &term = terms_[it->second];
        term.coeff = term.coeff + raw_coeff;
        term.env_coupled = term.env_coupled || env_coupled;
        term.explicit_coefficient = term.explicit_coefficient || explicit_coefficient;
        if (term.coeff.is_zero()) {
            throw std::invalid_argument("coefficients of label " + to_string(label) + " sum to zero");
        }
        return;
    }
    index_.emplace(key, terms_.size());
    terms_.push_back(HamTerm{label.basis(), raw_coeff, env_coupled, explicit_coefficient});
}

void HamiltonianSpec::add_pauli_term(const PauliString &label, const Coefficient &pauli_coeff, bool env_coupled,
                                     bool explicit_coefficient) {
    const Coefficient raw = dim_ == 2 ? pauli_coeff.times_i_power(-count_sigma2(label)) : pauli_coeff;
    add_term(label, raw, env_coupled, explicit_coefficient);
}

const HamTerm *HamiltonianSpec::find(const PauliString &label) const {
    if (label.dim() != dim_ || label.num_sites() != num_sites_) {
        return nullptr;
    }
    auto it = index_.find(basis_index(label));
    return it == index_.end() ? nullptr : &terms_[it->second];
}

bool HamiltonianSpec::system_coefficients_exact() const {
    for (const auto &t : terms_) {
        if (!t.env_coupled && !t.coeff.exact) {
            return false;
        }
    }
    return true;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            words.push_back(line.substr(start, i - start));
        }
    }
    return words;
}

struct ParsedReal {
    double value;
    std::optional<Rational> exact;
};

ParsedReal parse_real(std::string_view text, size_t line) {
    if (auto q = parse_exact_rational(text)) {
        return {to_double(*q), *q};
    }
    std::string owned(text);
    char *end = nullptr;
    double v = std::strtod(owned.c_str(), &end);
    if (end != owned.c_str() + owned.size() || !std::isfinite(v)) {
        throw ParseError("bad number '" + owned + "'", line);
    }
    return {v, std::nullopt};
}

Coefficient parse_coefficient(std::string_view re, std::string_view im, size_t line) {
    auto r = parse_real(re, line);
    auto i = parse_real(im, line);
    if (r.exact && i.exact) {
        return Coefficient(GaussianRational(*r.exact, *i.exact));
    }
    return Coefficient(std::complex<double>(r.value, i.value));
}

std::string format_rational(const Rational &q) {
    Integer den = denominator(q);
    Integer rest = den;
    int twos = 0, fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (den == 1) {
        return numerator(q).str();
    }
    if (rest != 1) {
        return to_fraction_string(q);
    }
    // Terminating decimal: scale to 10^digits.
    const int digits = std::max(twos, fives);
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
    }
    Integer scaled = numerator(q) * (scale / den);
    const bool negative = scaled < 0;
    std::string s = Integer(abs(scaled)).str();
    if (static_cast<int>(s.size()) <= digits) {
        s.insert(0, static_cast<size_t>(digits) - s.size() + 1, '0');
    }
    s.insert(s.size() - static_cast<size_t>(digits), ".");
    return negative ? "-" + s : s;
}

// Hex-float keeps inexact coefficients bit-exact and distinct from exact decimals on re-parse.
std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

std::string format_label(const PauliString &label) {
    return label.dim() == 2 ? to_pauli_digits(label) : to_string(label);
}

}  // namespace

HamiltonianSpec parse_hamiltonian(std::string_view text, HamiltonianRole role) {
    std::optional<HamiltonianSpec> spec;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto words = split_words(line);
        if (words.empty()) {
            continue;
        }
        if (words[0] == "dim") {
            if (spec) {
                throw ParseError("duplicate header", line_no);
            }
            if (words.size() != 4 || words[2] != "sites") {
                throw ParseError("expected 'dim <d> sites <N>'", line_no);
            }
            auto d = parse_exact_rational(words[1]);
            auto n = parse_exact_rational(words[3]);
            if (!d || !n || denominator(*d) != 1 || denominator(*n) != 1 || *d < 2 || *n < 1 || *d > 64 ||
                *n > 64) {
                throw ParseError("bad header values", line_no);
            }
            try {
                spec.emplace(static_cast<int>(numerator(*d)), static_cast<size_t>(numerator(*n)));
            } catch (const std::exception &e) {
                throw ParseError(e.what(), line_no);
            }
            continue;
        }
        const bool is_env = words[0] == "envterm";
        if (words[0] != "term" && !is_env) {
            throw ParseError("unknown directive '" + std::string(words[0]) + "'", line_no);
        }
        if (!spec) {
            throw ParseError("term before 'dim <d> sites <N>' header", line_no);
        }
        if (is_env && role == HamiltonianRole::Target) {
            throw ParseError("envterm is not allowed in a target Hamiltonian", line_no);
        }
        const bool has_coeff = words.size() == 4;
        if (!(has_coeff || (is_env && words.size() == 2))) {
            throw ParseError(is_env ? "expected 'envterm <label> [<re> <im>]'" : "expected 'term <label> <re> <im>'",
                             line_no);
        }
        PauliString label;
        try {
            label = parse_pauli_string(words[1], spec->dim());
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what(), line_no);
        }
        if (label.phase().value() != 0) {
            throw ParseError("term labels carry no phase", line_no);
        }
        if (label.num_sites() != spec->num_sites()) {
            throw ParseError("label '" + std::string(words[1]) + "' has " + std::to_string(label.num_sites()) +
                                 " sites, header says " + std::to_string(spec->num_sites()),
                             line_no);
        }
        Coefficient coeff = has_coeff ? parse_coefficient(words[2], words[3], line_no)
                                      : Coefficient(GaussianRational(Rational(1)));
        try {
            spec->add_pauli_term(label, coeff, is_env, has_coeff);
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (!spec) {
        throw ParseError("missing 'dim <d> sites <N>' header");
    }
    if (spec->terms().empty()) {
        throw ParseError("Hamiltonian has no terms");
    }
    return *spec;
}

std::string render_hamiltonian(const HamiltonianSpec &spec) {
    std::ostringstream out;
    out << "dim " << spec.dim() << " sites " << spec.num_sites() << "\n";
    for (const auto &term : spec.terms()) {
        out << (term.env_coupled ? "envterm " : "term ") << format_label(term.label);
        if (term.explicit_coefficient || !term.env_coupled) {
            Coefficient c = term.pauli_coefficient();
            if (c.exact) {
                out << " " << format_rational(c.exact->re) << " " << format_rational(c.exact->im);
            } else {
                out << " " << format_double(c.value.real()) << " " << format_double(c.value.imag());
            }
        }
        out << "\n";
    }
    return out.str();
}

namespace {

int label_dot(const PauliString &p) {
    long long s = 0;
    for (const auto &site : p.sites()) {
        s += static_cast<long long>(site.j) * site.k;
    }
    return static_cast<int>(s % p.dim());
}

}  // namespace

HermiticityReport check_hermitian(const HamiltonianSpec &spec, double tolerance) {
    const int d = spec.dim();
    for (const auto &term : spec.terms()) {
        const PauliString partner_label = conjugate_partner(term.label);
        const HamTerm *partner = spec.find(partner_label);
        if (!partner) {
            return {false, term.label,
                    "label " + to_string(term.label) + " has no conjugate partner " + to_string(partner_label)};
        }
        if (partner->env_coupled != term.env_coupled) {
            return {false, term.label,
                    "label " + to_string(term.label) + " and its partner disagree on environment coupling"};
        }
        if (term.env_coupled) {
            continue;
        }
        const int e = label_dot(term.label);
        bool ok;
        if (term.coeff.exact && partner->coeff.exact && (d == 2 || d == 4)) {
            // w^e is one of 1, i, -1, -i here: an exact i-power.
            const int power = (4 / d) * e;
            ok = term.coeff.exact.value() == partner->coeff.exact->conj().times_i_power(power);
        } else {
            const auto expected = root_of_unity(e, d) * std::conj(partner->coeff.value);
            ok = std::abs(term.coeff.value - expected) <= tolerance * std::max(1.0, std::abs(expected));
        }
        if (!ok) {
            return {false, term.label, "coefficient of " + to_string(term.label) + " violates the Hermiticity relation"};
        }
    }
    return {};
}

bool RatioVector::exact_real() const {
    if (dim != 2 || !exact) {
        return false;
    }
    for (const auto &q : *exact) {
        if (q.im != 0) {
            return false;
        }
    }
    return true;
}

std::optional<size_t> RatioVector::position(const PauliString &label) const {
    for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].same_basis(label)) {
            return i;
        }
    }
    return std::nullopt;
}

RatioVector target_ratio_vector(const HamiltonianSpec &h, const HamiltonianSpec &target) {
    if (h.dim() != target.dim() || h.num_sites() != target.num_sites()) {
        throw std::invalid_argument("H and the target have different dimensions or site counts");
    }
    for (const auto &t : target.terms()) {
        if (t.env_coupled) {
            throw std::invalid_argument("target Hamiltonian contains an environment-coupled term");
        }
        const HamTerm *source = h.find(t.label);
        if (!source) {
            throw UnreachableTargetError("target term " + to_string(t.label) +
                                         " is absent from H and cannot be created");
        }
        if (source->env_coupled) {
            throw UnreachableTargetError("target term " + to_string(t.label) +
                                         " is coupled to the environment in H and can only be suppressed");
        }
    }

    RatioVector rv;
    rv.dim = h.dim();
    rv.num_sites = h.num_sites();
    bool exact = true;
    std::vector<GaussianRational> exact_values;
    for (const auto &term : h.terms()) {
        rv.labels.push_back(term.label);
        rv.env_coupled.push_back(term.env_coupled);
        const HamTerm *wanted = term.env_coupled ? nullptr : target.find(term.label);
        if (!wanted) {
            rv.values.emplace_back(0.0, 0.0);
            exact_values.emplace_back();
            continue;
        }
        rv.values.push_back(wanted->coeff.value / term.coeff.value);
        if (wanted->coeff.exact && term.coeff.exact) {
            exact_values.push_back(*wanted->coeff.exact / *term.coeff.exact);
            rv.values.back() = exact_values.back().to_complex();
        } else {
            exact = false;
        }
    }
    if (exact) {
        rv.exact = std::move(exact_values);
    }
    return rv;
}

}  // namespace ddsynth
