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

#include "ddsynth/pauli.hpp"

#include <cctype>
#include <stdexcept>

namespace ddsynth {

namespace {

int mod(long long value, int dim) {
    long long r = value % dim;
    return static_cast<int>(r < 0 ? r + dim : r);
}

void require_compatible(const PauliString &a, const PauliString &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("Pauli strings have different local dimensions");
    }
    if (a.num_sites() != b.num_sites()) {
        throw std::invalid_argument("Pauli strings have different site counts");
    }
}

}  // namespace

PhaseExponent::PhaseExponent(long long value, int dim) : value_(0), dim_(dim) {
    if (dim < 2) {
        throw std::invalid_argument("local dimension must be at least 2");
    }
    value_ = mod(value, dim);
}

PhaseExponent PhaseExponent::operator+(PhaseExponent other) const {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("phase exponents with different moduli");
    }
    return PhaseExponent(value_ + other.value_, dim_);
}

PhaseExponent PhaseExponent::operator-() const { return PhaseExponent(-value_, dim_); }

PauliString::PauliString(int dim, std::vector<SpinLabel> sites, long long phase)
    : dim_(dim), phase_(0), sites_(std::move(sites)) {
    if (dim < 2) {
        throw std::invalid_argument("local dimension must be at least 2");
    }
    phase_ = mod(phase, dim);
    for (auto &s : sites_) {
        s.j = mod(s.j, dim);
        s.k = mod(s.k, dim);
    }
}

PauliString PauliString::identity(int dim, size_t num_sites) {
    return PauliString(dim, std::vector<SpinLabel>(num_sites), 0);
}

bool PauliString::is_identity_basis() const { return weight() == 0; }

size_t PauliString::weight() const {
    size_t w = 0;
    for (const auto &s : sites_) {
        w += (s.j != 0 || s.k != 0) ? 1 : 0;
    }
    return w;
}

PauliString product(const PauliString &a, const PauliString &b) {
    require_compatible(a, b);
    const int d = a.dim();
    long long phase = a.phase().value() + b.phase().value();
    std::vector<SpinLabel> sites(a.num_sites());
    for (size_t i = 0; i < sites.size(); ++i) {
        const auto [j, k] = a[i];
        const auto [s, t] = b[i];
        phase += static_cast<long long>(s) * k;
        sites[i] = {j + s, k + t};
    }
    return PauliString(d, std::move(sites), phase);
}

PauliString adjoint(const PauliString &a) {
    const int d = a.dim();
    long long phase = -a.phase().value();
    std::vector<SpinLabel> sites(a.num_sites());
    for (size_t i = 0; i < sites.size(); ++i) {
        const auto [j, k] = a[i];
        phase += static_cast<long long>(j) * k;
        sites[i] = {d - j, d - k};
    }
    return PauliString(d, std::move(sites), phase);
}

PhaseExponent conjugation_exponent(const PauliString &target, const PauliString &by) {
    require_compatible(target, by);
    long long e = 0;
    for (size_t i = 0; i < target.num_sites(); ++i) {
        const auto [s, t] = target[i];
        const auto [j, k] = by[i];
        e += static_cast<long long>(j) * t - static_cast<long long>(k) * s;
    }
    return PhaseExponent(e, target.dim());
}

SpinLabel qubit_label_map(int pauli_index) {
    switch (pauli_index) {
        case 0:
            return {0, 0};
        case 1:
            return {0, 1};
        case 2:
            return {1, 1};
        case 3:
            return {1, 0};
        default:
            throw std::invalid_argument("qubit Pauli index must be in [0, 3], got " +
                                        std::to_string(pauli_index));
    }
}

int qubit_pauli_index(SpinLabel label) {
    static constexpr int table[2][2] = {{0, 1}, {3, 2}};
    if (label.j < 0 || label.j > 1 || label.k < 0 || label.k > 1) {
        throw std::invalid_argument("not a qubit label");
    }
    return table[label.j][label.k];
}

int site_digit(SpinLabel label, int dim) {
    return dim == 2 ? qubit_pauli_index(label) : label.j * dim + label.k;
}

SpinLabel label_from_site_digit(int digit, int dim) {
    if (dim == 2) {
        return qubit_label_map(digit);
    }
    if (digit < 0 || digit >= dim * dim) {
        throw std::invalid_argument("site digit out of range");
    }
    return {digit / dim, digit % dim};
}

PauliString conjugate_partner(const PauliString &p) {
    std::vector<SpinLabel> sites(p.num_sites());
    for (size_t i = 0; i < sites.size(); ++i) {
        sites[i] = {-p[i].j, -p[i].k};
    }
    return PauliString(p.dim(), std::move(sites), 0);
}

std::uint64_t basis_size(int dim, size_t num_sites) {
    const std::uint64_t per_site = static_cast<std::uint64_t>(dim) * dim;
    std::uint64_t size = 1;
    for (size_t i = 0; i < num_sites; ++i) {
        if (size > (std::uint64_t{1} << 62) / per_site) {
            throw std::overflow_error("operator basis too large");
        }
        size *= per_site;
    }
    return size;
}

std::uint64_t basis_index(const PauliString &p) {
    const std::uint64_t per_site = static_cast<std::uint64_t>(p.dim()) * p.dim();
    std::uint64_t index = 0;
    for (const auto &s : p.sites()) {
        index = index * per_site + static_cast<std::uint64_t>(site_digit(s, p.dim()));
    }
    return index;
}

PauliString basis_from_index(std::uint64_t index, int dim, size_t num_sites) {
    const std::uint64_t per_site = static_cast<std::uint64_t>(dim) * dim;
    std::vector<SpinLabel> sites(num_sites);
    for (size_t i = num_sites; i-- > 0;) {
        sites[i] = label_from_site_digit(static_cast<int>(index % per_site), dim);
        index /= per_site;
    }
    if (index != 0) {
        throw std::out_of_range("basis index out of range");
    }
    return PauliString(dim, std::move(sites), 0);
}

std::string to_string(const PauliString &p) {
    std::string out;
    if (p.phase().value() != 0) {
        out += "w^" + std::to_string(p.phase().value()) + "*";
    }
    for (size_t i = 0; i < p.num_sites(); ++i) {
        if (i) {
            out += 'x';
        }
        out += std::to_string(p[i].j) + "." + std::to_string(p[i].k);
    }
    return out;
}

std::string to_pauli_digits(const PauliString &p) {
    if (p.dim() != 2) {
        throw std::invalid_argument("Pauli digit rendering requires d = 2");
    }
    std::string out;
    for (const auto &s : p.sites()) {
        out += static_cast<char>('0' + qubit_pauli_index(s));
    }
    return out;
}

namespace {

int parse_index(std::string_view text, int dim, std::string_view whole) {
    if (text.empty()) {
        throw std::invalid_argument("empty index in Pauli string '" + std::string(whole) + "'");
    }
    int value = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("bad index in Pauli string '" + std::string(whole) + "'");
        }
        value = value * 10 + (c - '0');
        if (value >= dim) {
            throw std::invalid_argument("index out of range for d=" + std::to_string(dim) + " in '" +
                                        std::string(whole) + "'");
        }
    }
    return value;
}

}  // namespace

PauliString parse_pauli_string(std::string_view text, int dim) {
    if (dim < 2) {
        throw std::invalid_argument("local dimension must be at least 2");
    }
    const std::string_view whole = text;
    long long phase = 0;
    if (text.starts_with("w^")) {
        auto star = text.find('*');
        if (star == std::string_view::npos) {
            throw std::invalid_argument("phase prefix without '*' in '" + std::string(whole) + "'");
        }
        auto digits = text.substr(2, star - 2);
        if (digits.empty()) {
            throw std::invalid_argument("empty phase exponent in '" + std::string(whole) + "'");
        }
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw std::invalid_argument("bad phase exponent in '" + std::string(whole) + "'");
            }
            phase = phase * 10 + (c - '0');
        }
        text.remove_prefix(star + 1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli string");
    }

    std::vector<SpinLabel> sites;
    if (dim == 2 && text.find_first_not_of("0123") == std::string_view::npos) {
        for (char c : text) {
            sites.push_back(qubit_label_map(c - '0'));
        }
        return PauliString(dim, std::move(sites), phase);
    }

    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('x', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto token = text.substr(start, end - start);
        auto dot = token.find('.');
        if (dot == std::string_view::npos) {
            throw std::invalid_argument("site token '" + std::string(token) + "' is not of the form j.k");
        }
        sites.push_back({parse_index(token.substr(0, dot), dim, whole),
                         parse_index(token.substr(dot + 1), dim, whole)});
        start = end + 1;
    }
    return PauliString(dim, std::move(sites), phase);
}

}  // namespace ddsynth
