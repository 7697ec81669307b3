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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ddsynth {

/// Power of the primitive root of unity w = exp(2 pi i / d), stored as an
/// exponent reduced mod d.
class PhaseExponent {
   public:
    PhaseExponent() = default;
    PhaseExponent(long long value, int dim);

    int value() const { return value_; }
    int dim() const { return dim_; }

    PhaseExponent operator+(PhaseExponent other) const;
    PhaseExponent operator-() const;
    PhaseExponent operator-(PhaseExponent other) const { return *this + (-other); }

    bool operator==(const PhaseExponent &) const = default;

   private:
    int value_ = 0;
    int dim_ = 2;
};

/// Indices (j, k) of a generalized spin operator sigma_{j,k} = sum_l w^{jl} |l><l+k|.
struct SpinLabel {
    int j = 0;
    int k = 0;

    auto operator<=>(const SpinLabel &) const = default;
};

/// N-site tensor product of generalized spin operators times w^phase.
///
/// Sites are stored most-significant first, so site 0 is the leftmost factor
/// and the leftmost character of the digit rendering.
class PauliString {
   public:
    PauliString() = default;
    PauliString(int dim, std::vector<SpinLabel> sites, long long phase = 0);

    static PauliString identity(int dim, size_t num_sites);

    int dim() const { return dim_; }
    size_t num_sites() const { return sites_.size(); }
    const std::vector<SpinLabel> &sites() const { return sites_; }
    const SpinLabel &operator[](size_t i) const { return sites_[i]; }
    PhaseExponent phase() const { return PhaseExponent(phase_, dim_); }

    /// Same operator with the global phase dropped.
    PauliString basis() const { return PauliString(dim_, sites_, 0); }
    PauliString with_phase(long long phase) const { return PauliString(dim_, sites_, phase); }

    bool is_identity_basis() const;
    /// Number of non-identity sites.
    size_t weight() const;

    /// Compares operator content, ignoring the global phase.
    bool same_basis(const PauliString &other) const {
        return dim_ == other.dim_ && sites_ == other.sites_;
    }
    /// Full equality, phase included.
    bool operator==(const PauliString &other) const {
        return same_basis(other) && phase_ == other.phase_;
    }

   private:
    int dim_ = 2;
    int phase_ = 0;
    std::vector<SpinLabel> sites_;
};

/// sigma_{j,k} sigma_{s,t} = w^{sk} sigma_{j+s,k+t}, applied sitewise with phases accumulated.
PauliString product(const PauliString &a, const PauliString &b);

/// sigma_{j,k}^dagger = w^{jk} sigma_{-j,-k}, applied sitewise; the input phase is negated.
PauliString adjoint(const PauliString &a);

/// Exponent e with by^dagger target by = w^e target, namely
/// sum_i (j_i t_i - k_i s_i) mod d for target (s,t) and conjugating string (j,k).
/// Independent of either phase.
PhaseExponent conjugation_exponent(const PauliString &target, const PauliString &by);

/// Maps the qubit Pauli index (0 = I, 1 = X, 2 = Y, 3 = Z) to its (j,k) label.
/// Index 2 maps to (1,1), which is i*sigma_2; the factor never enters conjugation exponents.
SpinLabel qubit_label_map(int pauli_index);

/// Inverse of qubit_label_map.
int qubit_pauli_index(SpinLabel label);

/// Per-site digit used for column ordering: the qubit Pauli index for d = 2, j*d + k otherwise.
int site_digit(SpinLabel label, int dim);
SpinLabel label_from_site_digit(int digit, int dim);

/// Label (-j, -k) sitewise, phase 0: the basis content of the adjoint.
PauliString conjugate_partner(const PauliString &p);

/// Number of basis strings d^(2N). Throws std::overflow_error beyond 2^62.
std::uint64_t basis_size(int dim, size_t num_sites);

/// Position of the basis content in the ordering used for system-matrix columns:
/// site digits (see site_digit) read as a base-d^2 number, site 0 most significant.
/// For qubits this is the base-4 Pauli label, e.g. `30` -> 12.
std::uint64_t basis_index(const PauliString &p);
PauliString basis_from_index(std::uint64_t index, int dim, size_t num_sites);

/// Canonical text: `j.k` tokens joined by `x`, prefixed by `w^p*` when the phase is nonzero.
std::string to_string(const PauliString &p);

/// Qubit-only rendering as base-4 Pauli digits, e.g. `30`; the phase is not rendered.
std::string to_pauli_digits(const PauliString &p);

/// Parses the canonical form; for d = 2 a bare digit string like `30` is accepted too.
/// Throws std::invalid_argument on malformed text.
PauliString parse_pauli_string(std::string_view text, int dim);

}  // namespace ddsynth
