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

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ddsynth/pauli.hpp"
#include "ddsynth/rational.hpp"

namespace ddsynth {

/// Input text that does not follow a file grammar. `line()` is 1-based, 0 when unknown.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, size_t line = 0);
    size_t line() const { return line_; }

   private:
    size_t line_;
};

/// The target asks for a term the decoupling scheme cannot produce: either the
/// term is missing from H, or it is coupled to the environment in H.
class UnreachableTargetError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A complex coefficient, exact when it was read from a decimal or fraction.
struct Coefficient {
    std::complex<double> value{0.0, 0.0};
    std::optional<GaussianRational> exact;

    Coefficient() = default;
    explicit Coefficient(GaussianRational q) : value(q.to_complex()), exact(std::move(q)) {}
    explicit Coefficient(std::complex<double> v) : value(v) {}

    bool is_zero() const { return exact ? exact->is_zero() : value == std::complex<double>{}; }
    Coefficient conj() const;
    Coefficient times_i_power(int power) const;

    friend Coefficient operator+(const Coefficient &a, const Coefficient &b);
    friend bool operator==(const Coefficient &a, const Coefficient &b);
};

/// One basis term of a Hamiltonian. `coeff` is relative to the sigma_{j,k} basis
/// (for qubits, sigma_2 = -i sigma_{1,1}; see pauli_coefficient()).
struct HamTerm {
    PauliString label;
    Coefficient coeff;
    bool env_coupled = false;
    /// False for an `envterm` whose coefficient was omitted (stored as 1).
    bool explicit_coefficient = true;

    /// The coefficient relative to the Hermitian Pauli basis for d = 2; the raw one otherwise.
    Coefficient pauli_coefficient() const;

    friend bool operator==(const HamTerm &, const HamTerm &) = default;
};

/// Sparse expansion of a traceless Hamiltonian in the generalized Pauli basis.
/// Terms keep their first-insertion order.
class HamiltonianSpec {
   public:
    HamiltonianSpec(int dim, size_t num_sites);

    int dim() const { return dim_; }
    size_t num_sites() const { return num_sites_; }
    const std::vector<HamTerm> &terms() const { return terms_; }

    /// Adds a term, summing into an existing term with the same label.
    /// Throws std::invalid_argument for the identity label, a dimension mismatch,
    /// or a coefficient that is (or sums to) zero.
    void add_term(const PauliString &label, const Coefficient &raw_coeff, bool env_coupled,
                  bool explicit_coefficient = true);

    /// As add_term, with the coefficient given relative to the qubit Pauli basis when d = 2.
    void add_pauli_term(const PauliString &label, const Coefficient &pauli_coeff, bool env_coupled,
                        bool explicit_coefficient = true);

    const HamTerm *find(const PauliString &label) const;

    /// True when every system (non-environment) coefficient is exact.
    bool system_coefficients_exact() const;

    friend bool operator==(const HamiltonianSpec &a, const HamiltonianSpec &b) {
        return a.dim_ == b.dim_ && a.num_sites_ == b.num_sites_ && a.terms_ == b.terms_;
    }

   private:
    int dim_;
    size_t num_sites_;
    std::vector<HamTerm> terms_;
    std::unordered_map<std::uint64_t, size_t> index_;
};

enum class HamiltonianRole { System, Target };

/// Parses the line-oriented Hamiltonian format:
///
///     dim <d> sites <N>
///     term <label> <re> <im>
///     envterm <label> [<re> <im>]
///
/// `#` starts a comment. Labels are base-4 Pauli digits or `j.k` tokens joined by `x`.
/// For d = 2 coefficients refer to the Hermitian Pauli basis. Targets reject `envterm`.
HamiltonianSpec parse_hamiltonian(std::string_view text, HamiltonianRole role = HamiltonianRole::System);

std::string render_hamiltonian(const HamiltonianSpec &spec);

struct HermiticityReport {
    bool hermitian = true;
    std::optional<PauliString> violating_label;
    std::string message;
};

/// Checks that each label's conjugate partner (-j,-k) is present and that
/// mu_{j,k} = w^{<j,k>} conj(mu_{-j,-k}). Environment terms only need a partner
/// that is also environment-coupled.
HermiticityReport check_hermitian(const HamiltonianSpec &spec, double tolerance = 1e-12);

/// Right-hand side of the decoupling system: for every label of H (in order),
/// the ratio nu_k / mu_k of target to original coefficient.
struct RatioVector {
    int dim = 2;
    size_t num_sites = 0;
    std::vector<PauliString> labels;
    std::vector<std::complex<double>> values;
    std::vector<bool> env_coupled;
    /// Present when every ratio is exactly known.
    std::optional<std::vector<GaussianRational>> exact;

    size_t size() const { return labels.size(); }
    /// True for qubits with exact, real ratios: the path that runs in rational arithmetic.
    bool exact_real() const;
    std::optional<size_t> position(const PauliString &label) const;
};

/// Throws UnreachableTargetError when the target contains a label absent from H
/// or a nonzero environment-coupled label, std::invalid_argument on shape mismatch.
RatioVector target_ratio_vector(const HamiltonianSpec &h, const HamiltonianSpec &target);

}  // namespace ddsynth
