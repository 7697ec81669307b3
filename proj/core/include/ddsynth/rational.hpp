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
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ddsynth {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational real, Rational imag = Rational(0)) : re(std::move(real)), im(std::move(imag)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    std::complex<double> to_complex() const;

    friend GaussianRational operator+(const GaussianRational &a, const GaussianRational &b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational &a, const GaussianRational &b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational &a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational &a, const GaussianRational &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    /// Throws std::domain_error when `b` is zero.
    friend GaussianRational operator/(const GaussianRational &a, const GaussianRational &b);
    friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
        return a.re == b.re && a.im == b.im;
    }

    /// Multiplies by i^power.
    GaussianRational times_i_power(int power) const;
};

double to_double(const Rational &q);

/// Renders as `p/q` (always with a denominator, `3/1` for integers).
std::string to_fraction_string(const Rational &q);

/// Parses an exact decimal (`-1.25`, `3e-2`, `7`) or fraction (`3/4`).
/// Returns nullopt if the text is not of one of these forms.
std::optional<Rational> parse_exact_rational(std::string_view text);

/// Best rational approximation of `x` with denominator at most `max_denominator`,
/// via continued-fraction convergents and semiconvergents.
Rational best_rational_approximation(const Rational &x, const Integer &max_denominator);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational rational_from_double(double x);

Integer lcm(const Integer &a, const Integer &b);

}  // namespace ddsynth
