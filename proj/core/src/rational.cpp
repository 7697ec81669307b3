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

#include "ddsynth/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace ddsynth {

std::complex<double> GaussianRational::to_complex() const { return {to_double(re), to_double(im)}; }

GaussianRational operator/(const GaussianRational &a, const GaussianRational &b) {
    Rational norm = b.re * b.re + b.im * b.im;
    if (norm == 0) {
        throw std::domain_error("division by zero");
    }
    GaussianRational num = a * b.conj();
    return {num.re / norm, num.im / norm};
}

GaussianRational GaussianRational::times_i_power(int power) const {
    switch (((power % 4) + 4) % 4) {
        case 0:
            return *this;
        case 1:
            return {-im, re};
        case 2:
            return {-re, -im};
        default:
            return {im, -re};
    }
}

double to_double(const Rational &q) { return q.convert_to<double>(); }

std::string to_fraction_string(const Rational &q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

std::optional<Integer> parse_integer(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    size_t pos = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) {
        return std::nullopt;
    }
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
            return std::nullopt;
        }
        value = value * 10 + (text[pos] - '0');
    }
    return negative ? Integer(-value) : value;
}

Integer pow10(long exponent) {
    Integer result = 1;
    for (long i = 0; i < exponent; ++i) {
        result *= 10;
    }
    return result;
}

}  // namespace

std::optional<Rational> parse_exact_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_integer(text.substr(0, slash));
        auto den = parse_integer(text.substr(slash + 1));
        if (!num || !den || *den == 0) {
            return std::nullopt;
        }
        return Rational(*num, *den);
    }

    long exponent = 0;
    std::string_view mantissa = text;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_value = parse_integer(text.substr(e + 1));
        // Exponents beyond this are left to the floating fallback.
        if (!exp_value || abs(*exp_value) > 400) {
            return std::nullopt;
        }
        exponent = exp_value->convert_to<long>();
        mantissa = text.substr(0, e);
    }

    std::string digits;
    bool negative = false;
    size_t pos = 0;
    if (!mantissa.empty() && (mantissa[0] == '+' || mantissa[0] == '-')) {
        negative = mantissa[0] == '-';
        pos = 1;
    }
    bool seen_point = false;
    bool seen_digit = false;
    for (; pos < mantissa.size(); ++pos) {
        char c = mantissa[pos];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point) {
                --exponent;
            }
        } else {
            return std::nullopt;
        }
    }
    if (!seen_digit) {
        return std::nullopt;
    }
    // A leading zero would make the string constructor read octal.
    const auto first = digits.find_first_not_of('0');
    Integer value(first == std::string::npos ? std::string("0") : digits.substr(first));
    if (negative) {
        value = -value;
    }
    if (exponent >= 0) {
        return Rational(value * pow10(exponent));
    }
    return Rational(value, pow10(-exponent));
}

namespace {

// floor(n / d) for d > 0
Integer floor_div(const Integer &n, const Integer &d) {
    Integer q = n / d;
    if ((n % d != 0) && (n < 0)) {
        q -= 1;
    }
    return q;
}

}  // namespace

Rational best_rational_approximation(const Rational &x, const Integer &max_denominator) {
    if (max_denominator < 1) {
        throw std::invalid_argument("max_denominator must be at least 1");
    }
    if (x < 0) {
        return -best_rational_approximation(-x, max_denominator);
    }
    if (denominator(x) <= max_denominator) {
        return x;
    }

    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Integer n = numerator(x);
    Integer d = denominator(x);
    while (true) {
        Integer a = floor_div(n, d);
        Integer q2 = q0 + a * q1;
        if (q2 > max_denominator) {
            break;
        }
        Integer p2 = p0 + a * p1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Integer rem = n - a * d;
        n = d;
        d = rem;
        if (d == 0) {
            return Rational(p1, q1);
        }
    }
    // Largest admissible semiconvergent against the last convergent.
    Integer k = (max_denominator - q0) / q1;
    Rational semi(p0 + k * p1, q0 + k * q1);
    Rational conv(p1, q1);
    return abs(semi - x) < abs(conv - x) ? semi : conv;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("cannot convert a non-finite value to a rational");
    }
    int exponent = 0;
    double mantissa = std::frexp(x, &exponent);
    // 53 bits of mantissa as an integer.
    auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Rational result{Integer(scaled)};
    if (exponent > 0) {
        result *= Rational(Integer(1) << exponent);
    } else if (exponent < 0) {
        result /= Rational(Integer(1) << -exponent);
    }
    return result;
}

Integer lcm(const Integer &a, const Integer &b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return abs(a / gcd(a, b) * b);
}

}  // namespace ddsynth
