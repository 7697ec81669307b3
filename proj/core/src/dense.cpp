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

#include "ddsynth/dense.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ddsynth {

Complex root_of_unity(int exponent, int dim) {
    if (dim < 2) {
        throw std::invalid_argument("local dimension must be at least 2");
    }
    int e = ((exponent % dim) + dim) % dim;
    // Exact values for the real and quarter-turn cases keep d = 2, 4 free of rounding.
    if (e == 0) {
        return {1.0, 0.0};
    }
    if (2 * e == dim) {
        return {-1.0, 0.0};
    }
    if (4 * e == dim) {
        return {0.0, 1.0};
    }
    if (4 * e == 3 * dim) {
        return {0.0, -1.0};
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * e / dim);
}

Complex root_of_unity(PhaseExponent e) { return root_of_unity(e.value(), e.dim()); }

DenseMatrix dense_matrix(SpinLabel label, int dim) {
    if (dim < 2) {
        throw std::invalid_argument("local dimension must be at least 2");
    }
    if (label.j < 0 || label.j >= dim || label.k < 0 || label.k >= dim) {
        throw std::invalid_argument("spin label out of range");
    }
    DenseMatrix m = DenseMatrix::Zero(dim, dim);
    for (int l = 0; l < dim; ++l) {
        m(l, (l + label.k) % dim) = root_of_unity(label.j * l, dim);
    }
    return m;
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DenseMatrix dense_matrix(const PauliString &p) {
    DenseMatrix out = DenseMatrix::Identity(1, 1);
    for (const auto &site : p.sites()) {
        out = kron(out, dense_matrix(site, p.dim()));
    }
    return out * root_of_unity(p.phase());
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shapes differ");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace ddsynth
