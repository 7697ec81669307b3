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

#include <Eigen/Dense>

#include "ddsynth/pauli.hpp"

namespace ddsynth {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// w^e for w = exp(2 pi i / d).
Complex root_of_unity(int exponent, int dim);
Complex root_of_unity(PhaseExponent e);

/// sum_l w^{jl} |l><l+k mod d|. Throws std::invalid_argument for d < 2 or labels out of range.
DenseMatrix dense_matrix(SpinLabel label, int dim);

/// Kronecker product of the site matrices, site 0 as the most significant factor,
/// times w^phase.
DenseMatrix dense_matrix(const PauliString &p);

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);

/// Largest absolute entry of a - b.
double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);

}  // namespace ddsynth
