/*
 Copyright 2026 The sbl Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#ifndef SBL_LINALG_HPP
#define SBL_LINALG_HPP

#include "sbl/types.hpp"

namespace sbl::linalg {

struct Orthonormalization {
    Matrix basis;      ///< orthonormal columns spanning the input columns
    Matrix triangular; ///< upper-triangular R with input = basis * R
    double min_ratio;  ///< smallest |R_kk| / ||input_k||, a rank-loss indicator
};

/**
 * @brief Gram-Schmidt with one full reorthogonalization pass per column.
 *
 * Two passes of classical Gram-Schmidt keep the loss of orthogonality at
 * machine precision as long as the columns are numerically independent.
 * Columns whose remainder vanishes are left as zero columns in the basis and
 * reported through min_ratio; callers decide whether that is an error.
 */
Orthonormalization gram_schmidt(const Matrix& columns);

/// Singular values in descending order.
Vector singular_values(const Matrix& m);

/// Minimum-norm least-squares solution of m * x = rhs.
Vector least_squares(const Matrix& m, const Vector& rhs);

/// Largest entry of abs(Q^T Q - I).
double orthonormality_defect(const Matrix& q);

/**
 * Sine of the largest principal angle between span(a) and span(b), both given
 * by orthonormal bases of equal dimension. Accurate near zero, unlike acos of
 * the singular values of a^T b.
 */
double max_principal_sine(const Matrix& a, const Matrix& b);

} // namespace sbl::linalg

#endif // SBL_LINALG_HPP
