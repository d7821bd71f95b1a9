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
#include "sbl/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace sbl {

std::string to_string(const Dims& dims)
{
    std::ostringstream os;
    os << "n_u=" << dims.nu << ", n_y=" << dims.ny << ", T=" << dims.horizon;
    return os.str();
}

void validate(const Dims& dims)
{
    if (dims.nu < 1 || dims.ny < 1 || dims.horizon < 1) {
        throw ShapeError("invalid dimensions (" + to_string(dims) + "): all must be >= 1");
    }
}

namespace linalg {

Orthonormalization gram_schmidt(const Matrix& columns)
{
    const Eigen::Index rows = columns.rows();
    const Eigen::Index cols = columns.cols();
    Orthonormalization out{Matrix::Zero(rows, cols), Matrix::Zero(cols, cols), 1.0};

    for (Eigen::Index k = 0; k < cols; ++k) {
        Vector v = columns.col(k);
        const double original = v.norm();
        for (int pass = 0; pass < 2; ++pass) {
            if (k == 0) {
                break;
            }
            const Vector coeffs = out.basis.leftCols(k).transpose() * v;
            v.noalias() -= out.basis.leftCols(k) * coeffs;
            out.triangular.col(k).head(k) += coeffs;
        }
        const double remainder = v.norm();
        out.triangular(k, k) = remainder;
        const double ratio = original > 0.0 ? remainder / original : 0.0;
        out.min_ratio = std::min(out.min_ratio, ratio);
        if (remainder > 0.0 && ratio > 1e-14) {
            out.basis.col(k) = v / remainder;
        }
    }
    return out;
}

Vector singular_values(const Matrix& m)
{
    if (m.size() == 0) {
        return Vector();
    }
    Eigen::BDCSVD<Matrix> svd(m);
    return svd.singularValues();
}

Vector least_squares(const Matrix& m, const Vector& rhs)
{
    if (m.rows() != rhs.size()) {
        throw ShapeError("least_squares: rhs length does not match matrix rows");
    }
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(m);
    return cod.solve(rhs);
}

double orthonormality_defect(const Matrix& q)
{
    const Matrix gram = q.transpose() * q;
    return (gram - Matrix::Identity(q.cols(), q.cols())).cwiseAbs().maxCoeff();
}

double max_principal_sine(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("max_principal_sine: bases must have equal shape");
    }
    const Matrix residual = b - a * (a.transpose() * b);
    const Vector s = singular_values(residual);
    return s.size() > 0 ? s(0) : 0.0;
}

} // namespace linalg
} // namespace sbl
