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
#include "sbl/behavior.hpp"

#include "sbl/linalg.hpp"

#include <sstream>

namespace sbl {

BehaviorRep::BehaviorRep(Dims dims, Matrix differences, Vector offset, double rank_tol)
    : dims_(dims), differences_(std::move(differences)), offset_(std::move(offset)), rank_tol_(rank_tol)
{
    check_shapes();
    const Vector s = linalg::singular_values(differences_);
    const double sigma_max = s(0);
    const double sigma_min = s(s.size() - 1);
    if (!(sigma_max > 0.0) || sigma_min <= rank_tol_ * sigma_max) {
        std::ostringstream msg;
        msg << "trajectory differences lost rank: sigma_min " << sigma_min << " <= " << rank_tol_ << " * sigma_max "
            << sigma_max << "; the plant does not admit " << dims_.input_length() << " free input directions";
        throw DegenerateBehaviorError(msg.str());
    }
    const linalg::Orthonormalization qr = linalg::gram_schmidt(differences_);
    basis_ = qr.basis;
    coordinates_ = qr.triangular;
}

BehaviorRep BehaviorRep::from_parts(Dims dims, Matrix differences, Vector offset, Matrix basis, double rank_tol)
{
    BehaviorRep rep;
    rep.dims_ = dims;
    rep.differences_ = std::move(differences);
    rep.offset_ = std::move(offset);
    rep.rank_tol_ = rank_tol;
    rep.check_shapes();
    if (basis.rows() != rep.differences_.rows() || basis.cols() != rep.differences_.cols()) {
        throw ShapeError("basis must have the same shape as W");
    }
    if (linalg::orthonormality_defect(basis) > 1e-10) {
        throw ShapeError("basis columns are not orthonormal");
    }
    rep.coordinates_ = basis.transpose() * rep.differences_;
    const double scale = 1.0 + rep.differences_.norm();
    if ((rep.differences_ - basis * rep.coordinates_).norm() > 1e-9 * scale) {
        throw ShapeError("basis does not span the trajectory differences");
    }
    rep.basis_ = std::move(basis);
    return rep;
}

BehaviorRep BehaviorRep::with_offset(Vector offset) const
{
    BehaviorRep copy = *this;
    copy.offset_ = std::move(offset);
    copy.check_shapes();
    return copy;
}

BehaviorRep BehaviorRep::with_basis(Matrix basis) const
{
    return from_parts(dims_, differences_, offset_, std::move(basis), rank_tol_);
}

void BehaviorRep::check_shapes() const
{
    validate(dims_);
    if (differences_.rows() != dims_.trajectory_length() || differences_.cols() != dims_.input_length()) {
        throw ShapeError("W must be n_wT x n_uT for " + to_string(dims_));
    }
    if (offset_.size() != dims_.trajectory_length()) {
        throw ShapeError("w0 must have length n_wT for " + to_string(dims_));
    }
}

BehaviorRep build_representation(const TestDataset& data, double rank_tol)
{
    data.validate();
    const PrincipleCheck check = verify_principles(data.inputs, rank_tol);
    if (!check.passed) {
        throw PrincipleError(check.diagnostic);
    }
    const Eigen::Index n = data.dims.input_length();
    Vector offset = data.trajectory(0);
    Matrix differences(data.dims.trajectory_length(), n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        differences.col(k - 1) = data.trajectory(k) - offset;
    }
    return {data.dims, std::move(differences), std::move(offset), rank_tol};
}

Membership membership(const BehaviorRep& rep, const Vector& w, double tol)
{
    if (w.size() != rep.dims().trajectory_length()) {
        throw ShapeError("membership: trajectory has length " + std::to_string(w.size()) + ", expected " +
                         std::to_string(rep.dims().trajectory_length()));
    }
    const Vector shifted = w - rep.offset();
    const Vector h = rep.basis().transpose() * shifted;
    Membership out;
    out.residual = (shifted - rep.basis() * h).norm();
    // Bases loaded through from_parts give a full R = H^T W.
    if (rep.basis_coordinates().isUpperTriangular(1e-12)) {
        out.coefficients = rep.basis_coordinates().triangularView<Eigen::Upper>().solve(h);
    } else {
        out.coefficients = rep.basis_coordinates().partialPivLu().solve(h);
    }
    out.is_member = out.residual <= tol * (1.0 + w.norm());
    return out;
}

Decomposition decompose(const BehaviorRep& rep)
{
    return {rep.basis(), rep.offset()};
}

} // namespace sbl
