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
#ifndef SBL_BEHAVIOR_REP_HPP
#define SBL_BEHAVIOR_REP_HPP

#include "sbl/types.hpp"

namespace sbl {

inline constexpr double kDefaultRankTol = 1e-8;

/**
 * @brief Data-based admissible behavior of one system from one initial state.
 *
 * The behavior is the affine set { W g + w0 : g in R^{n_u T} }. W holds the
 * trajectory differences w^k - w^0, w0 is the zero-input trajectory and H is an
 * orthonormal basis of span(W). Instances are immutable.
 */
class BehaviorRep {
public:
    /// Orthonormalizes W. Throws DegenerateBehaviorError when W has lost rank.
    BehaviorRep(Dims dims, Matrix differences, Vector offset, double rank_tol = kDefaultRankTol);

    /// Rebuilds from stored parts. H must be orthonormal and span W.
    static BehaviorRep from_parts(Dims dims, Matrix differences, Vector offset, Matrix basis,
                                  double rank_tol = kDefaultRankTol);

    const Dims& dims() const { return dims_; }
    const Matrix& differences() const { return differences_; }
    const Vector& offset() const { return offset_; }
    const Matrix& basis() const { return basis_; }
    double rank_tol() const { return rank_tol_; }

    /// R = H^T W, so that W = H R.
    const Matrix& basis_coordinates() const { return coordinates_; }

    /// Same subspace, different translation.
    BehaviorRep with_offset(Vector offset) const;

    /// Same affine set described by another orthonormal basis of span(W).
    BehaviorRep with_basis(Matrix basis) const;

private:
    BehaviorRep() = default;
    void check_shapes() const;

    Dims dims_;
    Matrix differences_;
    Vector offset_;
    Matrix basis_;
    Matrix coordinates_;
    double rank_tol_ = kDefaultRankTol;
};

} // namespace sbl

#endif // SBL_BEHAVIOR_REP_HPP
