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
#ifndef SBL_LIFTED_MODEL_HPP
#define SBL_LIFTED_MODEL_HPP

#include "sbl/behavior_rep.hpp"
#include "sbl/trajectory.hpp"

#include <vector>

namespace sbl {

/**
 * @brief Discrete linear time-varying model over a finite horizon.
 *
 *   x(t+1) = A(t) x(t) + B(t) u(t)
 *   y(t)   = C(t) x(t) + D(t) u(t),   x(0) = x0,   t = 0..T-1
 *
 * Ground truth only: the data-driven pipeline never reads the matrices, and
 * in particular never learns the state dimension.
 */
struct LtvModel {
    std::vector<Matrix> A;
    std::vector<Matrix> B;
    std::vector<Matrix> C;
    std::vector<Matrix> D;
    Vector x0;

    int horizon() const { return static_cast<int>(A.size()); }
    int nx() const { return static_cast<int>(x0.size()); }
    int nu() const { return B.empty() ? 0 : static_cast<int>(B.front().cols()); }
    int ny() const { return C.empty() ? 0 : static_cast<int>(C.front().rows()); }
    Dims dims() const { return {nu(), ny(), horizon()}; }

    /// Throws ShapeError on missing steps or inconsistent shapes.
    void validate() const;

    /// Replicates one set of matrices over the whole horizon.
    static LtvModel time_invariant(const Matrix& a, const Matrix& b, const Matrix& c,
                                   const Matrix& d, const Vector& x0, int horizon);
};

Trajectory simulate(const LtvModel& model, const Vector& u);

/// y = G u + L x0 for every input supervector u.
struct LiftedMatrices {
    Matrix G; ///< n_yT x n_uT, block lower triangular
    Matrix L; ///< n_yT x n_x
};

LiftedMatrices build_lifted(const LtvModel& model);

/// Exact behavior: offset col(0, L x0), subspace spanned by col(e_k, G e_k).
BehaviorRep oracle_behavior(const LtvModel& model, double rank_tol = kDefaultRankTol);

} // namespace sbl

#endif // SBL_LIFTED_MODEL_HPP
