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
#ifndef SBL_BEHAVIOR_HPP
#define SBL_BEHAVIOR_HPP

#include "sbl/behavior_rep.hpp"
#include "sbl/io_test.hpp"

namespace sbl {

inline constexpr double kDefaultMembershipTol = 1e-8;

/**
 * w0 is the zero-input experiment; column k of W is experiment k minus w0.
 * Throws PrincipleError for an invalid design and DegenerateBehaviorError if
 * the recorded trajectories do not span n_uT directions.
 */
BehaviorRep build_representation(const TestDataset& data, double rank_tol = kDefaultRankTol);

struct Membership {
    bool is_member = false;
    double residual = 0.0; ///< ||W g - (w - w0)|| at the least-squares g
    Vector coefficients;   ///< g
};

/// Member iff residual <= tol * (1 + ||w||).
Membership membership(const BehaviorRep& rep, const Vector& w, double tol = kDefaultMembershipTol);

struct Decomposition {
    Matrix subspace_basis;
    Vector offset;
};

Decomposition decompose(const BehaviorRep& rep);

} // namespace sbl

#endif // SBL_BEHAVIOR_HPP
