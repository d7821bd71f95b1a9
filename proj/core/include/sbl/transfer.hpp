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
#ifndef SBL_TRANSFER_HPP
#define SBL_TRANSFER_HPP

#include "sbl/behavior.hpp"
#include "sbl/io_test.hpp"
#include "sbl/similarity.hpp"

#include <optional>

namespace sbl {

inline constexpr double kDefaultExperienceTol = 1e-6;

/// H (H^T x) for a basis H with orthonormal columns.
Vector project_subspace(const Matrix& basis, const Vector& x);

/// Closest point of the affine behavior to x: w0 + P_span(H)(x - w0).
Vector project_behavior(const BehaviorRep& rep, const Vector& x);

struct TransferResult {
    Vector host_trajectory;  ///< w_h
    Vector guest_coordinates; ///< g_bar with w_g = H2 V g_bar + w2^0
    double transfer_error = 0.0; ///< ||w_h - w_g||
    SimilarityReport report;
};

/**
 * @brief Moves the guest's learned trajectory onto the host behavior.
 *
 *   g_bar = (H2 V)^T (w_g - w2^0)
 *   w_h   = H1 U D g_bar + P_span(H1)(w2^0 - w1^0) + w1^0
 *
 * The report must certify similarity or carry an overridden gate. Throws
 * ExperienceInvalidError when w_g is not in the guest behavior (relative
 * tolerance experience_tol) and PreconditionError when the report does not
 * match the pair.
 */
TransferResult transfer(const BehaviorRep& host, const BehaviorRep& guest, const SimilarityReport& report,
                        const Vector& guest_trajectory, double experience_tol = kDefaultExperienceTol);

struct Algorithm1Options {
    double rank_tol = kDefaultRankTol;
    double similarity_tol = kDefaultSimilarityTol;
    double experience_tol = kDefaultExperienceTol;
    bool override_gate = false; ///< continue past a failed intersection test
};

struct Algorithm1Outcome {
    enum class Status { transferred, not_similar };

    Status status = Status::not_similar;
    int quit_step = 0; ///< 4 when the intersection test stopped the run
    bool gate_overridden = false;
    TestDataset host_data;
    TestDataset guest_data;
    std::optional<BehaviorRep> host;
    std::optional<BehaviorRep> guest;
    SimilarityCheck gate;
    std::optional<TransferResult> result;
};

/**
 * Runs the complete pipeline: identity test design and experiments on both
 * plants, data-based representations, intersection gate, SVD, indexes,
 * principal vectors and the closed-form transfer of w_g.
 */
Algorithm1Outcome algorithm1(Plant& host_plant, Plant& guest_plant, Dims dims, const Vector& guest_trajectory,
                             const Algorithm1Options& options = {});

} // namespace sbl

#endif // SBL_TRANSFER_HPP
