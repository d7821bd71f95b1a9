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
#ifndef SBL_SIMILARITY_HPP
#define SBL_SIMILARITY_HPP

#include "sbl/behavior_rep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sbl {

inline constexpr double kDefaultSimilarityTol = 1e-8;

/// Singular values below this are reported as zero.
inline constexpr double kIndexFloor = 1e-12;

/**
 * @brief Outcome of the intersection test between two admissible behaviors.
 *
 * Solves [H1 H2] col(l1, l2) = w2^0 - w1^0 in the least-squares sense. The
 * behaviors intersect iff the residual vanishes; numerically iff
 * residual <= tol * (1 + ||w2^0 - w1^0||).
 */
struct SimilarityCheck {
    Dims dims;
    bool similar = false;
    double residual = 0.0;
    double tolerance = kDefaultSimilarityTol;
    Vector l1;
    Vector l2;
    std::optional<Vector> common_point; ///< H1 l1 + w1^0, set when similar
};

SimilarityCheck check_similarity(const BehaviorRep& rep1, const BehaviorRep& rep2,
                                 double tol = kDefaultSimilarityTol);

enum class Override {
    none,
    diagnostic, ///< compute indexes even though the behaviors do not intersect
};

struct SimilarityReport {
    bool similar = false;
    bool gate_overridden = false;
    double lae_residual = 0.0;
    Vector l1;
    Vector l2;
    Vector indexes;      ///< cosines of the principal angles, nonincreasing
    Matrix left;         ///< U of H1^T H2 = U D V^T
    Matrix right;        ///< V
    Matrix principal1;   ///< H1 U
    Matrix principal2;   ///< H2 V
    std::optional<Vector> common_point;
    bool degenerate_direction = false; ///< some index was clamped to zero

    /// ||1 - indexes||, zero for identical subspaces.
    double distance_to_identity() const;
};

/**
 * SVD of H1^T H2. Requires a passing check for the same pair unless
 * override_gate is Override::diagnostic; throws PreconditionError otherwise.
 */
SimilarityReport similarity_indexes(const BehaviorRep& rep1, const BehaviorRep& rep2,
                                    const SimilarityCheck& certificate, Override override_gate = Override::none);

struct RankedGuest {
    std::size_t guest;
    double distance;
    SimilarityReport report;
};

struct GuestRanking {
    std::vector<RankedGuest> ranking;  ///< ascending distance, stable
    std::vector<std::size_t> not_similar;
    std::string diagnostic;
};

/// With Override::diagnostic, failing guests are ranked too (and still listed in not_similar).
GuestRanking rank_guests(const BehaviorRep& host, const std::vector<BehaviorRep>& guests,
                         double tol = kDefaultSimilarityTol, Override override_gate = Override::none);

} // namespace sbl

#endif // SBL_SIMILARITY_HPP
