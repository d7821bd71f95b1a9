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
#include "sbl/similarity.hpp"

#include "sbl/linalg.hpp"

#include <algorithm>

namespace sbl {

namespace {

void require_same_dims(const BehaviorRep& rep1, const BehaviorRep& rep2)
{
    if (rep1.dims() != rep2.dims()) {
        throw ShapeError("behaviors have different dimensions: " + to_string(rep1.dims()) + " vs " +
                         to_string(rep2.dims()));
    }
}

} // namespace

SimilarityCheck check_similarity(const BehaviorRep& rep1, const BehaviorRep& rep2, double tol)
{
    require_same_dims(rep1, rep2);
    const Eigen::Index n = rep1.dims().input_length();
    Matrix stacked(rep1.dims().trajectory_length(), 2 * n);
    stacked << rep1.basis(), rep2.basis();
    const Vector rhs = rep2.offset() - rep1.offset();

    const Vector solution = linalg::least_squares(stacked, rhs);

    SimilarityCheck check;
    check.dims = rep1.dims();
    check.tolerance = tol;
    check.l1 = solution.head(n);
    check.l2 = solution.tail(n);
    check.residual = (stacked * solution - rhs).norm();
    check.similar = check.residual <= tol * (1.0 + rhs.norm());
    if (check.similar) {
        check.common_point = rep1.basis() * check.l1 + rep1.offset();
    }
    return check;
}

double SimilarityReport::distance_to_identity() const
{
    return (Vector::Ones(indexes.size()) - indexes).norm();
}

SimilarityReport similarity_indexes(const BehaviorRep& rep1, const BehaviorRep& rep2,
                                    const SimilarityCheck& certificate, Override override_gate)
{
    require_same_dims(rep1, rep2);
    if (certificate.dims != rep1.dims()) {
        throw PreconditionError("similarity certificate was issued for " + to_string(certificate.dims));
    }
    if (!certificate.similar && override_gate == Override::none) {
        throw PreconditionError("behaviors are not certified similar (residual " +
                                std::to_string(certificate.residual) + "); pass Override::diagnostic to force");
    }

    const Matrix cross = rep1.basis().transpose() * rep2.basis();
    Eigen::JacobiSVD<Matrix> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);

    SimilarityReport report;
    report.similar = certificate.similar;
    report.gate_overridden = !certificate.similar;
    report.lae_residual = certificate.residual;
    report.l1 = certificate.l1;
    report.l2 = certificate.l2;
    report.common_point = certificate.common_point;
    report.indexes = svd.singularValues();
    for (Eigen::Index k = 0; k < report.indexes.size(); ++k) {
        double& s = report.indexes(k);
        if (s < kIndexFloor) {
            s = 0.0;
            report.degenerate_direction = true;
        }
        s = std::min(s, 1.0);
    }
    report.left = svd.matrixU();
    report.right = svd.matrixV();
    report.principal1 = rep1.basis() * report.left;
    report.principal2 = rep2.basis() * report.right;
    return report;
}

GuestRanking rank_guests(const BehaviorRep& host, const std::vector<BehaviorRep>& guests, double tol,
                         Override override_gate)
{
    if (guests.empty()) {
        throw PreconditionError("rank_guests: no guests given");
    }
    GuestRanking out;
    for (std::size_t i = 0; i < guests.size(); ++i) {
        const SimilarityCheck check = check_similarity(host, guests[i], tol);
        if (!check.similar) {
            out.not_similar.push_back(i);
            if (override_gate == Override::none) {
                continue;
            }
        }
        SimilarityReport report = similarity_indexes(host, guests[i], check, override_gate);
        const double distance = report.distance_to_identity();
        out.ranking.push_back({i, distance, std::move(report)});
    }
    std::stable_sort(out.ranking.begin(), out.ranking.end(),
                     [](const RankedGuest& a, const RankedGuest& b) { return a.distance < b.distance; });
    if (out.ranking.empty()) {
        out.diagnostic = "no guest behavior intersects the host behavior";
    } else if (!out.not_similar.empty()) {
        out.diagnostic = std::to_string(out.not_similar.size()) + " guest(s) failed the similarity check";
    } else {
        out.diagnostic = "ok";
    }
    return out;
}

} // namespace sbl
