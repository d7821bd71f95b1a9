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
#include "sbl/transfer.hpp"

#include <sstream>

namespace sbl {

Vector project_subspace(const Matrix& basis, const Vector& x)
{
    if (basis.rows() != x.size()) {
        throw ShapeError("project_subspace: vector length " + std::to_string(x.size()) + " does not match basis rows " +
                         std::to_string(basis.rows()));
    }
    return basis * (basis.transpose() * x);
}

Vector project_behavior(const BehaviorRep& rep, const Vector& x)
{
    if (x.size() != rep.dims().trajectory_length()) {
        throw ShapeError("project_behavior: vector length does not match n_wT");
    }
    return rep.offset() + project_subspace(rep.basis(), x - rep.offset());
}

TransferResult transfer(const BehaviorRep& host, const BehaviorRep& guest, const SimilarityReport& report,
                        const Vector& guest_trajectory, double experience_tol)
{
    if (host.dims() != guest.dims()) {
        throw ShapeError("host and guest behaviors have different dimensions");
    }
    if (!report.similar && !report.gate_overridden) {
        throw PreconditionError("transfer requires a similarity certificate");
    }
    const Eigen::Index n = host.dims().input_length();
    if (report.indexes.size() != n || report.left.rows() != n || report.right.rows() != n ||
        report.principal2.rows() != guest.dims().trajectory_length()) {
        throw PreconditionError("similarity report does not match the behavior pair");
    }
    const Membership experience = membership(guest, guest_trajectory, experience_tol);
    if (!experience.is_member) {
        std::ostringstream msg;
        msg << "guest trajectory is not in the guest behavior (residual " << experience.residual << ")";
        throw ExperienceInvalidError(msg.str());
    }

    const Vector g_bar = report.principal2.transpose() * (guest_trajectory - guest.offset());
    const Vector scaled = report.indexes.asDiagonal() * g_bar;

    TransferResult out;
    out.host_trajectory = host.basis() * (report.left * scaled) +
                          project_subspace(host.basis(), guest.offset() - host.offset()) + host.offset();
    out.guest_coordinates = g_bar;
    out.transfer_error = (out.host_trajectory - guest_trajectory).norm();
    out.report = report;

    const Membership check = membership(host, out.host_trajectory, kDefaultMembershipTol);
    if (!check.is_member) {
        std::ostringstream msg;
        msg << "transferred trajectory left the host behavior (residual " << check.residual
            << "); the similarity report is stale";
        throw PreconditionError(msg.str());
    }
    return out;
}

Algorithm1Outcome algorithm1(Plant& host_plant, Plant& guest_plant, Dims dims, const Vector& guest_trajectory,
                             const Algorithm1Options& options)
{
    Algorithm1Outcome out;

    // Steps 1-2: offline experiments.
    const Matrix design = design_test_inputs(dims.nu, dims.horizon);
    out.host_data = run_tests(host_plant, dims, design, options.rank_tol);
    out.guest_data = run_tests(guest_plant, dims, design, options.rank_tol);

    // Step 3.
    out.host = build_representation(out.host_data, options.rank_tol);
    out.guest = build_representation(out.guest_data, options.rank_tol);

    // Step 4.
    out.gate = check_similarity(*out.host, *out.guest, options.similarity_tol);
    if (!out.gate.similar && !options.override_gate) {
        out.status = Algorithm1Outcome::Status::not_similar;
        out.quit_step = 4;
        return out;
    }
    out.gate_overridden = !out.gate.similar;

    // Steps 5-7.
    const SimilarityReport report = similarity_indexes(
        *out.host, *out.guest, out.gate, out.gate_overridden ? Override::diagnostic : Override::none);

    // Step 8.
    out.result = transfer(*out.host, *out.guest, report, guest_trajectory, options.experience_tol);
    out.status = Algorithm1Outcome::Status::transferred;
    return out;
}

} // namespace sbl
