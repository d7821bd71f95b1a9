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
#include "sbl/ilc.hpp"
#include "sbl/linalg.hpp"
#include "sbl/scenario.hpp"
#include "sbl/transfer.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace sbl;
using sbl::testing::Rng;

namespace {

BehaviorRep data_behavior(const LtvModel& model)
{
    ModelPlant plant(model);
    const Dims dims = model.dims();
    return build_representation(run_tests(plant, dims, design_test_inputs(dims.nu, dims.horizon)));
}

std::pair<BehaviorRep, BehaviorRep> random_similar_pair(Rng& rng, int horizon)
{
    return {data_behavior(testing::random_model(rng, 3, 1, 1, horizon)),
            data_behavior(testing::random_model(rng, 2, 1, 1, horizon))};
}

SimilarityReport certified(const BehaviorRep& host, const BehaviorRep& guest)
{
    return similarity_indexes(host, guest, check_similarity(host, guest));
}

/// y = u + offset over a single step; offsets differ -> parallel lines.
LtvModel shifted_identity(double offset)
{
    return LtvModel::time_invariant(Matrix::Zero(1, 1), Matrix::Zero(1, 1), Matrix::Ones(1, 1), Matrix::Ones(1, 1),
                                    Vector::Constant(1, offset), 1);
}

} // namespace

TEST_CASE("project_subspace")
{
    Rng rng(41);
    const Matrix basis = linalg::gram_schmidt(testing::random_matrix(rng, 10, 2)).basis;

    SUBCASE("vectors in the subspace are fixed")
    {
        const Vector x = basis * testing::random_vector(rng, 2);
        CHECK((project_subspace(basis, x) - x).norm() <= 1e-12);
    }
    SUBCASE("orthogonal vectors map to zero")
    {
        Vector x = testing::random_vector(rng, 10);
        x -= basis * (basis.transpose() * x);
        CHECK(project_subspace(basis, x).norm() <= 1e-12);
    }
    SUBCASE("matches the normal-equation least-squares fit")
    {
        for (int trial = 0; trial < 10; ++trial) {
            const Matrix raw = testing::random_matrix(rng, 10, 2);
            const Matrix q = linalg::gram_schmidt(raw).basis;
            const Vector x = testing::random_vector(rng, 10);
            const Vector g = (raw.transpose() * raw).ldlt().solve(raw.transpose() * x);
            CHECK((project_subspace(q, x) - raw * g).norm() <= 1e-10);
            CHECK((q.transpose() * (x - project_subspace(q, x))).norm() <= 1e-12);
        }
    }
    SUBCASE("shape mismatch")
    {
        CHECK_THROWS_AS(project_subspace(basis, Vector::Zero(9)), ShapeError);
    }
}

TEST_CASE("project_behavior")
{
    Rng rng(42);
    const BehaviorRep rep = data_behavior(testing::random_model(rng, 3, 1, 2, 5));

    SUBCASE("members are fixed points")
    {
        const Vector w = testing::random_member(rep, rng);
        CHECK((project_behavior(rep, w) - w).norm() <= 1e-9);
    }
    SUBCASE("offset plus an orthogonal vector projects to the offset")
    {
        Vector v = testing::random_vector(rng, 15);
        v -= rep.basis() * (rep.basis().transpose() * v);
        CHECK((project_behavior(rep, rep.offset() + v) - rep.offset()).norm() <= 1e-10);
    }
    SUBCASE("closer to x than random members")
    {
        const Vector x = testing::random_vector(rng, 15, 3.0);
        const double best = (project_behavior(rep, x) - x).norm();
        for (int k = 0; k < 1000; ++k) {
            CHECK(best <= (testing::random_member(rep, rng) - x).norm() + 1e-12);
        }
    }
    SUBCASE("shape mismatch")
    {
        CHECK_THROWS_AS(project_behavior(rep, Vector::Zero(3)), ShapeError);
    }
}

TEST_CASE("transfer edge cases")
{
    Rng rng(43);
    SUBCASE("a trajectory common to both behaviors transfers without error")
    {
        for (int trial = 0; trial < 10; ++trial) {
            const auto [host, guest] = random_similar_pair(rng, 5);
            const SimilarityCheck check = check_similarity(host, guest);
            REQUIRE(check.similar);
            const TransferResult result =
                transfer(host, guest, similarity_indexes(host, guest, check), *check.common_point);
            CHECK(result.transfer_error <= 1e-9);
        }
    }
    SUBCASE("identical behaviors give w_h = w_g")
    {
        const BehaviorRep rep = data_behavior(testing::random_model(rng, 3, 2, 1, 4));
        const Vector w_g = testing::random_member(rep, rng);
        const TransferResult result = transfer(rep, rep, certified(rep, rep), w_g);
        CHECK((result.host_trajectory - w_g).norm() <= 1e-9);
    }
    SUBCASE("w_g outside the guest behavior")
    {
        const auto [host, guest] = random_similar_pair(rng, 4);
        Vector w_g = testing::random_member(guest, rng);
        w_g(w_g.size() - 1) += 1.0;
        CHECK_THROWS_AS(transfer(host, guest, certified(host, guest), w_g), ExperienceInvalidError);
    }
    SUBCASE("uncertified report")
    {
        const auto [host, guest] = random_similar_pair(rng, 4);
        SimilarityReport report = certified(host, guest);
        report.similar = false;
        CHECK_THROWS_AS(transfer(host, guest, report, guest.offset()), PreconditionError);
    }
    SUBCASE("report from another pair")
    {
        const auto [host, guest] = random_similar_pair(rng, 4);
        const auto [a, b] = random_similar_pair(rng, 3);
        CHECK_THROWS_AS(transfer(host, guest, certified(a, b), guest.offset()), PreconditionError);
    }
}

TEST_CASE("closed-form transfer equals the orthogonal projection onto the host")
{
    Rng rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        const auto [host, guest] = random_similar_pair(rng, 2 + trial % 6);
        const SimilarityReport report = certified(host, guest);
        const Vector w_g = testing::random_member(guest, rng);
        const TransferResult result = transfer(host, guest, report, w_g);
        CHECK((result.host_trajectory - project_behavior(host, w_g)).norm() <= 1e-8 * (1.0 + w_g.norm()));

        // g_bar reproduces w_g exactly
        CHECK((report.principal2 * result.guest_coordinates + guest.offset() - w_g).norm() <= 1e-9 * (1.0 + w_g.norm()));

        // P_span(H1 U)(H2 V) = H1 U D
        Matrix projected(report.principal2.rows(), report.principal2.cols());
        for (Eigen::Index k = 0; k < projected.cols(); ++k) {
            projected.col(k) = project_subspace(report.principal1, report.principal2.col(k));
        }
        CHECK((projected - report.principal1 * report.indexes.asDiagonal()).cwiseAbs().maxCoeff() <= 1e-9);

        // idempotent on the host side
        const TransferResult back = transfer(host, host, certified(host, host), result.host_trajectory);
        CHECK((back.host_trajectory - result.host_trajectory).norm() <= 1e-9 * (1.0 + w_g.norm()));
    }
}

TEST_CASE("no host trajectory is closer to w_g than w_h")
{
    Rng rng(45);
    const auto [host, guest] = random_similar_pair(rng, 6);
    const Vector w_g = testing::random_member(guest, rng, 2.0);
    const TransferResult result = transfer(host, guest, certified(host, guest), w_g);
    for (int k = 0; k < 1000; ++k) {
        CHECK(result.transfer_error <= (w_g - testing::random_member(host, rng, 2.0)).norm() + 1e-9);
    }
}

TEST_CASE("transfer error grows as the guest subspace rotates away")
{
    const Dims space{2, 2, 1};
    Matrix host_w = Matrix::Zero(4, 2);
    host_w(0, 0) = 1.0;
    host_w(1, 1) = 1.0;
    const BehaviorRep host(space, host_w, Vector::Zero(4));
    const Eigen::Vector2d coeffs(0.7, -1.3);

    double previous = -1.0;
    for (int step = 0; step <= 5; ++step) {
        const double theta = 0.1 * step;
        Matrix guest_w = Matrix::Zero(4, 2);
        guest_w(0, 0) = std::cos(theta);
        guest_w(2, 0) = std::sin(theta);
        guest_w(1, 1) = std::cos(theta);
        guest_w(3, 1) = std::sin(theta);
        const BehaviorRep guest(space, guest_w, Vector::Zero(4));
        const Vector w_g = guest_w * coeffs;
        const TransferResult result = transfer(host, guest, certified(host, guest), w_g);
        CHECK(result.transfer_error == doctest::Approx(std::sin(theta) * coeffs.norm()).epsilon(1e-12));
        CHECK(result.transfer_error >= previous);
        previous = result.transfer_error;
    }
}

TEST_CASE("algorithm1")
{
    Rng rng(46);
    SUBCASE("host and guest are the same plant")
    {
        const LtvModel model = testing::random_model(rng, 3, 1, 1, 6);
        ModelPlant host(model);
        ModelPlant guest(model);
        const Vector w_g = simulate(model, testing::random_vector(rng, 6)).stacked();
        const Algorithm1Outcome out = algorithm1(host, guest, model.dims(), w_g);
        REQUIRE(out.status == Algorithm1Outcome::Status::transferred);
        CHECK_FALSE(out.gate_overridden);
        CHECK(out.result->transfer_error <= 1e-9);
        CHECK(host.experiments() == 7);
    }
    SUBCASE("parallel disjoint plants stop at step 4")
    {
        ModelPlant host(shifted_identity(0.0));
        ModelPlant guest(shifted_identity(1.0));
        const Vector w_g = Eigen::Vector2d(0.5, 1.5);
        const Algorithm1Outcome out = algorithm1(host, guest, Dims{1, 1, 1}, w_g);
        CHECK(out.status == Algorithm1Outcome::Status::not_similar);
        CHECK(out.quit_step == 4);
        CHECK_FALSE(out.result.has_value());
        CHECK(out.gate.residual > 0.1);
    }
    SUBCASE("Example 1: the dissimilar guest transfers worse")
    {
        const Vector reference = example1_reference();
        Algorithm1Options options;
        options.override_gate = true;
        double errors[2] = {0.0, 0.0};
        const char* guests[2] = {"example1-guest", "example1-dissimilar"};
        for (int i = 0; i < 2; ++i) {
            ModelPlant guest_plant(builtin_model(guests[i]));
            const BehaviorRep guest_rep = data_behavior(guest_plant.model());
            const IlcRun run = ilc_track(guest_plant, guest_rep, reference);
            ModelPlant host_plant(builtin_model("example1-host"));
            const Algorithm1Outcome out =
                algorithm1(host_plant, guest_plant, Dims{1, 1, 35}, run.stacked(), options);
            REQUIRE(out.result.has_value());
            CHECK(out.gate_overridden);
            CHECK_FALSE(out.gate.similar);
            const BehaviorRep oracle = oracle_behavior(builtin_model("example1-host"));
            const double oracle_distance = (run.stacked() - project_behavior(oracle, run.stacked())).norm();
            CHECK(out.result->transfer_error == doctest::Approx(oracle_distance).epsilon(1e-6));
            errors[i] = out.result->transfer_error;
        }
        CHECK(errors[0] < errors[1]);
    }
}
