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
#include "sbl/io_test.hpp"
#include "sbl/scenario.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace sbl;
using sbl::testing::Rng;

namespace {

/// Plant that answers with a truncated output vector.
class ShortPlant : public Plant {
public:
    Vector apply(const Vector& u) override { return Vector::Zero(u.size() - 1); }
};

} // namespace

TEST_CASE("design_test_inputs")
{
    SUBCASE("Example 1 design: zero column then I_35")
    {
        const Matrix design = design_test_inputs(1, 35);
        CHECK(design.rows() == 35);
        CHECK(design.cols() == 36);
        CHECK(design.col(0).isZero(0.0));
        CHECK(design.rightCols(35).isIdentity(0.0));
    }
    SUBCASE("n_u = 2, T = 2")
    {
        const Matrix design = design_test_inputs(2, 2);
        Matrix expected = Matrix::Zero(4, 5);
        expected.rightCols(4).setIdentity();
        CHECK(design == expected);
    }
    SUBCASE("always passes the principle check")
    {
        for (int nu = 1; nu <= 3; ++nu) {
            for (int horizon = 1; horizon <= 6; ++horizon) {
                CHECK(verify_principles(design_test_inputs(nu, horizon)).passed);
            }
        }
    }
}

TEST_CASE("verify_principles")
{
    SUBCASE("[0, I] passes")
    {
        const PrincipleCheck check = verify_principles(design_test_inputs(1, 4));
        CHECK(check.passed);
        CHECK(check.rank == 4);
        CHECK(check.sigma_min == doctest::Approx(1.0));
    }
    SUBCASE("nonzero first column")
    {
        Matrix design = design_test_inputs(1, 4);
        design(2, 0) = 1e-3;
        const PrincipleCheck check = verify_principles(design);
        CHECK_FALSE(check.passed);
        CHECK_FALSE(check.zero_first_column);
        CHECK(check.diagnostic.find("principle-1 violated") != std::string::npos);
    }
    SUBCASE("repeated column is rank deficient")
    {
        Matrix design = design_test_inputs(1, 4);
        design.col(3) = design.col(2);
        const PrincipleCheck check = verify_principles(design);
        CHECK_FALSE(check.passed);
        CHECK(check.zero_first_column);
        CHECK(check.rank == 3);
        CHECK(check.sigma_min < 1e-12);
        CHECK(check.diagnostic.find("principle-2 violated") != std::string::npos);
    }
    SUBCASE("general full-rank designs are accepted")
    {
        Rng rng(11);
        Matrix design(5, 6);
        design << Vector::Zero(5), testing::random_matrix(rng, 5, 5);
        CHECK(verify_principles(design).passed);
    }
    SUBCASE("wrong column count")
    {
        CHECK_THROWS_AS(verify_principles(Matrix::Zero(4, 4)), ShapeError);
        CHECK_THROWS_AS(verify_principles(Matrix()), ShapeError);
    }
}

TEST_CASE("run_tests")
{
    Rng rng(12);
    SUBCASE("zero initial state: Y_test = [0, G]")
    {
        LtvModel model = testing::random_model(rng, 3, 1, 2, 5);
        model.x0.setZero();
        ModelPlant plant(model);
        const TestDataset data = run_tests(plant, model.dims(), design_test_inputs(1, 5));
        CHECK(plant.experiments() == 6);
        CHECK(data.outputs.col(0).isZero(0.0));
        CHECK((data.outputs.rightCols(5) - build_lifted(model).G).norm() <= 1e-12);
    }
    SUBCASE("Example 1 host: first column is the free response L x0")
    {
        const LtvModel host = builtin_model("example1-host");
        ModelPlant plant(host);
        const TestDataset data = run_tests(plant, host.dims(), design_test_inputs(1, 35));
        const LiftedMatrices lifted = build_lifted(host);
        CHECK((data.outputs.col(0) - lifted.L * host.x0).norm() <= 1e-9);
        CHECK(data.trajectory(0).head(35).isZero(0.0));
    }
    SUBCASE("every column pair is a trajectory of the backing model")
    {
        const LtvModel model = testing::random_model(rng, 2, 2, 1, 4);
        ModelPlant plant(model);
        Matrix design(8, 9);
        design << Vector::Zero(8), testing::random_matrix(rng, 8, 8);
        const TestDataset data = run_tests(plant, model.dims(), design);
        const BehaviorRep oracle = oracle_behavior(model);
        for (Eigen::Index k = 0; k < data.inputs.cols(); ++k) {
            CHECK(membership(oracle, data.trajectory(k)).residual <= 1e-9);
        }
    }
    SUBCASE("deterministic")
    {
        const LtvModel model = testing::random_model(rng, 2, 1, 1, 6);
        ModelPlant a(model);
        ModelPlant b(model);
        const Matrix design = design_test_inputs(1, 6);
        CHECK(run_tests(a, model.dims(), design).outputs == run_tests(b, model.dims(), design).outputs);
    }
    SUBCASE("invalid design is refused before any experiment")
    {
        const LtvModel model = testing::random_model(rng, 2, 1, 1, 3);
        ModelPlant plant(model);
        Matrix design = design_test_inputs(1, 3);
        design(0, 0) = 1.0;
        CHECK_THROWS_AS(run_tests(plant, model.dims(), design), PrincipleError);
        CHECK(plant.experiments() == 0);
    }
    SUBCASE("short plant response is a protocol error")
    {
        ShortPlant plant;
        CHECK_THROWS_AS(run_tests(plant, Dims{1, 1, 3}, design_test_inputs(1, 3)), ProtocolError);
    }
}
