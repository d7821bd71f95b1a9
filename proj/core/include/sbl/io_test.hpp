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
#ifndef SBL_IO_TEST_HPP
#define SBL_IO_TEST_HPP

#include "sbl/lifted_model.hpp"

#include <string>

namespace sbl {

/**
 * @brief A repeatable experiment on an unknown system.
 *
 * Every call starts from the same initial state, applies a whole input
 * supervector and returns the whole output supervector.
 */
class Plant {
public:
    virtual ~Plant() = default;
    virtual Vector apply(const Vector& u) = 0;
};

/// Plant backed by a known model. Counts the experiments it has run.
class ModelPlant : public Plant {
public:
    explicit ModelPlant(LtvModel model);

    Vector apply(const Vector& u) override;

    const LtvModel& model() const { return model_; }
    long experiments() const { return experiments_; }

private:
    LtvModel model_;
    long experiments_ = 0;
};

/// Offline test data: column k of each matrix is one experiment.
struct TestDataset {
    Dims dims;
    Matrix inputs;  ///< U_test, n_uT x (n_uT + 1)
    Matrix outputs; ///< Y_test, n_yT x (n_uT + 1)

    /// Throws ShapeError unless both matrices have n_uT + 1 columns and matching rows.
    void validate() const;
    Vector trajectory(Eigen::Index k) const;
};

/// Zero column followed by the identity.
Matrix design_test_inputs(int nu, int horizon);

struct PrincipleCheck {
    bool passed = false;
    bool zero_first_column = false;
    Eigen::Index rank = 0;
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    std::string diagnostic;
};

/**
 * Checks that column 0 is exactly zero and that columns 1..n_uT have full rank,
 * i.e. sigma_min > rank_tol * sigma_max.
 */
PrincipleCheck verify_principles(const Matrix& test_inputs, double rank_tol = kDefaultRankTol);

/// Runs every column of test_inputs on the plant. Throws PrincipleError if the design is invalid.
TestDataset run_tests(Plant& plant, Dims dims, const Matrix& test_inputs, double rank_tol = kDefaultRankTol);

} // namespace sbl

#endif // SBL_IO_TEST_HPP
