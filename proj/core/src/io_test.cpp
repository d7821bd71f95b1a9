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
#include "sbl/io_test.hpp"

#include "sbl/linalg.hpp"

#include <sstream>

namespace sbl {

ModelPlant::ModelPlant(LtvModel model) : model_(std::move(model))
{
    model_.validate();
}

Vector ModelPlant::apply(const Vector& u)
{
    ++experiments_;
    return simulate(model_, u).y;
}

void TestDataset::validate() const
{
    sbl::validate(dims);
    const Eigen::Index tests = dims.input_length() + 1;
    if (inputs.rows() != dims.input_length() || inputs.cols() != tests) {
        throw ShapeError("U_test must be " + std::to_string(dims.input_length()) + "x" + std::to_string(tests));
    }
    if (outputs.rows() != dims.output_length() || outputs.cols() != tests) {
        throw ShapeError("Y_test must be " + std::to_string(dims.output_length()) + "x" + std::to_string(tests));
    }
}

Vector TestDataset::trajectory(Eigen::Index k) const
{
    Vector w(dims.trajectory_length());
    w << inputs.col(k), outputs.col(k);
    return w;
}

Matrix design_test_inputs(int nu, int horizon)
{
    validate(Dims{nu, 1, horizon});
    const int n = nu * horizon;
    Matrix design = Matrix::Zero(n, n + 1);
    design.rightCols(n).setIdentity();
    return design;
}

PrincipleCheck verify_principles(const Matrix& test_inputs, double rank_tol)
{
    const Eigen::Index n = test_inputs.rows();
    if (n < 1 || test_inputs.cols() != n + 1) {
        throw ShapeError("test input matrix must be n x (n+1) with n >= 1, got " + std::to_string(n) + "x" +
                         std::to_string(test_inputs.cols()));
    }
    PrincipleCheck check;
    check.zero_first_column = (test_inputs.col(0).array() == 0.0).all();

    const Vector s = linalg::singular_values(test_inputs.rightCols(n));
    check.sigma_max = s(0);
    check.sigma_min = s(n - 1);
    const double threshold = rank_tol * check.sigma_max;
    check.rank = (s.array() > threshold).count();
    const bool full_rank = check.sigma_max > 0.0 && check.sigma_min > threshold;

    std::ostringstream msg;
    if (!check.zero_first_column) {
        msg << "principle-1 violated: first test input is not the zero vector";
    }
    if (!full_rank) {
        if (!check.zero_first_column) msg << "; ";
        msg << "principle-2 violated: rank " << check.rank << " < " << n << " (sigma_min " << check.sigma_min
            << " <= " << threshold << ")";
    }
    check.passed = check.zero_first_column && full_rank;
    check.diagnostic = check.passed ? "ok" : msg.str();
    return check;
}

TestDataset run_tests(Plant& plant, Dims dims, const Matrix& test_inputs, double rank_tol)
{
    validate(dims);
    if (test_inputs.rows() != dims.input_length()) {
        throw ShapeError("test inputs have " + std::to_string(test_inputs.rows()) + " rows, expected n_uT = " +
                         std::to_string(dims.input_length()));
    }
    const PrincipleCheck check = verify_principles(test_inputs, rank_tol);
    if (!check.passed) {
        throw PrincipleError(check.diagnostic);
    }
    TestDataset data{dims, test_inputs, Matrix(dims.output_length(), test_inputs.cols())};
    for (Eigen::Index k = 0; k < test_inputs.cols(); ++k) {
        const Vector y = plant.apply(test_inputs.col(k));
        if (y.size() != dims.output_length()) {
            throw ProtocolError("plant returned " + std::to_string(y.size()) + " outputs for test " +
                                std::to_string(k) + ", expected " + std::to_string(dims.output_length()));
        }
        data.outputs.col(k) = y;
    }
    return data;
}

} // namespace sbl
