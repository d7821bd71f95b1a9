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
#include "sbl/lifted_model.hpp"

#include <string>

namespace sbl {

Trajectory::Trajectory(Dims d, Vector inputs, Vector outputs)
    : dims(d), u(std::move(inputs)), y(std::move(outputs))
{
    if (u.size() != d.input_length() || y.size() != d.output_length()) {
        throw ShapeError("trajectory lengths do not match " + to_string(d));
    }
}

Vector Trajectory::stacked() const
{
    Vector w(u.size() + y.size());
    w << u, y;
    return w;
}

Trajectory Trajectory::from_stacked(Dims d, const Vector& w)
{
    if (w.size() != d.trajectory_length()) {
        throw ShapeError("stacked trajectory has length " + std::to_string(w.size()) + ", expected " +
                         std::to_string(d.trajectory_length()));
    }
    return {d, w.head(d.input_length()), w.tail(d.output_length())};
}

void LtvModel::validate() const
{
    const int steps = horizon();
    if (steps < 1) {
        throw ShapeError("model horizon must be >= 1");
    }
    if (static_cast<int>(B.size()) != steps || static_cast<int>(C.size()) != steps ||
        static_cast<int>(D.size()) != steps) {
        throw ShapeError("model needs A, B, C, D for every one of the " + std::to_string(steps) + " steps");
    }
    const Eigen::Index n = x0.size();
    const Eigen::Index m = B.front().cols();
    const Eigen::Index p = C.front().rows();
    if (n < 1 || m < 1 || p < 1) {
        throw ShapeError("model needs n_x, n_u, n_y >= 1");
    }
    for (int t = 0; t < steps; ++t) {
        const auto bad = [&](const char* name) {
            throw ShapeError(std::string("model matrix ") + name + "(" + std::to_string(t) + ") has the wrong shape");
        };
        if (A[t].rows() != n || A[t].cols() != n) bad("A");
        if (B[t].rows() != n || B[t].cols() != m) bad("B");
        if (C[t].rows() != p || C[t].cols() != n) bad("C");
        if (D[t].rows() != p || D[t].cols() != m) bad("D");
    }
}

LtvModel LtvModel::time_invariant(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d,
                                  const Vector& x0, int horizon)
{
    if (horizon < 1) {
        throw ShapeError("model horizon must be >= 1");
    }
    const auto n = static_cast<std::size_t>(horizon);
    LtvModel model{std::vector<Matrix>(n, a), std::vector<Matrix>(n, b), std::vector<Matrix>(n, c),
                   std::vector<Matrix>(n, d), x0};
    model.validate();
    return model;
}

Trajectory simulate(const LtvModel& model, const Vector& u)
{
    model.validate();
    const Dims dims = model.dims();
    if (u.size() != dims.input_length()) {
        throw ShapeError("simulate: input supervector has length " + std::to_string(u.size()) + ", expected " +
                         std::to_string(dims.input_length()));
    }
    Vector y(dims.output_length());
    Vector x = model.x0;
    for (int t = 0; t < dims.horizon; ++t) {
        const auto ut = u.segment(t * dims.nu, dims.nu);
        y.segment(t * dims.ny, dims.ny) = model.C[t] * x + model.D[t] * ut;
        x = model.A[t] * x + model.B[t] * ut;
    }
    return {dims, u, std::move(y)};
}

LiftedMatrices build_lifted(const LtvModel& model)
{
    model.validate();
    const int steps = model.horizon();
    const int n = model.nx();
    const int m = model.nu();
    const int p = model.ny();

    LiftedMatrices lifted{Matrix::Zero(p * steps, m * steps), Matrix::Zero(p * steps, n)};

    // propagated[s] holds A(t-1)...A(s+1) B(s) at the top of step t.
    std::vector<Matrix> propagated(static_cast<std::size_t>(steps));
    Matrix state_map = Matrix::Identity(n, n); // A(t-1)...A(0)
    for (int t = 0; t < steps; ++t) {
        lifted.L.block(t * p, 0, p, n) = model.C[t] * state_map;
        lifted.G.block(t * p, t * m, p, m) = model.D[t];
        for (int s = 0; s < t; ++s) {
            lifted.G.block(t * p, s * m, p, m) = model.C[t] * propagated[s];
        }
        for (int s = 0; s < t; ++s) {
            propagated[s] = model.A[t] * propagated[s];
        }
        propagated[t] = model.B[t];
        state_map = model.A[t] * state_map;
    }
    return lifted;
}

BehaviorRep oracle_behavior(const LtvModel& model, double rank_tol)
{
    const LiftedMatrices lifted = build_lifted(model);
    const Dims dims = model.dims();
    Matrix differences(dims.trajectory_length(), dims.input_length());
    differences << Matrix::Identity(dims.input_length(), dims.input_length()), lifted.G;
    Vector offset = Vector::Zero(dims.trajectory_length());
    offset.tail(dims.output_length()) = lifted.L * model.x0;
    return {dims, std::move(differences), std::move(offset), rank_tol};
}

} // namespace sbl
