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
#ifndef SBL_ILC_HPP
#define SBL_ILC_HPP

#include "sbl/behavior_rep.hpp"
#include "sbl/io_test.hpp"

#include <vector>

namespace sbl {

enum class IlcLaw {
    norm_optimal, ///< u += (G^T G + lambda I)^{-1} G^T e, lambda = regularization * sigma_max(G)^2
    gradient,     ///< u += G^T e / sigma_max(G)^2
};

struct IlcOptions {
    int max_iters = 300;
    double stop_tol = 1e-6;
    IlcLaw law = IlcLaw::norm_optimal;
    double regularization = 1e-10;
    double gain_scale = 1.0; ///< beta in u += beta * M e; monotone for 0 < beta <= 1
    int divergence_window = 10;
};

enum class IlcStatus {
    converged,     ///< ||e|| <= stop_tol
    floor_reached, ///< ||e|| within stop_tol of the unreachable part of y_d
    max_iters,
};

const char* to_string(IlcStatus status);

struct IlcRun {
    Dims dims;
    Vector u_final;
    Vector y_final;
    std::vector<double> error_history; ///< ||y_d - y_k|| for every trial
    int iterations = 0;
    IlcStatus status = IlcStatus::max_iters;
    /// Part of the tracking error no input can remove, estimated from the test data.
    double reachable_floor = 0.0;

    /// col(u_final, y_final), the learned trajectory.
    Vector stacked() const;
};

/// Input-to-output map recovered from the data: G = W_y W_u^{-1}.
Matrix estimate_lifted_gain(const BehaviorRep& rep);

/// Matrix M of the update u_{k+1} = u_k + M e_k.
Matrix learning_gain(const Matrix& lifted_gain, const IlcOptions& options);

/**
 * Trial-and-error tracking of y_d starting from u_0 = 0. Each trial queries the
 * plant once. Stops when the error norm drops to stop_tol, when it comes within
 * stop_tol of the reachable floor, or after max_iters trials. Throws
 * DivergenceError when the error fails to decrease for divergence_window
 * consecutive trials while still above the floor.
 */
IlcRun ilc_track(Plant& plant, const BehaviorRep& rep, const Vector& reference, const IlcOptions& options = {});

struct IlcErrorRow {
    int iteration;
    double error;
};

std::vector<IlcErrorRow> ilc_error_curve(const IlcRun& run);

} // namespace sbl

#endif // SBL_ILC_HPP
