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

#include <limits>
#include <sstream>

namespace sbl {

const char* to_string(IlcStatus status)
{
    switch (status) {
    case IlcStatus::converged:
        return "converged";
    case IlcStatus::floor_reached:
        return "reached the reachable floor";
    case IlcStatus::max_iters:
        return "stopped at max_iters";
    }
    return "unknown";
}

Vector IlcRun::stacked() const
{
    Vector w(u_final.size() + y_final.size());
    w << u_final, y_final;
    return w;
}

Matrix estimate_lifted_gain(const BehaviorRep& rep)
{
    const Dims& dims = rep.dims();
    const Matrix input_part = rep.differences().topRows(dims.input_length());
    const Matrix output_part = rep.differences().bottomRows(dims.output_length());
    // G W_u = W_y  <=>  W_u^T G^T = W_y^T
    return input_part.transpose().partialPivLu().solve(output_part.transpose()).transpose();
}

Matrix learning_gain(const Matrix& lifted_gain, const IlcOptions& options)
{
    Eigen::BDCSVD<Matrix> svd(lifted_gain, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector& s = svd.singularValues();
    const double sigma_max = s.size() > 0 ? s(0) : 0.0;
    if (!(sigma_max > 0.0)) {
        return Matrix::Zero(lifted_gain.cols(), lifted_gain.rows());
    }
    if (options.law == IlcLaw::gradient) {
        return lifted_gain.transpose() / (sigma_max * sigma_max);
    }
    const double lambda = options.regularization * sigma_max * sigma_max;
    const Vector filter = s.array() / (s.array().square() + lambda);
    return svd.matrixV() * filter.asDiagonal() * svd.matrixU().transpose();
}

namespace {

double unreachable_part(const Matrix& lifted_gain, const Vector& r)
{
    Eigen::BDCSVD<Matrix> svd(lifted_gain, Eigen::ComputeThinU);
    const Vector& s = svd.singularValues();
    const double cutoff = s.size() > 0 ? s(0) * static_cast<double>(lifted_gain.rows()) *
                                             std::numeric_limits<double>::epsilon()
                                       : 0.0;
    const Eigen::Index rank = (s.array() > cutoff).count();
    const Matrix range = svd.matrixU().leftCols(rank);
    return (r - range * (range.transpose() * r)).norm();
}

} // namespace

IlcRun ilc_track(Plant& plant, const BehaviorRep& rep, const Vector& reference, const IlcOptions& options)
{
    const Dims& dims = rep.dims();
    if (reference.size() != dims.output_length()) {
        throw ShapeError("ilc_track: reference has length " + std::to_string(reference.size()) + ", expected " +
                         std::to_string(dims.output_length()));
    }
    const Matrix gain = estimate_lifted_gain(rep);
    const Matrix update = learning_gain(gain, options);
    const Vector free_response = rep.offset().tail(dims.output_length());

    IlcRun run;
    run.dims = dims;
    run.reachable_floor = unreachable_part(gain, reference - free_response);
    run.u_final = Vector::Zero(dims.input_length());
    run.y_final = free_response;

    Vector u = run.u_final;
    int stalled = 0;
    for (int k = 0; k < options.max_iters; ++k) {
        const Vector y = plant.apply(u);
        if (y.size() != dims.output_length()) {
            throw ProtocolError("plant returned " + std::to_string(y.size()) + " outputs, expected " +
                                std::to_string(dims.output_length()));
        }
        const Vector e = reference - y;
        const double err = e.norm();
        run.u_final = u;
        run.y_final = y;
        run.error_history.push_back(err);
        run.iterations = k + 1;
        if (err <= options.stop_tol) {
            run.status = IlcStatus::converged;
            break;
        }
        if (err <= run.reachable_floor + options.stop_tol) {
            run.status = IlcStatus::floor_reached;
            break;
        }
        if (k > 0 && err >= run.error_history[static_cast<std::size_t>(k - 1)]) {
            if (++stalled >= options.divergence_window) {
                std::ostringstream msg;
                msg << "tracking error did not decrease for " << stalled << " consecutive trials (error " << err
                    << ", reachable floor " << run.reachable_floor << ")";
                throw DivergenceError(msg.str());
            }
        } else {
            stalled = 0;
        }
        u += options.gain_scale * (update * e);
    }
    return run;
}

std::vector<IlcErrorRow> ilc_error_curve(const IlcRun& run)
{
    std::vector<IlcErrorRow> rows;
    rows.reserve(run.error_history.size());
    for (std::size_t k = 0; k < run.error_history.size(); ++k) {
        rows.push_back({static_cast<int>(k), run.error_history[k]});
    }
    return rows;
}

} // namespace sbl
