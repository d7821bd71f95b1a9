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
#ifndef SBL_TRAJECTORY_HPP
#define SBL_TRAJECTORY_HPP

#include "sbl/types.hpp"

namespace sbl {

/// Input and output supervectors over the horizon, both stacked time-major.
struct Trajectory {
    Dims dims;
    Vector u;
    Vector y;

    Trajectory() = default;
    Trajectory(Dims d, Vector inputs, Vector outputs);

    /// w = col(u, y).
    Vector stacked() const;
    static Trajectory from_stacked(Dims d, const Vector& w);

    Eigen::VectorBlock<const Vector> input_at(int t) const { return u.segment(t * dims.nu, dims.nu); }
    Eigen::VectorBlock<const Vector> output_at(int t) const { return y.segment(t * dims.ny, dims.ny); }
};

} // namespace sbl

#endif // SBL_TRAJECTORY_HPP
