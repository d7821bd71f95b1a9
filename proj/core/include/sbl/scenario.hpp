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
#ifndef SBL_SCENARIO_HPP
#define SBL_SCENARIO_HPP

#include "sbl/ilc.hpp"
#include "sbl/lifted_model.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace sbl {

struct NamedModel {
    std::string name;
    LtvModel model;
};

/// "example1-host", "example1-guest", "example1-dissimilar", "example2-host", "example2-guest".
LtvModel builtin_model(const std::string& name);
const std::vector<std::string>& builtin_model_names();

/// Sampling time of the mobile-robot models, seconds.
inline constexpr double kRobotSampleTime = 0.05;

struct ReferenceSpec {
    enum class Kind { example1, example2, samples };

    Kind kind = Kind::example1;
    double velocity = 3.0;         ///< example2: constant velocity reference
    double azimuth_slope = -0.6875; ///< example2: rad per step after the hold
    int hold_steps = 11;           ///< example2: azimuth is 0 for n < hold_steps
    Vector samples;                ///< explicit y_d, time-major

    /// Reference supervector of length n_y * T.
    Vector evaluate(const Dims& dims) const;
};

/// y_d(t) = exp(-0.1 t) sin(pi t / 5).
Vector example1_reference(int horizon = 35);

/// y_d(n) = (velocity, azimuth(n)) with azimuth 0 during the hold, then slope * (n - hold_steps).
Vector example2_reference(int horizon = 80, double velocity = 3.0, double azimuth_slope = -0.6875,
                          int hold_steps = 11);

struct Tolerances {
    double rank = 1e-8;
    double membership = 1e-8;
    double similarity = 1e-8;
};

struct ScenarioConfig {
    NamedModel host;
    std::vector<NamedModel> guests;
    ReferenceSpec reference;
    Tolerances tolerances;
    IlcOptions ilc;
    bool override_gate = false;
    double sample_time = 0.0; ///< > 0 enables planar path output (x += v cos(phi) Ts)
    std::string out_dir = "out";

    Dims dims() const { return host.model.dims(); }
    /// Throws ConfigError on inconsistent dimensions or invalid settings.
    void validate() const;
};

/// Throws ConfigError with "line:column" for syntax errors and the JSON path for semantic ones.
ScenarioConfig parse_scenario(const std::string& text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// JSON with every model written as an explicit literal.
std::string serialize_scenario(const ScenarioConfig& config);

/// "example1" or "example2".
ScenarioConfig builtin_scenario(const std::string& name);

struct PathPoint {
    int step;
    double time;
    double x;
    double y;
    double velocity;
    double azimuth;
};

/// Planar unicycle integration from the origin; outputs are (velocity, azimuth).
std::vector<PathPoint> integrate_path(const Trajectory& traj, double sample_time);

} // namespace sbl

#endif // SBL_SCENARIO_HPP
