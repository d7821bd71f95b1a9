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
#ifndef SBL_TOOLS_CLI_HPP
#define SBL_TOOLS_CLI_HPP

#include "sbl/scenario.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace sbl::cli {

enum ExitCode : int {
    kSuccess = 0,
    kError = 1,
    kNotSimilar = 2,
};

struct Overrides {
    std::optional<std::filesystem::path> out;
    std::optional<double> tol_rank;
    std::optional<double> tol_similarity;
    std::optional<double> tol_membership;
    bool override_gate = false;
    unsigned seed = 0;
};

/// Applies command-line overrides on top of a loaded scenario.
ScenarioConfig apply(ScenarioConfig config, const Overrides& overrides);

int cmd_test(const ScenarioConfig& config, std::ostream& os);
int cmd_similarity(const ScenarioConfig& config, std::ostream& os);
int cmd_transfer(const ScenarioConfig& config, std::ostream& os);
/// plant: name of the host or a guest; empty selects the first guest.
int cmd_ilc(const ScenarioConfig& config, const std::string& plant, std::ostream& os);
/// Full pipeline for a built-in scenario, including the optimality spot check.
int cmd_example(const ScenarioConfig& config, unsigned seed, std::ostream& os);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sbl::cli

#endif // SBL_TOOLS_CLI_HPP
