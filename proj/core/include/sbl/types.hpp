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
#ifndef SBL_TYPES_HPP
#define SBL_TYPES_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace sbl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/**
 * @brief Signal dimensions shared by every trajectory of a system.
 *
 * A trajectory over the horizon is the time-major supervector
 * w = col(u(0), ..., u(T-1), y(0), ..., y(T-1)) of length (n_u + n_y) * T.
 */
struct Dims {
    int nu = 0;
    int ny = 0;
    int horizon = 0;

    int nw() const { return nu + ny; }
    int input_length() const { return nu * horizon; }
    int output_length() const { return ny * horizon; }
    int trajectory_length() const { return nw() * horizon; }

    bool operator==(const Dims&) const = default;
};

std::string to_string(const Dims& dims);

/// Throws ShapeError unless nu, ny, horizon are all >= 1.
void validate(const Dims& dims);

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vector or matrix has the wrong size for the operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// The test input design violates the zero-first-column or rank principle.
class PrincipleError : public Error {
public:
    using Error::Error;
};

/// A plant returned an output supervector of the wrong length.
class ProtocolError : public Error {
public:
    using Error::Error;
};

/// Trajectory differences lost rank, so no n_u*T dimensional behavior exists.
class DegenerateBehaviorError : public Error {
public:
    using Error::Error;
};

/// An operation was called without the certificate it requires.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The guest trajectory handed to a transfer is not in the guest behavior.
class ExperienceInvalidError : public Error {
public:
    using Error::Error;
};

/// The learning loop stopped reducing the tracking error.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Malformed scenario configuration or data file.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace sbl

#endif // SBL_TYPES_HPP
