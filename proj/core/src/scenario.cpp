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
#include "sbl/scenario.hpp"

#include <json.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace sbl {

using json = nlohmann::json;

namespace {

LtvModel example1_model(double a0, double a1, double a2, const Vector& x0)
{
    constexpr int horizon = 35;
    LtvModel model;
    for (int t = 0; t < horizon; ++t) {
        const double drift = 0.05 * t;
        Matrix a(3, 3);
        a << drift, 1.0, 0.0,
             0.0, drift, 1.0,
             a0, a1, a2 + drift;
        Matrix b(3, 1);
        b << 6.0, 0.0, 0.5;
        Matrix c(1, 3);
        c << 2.0, 1.0, 0.0;
        model.A.push_back(a);
        model.B.push_back(b);
        model.C.push_back(c);
        model.D.push_back(Matrix::Zero(1, 1));
    }
    model.x0 = x0;
    return model;
}

LtvModel example2_model(const Matrix& a, const Matrix& b, const Vector& x0)
{
    Matrix c(2, 3);
    c << 1.0, 0.0, 0.0,
         0.0, 1.0, 0.0;
    return LtvModel::time_invariant(a, b, c, Matrix::Zero(2, 2), x0, 80);
}

// ---- JSON helpers ---------------------------------------------------------

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ConfigError(where + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key)) {
        fail(where, "missing field '" + key + "'");
    }
    return obj.at(key);
}

double number(const json& j, const std::string& where)
{
    if (!j.is_number()) {
        fail(where, "expected a number");
    }
    return j.get<double>();
}

Matrix matrix(const json& j, const std::string& where)
{
    if (!j.is_array() || j.empty()) {
        fail(where, "expected a non-empty array of rows");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = -1;
    Matrix m;
    for (Eigen::Index r = 0; r < rows; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        const std::string at = where + "[" + std::to_string(r) + "]";
        if (!row.is_array()) {
            fail(at, "expected a row array");
        }
        if (cols < 0) {
            cols = static_cast<Eigen::Index>(row.size());
            if (cols == 0) fail(at, "empty row");
            m.resize(rows, cols);
        } else if (static_cast<Eigen::Index>(row.size()) != cols) {
            fail(at, "ragged matrix: expected " + std::to_string(cols) + " columns");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = number(row[static_cast<std::size_t>(c)], at + "[" + std::to_string(c) + "]");
        }
    }
    return m;
}

Vector vector(const json& j, const std::string& where)
{
    if (!j.is_array()) {
        fail(where, "expected an array of numbers");
    }
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = number(j[i], where + "[" + std::to_string(i) + "]");
    }
    return v;
}

std::vector<Matrix> per_step(const json& j, int horizon, bool time_invariant, const std::string& where)
{
    if (time_invariant) {
        return std::vector<Matrix>(static_cast<std::size_t>(horizon), matrix(j, where));
    }
    if (!j.is_array() || static_cast<int>(j.size()) != horizon) {
        fail(where, "expected one matrix per time step (" + std::to_string(horizon) + ")");
    }
    std::vector<Matrix> out;
    for (std::size_t t = 0; t < j.size(); ++t) {
        out.push_back(matrix(j[t], where + "[" + std::to_string(t) + "]"));
    }
    return out;
}

NamedModel parse_model(const json& j, const std::string& where)
{
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        try {
            return {name, builtin_model(name)};
        } catch (const ConfigError& e) {
            fail(where, e.what());
        }
    }
    if (!j.is_object()) {
        fail(where, "expected a built-in model name or a model object");
    }
    if (j.contains("builtin")) {
        NamedModel named = parse_model(j.at("builtin"), where + ".builtin");
        if (j.contains("name")) named.name = j.at("name").get<std::string>();
        return named;
    }
    const json& h = field(j, "horizon", where);
    if (!h.is_number_integer() || h.get<long>() < 1) {
        fail(where + ".horizon", "horizon must be a positive integer");
    }
    const int horizon = h.get<int>();
    const bool invariant = j.value("time_invariant", false);

    NamedModel named;
    named.name = j.value("name", std::string("model"));
    named.model.A = per_step(field(j, "A", where), horizon, invariant, where + ".A");
    named.model.B = per_step(field(j, "B", where), horizon, invariant, where + ".B");
    named.model.C = per_step(field(j, "C", where), horizon, invariant, where + ".C");
    if (j.contains("D")) {
        named.model.D = per_step(j.at("D"), horizon, invariant, where + ".D");
    } else {
        for (int t = 0; t < horizon; ++t) {
            named.model.D.push_back(Matrix::Zero(named.model.C[t].rows(), named.model.B[t].cols()));
        }
    }
    named.model.x0 = vector(field(j, "x0", where), where + ".x0");
    try {
        named.model.validate();
    } catch (const ShapeError& e) {
        fail(where, e.what());
    }
    return named;
}

json to_json(const Matrix& m)
{
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const NamedModel& named)
{
    const LtvModel& m = named.model;
    bool invariant = true;
    for (int t = 1; t < m.horizon() && invariant; ++t) {
        invariant = m.A[t] == m.A[0] && m.B[t] == m.B[0] && m.C[t] == m.C[0] && m.D[t] == m.D[0];
    }
    json j;
    j["name"] = named.name;
    j["horizon"] = m.horizon();
    j["time_invariant"] = invariant;
    const auto emit = [&](const std::vector<Matrix>& steps) {
        if (invariant) return to_json(steps.front());
        json all = json::array();
        for (const Matrix& s : steps) all.push_back(to_json(s));
        return all;
    };
    j["A"] = emit(m.A);
    j["B"] = emit(m.B);
    j["C"] = emit(m.C);
    j["D"] = emit(m.D);
    j["x0"] = std::vector<double>(m.x0.data(), m.x0.data() + m.x0.size());
    return j;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

LtvModel builtin_model(const std::string& name)
{
    if (name == "example1-host") {
        return example1_model(-0.09, -0.60, -1.40, Vector::Map(std::array{0.0, 0.0, 1.02}.data(), 3));
    }
    if (name == "example1-guest") {
        return example1_model(-0.08, -0.66, -1.50, Vector::Map(std::array{0.0, 0.0, 1.0}.data(), 3));
    }
    if (name == "example1-dissimilar") {
        return example1_model(-0.20, -0.20, -1.30, Vector::Map(std::array{0.2, 0.0, 1.0}.data(), 3));
    }
    if (name == "example2-host") {
        Matrix a(3, 3);
        a << 1.0100, 0.0, 0.0,
             0.0, 1.0, 0.0520,
             0.0, 0.0, 1.0100;
        Matrix b(3, 2);
        b << 0.0130, 0.0130,
             -0.0025, -0.0050,
             -0.0850, -0.1700;
        return example2_model(a, b, Vector::Map(std::array{3.0, 0.0, 0.0}.data(), 3));
    }
    if (name == "example2-guest") {
        Matrix a(3, 3);
        a << 0.9975, 0.0, 0.0,
             0.0, 1.0, 0.0499,
             0.0, 0.0, 0.9955;
        Matrix b(3, 2);
        b << 0.0125, 0.0125,
             -0.0021, -0.0042,
             -0.0833, -0.1666;
        return example2_model(a, b, Vector::Map(std::array{3.02, 0.0, 1.0}.data(), 3));
    }
    throw ConfigError("unknown built-in model '" + name + "'");
}

const std::vector<std::string>& builtin_model_names()
{
    static const std::vector<std::string> names{"example1-host", "example1-guest", "example1-dissimilar",
                                                "example2-host", "example2-guest"};
    return names;
}

Vector example1_reference(int horizon)
{
    Vector y(horizon);
    for (int t = 0; t < horizon; ++t) {
        y(t) = std::exp(-0.1 * t) * std::sin(std::numbers::pi * t / 5.0);
    }
    return y;
}

Vector example2_reference(int horizon, double velocity, double azimuth_slope, int hold_steps)
{
    Vector y(2 * horizon);
    for (int n = 0; n < horizon; ++n) {
        y(2 * n) = velocity;
        y(2 * n + 1) = n < hold_steps ? 0.0 : azimuth_slope * (n - hold_steps);
    }
    return y;
}

Vector ReferenceSpec::evaluate(const Dims& dims) const
{
    Vector y;
    switch (kind) {
    case Kind::example1:
        if (dims.ny != 1) throw ConfigError("reference 'example1' needs n_y = 1");
        y = example1_reference(dims.horizon);
        break;
    case Kind::example2:
        if (dims.ny != 2) throw ConfigError("reference 'example2' needs n_y = 2");
        y = example2_reference(dims.horizon, velocity, azimuth_slope, hold_steps);
        break;
    case Kind::samples:
        y = samples;
        break;
    }
    if (y.size() != dims.output_length()) {
        throw ConfigError("reference has " + std::to_string(y.size()) + " samples, expected n_y*T = " +
                          std::to_string(dims.output_length()));
    }
    return y;
}

void ScenarioConfig::validate() const
{
    try {
        host.model.validate();
        for (const NamedModel& g : guests) g.model.validate();
    } catch (const ShapeError& e) {
        throw ConfigError(e.what());
    }
    const Dims d = dims();
    for (const NamedModel& g : guests) {
        if (g.model.horizon() != d.horizon) {
            throw ConfigError("guest '" + g.name + "' has horizon " + std::to_string(g.model.horizon()) +
                              ", host has " + std::to_string(d.horizon));
        }
        if (g.model.dims() != d) {
            throw ConfigError("guest '" + g.name + "' has dimensions " + to_string(g.model.dims()) + ", host has " +
                              to_string(d));
        }
    }
    if (!(tolerances.rank > 0.0 && tolerances.membership > 0.0 && tolerances.similarity > 0.0)) {
        throw ConfigError("tolerances must be positive");
    }
    if (ilc.max_iters < 0 || !(ilc.stop_tol >= 0.0) || !(ilc.regularization >= 0.0) ||
        !(ilc.gain_scale > 0.0)) {
        throw ConfigError("invalid ilc settings");
    }
    if (sample_time < 0.0) {
        throw ConfigError("sample_time must be >= 0");
    }
    reference.evaluate(d);
}

namespace {
ScenarioConfig parse_root(const json& root);
} // namespace

ScenarioConfig parse_scenario(const std::string& text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte);
        throw ConfigError("config:" + std::to_string(line) + ":" + std::to_string(col) + ": syntax error: " +
                          e.what());
    }
    if (!root.is_object()) {
        fail("config", "top level must be an object");
    }
    try {
        return parse_root(root);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

namespace {

ScenarioConfig parse_root(const json& root)
{
    ScenarioConfig cfg;
    cfg.host = parse_model(field(root, "host", "config"), "config.host");
    if (root.contains("guests")) {
        const json& guests = root.at("guests");
        if (!guests.is_array()) fail("config.guests", "expected an array");
        for (std::size_t i = 0; i < guests.size(); ++i) {
            cfg.guests.push_back(parse_model(guests[i], "config.guests[" + std::to_string(i) + "]"));
        }
    }

    if (root.contains("reference")) {
        const json& r = root.at("reference");
        const std::string type = field(r, "type", "config.reference").get<std::string>();
        if (type == "example1") {
            cfg.reference.kind = ReferenceSpec::Kind::example1;
        } else if (type == "example2") {
            cfg.reference.kind = ReferenceSpec::Kind::example2;
            cfg.reference.velocity = r.value("velocity", cfg.reference.velocity);
            cfg.reference.azimuth_slope = r.value("azimuth_slope", cfg.reference.azimuth_slope);
            cfg.reference.hold_steps = r.value("hold_steps", cfg.reference.hold_steps);
        } else if (type == "samples") {
            cfg.reference.kind = ReferenceSpec::Kind::samples;
            cfg.reference.samples = vector(field(r, "values", "config.reference"), "config.reference.values");
        } else {
            fail("config.reference.type", "unknown reference type '" + type + "'");
        }
    } else if (cfg.dims().ny == 2) {
        cfg.reference.kind = ReferenceSpec::Kind::example2;
    }

    if (root.contains("tolerances")) {
        const json& t = root.at("tolerances");
        cfg.tolerances.rank = t.value("rank", cfg.tolerances.rank);
        cfg.tolerances.membership = t.value("membership", cfg.tolerances.membership);
        cfg.tolerances.similarity = t.value("similarity", cfg.tolerances.similarity);
    }
    if (root.contains("ilc")) {
        const json& i = root.at("ilc");
        cfg.ilc.max_iters = i.value("max_iters", cfg.ilc.max_iters);
        cfg.ilc.stop_tol = i.value("stop_tol", cfg.ilc.stop_tol);
        cfg.ilc.regularization = i.value("regularization", cfg.ilc.regularization);
        cfg.ilc.gain_scale = i.value("gain_scale", cfg.ilc.gain_scale);
        const std::string law = i.value("law", std::string("norm_optimal"));
        if (law == "norm_optimal") {
            cfg.ilc.law = IlcLaw::norm_optimal;
        } else if (law == "gradient") {
            cfg.ilc.law = IlcLaw::gradient;
        } else {
            fail("config.ilc.law", "expected 'norm_optimal' or 'gradient'");
        }
    }
    cfg.override_gate = root.value("override_gate", false);
    cfg.sample_time = root.value("sample_time", 0.0);
    cfg.out_dir = root.value("out", cfg.out_dir);
    cfg.validate();
    return cfg;
}

} // namespace

ScenarioConfig load_scenario(const std::filesystem::path& path)
{
    std::ifstream is(path);
    if (!is) {
        throw ConfigError("cannot read config " + path.string());
    }
    std::stringstream buffer;
    buffer << is.rdbuf();
    try {
        return parse_scenario(buffer.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::string serialize_scenario(const ScenarioConfig& cfg)
{
    json root;
    root["host"] = to_json(cfg.host);
    root["guests"] = json::array();
    for (const NamedModel& g : cfg.guests) root["guests"].push_back(to_json(g));

    json ref;
    switch (cfg.reference.kind) {
    case ReferenceSpec::Kind::example1:
        ref["type"] = "example1";
        break;
    case ReferenceSpec::Kind::example2:
        ref["type"] = "example2";
        ref["velocity"] = cfg.reference.velocity;
        ref["azimuth_slope"] = cfg.reference.azimuth_slope;
        ref["hold_steps"] = cfg.reference.hold_steps;
        break;
    case ReferenceSpec::Kind::samples:
        ref["type"] = "samples";
        ref["values"] = std::vector<double>(cfg.reference.samples.data(),
                                            cfg.reference.samples.data() + cfg.reference.samples.size());
        break;
    }
    root["reference"] = ref;
    root["tolerances"] = {{"rank", cfg.tolerances.rank},
                          {"membership", cfg.tolerances.membership},
                          {"similarity", cfg.tolerances.similarity}};
    root["ilc"] = {{"max_iters", cfg.ilc.max_iters},
                   {"stop_tol", cfg.ilc.stop_tol},
                   {"regularization", cfg.ilc.regularization},
                   {"gain_scale", cfg.ilc.gain_scale},
                   {"law", cfg.ilc.law == IlcLaw::gradient ? "gradient" : "norm_optimal"}};
    root["override_gate"] = cfg.override_gate;
    root["sample_time"] = cfg.sample_time;
    root["out"] = cfg.out_dir;
    return root.dump(2);
}

ScenarioConfig builtin_scenario(const std::string& name)
{
    ScenarioConfig cfg;
    if (name == "example1") {
        cfg.host = {"example1-host", builtin_model("example1-host")};
        cfg.guests = {{"example1-guest", builtin_model("example1-guest")},
                      {"example1-dissimilar", builtin_model("example1-dissimilar")}};
        cfg.reference.kind = ReferenceSpec::Kind::example1;
        cfg.ilc.max_iters = 300;
        cfg.ilc.stop_tol = 1e-6;
        cfg.out_dir = "out/example1";
    } else if (name == "example2") {
        cfg.host = {"example2-host", builtin_model("example2-host")};
        cfg.guests = {{"example2-guest", builtin_model("example2-guest")}};
        cfg.reference.kind = ReferenceSpec::Kind::example2;
        cfg.ilc.max_iters = 200;
        cfg.ilc.stop_tol = 1e-6;
        cfg.sample_time = kRobotSampleTime;
        cfg.out_dir = "out/example2";
    } else {
        throw ConfigError("unknown built-in scenario '" + name + "'");
    }
    cfg.validate();
    return cfg;
}

std::vector<PathPoint> integrate_path(const Trajectory& traj, double sample_time)
{
    if (traj.dims.ny != 2) {
        throw ShapeError("integrate_path needs outputs (velocity, azimuth)");
    }
    std::vector<PathPoint> path;
    double x = 0.0;
    double y = 0.0;
    for (int n = 0; n < traj.dims.horizon; ++n) {
        const double v = traj.y(2 * n);
        const double phi = traj.y(2 * n + 1);
        path.push_back({n, n * sample_time, x, y, v, phi});
        x += v * std::cos(phi) * sample_time;
        y += v * std::sin(phi) * sample_time;
    }
    return path;
}

} // namespace sbl
