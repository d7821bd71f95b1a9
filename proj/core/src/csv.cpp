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
#include "sbl/csv.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace sbl::csv {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(line);
    while (std::getline(is, item, sep)) {
        out.push_back(item);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& text, const fs::path& path, std::size_t line)
{
    const std::string t = trim(text);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size()) {
        throw ConfigError(path.string() + ":" + std::to_string(line) + ": not a number: '" + t + "'");
    }
    return v;
}

std::string format(double v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

int meta_int(const std::map<std::string, std::string>& meta, const std::string& key)
{
    const double v = meta_double(meta, key);
    return static_cast<int>(v);
}

std::string flag(bool b) { return b ? "1" : "0"; }

} // namespace

void write_table(const fs::path& path, const Table& table)
{
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream os(path);
    if (!os) {
        throw ConfigError("cannot write " + path.string());
    }
    os << "#";
    bool first = true;
    for (const auto& [key, value] : table.meta) {
        os << (first ? " " : ",") << key << "=" << value;
        first = false;
    }
    os << "\n";
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        os << (c ? "," : "") << table.header[c];
    }
    os << "\n";
    for (Eigen::Index r = 0; r < table.values.rows(); ++r) {
        for (Eigen::Index c = 0; c < table.values.cols(); ++c) {
            os << (c ? "," : "") << format(table.values(r, c));
        }
        os << "\n";
    }
}

Table read_table(const fs::path& path)
{
    std::ifstream is(path);
    if (!is) {
        throw ConfigError("cannot read " + path.string());
    }
    Table table;
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(is, line) || line.empty() || line.front() != '#') {
        throw ConfigError(path.string() + ":1: expected '# key=value,...' metadata line");
    }
    ++lineno;
    for (const std::string& item : split(trim(line.substr(1)), ',')) {
        if (trim(item).empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path.string() + ":1: malformed metadata entry '" + item + "'");
        }
        table.meta[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
    }
    if (!std::getline(is, line)) {
        throw ConfigError(path.string() + ":2: missing header row");
    }
    ++lineno;
    for (const std::string& name : split(trim(line), ',')) {
        table.header.push_back(trim(name));
    }
    std::vector<std::vector<double>> rows;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::vector<double> row;
        for (const std::string& cell : split(trim(line), ',')) {
            row.push_back(parse_number(cell, path, lineno));
        }
        if (row.size() != table.header.size()) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected " +
                              std::to_string(table.header.size()) + " columns, found " + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    table.values.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(table.header.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            table.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
        }
    }
    return table;
}

Table matrix_table(const Matrix& m, std::map<std::string, std::string> meta)
{
    Table table{std::move(meta), {}, m};
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        table.header.push_back("c" + std::to_string(c));
    }
    return table;
}

std::map<std::string, std::string> dims_meta(const Dims& dims)
{
    return {{"n_u", std::to_string(dims.nu)}, {"n_y", std::to_string(dims.ny)}, {"T", std::to_string(dims.horizon)}};
}

double meta_double(const std::map<std::string, std::string>& meta, const std::string& key)
{
    const auto it = meta.find(key);
    if (it == meta.end()) {
        throw ConfigError("missing metadata key '" + key + "'");
    }
    char* end = nullptr;
    const double v = std::strtod(it->second.c_str(), &end);
    if (end != it->second.c_str() + it->second.size() || it->second.empty()) {
        throw ConfigError("metadata key '" + key + "' is not numeric: " + it->second);
    }
    return v;
}

Dims dims_from_meta(const std::map<std::string, std::string>& meta)
{
    Dims dims{meta_int(meta, "n_u"), meta_int(meta, "n_y"), meta_int(meta, "T")};
    validate(dims);
    return dims;
}

void write_dataset(const fs::path& dir, const std::string& stem, const TestDataset& data)
{
    data.validate();
    write_table(dir / (stem + "_U_test.csv"), matrix_table(data.inputs, dims_meta(data.dims)));
    write_table(dir / (stem + "_Y_test.csv"), matrix_table(data.outputs, dims_meta(data.dims)));
}

TestDataset read_dataset(const fs::path& dir, const std::string& stem)
{
    const Table u = read_table(dir / (stem + "_U_test.csv"));
    const Table y = read_table(dir / (stem + "_Y_test.csv"));
    const Dims dims = dims_from_meta(u.meta);
    if (dims_from_meta(y.meta) != dims) {
        throw ConfigError("U_test and Y_test disagree on dimensions");
    }
    TestDataset data{dims, u.values, y.values};
    data.validate();
    return data;
}

void write_behavior(const fs::path& dir, const BehaviorRep& rep)
{
    auto meta = dims_meta(rep.dims());
    meta["rank_tol"] = format(rep.rank_tol());
    write_table(dir / "W.csv", matrix_table(rep.differences(), meta));
    write_table(dir / "w0.csv", matrix_table(rep.offset(), meta));
    write_table(dir / "H.csv", matrix_table(rep.basis(), meta));
}

BehaviorRep read_behavior(const fs::path& dir)
{
    const Table w = read_table(dir / "W.csv");
    const Table w0 = read_table(dir / "w0.csv");
    const Table h = read_table(dir / "H.csv");
    const Dims dims = dims_from_meta(w.meta);
    if (w0.values.cols() != 1) {
        throw ConfigError("w0.csv must hold a single column");
    }
    return BehaviorRep::from_parts(dims, w.values, w0.values.col(0), h.values, meta_double(w.meta, "rank_tol"));
}

void write_similarity(const fs::path& path, const SimilarityReport& report)
{
    Table table;
    table.meta = {{"similar", flag(report.similar)},
                  {"gate_overridden", flag(report.gate_overridden)},
                  {"degenerate_direction", flag(report.degenerate_direction)},
                  {"lae_residual", format(report.lae_residual)},
                  {"distance", format(report.distance_to_identity())}};
    table.header = {"k", "index"};
    table.values.resize(report.indexes.size(), 2);
    for (Eigen::Index k = 0; k < report.indexes.size(); ++k) {
        table.values(k, 0) = static_cast<double>(k);
        table.values(k, 1) = report.indexes(k);
    }
    write_table(path, table);
}

SimilaritySummary read_similarity(const fs::path& path)
{
    const Table table = read_table(path);
    if (table.header.size() != 2) {
        throw ConfigError(path.string() + ": expected columns k,index");
    }
    SimilaritySummary out;
    out.similar = meta_double(table.meta, "similar") != 0.0;
    out.gate_overridden = meta_double(table.meta, "gate_overridden") != 0.0;
    out.degenerate_direction = meta_double(table.meta, "degenerate_direction") != 0.0;
    out.lae_residual = meta_double(table.meta, "lae_residual");
    out.indexes = table.values.col(1);
    return out;
}

void write_trajectory(const fs::path& path, const Trajectory& traj, const std::string& input_prefix,
                      const std::string& output_prefix)
{
    const Dims& d = traj.dims;
    Table table{dims_meta(d), {"t"}, Matrix(d.horizon, 1 + d.nw())};
    for (int i = 0; i < d.nu; ++i) table.header.push_back(input_prefix + std::to_string(i));
    for (int i = 0; i < d.ny; ++i) table.header.push_back(output_prefix + std::to_string(i));
    for (int t = 0; t < d.horizon; ++t) {
        table.values(t, 0) = t;
        table.values.row(t).segment(1, d.nu) = traj.input_at(t).transpose();
        table.values.row(t).segment(1 + d.nu, d.ny) = traj.output_at(t).transpose();
    }
    write_table(path, table);
}

Trajectory read_trajectory(const fs::path& path)
{
    const Table table = read_table(path);
    const Dims d = dims_from_meta(table.meta);
    if (table.values.rows() != d.horizon || table.values.cols() != 1 + d.nw()) {
        throw ConfigError(path.string() + ": table shape does not match " + to_string(d));
    }
    Vector u(d.input_length());
    Vector y(d.output_length());
    for (int t = 0; t < d.horizon; ++t) {
        u.segment(t * d.nu, d.nu) = table.values.row(t).segment(1, d.nu).transpose();
        y.segment(t * d.ny, d.ny) = table.values.row(t).segment(1 + d.nu, d.ny).transpose();
    }
    return {d, u, y};
}

void write_ilc_curve(const fs::path& path, const std::vector<IlcErrorRow>& rows)
{
    Table table{{{"rows", std::to_string(rows.size())}}, {"iteration", "error"},
                Matrix(static_cast<Eigen::Index>(rows.size()), 2)};
    for (std::size_t k = 0; k < rows.size(); ++k) {
        table.values(static_cast<Eigen::Index>(k), 0) = rows[k].iteration;
        table.values(static_cast<Eigen::Index>(k), 1) = rows[k].error;
    }
    write_table(path, table);
}

std::vector<IlcErrorRow> read_ilc_curve(const fs::path& path)
{
    const Table table = read_table(path);
    std::vector<IlcErrorRow> rows;
    for (Eigen::Index r = 0; r < table.values.rows(); ++r) {
        rows.push_back({static_cast<int>(table.values(r, 0)), table.values(r, 1)});
    }
    return rows;
}

} // namespace sbl::csv
