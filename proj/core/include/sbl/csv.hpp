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
#ifndef SBL_CSV_HPP
#define SBL_CSV_HPP

#include "sbl/behavior_rep.hpp"
#include "sbl/ilc.hpp"
#include "sbl/io_test.hpp"
#include "sbl/similarity.hpp"
#include "sbl/transfer.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace sbl::csv {

/**
 * @brief One CSV file: a "# key=value,..." metadata line, a header row and numeric rows.
 *
 * Values are written with 17 significant digits so that doubles survive a
 * write/read cycle exactly.
 */
struct Table {
    std::map<std::string, std::string> meta;
    std::vector<std::string> header;
    Matrix values;
};

void write_table(const std::filesystem::path& path, const Table& table);
Table read_table(const std::filesystem::path& path);

/// Header "c0,c1,...".
Table matrix_table(const Matrix& m, std::map<std::string, std::string> meta = {});

std::map<std::string, std::string> dims_meta(const Dims& dims);
Dims dims_from_meta(const std::map<std::string, std::string>& meta);
double meta_double(const std::map<std::string, std::string>& meta, const std::string& key);

/// <dir>/<stem>_U_test.csv and <dir>/<stem>_Y_test.csv
void write_dataset(const std::filesystem::path& dir, const std::string& stem, const TestDataset& data);
TestDataset read_dataset(const std::filesystem::path& dir, const std::string& stem);

/// <dir>/W.csv, <dir>/w0.csv, <dir>/H.csv
void write_behavior(const std::filesystem::path& dir, const BehaviorRep& rep);
BehaviorRep read_behavior(const std::filesystem::path& dir);

/// Rows "k,index"; metadata carries the residual and flags.
void write_similarity(const std::filesystem::path& path, const SimilarityReport& report);

struct SimilaritySummary {
    bool similar = false;
    bool gate_overridden = false;
    bool degenerate_direction = false;
    double lae_residual = 0.0;
    Vector indexes;
};
SimilaritySummary read_similarity(const std::filesystem::path& path);

/// One row per time step: t,u0..,y0..
void write_trajectory(const std::filesystem::path& path, const Trajectory& traj, const std::string& input_prefix = "u",
                      const std::string& output_prefix = "y");
Trajectory read_trajectory(const std::filesystem::path& path);

void write_ilc_curve(const std::filesystem::path& path, const std::vector<IlcErrorRow>& rows);
std::vector<IlcErrorRow> read_ilc_curve(const std::filesystem::path& path);

} // namespace sbl::csv

#endif // SBL_CSV_HPP
