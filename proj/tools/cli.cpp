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
#include "cli.hpp"

#include "sbl/behavior.hpp"
#include "sbl/csv.hpp"
#include "sbl/ilc.hpp"
#include "sbl/transfer.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <random>

namespace sbl::cli {

namespace fs = std::filesystem;

namespace {

struct System {
    std::string name;
    ModelPlant plant;
    TestDataset data;
    BehaviorRep rep;
};

System probe(const NamedModel& named, const Tolerances& tol)
{
    ModelPlant plant(named.model);
    const Dims dims = named.model.dims();
    TestDataset data = run_tests(plant, dims, design_test_inputs(dims.nu, dims.horizon), tol.rank);
    BehaviorRep rep = build_representation(data, tol.rank);
    return {named.name, std::move(plant), std::move(data), std::move(rep)};
}

Algorithm1Options algorithm_options(const ScenarioConfig& config)
{
    Algorithm1Options options;
    options.rank_tol = config.tolerances.rank;
    options.similarity_tol = config.tolerances.similarity;
    options.override_gate = config.override_gate;
    return options;
}

void write_path(const fs::path& path, const Trajectory& traj, double sample_time)
{
    const std::vector<PathPoint> points = integrate_path(traj, sample_time);
    csv::Table table{{{"sample_time", std::to_string(sample_time)}},
                     {"n", "time", "x", "y", "v", "phi"},
                     Matrix(static_cast<Eigen::Index>(points.size()), 6)};
    for (std::size_t k = 0; k < points.size(); ++k) {
        const PathPoint& p = points[k];
        table.values.row(static_cast<Eigen::Index>(k)) << p.step, p.time, p.x, p.y, p.velocity, p.azimuth;
    }
    csv::write_table(path, table);
}

const NamedModel& find_plant(const ScenarioConfig& config, const std::string& name)
{
    if (name.empty()) {
        return config.guests.empty() ? config.host : config.guests.front();
    }
    if (config.host.name == name) {
        return config.host;
    }
    for (const NamedModel& g : config.guests) {
        if (g.name == name) return g;
    }
    throw ConfigError("no plant named '" + name + "' in the scenario");
}

struct GuestOutcome {
    std::string name;
    IlcRun ilc;
    Algorithm1Outcome outcome;
    double host_tracking_error = 0.0;
};

GuestOutcome run_guest(const ScenarioConfig& config, const NamedModel& guest, const Vector& reference,
                       const Algorithm1Options& options)
{
    System probed = probe(guest, config.tolerances);
    GuestOutcome out{guest.name, ilc_track(probed.plant, probed.rep, reference, config.ilc), {}, 0.0};
    ModelPlant host_plant(config.host.model);
    ModelPlant guest_plant(guest.model);
    out.outcome = algorithm1(host_plant, guest_plant, config.dims(), out.ilc.stacked(), options);
    if (out.outcome.result) {
        const Trajectory host = Trajectory::from_stacked(config.dims(), out.outcome.result->host_trajectory);
        out.host_tracking_error = (host.y - reference).norm();
    }
    return out;
}

void write_guest_outputs(const ScenarioConfig& config, const GuestOutcome& g, const fs::path& dir)
{
    const Dims dims = config.dims();
    const Trajectory guest_traj = Trajectory::from_stacked(dims, g.ilc.stacked());
    csv::write_trajectory(dir / ("transfer_" + g.name + "_guest.csv"), guest_traj, "u_g", "y_g");
    csv::write_ilc_curve(dir / ("ilc_" + g.name + "_curve.csv"), ilc_error_curve(g.ilc));
    if (config.sample_time > 0.0) {
        write_path(dir / ("path_" + g.name + "_guest.csv"), guest_traj, config.sample_time);
    }
    if (!g.outcome.result) {
        return;
    }
    const Trajectory host_traj = Trajectory::from_stacked(dims, g.outcome.result->host_trajectory);
    csv::write_trajectory(dir / ("transfer_" + g.name + "_host.csv"), host_traj, "u_h", "y_h");
    csv::write_similarity(dir / ("similarity_" + g.name + ".csv"), g.outcome.result->report);
    if (config.sample_time > 0.0) {
        write_path(dir / ("path_" + g.name + "_host.csv"), host_traj, config.sample_time);
    }
}

void print_gate(std::ostream& os, const GuestOutcome& g, double tol)
{
    os << "  step 4 gate: LAE residual " << g.outcome.gate.residual << " (tol " << tol << " relative) -> "
       << (g.outcome.gate.similar ? "similar" : "NOT similar");
    if (g.outcome.gate_overridden) {
        os << ", continuing under override";
    }
    os << "\n";
}

} // namespace

ScenarioConfig apply(ScenarioConfig config, const Overrides& o)
{
    if (o.out) config.out_dir = o.out->string();
    if (o.tol_rank) config.tolerances.rank = *o.tol_rank;
    if (o.tol_similarity) config.tolerances.similarity = *o.tol_similarity;
    if (o.tol_membership) config.tolerances.membership = *o.tol_membership;
    if (o.override_gate) config.override_gate = true;
    config.validate();
    return config;
}

int cmd_test(const ScenarioConfig& config, std::ostream& os)
{
    const fs::path dir = config.out_dir;
    std::vector<const NamedModel*> systems{&config.host};
    for (const NamedModel& g : config.guests) systems.push_back(&g);

    for (const NamedModel* named : systems) {
        const System s = probe(*named, config.tolerances);
        const PrincipleCheck check = verify_principles(s.data.inputs, config.tolerances.rank);
        csv::write_dataset(dir, s.name, s.data);
        csv::write_behavior(dir / (s.name + "_behavior"), s.rep);
        os << s.name << ": " << s.data.inputs.cols() << " test columns, principles " << check.diagnostic << " (rank "
           << check.rank << ", sigma_min " << check.sigma_min << ")\n";
    }
    return kSuccess;
}

int cmd_similarity(const ScenarioConfig& config, std::ostream& os)
{
    if (config.guests.empty()) {
        throw ConfigError("similarity needs at least one guest");
    }
    const fs::path dir = config.out_dir;
    const System host = probe(config.host, config.tolerances);
    std::vector<BehaviorRep> reps;
    for (const NamedModel& g : config.guests) reps.push_back(probe(g, config.tolerances).rep);

    const GuestRanking ranking = rank_guests(host.rep, reps, config.tolerances.similarity,
                                             config.override_gate ? Override::diagnostic : Override::none);

    csv::Table table{{}, {"rank", "guest", "distance", "min_index", "similar"},
                     Matrix(static_cast<Eigen::Index>(ranking.ranking.size()), 5)};
    for (std::size_t i = 0; i < config.guests.size(); ++i) {
        table.meta["guest" + std::to_string(i)] = config.guests[i].name;
    }
    os << "host " << config.host.name << ": " << ranking.diagnostic << "\n";
    for (std::size_t r = 0; r < ranking.ranking.size(); ++r) {
        const RankedGuest& g = ranking.ranking[r];
        const std::string& name = config.guests[g.guest].name;
        csv::write_similarity(dir / ("similarity_" + name + ".csv"), g.report);
        table.values.row(static_cast<Eigen::Index>(r)) << static_cast<double>(r + 1), static_cast<double>(g.guest),
            g.distance, g.report.indexes.minCoeff(), g.report.similar ? 1.0 : 0.0;
        os << "  #" << r + 1 << " " << name << ": ||1 - SI|| = " << g.distance
           << ", min index = " << g.report.indexes.minCoeff() << ", LAE residual = " << g.report.lae_residual
           << (g.report.similar ? "" : " [not similar, gate overridden]") << "\n";
    }
    for (std::size_t i : ranking.not_similar) {
        if (config.override_gate) continue;
        os << "  " << config.guests[i].name << ": not similar\n";
    }
    csv::write_table(dir / "ranking.csv", table);
    return !ranking.not_similar.empty() && !config.override_gate ? kNotSimilar : kSuccess;
}

int cmd_transfer(const ScenarioConfig& config, std::ostream& os)
{
    if (config.guests.empty()) {
        throw ConfigError("transfer needs at least one guest");
    }
    const fs::path dir = config.out_dir;
    const Vector reference = config.reference.evaluate(config.dims());
    const Algorithm1Options options = algorithm_options(config);
    bool any_rejected = false;
    for (const NamedModel& guest : config.guests) {
        const GuestOutcome g = run_guest(config, guest, reference, options);
        write_guest_outputs(config, g, dir);
        os << guest.name << " -> " << config.host.name << ":\n";
        os << "  guest ILC: " << g.ilc.iterations << " trials, final error " << g.ilc.error_history.back() << "\n";
        print_gate(os, g, config.tolerances.similarity);
        if (!g.outcome.result) {
            os << "  quit at step " << g.outcome.quit_step << ": behaviors are not similar\n";
            any_rejected = true;
            continue;
        }
        os << "  transfer error ||w_h - w_g|| = " << g.outcome.result->transfer_error
           << ", host tracking error ||y_h - y_d|| = " << g.host_tracking_error << "\n";
    }
    return any_rejected ? kNotSimilar : kSuccess;
}

int cmd_ilc(const ScenarioConfig& config, const std::string& plant_name, std::ostream& os)
{
    const NamedModel& named = find_plant(config, plant_name);
    System s = probe(named, config.tolerances);
    const Vector reference = config.reference.evaluate(config.dims());
    const IlcRun run = ilc_track(s.plant, s.rep, reference, config.ilc);

    const fs::path dir = config.out_dir;
    csv::write_ilc_curve(dir / ("ilc_" + named.name + "_curve.csv"), ilc_error_curve(run));
    const Trajectory traj{run.dims, run.u_final, run.y_final};
    csv::write_trajectory(dir / ("ilc_" + named.name + "_trajectory.csv"), traj);
    if (config.sample_time > 0.0) {
        write_path(dir / ("path_" + named.name + "_ilc.csv"), traj, config.sample_time);
    }
    os << named.name << ": " << run.iterations << " trials, final error "
       << (run.error_history.empty() ? 0.0 : run.error_history.back()) << ", reachable floor " << run.reachable_floor
       << " (" << to_string(run.status) << ")\n";
    return kSuccess;
}

int cmd_example(const ScenarioConfig& base, unsigned seed, std::ostream& os)
{
    ScenarioConfig config = base;
    config.override_gate = true;
    const fs::path dir = config.out_dir;
    const Vector reference = config.reference.evaluate(config.dims());
    const Algorithm1Options options = algorithm_options(config);
    std::mt19937 rng(seed);
    std::normal_distribution<double> normal;

    os << std::setprecision(6);
    os << "host " << config.host.name << " (" << to_string(config.dims()) << ")\n";
    for (const NamedModel& guest : config.guests) {
        const GuestOutcome g = run_guest(config, guest, reference, options);
        write_guest_outputs(config, g, dir);
        const TransferResult& result = *g.outcome.result;
        const BehaviorRep& host = *g.outcome.host;

        int beaten = 0;
        for (int k = 0; k < 1000; ++k) {
            Vector coeffs(host.dims().input_length());
            for (Eigen::Index i = 0; i < coeffs.size(); ++i) coeffs(i) = normal(rng);
            const Vector member = host.offset() + host.differences() * coeffs;
            if ((member - g.ilc.stacked()).norm() < result.transfer_error - 1e-9) ++beaten;
        }

        os << "guest " << guest.name << "\n";
        os << "  ILC: " << g.ilc.iterations << " trials, tracking error " << g.ilc.error_history.back()
           << " (reachable floor " << g.ilc.reachable_floor << ", " << to_string(g.ilc.status) << ")\n";
        print_gate(os, g, config.tolerances.similarity);
        os << "  similarity indexes: max " << result.report.indexes.maxCoeff() << ", min "
           << result.report.indexes.minCoeff() << ", ||1 - SI|| " << result.report.distance_to_identity() << "\n";
        os << "  transfer error ||w_h - w_g|| " << result.transfer_error << ", host tracking error ||y_h - y_d|| "
           << g.host_tracking_error << "\n";
        os << "  optimality: " << beaten << " of 1000 random host trajectories closer to w_g (seed " << seed
           << ")\n";
    }
    os << "outputs written to " << dir.string() << "\n";
    return kSuccess;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Similarity-based learning transfer between unknown LTV systems"};
    app.require_subcommand(1);

    std::string config_path;
    Overrides overrides;
    std::string out_dir;
    double tol_rank = 0.0;
    double tol_similarity = 0.0;
    double tol_membership = 0.0;
    std::string plant;
    bool print_config = false;

    const auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* opt = sub->add_option("--config", config_path, "Scenario config (JSON)")->check(CLI::ExistingFile);
        if (needs_config) opt->required();
        sub->add_option("--out", out_dir, "Output directory");
        sub->add_option("--tol-rank", tol_rank, "Relative rank tolerance for test designs and W");
        sub->add_option("--tol-similarity", tol_similarity, "Relative residual tolerance for the similarity gate");
        sub->add_option("--tol-membership", tol_membership, "Relative membership tolerance");
        sub->add_option("--seed", overrides.seed, "Seed for randomized checks");
        sub->add_flag("--override-gate", overrides.override_gate,
                      "Compute indexes and transfers even when the behaviors do not intersect");
    };

    CLI::App* test = app.add_subcommand("test", "Run offline I/O tests and write datasets");
    CLI::App* similarity = app.add_subcommand("similarity", "Similarity check, indexes and guest ranking");
    CLI::App* transfer_cmd = app.add_subcommand("transfer", "Guest ILC followed by the full transfer pipeline");
    CLI::App* ilc = app.add_subcommand("ilc", "Baseline ILC on one plant");
    CLI::App* example1 = app.add_subcommand("example1", "Reproduce the numerical LTV example");
    CLI::App* example2 = app.add_subcommand("example2", "Reproduce the mobile-robot example");
    for (CLI::App* sub : {test, similarity, transfer_cmd, ilc}) add_common(sub, true);
    for (CLI::App* sub : {example1, example2}) {
        add_common(sub, false);
        sub->add_flag("--print-config", print_config, "Print the built-in scenario as JSON and exit");
    }
    ilc->add_option("--plant", plant, "Plant name (default: first guest)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kError;
    }

    const auto set_if = [](std::optional<double>& dst, const CLI::App* sub, const char* name, double v) {
        if (sub->count(name) > 0) dst = v;
    };

    try {
        CLI::App* sub = app.get_subcommands().front();
        set_if(overrides.tol_rank, sub, "--tol-rank", tol_rank);
        set_if(overrides.tol_similarity, sub, "--tol-similarity", tol_similarity);
        set_if(overrides.tol_membership, sub, "--tol-membership", tol_membership);
        if (!out_dir.empty()) overrides.out = out_dir;

        if (sub == example1 || sub == example2) {
            ScenarioConfig config = config_path.empty() ? builtin_scenario(sub->get_name()) : load_scenario(config_path);
            config = apply(std::move(config), overrides);
            if (print_config) {
                out << serialize_scenario(config) << "\n";
                return kSuccess;
            }
            return cmd_example(config, overrides.seed, out);
        }
        const ScenarioConfig config = apply(load_scenario(config_path), overrides);
        if (sub == test) return cmd_test(config, out);
        if (sub == similarity) return cmd_similarity(config, out);
        if (sub == transfer_cmd) return cmd_transfer(config, out);
        return cmd_ilc(config, plant, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
}

} // namespace sbl::cli
