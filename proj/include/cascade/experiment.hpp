#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/baselines.hpp"
#include "cascade/estimator.hpp"
#include "cascade/event_sim.hpp"
#include "cascade/scm.hpp"

namespace cascade {

/// `rounds` rounds; each round blocks every node once, in a fresh random order.
std::vector<Intervention> schedule_round_robin(std::size_t n, std::size_t rounds, std::uint64_t seed);

/// Round-robin interventional episodes followed by `obs_episodes` observational
/// ones. Episode e is sampled with derive_seed(seed, e).
InterventionalDataset generate_dataset(const CascadeModel& model, std::size_t rounds, std::size_t obs_episodes,
                                       std::uint64_t seed);

TraceDataset simulate_observational_traces(const MechanizedModel& mm, std::size_t episodes, std::uint64_t seed);

struct RunRecord {
    std::string model;
    std::optional<double> p;
    std::size_t n_per_object = 0;
    std::uint64_t seed = 0;
    GraphMetrics metrics;
    double wall_time_seconds = 0.0;

    [[nodiscard]] bool exact() const noexcept { return metrics.shd == 0; }
};

std::string csv_header();
std::string to_csv(const RunRecord& r);
void write_csv(std::ostream& out, const std::vector<RunRecord>& records);

struct SweepConfig {
    /// Catalog name or path to a model file.
    std::string model;
    /// Uniform failure probabilities to sweep; empty keeps the model's own noise.
    std::vector<double> failure;
    std::vector<std::size_t> n_per_object;
    std::size_t seeds = 100;
    std::uint64_t seed = 0;
    double delta = 0.05;
    std::string out;
    /// Fill wall_time_seconds in the CSV. Off by default so reruns are byte-identical.
    bool timing = false;
};

/// JSON object with keys model, failure (number or list), n_per_object (list),
/// seeds, seed, delta, out, timing. Only `model` and `n_per_object` are required.
SweepConfig parse_sweep_config(std::string_view json_text);

struct SweepPoint {
    std::optional<double> p;
    std::size_t n_per_object = 0;
    double mean_shd = 0.0;
    double mean_skeleton_shd = 0.0;
    double exact_fraction = 0.0;
    double mean_precision = 0.0;
    double mean_recall = 0.0;
    double mean_f1 = 0.0;
    double mean_time_seconds = 0.0;
};

/// Per failure setting: exact q_min, the sample-complexity bound and M_min.
struct SweepSetting {
    std::optional<double> p;
    double qmin = 0.0;
    std::size_t bound = 0;
    /// First n_per_object (ascending) reaching 95% exact recovery.
    std::optional<std::size_t> m_min;
};

struct SweepResult {
    std::string model;
    std::size_t n = 0;
    double delta = 0.05;
    std::vector<RunRecord> records;
    std::vector<SweepPoint> points;
    std::vector<SweepSetting> settings;
};

/// A model named by catalog entry or file path.
struct NamedModel {
    std::string name;
    CascadeModel model;
};

NamedModel resolve_model(const std::string& name_or_path);

/// Runs every (failure, n_per_object, seed) job in parallel; records come back
/// in (failure, n_per_object, seed) order. Seeds are config.seed + k.
SweepResult run_sweep(const SweepConfig& config);

/// Aggregate table, q_min, bound and M_min lines.
void print_sweep_summary(std::ostream& out, const SweepResult& result);

/// For each seed, simulates `episodes` observational traces and scores the union
/// graph of both heuristics. Model field is "<name>:<method>".
std::vector<RunRecord> run_baselines(const MechanizedModel& mm, const std::string& name, std::size_t episodes,
                                     std::uint64_t seed, std::size_t seeds);

}  // namespace cascade
