#include "cascade/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "cascade/catalog.hpp"
#include "cascade/errors.hpp"
#include "cascade/io.hpp"
#include "cascade/parallel.hpp"
#include "cascade/random.hpp"

namespace cascade {

namespace {

// Stream index reserved for the intervention schedule, disjoint from episode indices.
constexpr std::uint64_t kScheduleStream = std::numeric_limits<std::uint64_t>::max();

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

std::vector<Intervention> schedule_round_robin(std::size_t n, std::size_t rounds, std::uint64_t seed) {
    if (rounds < 1) throw ArgumentError("rounds must be at least 1");
    Rng rng = make_rng(derive_seed(seed, kScheduleStream));
    std::vector<NodeId> perm(n);
    std::vector<Intervention> out;
    out.reserve(n * rounds);
    for (std::size_t r = 0; r < rounds; ++r) {
        std::iota(perm.begin(), perm.end(), NodeId{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        for (NodeId i : perm) out.push_back(Intervention::block(i));
    }
    return out;
}

InterventionalDataset generate_dataset(const CascadeModel& model, std::size_t rounds, std::size_t obs_episodes,
                                       std::uint64_t seed) {
    InterventionalDataset data{model.size(), {}};
    const auto plan = schedule_round_robin(model.size(), rounds, seed);
    data.episodes.reserve(plan.size() + obs_episodes);
    std::uint64_t e = 0;
    for (const Intervention& iv : plan) data.episodes.push_back(sample_episode(model, iv, derive_seed(seed, e++)));
    for (std::size_t k = 0; k < obs_episodes; ++k)
        data.episodes.push_back(sample_episode(model, Intervention::observe(), derive_seed(seed, e++)));
    return data;
}

TraceDataset simulate_observational_traces(const MechanizedModel& mm, std::size_t episodes, std::uint64_t seed) {
    TraceDataset data{mm.size(), {}};
    data.traces.reserve(episodes);
    for (std::uint64_t e = 0; e < episodes; ++e)
        data.traces.push_back(simulate_trace(mm, Intervention::observe(), derive_seed(seed, e)));
    return data;
}

// ---------------------------------------------------------------------------
// CSV

std::string csv_header() {
    return "model,p,n_per_object,seed,shd,skeleton_shd,precision,recall,f1,exact,wall_time_seconds";
}

std::string to_csv(const RunRecord& r) {
    std::ostringstream ss;
    ss << r.model << ',' << (r.p ? format_double(*r.p) : "") << ',' << r.n_per_object << ',' << r.seed << ','
       << r.metrics.shd << ',' << r.metrics.skeleton_shd << ',' << fixed(r.metrics.precision) << ','
       << fixed(r.metrics.recall) << ',' << fixed(r.metrics.f1) << ',' << (r.exact() ? 1 : 0) << ','
       << fixed(r.wall_time_seconds);
    return ss.str();
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
    out << csv_header() << '\n';
    for (const RunRecord& r : records) out << to_csv(r) << '\n';
}

// ---------------------------------------------------------------------------
// Sweeps

SweepConfig parse_sweep_config(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("sweep config: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("sweep config must be a JSON object");

    SweepConfig c;
    try {
        c.model = j.at("model").get<std::string>();
        c.n_per_object = j.at("n_per_object").get<std::vector<std::size_t>>();
        if (j.contains("failure")) {
            const auto& f = j["failure"];
            c.failure = f.is_array() ? f.get<std::vector<double>>() : std::vector<double>{f.get<double>()};
        }
        c.seeds = j.value("seeds", c.seeds);
        c.seed = j.value("seed", c.seed);
        c.delta = j.value("delta", c.delta);
        c.out = j.value("out", c.out);
        c.timing = j.value("timing", c.timing);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("sweep config: ") + e.what());
    }

    if (c.n_per_object.empty()) throw FormatError("sweep config: n_per_object must not be empty");
    for (auto m : c.n_per_object)
        if (m == 0) throw FormatError("sweep config: n_per_object values must be positive");
    if (c.seeds == 0) throw FormatError("sweep config: seeds must be positive");
    for (double p : c.failure)
        if (!(p >= 0.0 && p < 1.0)) throw FormatError("sweep config: failure probabilities must lie in [0, 1)");
    if (!(c.delta > 0.0 && c.delta < 1.0)) throw FormatError("sweep config: delta must lie in (0, 1)");
    return c;
}

NamedModel resolve_model(const std::string& name_or_path) {
    if (auto entry = find_catalog(name_or_path)) return {entry->name, entry->model()};
    if (!std::filesystem::exists(name_or_path))
        throw FormatError("'" + name_or_path + "' is neither a catalog model nor a readable file");
    std::istringstream in(read_file(name_or_path));
    return {std::filesystem::path(name_or_path).stem().string(), read_model(in)};
}

SweepResult run_sweep(const SweepConfig& config) {
    const NamedModel base = resolve_model(config.model);

    std::vector<std::optional<double>> settings;
    std::vector<CascadeModel> models;
    if (config.failure.empty()) {
        settings.push_back(base.model.uniform_failure());
        models.push_back(base.model);
    } else {
        for (double p : config.failure) {
            settings.emplace_back(p);
            models.push_back(CascadeModel::uniform(base.model.tree(), p));
        }
    }

    std::vector<std::size_t> sizes = config.n_per_object;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    SweepResult result;
    result.model = base.name;
    result.n = base.model.size();
    result.delta = config.delta;

    const std::size_t per_setting = sizes.size() * config.seeds;
    const std::size_t jobs = settings.size() * per_setting;
    result.records.resize(jobs);

    parallel_for(jobs, [&](std::size_t k) {
        const std::size_t s = k / per_setting;
        const std::size_t m = (k % per_setting) / config.seeds;
        const std::uint64_t seed = config.seed + k % config.seeds;

        const auto start = std::chrono::steady_clock::now();
        const InterventionalDataset data = generate_dataset(models[s], sizes[m], 0, seed);
        const Reconstruction rec = reconstruct(data);
        const GraphMetrics metrics = compare_graphs(rec.graph, models[s].tree());
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

        result.records[k] = {result.model, settings[s], sizes[m], seed, metrics, elapsed.count()};
    });

    for (std::size_t s = 0; s < settings.size(); ++s) {
        SweepSetting setting;
        setting.p = settings[s];
        if (result.n >= 2) {
            setting.qmin = exact_qmin(models[s]);
            setting.bound = sample_complexity_bound(setting.qmin, result.n, config.delta);
        }
        for (std::size_t m = 0; m < sizes.size(); ++m) {
            SweepPoint pt;
            pt.p = settings[s];
            pt.n_per_object = sizes[m];
            for (std::size_t r = 0; r < config.seeds; ++r) {
                const RunRecord& rec = result.records[s * per_setting + m * config.seeds + r];
                pt.mean_shd += static_cast<double>(rec.metrics.shd);
                pt.mean_skeleton_shd += static_cast<double>(rec.metrics.skeleton_shd);
                pt.exact_fraction += rec.exact() ? 1.0 : 0.0;
                pt.mean_precision += rec.metrics.precision;
                pt.mean_recall += rec.metrics.recall;
                pt.mean_f1 += rec.metrics.f1;
                pt.mean_time_seconds += rec.wall_time_seconds;
            }
            const double runs = static_cast<double>(config.seeds);
            for (double* v : {&pt.mean_shd, &pt.mean_skeleton_shd, &pt.exact_fraction, &pt.mean_precision,
                              &pt.mean_recall, &pt.mean_f1, &pt.mean_time_seconds})
                *v /= runs;
            if (!setting.m_min && pt.exact_fraction >= 0.95) setting.m_min = sizes[m];
            result.points.push_back(pt);
        }
        result.settings.push_back(setting);
    }

    if (!config.timing)
        for (RunRecord& r : result.records) r.wall_time_seconds = 0.0;
    return result;
}

void print_sweep_summary(std::ostream& out, const SweepResult& result) {
    out << "model: " << result.model << " (N = " << result.n << ")\n";
    for (const SweepSetting& s : result.settings) {
        out << "\nfailure p: " << (s.p ? format_double(*s.p) : "per-node") << '\n';
        out << "q_min: " << fixed(s.qmin, 3) << " (exact " << format_double(s.qmin) << ")\n";
        out << "sample complexity bound (delta = " << format_double(result.delta) << "): " << s.bound << '\n';
        out << "n_per_object,precision,recall,f1,shd,sshd,exact_fraction,time_s\n";
        for (const SweepPoint& pt : result.points) {
            if (pt.p != s.p) continue;
            out << pt.n_per_object << ',' << fixed(pt.mean_precision, 3) << ',' << fixed(pt.mean_recall, 3) << ','
                << fixed(pt.mean_f1, 3) << ',' << fixed(pt.mean_shd, 2) << ',' << fixed(pt.mean_skeleton_shd, 2) << ','
                << fixed(pt.exact_fraction, 2) << ',' << fixed(pt.mean_time_seconds, 4) << '\n';
        }
        out << "M_min: " << (s.m_min ? std::to_string(*s.m_min) : "not reached") << '\n';
    }
}

// ---------------------------------------------------------------------------
// Baselines

std::vector<RunRecord> run_baselines(const MechanizedModel& mm, const std::string& name, std::size_t episodes,
                                     std::uint64_t seed, std::size_t seeds) {
    const auto p = mm.model().uniform_failure();
    std::vector<RunRecord> out(2 * seeds);
    parallel_for(seeds, [&](std::size_t k) {
        const std::uint64_t s = seed + k;
        const TraceDataset traces = simulate_observational_traces(mm, episodes, s);
        const CausalTree& truth = mm.model().tree();
        out[2 * k] = {name + ":collision_as_influence", p, episodes, s, compare_graphs(collision_as_influence(traces), truth)};
        out[2 * k + 1] = {name + ":temporal_precedence", p, episodes, s, compare_graphs(temporal_precedence(traces), truth)};
    });
    return out;
}

}  // namespace cascade
