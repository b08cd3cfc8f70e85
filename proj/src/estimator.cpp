#include "cascade/estimator.hpp"

#include <string>

#include "cascade/errors.hpp"
#include "cascade/experiment.hpp"
#include "cascade/parallel.hpp"

namespace cascade {

void InterventionalDataset::validate() const {
    for (std::size_t e = 0; e < episodes.size(); ++e) {
        const Episode& ep = episodes[e];
        if (ep.activations.size() != n)
            throw FormatError("episode " + std::to_string(e + 1) + " has " + std::to_string(ep.activations.size()) +
                              " activations, expected " + std::to_string(n));
        if (ep.intervention.target && *ep.intervention.target >= n)
            throw FormatError("episode " + std::to_string(e + 1) + " targets node " +
                              std::to_string(*ep.intervention.target + 1) + " outside 1.." + std::to_string(n));
        for (auto x : ep.activations)
            if (x > 1) throw FormatError("episode " + std::to_string(e + 1) + " has a non-binary activation");
    }
}

std::optional<double> PairStats::p_hat(NodeId i, NodeId j) const {
    if (blocked.at(i) == 0) return std::nullopt;
    return static_cast<double>(active(i, j)) / static_cast<double>(blocked[i]);
}

std::vector<NodeId> PairStats::unblocked() const {
    std::vector<NodeId> out;
    for (NodeId i = 0; i < n; ++i)
        if (blocked[i] == 0) out.push_back(i);
    return out;
}

PairStats empirical_probs(const InterventionalDataset& data) {
    data.validate();
    const std::size_t n = data.n;
    PairStats s{n, std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n * n, 0)};
    for (const Episode& ep : data.episodes) {
        if (!ep.intervention.target) continue;
        const NodeId i = *ep.intervention.target;
        ++s.blocked[i];
        for (NodeId j = 0; j < n; ++j) s.active_counts[i * n + j] += ep.activations[j];
    }
    return s;
}

AncestorEstimate estimate_ancestor_matrix(const PairStats& stats, bool strict) {
    AncestorEstimate out{AncestorMatrix(stats.n), stats.unblocked()};
    if (strict && !out.unblocked.empty())
        throw InsufficientDataError(std::to_string(out.unblocked.size()) + " node(s) never blocked (first: " +
                                    std::to_string(out.unblocked.front() + 1) + ")");
    for (NodeId i = 0; i < stats.n; ++i) {
        if (stats.blocked[i] == 0) continue;
        for (NodeId j = 0; j < stats.n; ++j)
            if (i != j && stats.active(i, j) == 0) out.matrix.set(i, j, true);
    }
    return out;
}

EdgeSet observational_evidence(const InterventionalDataset& data) {
    data.validate();
    EdgeSet out;
    std::vector<NodeId> off, on;
    for (const Episode& ep : data.episodes) {
        off.clear();
        on.clear();
        for (NodeId k = 0; k < data.n; ++k) {
            if (ep.intervention.target == k) continue;
            (ep.activations[k] ? on : off).push_back(k);
        }
        for (NodeId i : off)
            for (NodeId j : on) out.emplace(i, j);
    }
    return out;
}

Reconstruction reconstruct(const InterventionalDataset& data, const ReconstructOptions& options) {
    const PairStats stats = empirical_probs(data);
    AncestorEstimate est = estimate_ancestor_matrix(stats, options.strict);
    const AncestorMatrix acyclic = break_cycles(std::move(est.matrix), observational_evidence(data));
    return {transitive_reduction(acyclic), std::move(est.unblocked)};
}

RecoverySummary recovery_stats(const CascadeModel& model, std::size_t n_per_object, std::span<const std::uint64_t> seeds) {
    if (n_per_object == 0) throw ArgumentError("n_per_object must be at least 1");

    std::vector<GraphMetrics> metrics(seeds.size());
    parallel_for(seeds.size(), [&](std::size_t k) {
        const InterventionalDataset data = generate_dataset(model, n_per_object, 0, seeds[k]);
        metrics[k] = compare_graphs(reconstruct(data).graph, model.tree());
    });

    RecoverySummary s;
    s.runs = seeds.size();
    if (s.runs == 0) return s;
    for (const GraphMetrics& m : metrics) {
        s.mean_shd += static_cast<double>(m.shd);
        s.mean_skeleton_shd += static_cast<double>(m.skeleton_shd);
        s.max_skeleton_shd = std::max(s.max_skeleton_shd, static_cast<double>(m.skeleton_shd));
        s.exact_fraction += m.shd == 0 ? 1.0 : 0.0;
        s.mean_precision += m.precision;
        s.mean_recall += m.recall;
        s.mean_f1 += m.f1;
    }
    const double r = static_cast<double>(s.runs);
    s.mean_shd /= r;
    s.mean_skeleton_shd /= r;
    s.exact_fraction /= r;
    s.mean_precision /= r;
    s.mean_recall /= r;
    s.mean_f1 /= r;
    return s;
}

}  // namespace cascade
