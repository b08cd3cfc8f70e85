#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cascade/graph.hpp"
#include "cascade/scm.hpp"

namespace cascade {

struct InterventionalDataset {
    std::size_t n = 0;
    std::vector<Episode> episodes;

    /// Throws FormatError on a wrong-length vector, an out-of-range target or a
    /// non-binary activation.
    void validate() const;
};

/// Per-pair counts under blocking interventions.
struct PairStats {
    std::size_t n = 0;
    std::vector<std::size_t> blocked;        // n_i: episodes with target i
    std::vector<std::size_t> active_counts;  // row-major: times j active under do(i)

    [[nodiscard]] std::size_t active(NodeId i, NodeId j) const { return active_counts.at(i * n + j); }
    /// Empirical Pr(X_j = 1 | do(X_i = 0)); empty when i was never blocked.
    [[nodiscard]] std::optional<double> p_hat(NodeId i, NodeId j) const;
    /// Nodes never blocked, ascending.
    [[nodiscard]] std::vector<NodeId> unblocked() const;
};

struct AncestorEstimate {
    AncestorMatrix matrix;
    /// Rows left empty because the node was never blocked.
    std::vector<NodeId> unblocked;
};

struct ReconstructOptions {
    /// Throw InsufficientDataError instead of warning when a node was never blocked.
    bool strict = false;
};

struct Reconstruction {
    Digraph graph;
    std::vector<NodeId> unblocked;
};

PairStats empirical_probs(const InterventionalDataset& data);

/// a(i, j) = 1 iff i was blocked at least once and j never fired while i was blocked.
AncestorEstimate estimate_ancestor_matrix(const PairStats& stats, bool strict = false);

/// Pairs (i, j) seen with X_i = 0 and X_j = 1 in an episode that blocks neither i nor j.
/// Any such pair rules out j being below i.
EdgeSet observational_evidence(const InterventionalDataset& data);

/// Cascade tree reconstruction: empirical probabilities, ancestor estimate,
/// cycle breaking (with observational pruning), transitive reduction.
Reconstruction reconstruct(const InterventionalDataset& data, const ReconstructOptions& options = {});

struct RecoverySummary {
    std::size_t runs = 0;
    double mean_shd = 0.0;
    double mean_skeleton_shd = 0.0;
    double max_skeleton_shd = 0.0;
    double exact_fraction = 0.0;
    double mean_precision = 0.0;
    double mean_recall = 0.0;
    double mean_f1 = 0.0;
};

/// For each seed: round-robin dataset with `n_per_object` rounds, reconstruct,
/// compare against the model's tree. Seeds are processed in parallel.
RecoverySummary recovery_stats(const CascadeModel& model, std::size_t n_per_object, std::span<const std::uint64_t> seeds);

}  // namespace cascade
