#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cascade/graph.hpp"

namespace cascade {

/// Monotone cascade model: a node fires iff its parent fired and its own
/// Bernoulli noise succeeded. The root is noisy like every other node.
class CascadeModel {
public:
    /// `success[j]` is Pr(Z_j = 1) and must lie in (0, 1].
    CascadeModel(CausalTree tree, std::vector<double> success);

    /// Every node fails independently with probability `failure_prob` in [0, 1).
    static CascadeModel uniform(CausalTree tree, double failure_prob);

    [[nodiscard]] const CausalTree& tree() const noexcept { return tree_; }
    [[nodiscard]] std::size_t size() const noexcept { return tree_.size(); }
    [[nodiscard]] const std::vector<double>& success() const noexcept { return success_; }
    [[nodiscard]] double success(NodeId j) const { return success_.at(j); }
    /// The failure probability passed to uniform(), if the model was built that way.
    [[nodiscard]] std::optional<double> uniform_failure() const noexcept { return uniform_failure_; }

private:
    CausalTree tree_;
    std::vector<double> success_;
    std::optional<double> uniform_failure_;
};

/// Either an observational run (no target) or a blocking intervention do(X_i = 0).
struct Intervention {
    std::optional<NodeId> target;

    static Intervention observe() { return {}; }
    static Intervention block(NodeId i) { return {i}; }

    [[nodiscard]] bool is_observational() const noexcept { return !target.has_value(); }
    friend bool operator==(const Intervention&, const Intervention&) = default;
};

struct Episode {
    Intervention intervention;
    std::vector<std::uint8_t> activations;

    friend bool operator==(const Episode&, const Episode&) = default;
};

/// Exogenous draw Z for one episode: z[j] = 1 with probability success[j].
std::vector<std::uint8_t> draw_noise(const CascadeModel& model, std::uint64_t seed);

Episode sample_episode(const CascadeModel& model, Intervention iv, std::uint64_t seed);

/// Evaluates the cascade with a fixed exogenous vector (coupling experiments).
Episode sample_episode_with_noise(const CascadeModel& model, Intervention iv, std::span<const std::uint8_t> z);

/// Pr(X_j = 1 | do(X_i = 0)).
double exact_pij(const CascadeModel& model, NodeId i, NodeId j);

/// Smallest exact_pij over ordered pairs with j not below i.
double exact_qmin(const CascadeModel& model);

/// Interventions per object after which the estimated ancestor matrix is exact
/// with probability at least 1 - delta: ceil((ln(n(n-1)) + ln(1/delta)) / qmin).
std::size_t sample_complexity_bound(double qmin, std::size_t n, double delta);

}  // namespace cascade
