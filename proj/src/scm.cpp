#include "cascade/scm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cascade/errors.hpp"
#include "cascade/random.hpp"

namespace cascade {

CascadeModel::CascadeModel(CausalTree tree, std::vector<double> success)
    : tree_(std::move(tree)), success_(std::move(success)) {
    if (success_.size() != tree_.size())
        throw ShapeError("success vector has " + std::to_string(success_.size()) + " entries for " +
                         std::to_string(tree_.size()) + " nodes");
    for (std::size_t j = 0; j < success_.size(); ++j) {
        const double s = success_[j];
        if (!(s > 0.0 && s <= 1.0))
            throw ArgumentError("success probability of node " + std::to_string(j + 1) + " must lie in (0, 1]");
    }
}

CascadeModel CascadeModel::uniform(CausalTree tree, double failure_prob) {
    if (!(failure_prob >= 0.0 && failure_prob < 1.0)) throw ArgumentError("failure probability must lie in [0, 1)");
    const std::size_t n = tree.size();
    CascadeModel m(std::move(tree), std::vector<double>(n, 1.0 - failure_prob));
    m.uniform_failure_ = failure_prob;
    return m;
}

std::vector<std::uint8_t> draw_noise(const CascadeModel& model, std::uint64_t seed) {
    Rng rng = make_rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::uint8_t> z(model.size());
    for (std::size_t j = 0; j < z.size(); ++j) z[j] = u(rng) < model.success(j) ? 1 : 0;
    return z;
}

Episode sample_episode(const CascadeModel& model, Intervention iv, std::uint64_t seed) {
    if (iv.target && *iv.target >= model.size()) throw IndexError("intervention target out of range");
    const auto z = draw_noise(model, seed);
    return sample_episode_with_noise(model, iv, z);
}

Episode sample_episode_with_noise(const CascadeModel& model, Intervention iv, std::span<const std::uint8_t> z) {
    const CausalTree& tree = model.tree();
    if (z.size() != tree.size())
        throw ShapeError("noise vector has " + std::to_string(z.size()) + " entries for " + std::to_string(tree.size()) + " nodes");
    if (iv.target && *iv.target >= tree.size()) throw IndexError("intervention target out of range");

    Episode ep{iv, std::vector<std::uint8_t>(tree.size(), 0)};
    for (NodeId j : tree.topological_order()) {
        if (iv.target == j) continue;
        const auto p = tree.parent(j);
        if (p && !ep.activations[*p]) continue;
        ep.activations[j] = z[j] ? 1 : 0;
    }
    return ep;
}

double exact_pij(const CascadeModel& model, NodeId i, NodeId j) {
    const CausalTree& tree = model.tree();
    if (i >= tree.size() || j >= tree.size()) throw IndexError("node out of range");
    if (i == j) throw ArgumentError("exact_pij needs distinct nodes");

    double p = model.success(j);
    for (auto a = tree.parent(j); a; a = tree.parent(*a)) {
        if (*a == i) return 0.0;
        p *= model.success(*a);
    }
    return p;
}

double exact_qmin(const CascadeModel& model) {
    const std::size_t n = model.size();
    if (n < 2) throw ArgumentError("q_min needs at least two nodes");
    double q = std::numeric_limits<double>::infinity();
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j) {
            if (i == j) continue;
            const double p = exact_pij(model, i, j);
            if (p > 0.0) q = std::min(q, p);
        }
    return q;
}

std::size_t sample_complexity_bound(double qmin, std::size_t n, double delta) {
    if (!(qmin > 0.0 && qmin <= 1.0)) throw ArgumentError("qmin must lie in (0, 1]");
    if (!(delta > 0.0 && delta < 1.0)) throw ArgumentError("delta must lie in (0, 1)");
    if (n < 2) throw ArgumentError("sample complexity bound needs at least two nodes");
    const double nn = static_cast<double>(n);
    const double v = (std::log(nn * (nn - 1.0)) + std::log(1.0 / delta)) / qmin;
    return static_cast<std::size_t>(std::ceil(v));
}

}  // namespace cascade
