#include "cascade/event_sim.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "cascade/errors.hpp"

namespace cascade {

MechanizedModel::MechanizedModel(CascadeModel model, const std::vector<std::pair<Edge, EdgeMechanism>>& mechanisms)
    : model_(std::move(model)), incoming_(model_.size()) {
    const CausalTree& tree = model_.tree();
    for (const auto& [edge, mech] : mechanisms) {
        const auto [from, to] = edge;
        if (from >= tree.size() || to >= tree.size()) throw IndexError("mechanism edge out of range");
        if (tree.parent(to) != from)
            throw ArgumentError("mechanism given for " + std::to_string(from + 1) + "->" + std::to_string(to + 1) +
                                ", which is not a tree edge");
        if (incoming_[to]) throw ArgumentError("duplicate mechanism for edge into node " + std::to_string(to + 1));
        if (!(mech.delay >= 0.0)) throw ArgumentError("mechanism delay must be nonnegative");
        incoming_[to] = mech;
    }
    for (NodeId j = 0; j < tree.size(); ++j)
        if (j != tree.root() && !incoming_[j])
            throw ArgumentError("no mechanism for edge into node " + std::to_string(j + 1));
}

MechanizedModel MechanizedModel::uniform(CascadeModel model, EdgeMechanism mechanism) {
    std::vector<std::pair<Edge, EdgeMechanism>> mechs;
    for (const auto& e : model.tree().edges()) mechs.emplace_back(e, mechanism);
    return MechanizedModel(std::move(model), mechs);
}

const EdgeMechanism& MechanizedModel::incoming(NodeId j) const {
    if (j >= incoming_.size()) throw IndexError("node out of range");
    if (!incoming_[j]) throw ArgumentError("root has no incoming mechanism");
    return *incoming_[j];
}

EventTrace simulate_trace(const MechanizedModel& mm, Intervention iv, std::uint64_t seed) {
    const CascadeModel& model = mm.model();
    const CausalTree& tree = model.tree();

    EventTrace trace;
    trace.episode = sample_episode(model, iv, seed);
    trace.activation_time.assign(tree.size(), std::nullopt);

    const auto& x = trace.episode.activations;
    for (NodeId j : tree.topological_order()) {
        if (!x[j]) continue;
        const auto p = tree.parent(j);
        if (!p) {
            trace.activation_time[j] = 0.0;
            continue;
        }
        const EdgeMechanism& mech = mm.incoming(j);
        const double t = *trace.activation_time[*p] + mech.delay;
        trace.activation_time[j] = t;
        if (mech.kind == MechanismKind::contact) trace.collisions.push_back({t, *p, j});
    }
    std::sort(trace.collisions.begin(), trace.collisions.end(), [](const Collision& a, const Collision& b) {
        return std::tie(a.time, a.source, a.target) < std::tie(b.time, b.source, b.target);
    });
    return trace;
}

Episode trace_to_episode(const EventTrace& trace) {
    Episode ep{trace.episode.intervention, std::vector<std::uint8_t>(trace.activation_time.size(), 0)};
    for (std::size_t j = 0; j < trace.activation_time.size(); ++j) ep.activations[j] = trace.activation_time[j] ? 1 : 0;
    return ep;
}

}  // namespace cascade
