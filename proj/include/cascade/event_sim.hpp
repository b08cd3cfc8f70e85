#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cascade/scm.hpp"

namespace cascade {

enum class MechanismKind { contact, non_contact };

/// How a parent triggers its child: by touching it (visible collision) or
/// remotely (e.g. a button releasing a platform), after a fixed delay.
struct EdgeMechanism {
    MechanismKind kind = MechanismKind::contact;
    double delay = 1.0;
};

struct Collision {
    double time = 0.0;
    NodeId source = 0;
    NodeId target = 0;

    friend bool operator==(const Collision&, const Collision&) = default;
};

struct EventTrace {
    Episode episode;
    std::vector<std::optional<double>> activation_time;
    /// Sorted by (time, source, target).
    std::vector<Collision> collisions;
};

/// A cascade model whose tree edges each carry a mechanism.
class MechanizedModel {
public:
    /// `mechanisms` must cover exactly the tree's edges.
    MechanizedModel(CascadeModel model, const std::vector<std::pair<Edge, EdgeMechanism>>& mechanisms);

    /// Same mechanism on every edge.
    static MechanizedModel uniform(CascadeModel model, EdgeMechanism mechanism);

    [[nodiscard]] const CascadeModel& model() const noexcept { return model_; }
    [[nodiscard]] std::size_t size() const noexcept { return model_.size(); }
    /// Mechanism of the edge parent(j) -> j. Throws for the root.
    [[nodiscard]] const EdgeMechanism& incoming(NodeId j) const;

private:
    CascadeModel model_;
    std::vector<std::optional<EdgeMechanism>> incoming_;
};

/// Timed rollout. The binary projection equals sample_episode() for the same
/// (model, intervention, seed).
EventTrace simulate_trace(const MechanizedModel& mm, Intervention iv, std::uint64_t seed);

Episode trace_to_episode(const EventTrace& trace);

}  // namespace cascade
