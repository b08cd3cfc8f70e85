#pragma once

#include <vector>

#include "cascade/event_sim.hpp"
#include "cascade/graph.hpp"

namespace cascade {

/// Observational traces with perfect collision detection and exact timing.
struct TraceDataset {
    std::size_t n = 0;
    std::vector<EventTrace> traces;

    /// Throws FormatError on size mismatches or interventional traces.
    void validate() const;
};

/// Edge i->j for every observed collision of i with a not-yet-active j.
/// Non-contact mechanisms are invisible to it.
Digraph collision_as_influence(const TraceDataset& data);

/// Parent of each activated node: the source of the collision that activated it,
/// otherwise the target of the latest earlier collision, otherwise the node
/// activated just before it. Edges are unioned across traces.
Digraph temporal_precedence(const TraceDataset& data);

/// Per-trace variants, used for averaging metrics over episodes.
Digraph collision_as_influence(const EventTrace& trace, std::size_t n);
Digraph temporal_precedence(const EventTrace& trace, std::size_t n);

}  // namespace cascade
