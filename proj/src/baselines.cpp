#include "cascade/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "cascade/errors.hpp"

namespace cascade {

namespace {

bool same_time(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)); }

void check_trace(const EventTrace& trace, std::size_t n) {
    if (trace.activation_time.size() != n) throw FormatError("trace size does not match dataset size " + std::to_string(n));
    for (const Collision& c : trace.collisions)
        if (c.source >= n || c.target >= n) throw FormatError("collision endpoint out of range");
}

}  // namespace

void TraceDataset::validate() const {
    for (const EventTrace& t : traces) {
        check_trace(t, n);
        if (t.episode.intervention.target) throw FormatError("baseline traces must be observational");
    }
}

Digraph collision_as_influence(const EventTrace& trace, std::size_t n) {
    check_trace(trace, n);
    Digraph g(n);
    for (const Collision& c : trace.collisions) {
        if (c.source == c.target) continue;
        const auto& tj = trace.activation_time[c.target];
        // The target must still have been inactive when it was hit.
        if (!tj || *tj > c.time || same_time(*tj, c.time)) g.add_edge(c.source, c.target);
    }
    return g;
}

Digraph temporal_precedence(const EventTrace& trace, std::size_t n) {
    check_trace(trace, n);
    Digraph g(n);

    std::vector<NodeId> order;
    for (NodeId j = 0; j < n; ++j)
        if (trace.activation_time[j]) order.push_back(j);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return std::tie(*trace.activation_time[a], a) < std::tie(*trace.activation_time[b], b);
    });

    for (std::size_t k = 1; k < order.size(); ++k) {
        const NodeId j = order[k];
        const double t = *trace.activation_time[j];

        const Collision* hit = nullptr;
        const Collision* latest = nullptr;
        for (const Collision& c : trace.collisions) {
            if (c.target == j && same_time(c.time, t)) {
                hit = &c;
                break;
            }
            if (c.time < t && !same_time(c.time, t)) {
                if (!latest || c.time > latest->time ||
                    (same_time(c.time, latest->time) && std::tie(c.target, c.source) < std::tie(latest->target, latest->source)))
                    latest = &c;
            }
        }

        NodeId parent = order[k - 1];
        if (hit)
            parent = hit->source;
        else if (latest)
            parent = latest->target;
        if (parent != j) g.add_edge(parent, j);
    }
    return g;
}

Digraph collision_as_influence(const TraceDataset& data) {
    data.validate();
    Digraph g(data.n);
    for (const EventTrace& t : data.traces) {
        const Digraph one = collision_as_influence(t, data.n);
        for (const Edge& e : one.edges()) g.add_edge(e.first, e.second);
    }
    return g;
}

Digraph temporal_precedence(const TraceDataset& data) {
    data.validate();
    Digraph g(data.n);
    for (const EventTrace& t : data.traces) {
        const Digraph one = temporal_precedence(t, data.n);
        for (const Edge& e : one.edges()) g.add_edge(e.first, e.second);
    }
    return g;
}

}  // namespace cascade
