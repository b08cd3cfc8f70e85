#include "cascade/catalog.hpp"

#include <charconv>

#include "cascade/errors.hpp"

namespace cascade {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

NodeId parse_label(std::string_view s) {
    s = trim(s);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
        throw FormatError("bad node label '" + std::string(s) + "' in chain");
    return v - 1;
}

}  // namespace

std::vector<Edge> parse_chains(std::string_view chains) {
    std::vector<Edge> edges;
    while (!chains.empty()) {
        const auto comma = chains.find(',');
        std::string_view chain = chains.substr(0, comma);
        chains = comma == std::string_view::npos ? std::string_view{} : chains.substr(comma + 1);

        std::optional<NodeId> prev;
        while (true) {
            const auto arrow = chain.find("->");
            const NodeId cur = parse_label(chain.substr(0, arrow));
            if (prev) edges.emplace_back(*prev, cur);
            prev = cur;
            if (arrow == std::string_view::npos) break;
            chain.remove_prefix(arrow + 2);
        }
    }
    return edges;
}

CausalTree CatalogEntry::tree() const { return CausalTree::from_edges(n, parse_chains(chains)); }

CascadeModel CatalogEntry::model() const { return model(failure_prob); }

CascadeModel CatalogEntry::model(double failure) const { return CascadeModel::uniform(tree(), failure); }

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        const std::string parallel = "2->10, 10->5->9->8->1->11, 10->6->3->4->7->12";
        const std::string large =
            "18->9, 9->1->12->23->21->13->17, 9->22->8, "
            "9->15->6->14->20->3->24->5->19->11->16->10->4->7->2";
        return std::vector<CatalogEntry>{
            {"minimal_chain", "Minimal Chain: short linear cascade", "3->4->1->2", 4, 0.0},
            {"sequential_chain", "Sequential Chain: longer linear cascade (button 2 releases ball 1)",
             "3->9->6->8->4->7->2->1->5->10->11", 11, 0.0},
            {"parallel_triggers", "Parallel Triggers: two branches fire simultaneously", parallel, 12, 0.0},
            {"intertwined_mechanisms", "Intertwined Mechanisms: concurrent regions joined into one cascade",
             "6->3, 3->7->5, 3->12->10->2->13->9->8->4->11->1", 13, 0.0},
            {"linear_slot_machine", "Linear Slot-Machine: cascade with non-contact button releases",
             "11->9->13->1->4->2->7->6->3->15->16->10->12->14->5->8", 16, 0.0},
            {"large_slot_machine", "Large Slot-Machine: several concurrent branches", large, 24, 0.0},
            {"parallel_triggers_example", "Parallel Triggers as labeled in the worked dataset example (root 10)",
             "10->8, 8->5->11->12->7->2, 8->1->6->9->4->3", 12, 0.0},
            {"synthetic_parallel_triggers_0.1", "Parallel Triggers graph, uniform Bernoulli failure 0.1", parallel, 12,
             0.1},
            {"synthetic_large_slot_machine_0.1", "Large Slot-Machine graph, uniform Bernoulli failure 0.1", large, 24,
             0.1},
        };
    }();
    return entries;
}

std::optional<CatalogEntry> find_catalog(std::string_view name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    return std::nullopt;
}

}  // namespace cascade
