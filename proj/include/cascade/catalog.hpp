#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/scm.hpp"

namespace cascade {

/// Built-in ground-truth machine.
struct CatalogEntry {
    std::string name;
    std::string description;
    /// Chain notation with 1-based labels, e.g. "3->4->1->2" or "2->10, 10->5->9".
    std::string chains;
    std::size_t n = 0;
    double failure_prob = 0.0;

    [[nodiscard]] CausalTree tree() const;
    [[nodiscard]] CascadeModel model() const;
    [[nodiscard]] CascadeModel model(double failure) const;
};

const std::vector<CatalogEntry>& catalog();

std::optional<CatalogEntry> find_catalog(std::string_view name);

/// Parses comma-separated chains "a->b->c, b->d" (1-based) into 0-based edges.
std::vector<Edge> parse_chains(std::string_view chains);

}  // namespace cascade
