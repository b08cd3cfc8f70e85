#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "cascade/graph.hpp"

namespace testing {

// Trees and node sets written with the 1-based labels used in figures and files.
inline cascade::CausalTree tree1(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<cascade::Edge> e;
    for (auto [a, b] : edges) e.emplace_back(a - 1, b - 1);
    return cascade::CausalTree::from_edges(n, e);
}

inline std::vector<cascade::NodeId> nodes1(std::initializer_list<int> labels) {
    std::vector<cascade::NodeId> out;
    for (int l : labels) out.push_back(static_cast<cascade::NodeId>(l - 1));
    std::sort(out.begin(), out.end());
    return out;
}

inline cascade::EdgeSet edges1(std::initializer_list<std::pair<int, int>> edges) {
    cascade::EdgeSet out;
    for (auto [a, b] : edges) out.emplace(a - 1, b - 1);
    return out;
}

inline cascade::CausalTree minimal_chain() { return tree1(4, {{3, 4}, {4, 1}, {1, 2}}); }

// Parallel Triggers as labeled in the worked dataset example (root 10).
inline cascade::CausalTree parallel_triggers_example() {
    return tree1(12, {{10, 8}, {8, 5}, {5, 11}, {11, 12}, {12, 7}, {7, 2}, {8, 1}, {1, 6}, {6, 9}, {9, 4}, {4, 3}});
}

// Parallel Triggers environment solution (root 2).
inline cascade::CausalTree parallel_triggers() {
    return tree1(12, {{2, 10}, {10, 5}, {5, 9}, {9, 8}, {8, 1}, {1, 11}, {10, 6}, {6, 3}, {3, 4}, {4, 7}, {7, 12}});
}

inline std::vector<std::uint8_t> bits(const char* s) {
    std::vector<std::uint8_t> out;
    for (; *s; ++s) out.push_back(*s == '1' ? 1 : 0);
    return out;
}

}  // namespace testing
