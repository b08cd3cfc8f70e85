#pragma once

// Brute-force reference implementations used only by tests. They share no code
// with the library algorithms they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Pairs = std::set<std::pair<std::size_t, std::size_t>>;

// Nodes reachable from s by a path of length >= 1.
inline std::vector<bool> reachable(std::size_t n, const Pairs& edges, std::size_t s) {
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    for (const auto& [a, b] : edges)
        if (a == s && !seen[b]) seen[b] = true, q.push(b);
    while (!q.empty()) {
        const auto u = q.front();
        q.pop();
        for (const auto& [a, b] : edges)
            if (a == u && !seen[b]) seen[b] = true, q.push(b);
    }
    return seen;
}

inline Pairs closure(std::size_t n, const Pairs& edges) {
    Pairs out;
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = reachable(n, edges, i);
        for (std::size_t j = 0; j < n; ++j)
            if (r[j] && i != j) out.emplace(i, j);
    }
    return out;
}

inline bool acyclic(std::size_t n, const Pairs& edges) {
    for (std::size_t i = 0; i < n; ++i)
        if (reachable(n, edges, i)[i]) return false;
    return true;
}

// Starting from the closure, an edge is redundant if its head stays reachable
// from its tail once the edge itself is removed.
inline Pairs reduction(std::size_t n, const Pairs& edges) {
    const Pairs c = closure(n, edges);
    Pairs out;
    for (const auto& e : c) {
        Pairs without = c;
        without.erase(e);
        if (!reachable(n, without, e.first)[e.second]) out.insert(e);
    }
    return out;
}

// Random DAG: random topological order, each forward pair included with prob `density`.
inline Pairs random_dag(std::size_t n, double density, std::mt19937_64& rng) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution coin(density);
    Pairs out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (coin(rng)) out.emplace(order[a], order[b]);
    return out;
}

// Binomial 4-sigma check: |freq - p| <= 4 sqrt(p(1-p)/trials) (+ a tiny floor for p at 0 or 1).
inline bool within_4_sigma(double freq, double p, double trials) {
    const double sigma = std::sqrt(p * (1.0 - p) / trials);
    return std::abs(freq - p) <= 4.0 * sigma + 1e-12;
}

}  // namespace oracle
