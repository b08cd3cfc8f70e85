#include "cascade/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "cascade/errors.hpp"
#include "cascade/random.hpp"

namespace cascade {

namespace {

std::string node_label(NodeId i) { return std::to_string(i + 1); }

// Full n*n closure including reflexive entries reached through cycles.
std::vector<std::uint8_t> closure_bits(const AncestorMatrix& rel) {
    const std::size_t n = rel.size();
    std::vector<std::uint8_t> c(n * n, 0);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j) c[i * n + j] = rel(i, j) ? 1 : 0;
    for (NodeId k = 0; k < n; ++k) {
        for (NodeId i = 0; i < n; ++i) {
            if (!c[i * n + k]) continue;
            for (NodeId j = 0; j < n; ++j) c[i * n + j] |= c[k * n + j];
        }
    }
    return c;
}

// Edges of the first cycle met by a DFS that visits roots and successors in
// ascending index order. Empty if the relation is acyclic.
std::vector<Edge> find_cycle(const AncestorMatrix& rel) {
    const std::size_t n = rel.size();
    enum : std::uint8_t { white, grey, black };
    std::vector<std::uint8_t> color(n, white);
    std::vector<NodeId> path;
    std::vector<Edge> cycle;

    auto dfs = [&](auto&& self, NodeId u) -> bool {
        color[u] = grey;
        path.push_back(u);
        for (NodeId v = 0; v < n; ++v) {
            if (!rel(u, v)) continue;
            if (color[v] == grey) {
                auto it = std::find(path.begin(), path.end(), v);
                for (; std::next(it) != path.end(); ++it) cycle.emplace_back(*it, *std::next(it));
                cycle.emplace_back(u, v);
                return true;
            }
            if (color[v] == white && self(self, v)) return true;
        }
        path.pop_back();
        color[u] = black;
        return false;
    };

    for (NodeId s = 0; s < n; ++s)
        if (color[s] == white && dfs(dfs, s)) break;
    return cycle;
}

}  // namespace

// ---------------------------------------------------------------------------
// CausalTree

CausalTree::CausalTree(std::vector<std::optional<NodeId>> parent) : parent_(std::move(parent)) {
    const std::size_t n = parent_.size();
    if (n == 0) throw ArgumentError("tree must have at least one node");

    children_.assign(n, {});
    std::size_t roots = 0;
    for (NodeId j = 0; j < n; ++j) {
        if (!parent_[j]) {
            root_ = j;
            ++roots;
            continue;
        }
        const NodeId p = *parent_[j];
        if (p >= n) throw IndexError("parent " + node_label(p) + " of node " + node_label(j) + " out of range");
        if (p == j) throw ArgumentError("node " + node_label(j) + " is its own parent");
        children_[p].push_back(j);
    }
    if (roots != 1) throw ArgumentError("tree must have exactly one root, found " + std::to_string(roots));

    depth_.assign(n, 0);
    order_.reserve(n);
    std::queue<NodeId> frontier;
    frontier.push(root_);
    depth_[root_] = 1;
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop();
        order_.push_back(u);
        for (NodeId c : children_[u]) {
            depth_[c] = depth_[u] + 1;
            frontier.push(c);
        }
    }
    // Any node missing from the BFS sits on a parent cycle detached from the root.
    if (order_.size() != n) throw ArgumentError("tree has nodes unreachable from the root (cycle)");
}

CausalTree CausalTree::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::optional<NodeId>> parent(n);
    for (const auto& [from, to] : edges) {
        if (from >= n || to >= n) throw IndexError("edge endpoint out of range");
        if (parent[to]) throw ArgumentError("node " + node_label(to) + " has more than one parent");
        parent[to] = from;
    }
    return CausalTree(std::move(parent));
}

void CausalTree::check(NodeId j) const {
    if (j >= size()) throw IndexError("node " + node_label(j) + " out of range for tree of size " + std::to_string(size()));
}

std::optional<NodeId> CausalTree::parent(NodeId j) const {
    check(j);
    return parent_[j];
}

const std::vector<NodeId>& CausalTree::children(NodeId i) const {
    check(i);
    return children_[i];
}

std::size_t CausalTree::depth(NodeId j) const {
    check(j);
    return depth_[j];
}

EdgeSet CausalTree::edges() const {
    EdgeSet out;
    for (NodeId j = 0; j < size(); ++j)
        if (parent_[j]) out.emplace(*parent_[j], j);
    return out;
}

// ---------------------------------------------------------------------------
// Digraph / AncestorMatrix

Digraph::Digraph(std::size_t n, const EdgeSet& edges) : n_(n) {
    for (const auto& [from, to] : edges) add_edge(from, to);
}

void Digraph::add_edge(NodeId from, NodeId to) {
    if (from >= n_ || to >= n_) throw IndexError("edge endpoint out of range");
    if (from == to) throw ArgumentError("self-loop on node " + node_label(from));
    edges_.emplace(from, to);
}

std::size_t AncestorMatrix::index(NodeId i, NodeId j) const {
    if (i >= n_ || j >= n_) throw IndexError("ancestor matrix index out of range");
    return i * n_ + j;
}

void AncestorMatrix::set(NodeId i, NodeId j, bool value) {
    const std::size_t k = index(i, j);
    if (i == j) {
        if (value) throw ArgumentError("ancestor matrix diagonal is fixed to zero");
        return;
    }
    bits_[k] = value ? 1 : 0;
}

std::size_t AncestorMatrix::count() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

EdgeSet AncestorMatrix::pairs() const {
    EdgeSet out;
    for (NodeId i = 0; i < n_; ++i)
        for (NodeId j = 0; j < n_; ++j)
            if (bits_[i * n_ + j]) out.emplace(i, j);
    return out;
}

// ---------------------------------------------------------------------------
// Algorithms

std::vector<NodeId> descendants(const CausalTree& tree, NodeId i) {
    std::vector<NodeId> out;
    std::vector<NodeId> stack(tree.children(i).begin(), tree.children(i).end());
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        out.push_back(u);
        const auto& c = tree.children(u);
        stack.insert(stack.end(), c.begin(), c.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeId> ancestors(const CausalTree& tree, NodeId j) {
    std::vector<NodeId> out;
    for (auto p = tree.parent(j); p; p = tree.parent(*p)) out.push_back(*p);
    std::sort(out.begin(), out.end());
    return out;
}

AncestorMatrix true_ancestor_matrix(const CausalTree& tree) {
    AncestorMatrix a(tree.size());
    for (NodeId j = 0; j < tree.size(); ++j)
        for (auto p = tree.parent(j); p; p = tree.parent(*p)) a.set(*p, j, true);
    return a;
}

AncestorMatrix transitive_closure(const AncestorMatrix& rel) {
    const std::size_t n = rel.size();
    const auto c = closure_bits(rel);
    AncestorMatrix out(n);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j)
            if (i != j && c[i * n + j]) out.set(i, j, true);
    return out;
}

bool is_acyclic(const AncestorMatrix& rel) {
    const std::size_t n = rel.size();
    const auto c = closure_bits(rel);
    for (NodeId i = 0; i < n; ++i)
        if (c[i * n + i]) return false;
    return true;
}

Digraph transitive_reduction(const AncestorMatrix& rel) {
    const std::size_t n = rel.size();
    const auto c = closure_bits(rel);
    for (NodeId i = 0; i < n; ++i)
        if (c[i * n + i]) throw CycleError("transitive reduction requires an acyclic relation (node " + node_label(i) + " lies on a cycle)");

    Digraph out(n);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j < n; ++j) {
            if (!c[i * n + j]) continue;
            bool implied = false;
            for (NodeId k = 0; k < n && !implied; ++k)
                implied = k != i && k != j && c[i * n + k] && c[k * n + j];
            if (!implied) out.add_edge(i, j);
        }
    }
    return out;
}

AncestorMatrix break_cycles(AncestorMatrix rel, const EdgeSet& evidence) {
    for (const auto& [i, j] : evidence)
        if (i < rel.size() && j < rel.size() && i != j) rel.set(i, j, false);

    for (auto cycle = find_cycle(rel); !cycle.empty(); cycle = find_cycle(rel)) {
        const auto victim = std::max_element(cycle.begin(), cycle.end(),
                                              [](const Edge& a, const Edge& b) { return a.first < b.first; });
        rel.set(victim->first, victim->second, false);
    }
    return rel;
}

GraphMetrics compare_graphs(const Digraph& estimate, const CausalTree& truth) {
    if (estimate.size() != truth.size())
        throw ShapeError("graph size mismatch: estimate has " + std::to_string(estimate.size()) + " nodes, truth has " +
                         std::to_string(truth.size()));

    const EdgeSet t = truth.edges();
    const EdgeSet& e = estimate.edges();

    std::size_t tp = 0, extra = 0, reversed = 0, missing = 0;
    for (const auto& [a, b] : e) {
        if (t.contains({a, b}))
            ++tp;
        else if (t.contains({b, a}) && !e.contains({b, a}))
            ++reversed;
        else
            ++extra;
    }
    for (const auto& [a, b] : t)
        if (!e.contains({a, b}) && !e.contains({b, a})) ++missing;

    auto undirected = [](const EdgeSet& s) {
        EdgeSet u;
        for (const auto& [a, b] : s) u.emplace(std::min(a, b), std::max(a, b));
        return u;
    };
    const EdgeSet ut = undirected(t), ue = undirected(e);
    std::size_t skel = 0;
    for (const auto& x : ue) skel += ut.contains(x) ? 0 : 1;
    for (const auto& x : ut) skel += ue.contains(x) ? 0 : 1;

    GraphMetrics m;
    if (e.empty() && t.empty()) {
        m.precision = m.recall = m.f1 = 1.0;
    } else {
        m.precision = e.empty() ? 0.0 : static_cast<double>(tp) / static_cast<double>(e.size());
        m.recall = t.empty() ? 0.0 : static_cast<double>(tp) / static_cast<double>(t.size());
        const double s = m.precision + m.recall;
        m.f1 = s > 0.0 ? 2.0 * m.precision * m.recall / s : 0.0;
    }
    m.shd = extra + reversed + missing;
    m.skeleton_shd = skel;
    return m;
}

CausalTree random_tree(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ArgumentError("random_tree needs at least one node");
    Rng rng = make_rng(seed);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::optional<NodeId>> parent(n);
    for (std::size_t k = 1; k < n; ++k) {
        std::uniform_int_distribution<std::size_t> pick(0, k - 1);
        parent[order[k]] = order[pick(rng)];
    }
    return CausalTree(std::move(parent));
}

}  // namespace cascade
