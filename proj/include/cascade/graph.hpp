#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace cascade {

// Internal node indices are 0-based; every file format and log line is 1-based.
using NodeId = std::size_t;
using Edge = std::pair<NodeId, NodeId>;
using EdgeSet = std::set<Edge>;

/// Directed tree with a single root. Each node has at most one parent.
class CausalTree {
public:
    /// Validates root uniqueness, parent indices and reachability from the root.
    explicit CausalTree(std::vector<std::optional<NodeId>> parent);

    /// Builds a tree from `n - 1` parent->child edges.
    static CausalTree from_edges(std::size_t n, const std::vector<Edge>& edges);

    [[nodiscard]] std::size_t size() const noexcept { return parent_.size(); }
    [[nodiscard]] NodeId root() const noexcept { return root_; }
    [[nodiscard]] std::optional<NodeId> parent(NodeId j) const;
    [[nodiscard]] const std::vector<NodeId>& children(NodeId i) const;

    /// Nodes in breadth-first order from the root; every parent precedes its children.
    [[nodiscard]] const std::vector<NodeId>& topological_order() const noexcept { return order_; }

    /// Number of nodes on the root->j path, j included (the root has depth 1).
    [[nodiscard]] std::size_t depth(NodeId j) const;

    /// Parent->child edges, sorted.
    [[nodiscard]] EdgeSet edges() const;

    friend bool operator==(const CausalTree& a, const CausalTree& b) { return a.parent_ == b.parent_; }

private:
    void check(NodeId j) const;

    std::vector<std::optional<NodeId>> parent_;
    std::vector<std::vector<NodeId>> children_;
    std::vector<NodeId> order_;
    std::vector<std::size_t> depth_;
    NodeId root_ = 0;
};

/// Plain directed graph without self-loops. May contain cycles.
class Digraph {
public:
    explicit Digraph(std::size_t n = 0) : n_(n) {}
    Digraph(std::size_t n, const EdgeSet& edges);

    void add_edge(NodeId from, NodeId to);
    [[nodiscard]] bool has_edge(NodeId from, NodeId to) const { return edges_.contains({from, to}); }
    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const EdgeSet& edges() const noexcept { return edges_; }

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    std::size_t n_;
    EdgeSet edges_;
};

/// Dense boolean relation; a(i, j) = 1 means j is (claimed to be) a descendant of i.
/// The diagonal is always zero.
class AncestorMatrix {
public:
    explicit AncestorMatrix(std::size_t n = 0) : n_(n), bits_(n * n, 0) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] bool operator()(NodeId i, NodeId j) const { return bits_[index(i, j)] != 0; }
    /// Setting a diagonal entry is rejected.
    void set(NodeId i, NodeId j, bool value);
    [[nodiscard]] std::size_t count() const noexcept;
    [[nodiscard]] EdgeSet pairs() const;

    friend bool operator==(const AncestorMatrix&, const AncestorMatrix&) = default;

private:
    [[nodiscard]] std::size_t index(NodeId i, NodeId j) const;

    std::size_t n_;
    std::vector<std::uint8_t> bits_;
};

struct GraphMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t shd = 0;
    std::size_t skeleton_shd = 0;
};

/// Nodes strictly below i, ascending.
std::vector<NodeId> descendants(const CausalTree& tree, NodeId i);

/// Nodes on the root->j path excluding j, ascending.
std::vector<NodeId> ancestors(const CausalTree& tree, NodeId j);

AncestorMatrix true_ancestor_matrix(const CausalTree& tree);

/// Reflexive pairs are not recorded, so a cyclic relation shows up via is_acyclic().
AncestorMatrix transitive_closure(const AncestorMatrix& rel);

bool is_acyclic(const AncestorMatrix& rel);

/// Minimal edge set with the same closure as `rel`. Throws CycleError on cyclic input.
Digraph transitive_reduction(const AncestorMatrix& rel);

/// Drops every pair in `evidence`, then removes cycles one at a time by deleting the
/// cycle edge whose source has the highest index.
AncestorMatrix break_cycles(AncestorMatrix rel, const EdgeSet& evidence = {});

/// Directed precision/recall/F1, directed SHD (a reversed edge counts once) and skeleton SHD.
GraphMetrics compare_graphs(const Digraph& estimate, const CausalTree& truth);

/// Random root, then each further node (in shuffled order) picks a uniformly random
/// parent among the nodes already placed.
CausalTree random_tree(std::size_t n, std::uint64_t seed);

}  // namespace cascade
