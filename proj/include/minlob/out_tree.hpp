#pragma once

#include <vector>

#include "minlob/digraph.hpp"

namespace minlob {

/// Rooted out-tree over a subset of a digraph's vertices, stored as a
/// parent map. Leaf/internal counts are cached and kept consistent by the
/// mutators, which is what the leaf-reducing local search leans on.
///
/// Values are plain data: copying gives an independent tree, and const
/// trees are safe to share across threads.
class OutTree {
public:
    /// Tree covering only `root` within a universe of `universe` vertices.
    OutTree(int universe, Vertex root);

    int universe() const noexcept { return static_cast<int>(parent_.size()); }
    Vertex root() const noexcept { return root_; }

    bool covers(Vertex v) const { return covered_[v] != 0; }
    int covered_count() const noexcept { return covered_count_; }
    bool spans() const noexcept { return covered_count_ == universe(); }

    /// Parent of v, or -1 for the root and for uncovered vertices.
    Vertex parent(Vertex v) const { return parent_[v]; }

    int tree_out_degree(Vertex v) const { return child_count_[v]; }
    bool is_leaf(Vertex v) const { return covers(v) && child_count_[v] == 0; }
    bool is_internal(Vertex v) const { return covers(v) && child_count_[v] > 0; }
    int leaf_count() const noexcept { return leaf_count_; }
    int internal_count() const noexcept { return covered_count_ - leaf_count_; }

    /// True if `ancestor` lies on the parent path from `v` to the root
    /// (a vertex is its own ancestor).
    bool is_ancestor(Vertex ancestor, Vertex v) const;

    /// Attach a new covered leaf under an already covered parent.
    void add_leaf(Vertex v, Vertex parent);

    /// Redirect the parent of covered non-root v to covered u. The caller
    /// is responsible for not creating a cycle; use swap_parent for the
    /// checked operation.
    void reparent(Vertex v, Vertex u);

    /// Tree arcs (parent, child) in lexicographic order.
    std::vector<Arc> arcs() const;

    /// Parent map including -1 entries; handy for lexicographic tie-breaks.
    const std::vector<Vertex>& parents() const noexcept { return parent_; }

    std::vector<Vertex> covered_vertices() const;
    std::vector<Vertex> leaves() const;
    std::vector<Vertex> internal_vertices() const;

private:
    std::vector<Vertex> parent_;
    std::vector<int> child_count_;
    std::vector<char> covered_;
    Vertex root_;
    int covered_count_ = 0;
    int leaf_count_ = 0;
};

/// Checks the out-tree invariants against its digraph: every tree arc is
/// an arc of d, the root is covered with no parent, and following parents
/// from any covered vertex reaches the root without repetition.
bool is_valid_out_tree(const Digraph& d, const OutTree& t);

inline bool is_out_branching(const Digraph& d, const OutTree& t) {
    return t.spans() && is_valid_out_tree(d, t);
}

/// Spanning out-tree rooted at r with each non-root's parent equal to its
/// DFS discovery predecessor; children are explored in ascending id order.
/// Throws Errc::unreachable_vertices (listing them) if r does not reach
/// every vertex.
OutTree dfs_out_branching(const Digraph& d, Vertex r);

}  // namespace minlob
