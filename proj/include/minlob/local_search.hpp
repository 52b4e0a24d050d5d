#pragma once

#include <optional>

#include "minlob/out_tree.hpp"

namespace minlob {

/// Vertex cover of the underlying undirected graph; members sorted.
struct VertexCover {
    std::vector<Vertex> members;

    bool contains(Vertex v) const;
};

bool covers_all_arcs(const Digraph& d, const VertexCover& cover);

/// Replaces the parent arc of v by (u,v), leaving every other parent
/// unchanged. Requires a spanning tree, (u,v) an arc of d outside the
/// tree, v not the root, and (u,v) not tree-backward (u must not lie in
/// the subtree of v, or the swap would close a cycle).
OutTree swap_parent(const Digraph& d, const OutTree& tree, Vertex u, Vertex v);

/// Lexicographically first arc (u,v) of d outside the tree that is not
/// tree-backward, has u a leaf and the parent of v with tree out-degree
/// at least 2 — exactly the swaps that strictly decrease the leaf count.
/// Arcs into the root are treated as backward and never qualify.
std::optional<Arc> find_improving_swap(const Digraph& d, const OutTree& tree);

/// True iff no parent swap can decrease the leaf count: every non-backward
/// non-tree arc (u,v) has u internal or the parent of v with out-degree 1.
bool is_locally_minimal(const Digraph& d, const OutTree& tree);

/// Applies leaf-decreasing parent swaps (lexicographically first each
/// round) until none remains. The leaf count is strictly monotone, so at
/// most n swaps happen; each round rescans all arcs.
OutTree minimize_leaves(const Digraph& d, OutTree tree);

/// For a locally minimal out-branching: the internal vertices, the leaves
/// whose parent has tree out-degree 1, and any in-degree-0 vertex of d
/// together cover every arc. With t internal vertices the cover has at
/// most 2t members (plus the in-degree-0 adjustment, which for n >= 2 is
/// the root and already internal).
VertexCover extract_vertex_cover(const Digraph& d, const OutTree& tree);

}  // namespace minlob
