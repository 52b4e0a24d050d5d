#include "minlob/local_search.hpp"

#include <algorithm>
#include <string>

namespace minlob {

bool VertexCover::contains(Vertex v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

bool covers_all_arcs(const Digraph& d, const VertexCover& cover) {
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        if (cover.contains(v)) continue;
        for (Vertex w : d.out_neighbors(v))
            if (!cover.contains(w)) return false;
    }
    return true;
}

namespace {

void require_spanning(const Digraph& d, const OutTree& tree) {
    if (tree.universe() != d.vertex_count() || !tree.spans())
        raise(Errc::not_spanning, "tree does not span the digraph");
}

// Backward means u lies in the subtree of v; arcs into the root count too.
bool is_backward(const OutTree& tree, Vertex u, Vertex v) {
    return v == tree.root() || tree.is_ancestor(v, u);
}

}  // namespace

OutTree swap_parent(const Digraph& d, const OutTree& tree, Vertex u, Vertex v) {
    require_spanning(d, tree);
    if (!d.has_arc(u, v))
        raise(Errc::arc_missing, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (v == tree.root()) raise(Errc::arc_into_root, "head " + std::to_string(v) + " is the root");
    if (tree.parent(v) == u)
        raise(Errc::arc_in_tree, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (tree.is_ancestor(v, u))
        raise(Errc::backward_arc,
              "(" + std::to_string(u) + "," + std::to_string(v) + ") closes a cycle");
    OutTree result = tree;
    result.reparent(v, u);
    return result;
}

std::optional<Arc> find_improving_swap(const Digraph& d, const OutTree& tree) {
    require_spanning(d, tree);
    for (Vertex u = 0; u < d.vertex_count(); ++u) {
        if (!tree.is_leaf(u)) continue;  // internal tails never improve
        for (Vertex v : d.out_neighbors(u)) {
            if (tree.parent(v) == u) continue;
            if (tree.tree_out_degree(tree.parent(v) == -1 ? v : tree.parent(v)) < 2) continue;
            if (is_backward(tree, u, v)) continue;
            return Arc{u, v};
        }
    }
    return std::nullopt;
}

bool is_locally_minimal(const Digraph& d, const OutTree& tree) {
    return !find_improving_swap(d, tree).has_value();
}

OutTree minimize_leaves(const Digraph& d, OutTree tree) {
    require_spanning(d, tree);
    while (auto arc = find_improving_swap(d, tree)) tree.reparent(arc->head, arc->tail);
    return tree;
}

VertexCover extract_vertex_cover(const Digraph& d, const OutTree& tree) {
    require_spanning(d, tree);
    if (!is_locally_minimal(d, tree))
        raise(Errc::not_locally_minimal, "tree admits a leaf-decreasing swap");
    VertexCover cover;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        bool in_cover = tree.is_internal(v) ||
                        (tree.is_leaf(v) && v != tree.root() &&
                         tree.tree_out_degree(tree.parent(v)) == 1) ||
                        d.in_degree(v) == 0;
        if (in_cover) cover.members.push_back(v);
    }
    return cover;
}

}  // namespace minlob
