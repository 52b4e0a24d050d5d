#include "minlob/out_tree.hpp"

#include <algorithm>
#include <string>

namespace minlob {

OutTree::OutTree(int universe, Vertex root)
    : parent_(universe, -1), child_count_(universe, 0), covered_(universe, 0), root_(root) {
    if (root < 0 || root >= universe)
        raise(Errc::vertex_out_of_range, "root " + std::to_string(root));
    covered_[root] = 1;
    covered_count_ = 1;
    leaf_count_ = 1;
}

bool OutTree::is_ancestor(Vertex ancestor, Vertex v) const {
    for (Vertex cur = v; cur != -1; cur = parent_[cur])
        if (cur == ancestor) return true;
    return false;
}

void OutTree::add_leaf(Vertex v, Vertex parent) {
    if (!covers(parent)) raise(Errc::vertex_not_covered, "parent " + std::to_string(parent));
    if (covers(v)) raise(Errc::bad_parameter, "vertex " + std::to_string(v) + " already covered");
    covered_[v] = 1;
    parent_[v] = parent;
    ++covered_count_;
    ++leaf_count_;
    if (child_count_[parent]++ == 0) --leaf_count_;  // parent stops being a leaf
}

void OutTree::reparent(Vertex v, Vertex u) {
    Vertex old = parent_[v];
    parent_[v] = u;
    if (--child_count_[old] == 0) ++leaf_count_;
    if (child_count_[u]++ == 0) --leaf_count_;
}

std::vector<Arc> OutTree::arcs() const {
    std::vector<Arc> result;
    result.reserve(covered_count_ - 1);
    for (Vertex v = 0; v < universe(); ++v)
        if (parent_[v] != -1) result.push_back({parent_[v], v});
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Vertex> OutTree::covered_vertices() const {
    std::vector<Vertex> result;
    for (Vertex v = 0; v < universe(); ++v)
        if (covered_[v]) result.push_back(v);
    return result;
}

std::vector<Vertex> OutTree::leaves() const {
    std::vector<Vertex> result;
    for (Vertex v = 0; v < universe(); ++v)
        if (is_leaf(v)) result.push_back(v);
    return result;
}

std::vector<Vertex> OutTree::internal_vertices() const {
    std::vector<Vertex> result;
    for (Vertex v = 0; v < universe(); ++v)
        if (is_internal(v)) result.push_back(v);
    return result;
}

bool is_valid_out_tree(const Digraph& d, const OutTree& t) {
    if (t.universe() != d.vertex_count()) return false;
    if (!t.covers(t.root()) || t.parent(t.root()) != -1) return false;
    int covered = 0;
    std::vector<int> reaches_root(t.universe(), 0);  // 0 unknown, 1 yes
    for (Vertex v = 0; v < t.universe(); ++v) {
        if (!t.covers(v)) {
            if (t.parent(v) != -1) return false;
            continue;
        }
        ++covered;
        Vertex p = t.parent(v);
        if (v == t.root()) continue;
        if (p == -1 || !t.covers(p) || !d.has_arc(p, v)) return false;
    }
    if (covered != t.covered_count()) return false;
    // Walk parent chains; a chain longer than the cover size means a cycle.
    for (Vertex v = 0; v < t.universe(); ++v) {
        if (!t.covers(v)) continue;
        std::vector<Vertex> path;
        Vertex cur = v;
        while (cur != t.root() && !reaches_root[cur]) {
            path.push_back(cur);
            cur = t.parent(cur);
            if (cur == -1 || static_cast<int>(path.size()) > t.covered_count()) return false;
        }
        for (Vertex w : path) reaches_root[w] = 1;
    }
    return true;
}

OutTree dfs_out_branching(const Digraph& d, Vertex r) {
    if (r < 0 || r >= d.vertex_count())
        raise(Errc::vertex_out_of_range, "root " + std::to_string(r));
    OutTree tree(d.vertex_count(), r);
    struct Frame {
        Vertex v;
        size_t next;
    };
    std::vector<Frame> stack{{r, 0}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto nbrs = d.out_neighbors(f.v);
        if (f.next < nbrs.size()) {
            Vertex w = nbrs[f.next++];
            if (!tree.covers(w)) {
                tree.add_leaf(w, f.v);
                stack.push_back({w, 0});
            }
        } else {
            stack.pop_back();
        }
    }
    if (!tree.spans()) {
        std::string missing;
        for (Vertex v = 0; v < d.vertex_count(); ++v)
            if (!tree.covers(v)) missing += " " + std::to_string(v);
        raise(Errc::unreachable_vertices,
              "unreachable from " + std::to_string(r) + ":" + missing);
    }
    return tree;
}

}  // namespace minlob
