#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "minlob/errors.hpp"

namespace minlob {

using Vertex = int;

struct Arc {
    Vertex tail = -1;
    Vertex head = -1;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Simple directed graph over dense vertex ids 0..n-1: no loops, no
/// parallel arcs. Immutable after construction; adjacency lists are kept
/// sorted ascending so every traversal in the library is deterministic.
class Digraph {
public:
    Digraph() = default;
    Digraph(int vertex_count, const std::vector<Arc>& arcs);

    int vertex_count() const noexcept { return static_cast<int>(out_.size()); }
    int arc_count() const noexcept { return arc_count_; }

    std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

    bool has_arc(Vertex tail, Vertex head) const;

    /// All arcs in lexicographic (tail, head) order.
    std::vector<Arc> arcs() const;

private:
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    int arc_count_ = 0;
};

struct SccDecomposition {
    std::vector<int> component_of;             // vertex -> component id
    std::vector<std::vector<Vertex>> components;
    std::vector<int> source_components;        // ids with no incoming arc from another component

    int count() const noexcept { return static_cast<int>(components.size()); }
};

SccDecomposition compute_sccs(const Digraph& d);

/// Union of all source strongly connected components, sorted ascending.
/// The digraph has an out-branching iff exactly one source component
/// exists, and then any vertex of that component can serve as the root.
std::vector<Vertex> root_candidates(const Digraph& d);

bool has_out_branching(const Digraph& d);

/// Vertices reachable from `start`, sorted ascending.
std::vector<Vertex> reachable_from(const Digraph& d, Vertex start);

/// Topological order if the digraph is acyclic.
std::optional<std::vector<Vertex>> topological_order(const Digraph& d);

inline bool is_acyclic(const Digraph& d) { return topological_order(d).has_value(); }

struct InducedSubgraph {
    Digraph graph;
    std::vector<Vertex> original_ids;  // new id -> old id
};

/// Subgraph induced by `keep` (must be sorted, distinct, in range).
InducedSubgraph induced_subgraph(const Digraph& d, const std::vector<Vertex>& keep);

/// Subgraph induced by the vertices reachable from v, with every arc
/// entering v removed, so v is the unique in-degree-0 vertex.
InducedSubgraph restrict_reachable(const Digraph& d, Vertex v);

}  // namespace minlob
