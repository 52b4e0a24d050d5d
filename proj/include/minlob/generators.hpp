#pragma once

#include <cstdint>

#include "minlob/digraph.hpp"

namespace minlob {

/// Star on p vertices: vertex 0 is the center with an arc to every other
/// vertex. p = 1 gives the single-vertex digraph.
Digraph make_star(int p);

/// Adds k new out-pendant vertices n..n+k-1, each receiving one arc from
/// anchor. Any out-branching must keep all pendants as leaves, so the
/// minimum leaf count of the result is at most k exactly when d has a
/// hamiltonian directed path ending at anchor.
Digraph append_out_pendants(const Digraph& d, Vertex anchor, int k);

struct StarGadget {
    Digraph graph;
    Vertex star_center;  // forced root of every out-branching
};

/// Disjointly adds a star on p = floor(n / (k-1)) vertices (k >= 2) plus
/// one arc from the star center to anchor. Rejects parameters that would
/// make p < 1. The p-1 star leaves are leaves of every out-branching, so
/// the minimum leaf count of the result is p-1 plus the minimum leaf
/// count of d over branchings rooted at anchor.
StarGadget attach_star_gadget(const Digraph& d, Vertex anchor, int k);

struct SourcedDigraph {
    Digraph graph;
    Vertex source;  // the added universal source (id = old vertex count)
};

/// Adds a new vertex s with an arc to every original vertex. The result
/// always has an out-branching, rooted at s.
SourcedDigraph add_universal_source(const Digraph& d);

/// Each ordered pair (u,v), u != v, becomes an arc independently with
/// probability arc_probability. Deterministic in (n, p, seed).
Digraph random_digraph(int n, double arc_probability, std::uint64_t seed);

/// Random DAG: arcs are sampled like random_digraph but oriented along a
/// random topological order.
Digraph random_dag(int n, double arc_probability, std::uint64_t seed);

}  // namespace minlob
