#include "minlob/generators.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "minlob/rng.hpp"

namespace minlob {

Digraph make_star(int p) {
    if (p < 1) raise(Errc::bad_parameter, "star order must be at least 1");
    std::vector<Arc> arcs;
    for (Vertex v = 1; v < p; ++v) arcs.push_back({0, v});
    return Digraph(p, arcs);
}

Digraph append_out_pendants(const Digraph& d, Vertex anchor, int k) {
    if (anchor < 0 || anchor >= d.vertex_count())
        raise(Errc::vertex_out_of_range, "anchor " + std::to_string(anchor));
    if (k < 1) raise(Errc::bad_parameter, "pendant count must be at least 1");
    int n = d.vertex_count();
    std::vector<Arc> arcs = d.arcs();
    for (int i = 0; i < k; ++i) arcs.push_back({anchor, n + i});
    return Digraph(n + k, arcs);
}

StarGadget attach_star_gadget(const Digraph& d, Vertex anchor, int k) {
    if (anchor < 0 || anchor >= d.vertex_count())
        raise(Errc::vertex_out_of_range, "anchor " + std::to_string(anchor));
    if (k < 2) raise(Errc::bad_parameter, "star gadget needs k >= 2");
    int n = d.vertex_count();
    int p = n / (k - 1);
    if (p < 1)
        raise(Errc::bad_parameter,
              "star gadget degenerate: floor(" + std::to_string(n) + "/" + std::to_string(k - 1) +
                  ") < 1");
    std::vector<Arc> arcs = d.arcs();
    Vertex center = n;
    for (int i = 1; i < p; ++i) arcs.push_back({center, n + i});
    arcs.push_back({center, anchor});
    return {Digraph(n + p, arcs), center};
}

SourcedDigraph add_universal_source(const Digraph& d) {
    int n = d.vertex_count();
    std::vector<Arc> arcs = d.arcs();
    for (Vertex v = 0; v < n; ++v) arcs.push_back({n, v});
    return {Digraph(n + 1, arcs), n};
}

Digraph random_digraph(int n, double arc_probability, std::uint64_t seed) {
    if (n < 0) raise(Errc::bad_parameter, "vertex count must be nonnegative");
    if (arc_probability < 0.0 || arc_probability > 1.0)
        raise(Errc::bad_parameter, "arc probability outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            if (uniform01(rng) < arc_probability) arcs.push_back({u, v});
        }
    return Digraph(n, arcs);
}

Digraph random_dag(int n, double arc_probability, std::uint64_t seed) {
    if (n < 0) raise(Errc::bad_parameter, "vertex count must be nonnegative");
    if (arc_probability < 0.0 || arc_probability > 1.0)
        raise(Errc::bad_parameter, "arc probability outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[uniform_below(rng, i + 1)]);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uniform01(rng) < arc_probability) arcs.push_back({order[i], order[j]});
    return Digraph(n, arcs);
}

}  // namespace minlob
