#include "minlob/digraph.hpp"

#include <algorithm>
#include <string>

namespace minlob {

Digraph::Digraph(int vertex_count, const std::vector<Arc>& arcs) {
    if (vertex_count < 0)
        raise(Errc::bad_parameter, "vertex count must be nonnegative");
    out_.resize(vertex_count);
    in_.resize(vertex_count);
    for (const Arc& a : arcs) {
        if (a.tail < 0 || a.tail >= vertex_count || a.head < 0 || a.head >= vertex_count)
            raise(Errc::vertex_out_of_range,
                  "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                      ") out of range for n=" + std::to_string(vertex_count));
        if (a.tail == a.head)
            raise(Errc::loop_arc, "loop arc at vertex " + std::to_string(a.tail));
        out_[a.tail].push_back(a.head);
    }
    for (Vertex v = 0; v < vertex_count; ++v) {
        auto& nbrs = out_[v];
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            raise(Errc::duplicate_arc, "duplicate arc with tail " + std::to_string(v));
        for (Vertex w : nbrs) in_[w].push_back(v);
        arc_count_ += static_cast<int>(nbrs.size());
    }
    for (auto& nbrs : in_) std::sort(nbrs.begin(), nbrs.end());
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
    const auto& nbrs = out_[tail];
    return std::binary_search(nbrs.begin(), nbrs.end(), head);
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (Vertex v = 0; v < vertex_count(); ++v)
        for (Vertex w : out_[v]) result.push_back({v, w});
    return result;
}

namespace {

// Iterative Tarjan low-link computation; component ids in discovery order.
struct TarjanState {
    const Digraph& d;
    std::vector<int> index, lowlink, on_stack;
    std::vector<Vertex> stack;
    int next_index = 0;
    SccDecomposition result;

    explicit TarjanState(const Digraph& graph)
        : d(graph),
          index(graph.vertex_count(), -1),
          lowlink(graph.vertex_count(), 0),
          on_stack(graph.vertex_count(), 0) {
        result.component_of.assign(graph.vertex_count(), -1);
    }

    void run(Vertex root) {
        struct Frame {
            Vertex v;
            size_t next_child;
        };
        std::vector<Frame> frames{{root, 0}};
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto nbrs = d.out_neighbors(f.v);
            if (f.next_child < nbrs.size()) {
                Vertex w = nbrs[f.next_child++];
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    std::vector<Vertex> comp;
                    Vertex w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        result.component_of[w] = static_cast<int>(result.components.size());
                        comp.push_back(w);
                    } while (w != f.v);
                    std::sort(comp.begin(), comp.end());
                    result.components.push_back(std::move(comp));
                }
                Vertex done = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[done]);
            }
        }
    }
};

}  // namespace

SccDecomposition compute_sccs(const Digraph& d) {
    TarjanState state(d);
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        if (state.index[v] == -1) state.run(v);

    SccDecomposition& r = state.result;
    std::vector<char> has_external_in(r.components.size(), 0);
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        for (Vertex w : d.out_neighbors(v))
            if (r.component_of[v] != r.component_of[w]) has_external_in[r.component_of[w]] = 1;
    for (int c = 0; c < r.count(); ++c)
        if (!has_external_in[c]) r.source_components.push_back(c);
    return std::move(state.result);
}

std::vector<Vertex> root_candidates(const Digraph& d) {
    SccDecomposition sccs = compute_sccs(d);
    std::vector<Vertex> result;
    for (int c : sccs.source_components)
        result.insert(result.end(), sccs.components[c].begin(), sccs.components[c].end());
    std::sort(result.begin(), result.end());
    return result;
}

bool has_out_branching(const Digraph& d) {
    return d.vertex_count() > 0 && compute_sccs(d).source_components.size() == 1;
}

std::vector<Vertex> reachable_from(const Digraph& d, Vertex start) {
    std::vector<char> seen(d.vertex_count(), 0);
    std::vector<Vertex> frontier{start};
    seen[start] = 1;
    while (!frontier.empty()) {
        Vertex v = frontier.back();
        frontier.pop_back();
        for (Vertex w : d.out_neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                frontier.push_back(w);
            }
    }
    std::vector<Vertex> result;
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        if (seen[v]) result.push_back(v);
    return result;
}

std::optional<std::vector<Vertex>> topological_order(const Digraph& d) {
    std::vector<int> pending(d.vertex_count());
    std::vector<Vertex> order;
    order.reserve(d.vertex_count());
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        pending[v] = d.in_degree(v);
        if (pending[v] == 0) order.push_back(v);
    }
    for (size_t i = 0; i < order.size(); ++i)
        for (Vertex w : d.out_neighbors(order[i]))
            if (--pending[w] == 0) order.push_back(w);
    if (static_cast<int>(order.size()) != d.vertex_count()) return std::nullopt;
    return order;
}

InducedSubgraph induced_subgraph(const Digraph& d, const std::vector<Vertex>& keep) {
    std::vector<Vertex> new_id(d.vertex_count(), -1);
    for (size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<Vertex>(i);
    std::vector<Arc> arcs;
    for (Vertex v : keep)
        for (Vertex w : d.out_neighbors(v))
            if (new_id[w] != -1) arcs.push_back({new_id[v], new_id[w]});
    return {Digraph(static_cast<int>(keep.size()), arcs), keep};
}

InducedSubgraph restrict_reachable(const Digraph& d, Vertex v) {
    if (v < 0 || v >= d.vertex_count())
        raise(Errc::vertex_out_of_range, "vertex " + std::to_string(v));
    InducedSubgraph sub = induced_subgraph(d, reachable_from(d, v));
    Vertex sub_v = -1;
    for (size_t i = 0; i < sub.original_ids.size(); ++i)
        if (sub.original_ids[i] == v) sub_v = static_cast<Vertex>(i);
    std::vector<Arc> arcs;
    for (const Arc& a : sub.graph.arcs())
        if (a.head != sub_v) arcs.push_back(a);
    sub.graph = Digraph(sub.graph.vertex_count(), arcs);
    return sub;
}

}  // namespace minlob
