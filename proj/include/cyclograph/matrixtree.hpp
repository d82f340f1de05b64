#ifndef CYCLOGRAPH_MATRIXTREE_HPP
#define CYCLOGRAPH_MATRIXTREE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclotomic.hpp"
#include "decomposition.hpp"
#include "graph.hpp"
#include "hermitian.hpp"

namespace cyclograph {

inline constexpr std::size_t kMaxCycles = 100'000;

/// A simple cycle of the underlying undirected graph, with its orientation data.
struct SimpleCycle {
    std::vector<std::size_t> vertices;  // traversal order, starting at the smallest index
    std::vector<std::size_t> edges;     // edges[i] joins vertices[i] and vertices[i+1 mod k]
    int k = 0;
    int g = 0;                          // minority direction count
};

/*
 * Visits every simple cycle once. Each cycle is rooted at its smallest vertex
 * and reported in the direction whose second vertex is smaller than its last.
 * `visit` returns false to stop early. Throws GuardrailExceeded past `limit`.
 */
template <class Visit>
void for_each_simple_cycle(const OrientedGraph& g, Visit&& visit, std::size_t limit = kMaxCycles) {
    const std::size_t n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<std::size_t> path, path_edges;
    std::size_t found = 0;
    bool stop = false;

    auto emit = [&](std::size_t closing_edge) {
        if (++found > limit)
            throw Error(ErrorCode::GuardrailExceeded, "more than " + std::to_string(limit) + " simple cycles");
        SimpleCycle c;
        c.vertices = path;
        c.edges = path_edges;
        c.edges.push_back(closing_edge);
        c.k = static_cast<int>(c.vertices.size());
        int against = 0;
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
            if (g.edge(c.edges[i]).tail != c.vertices[i]) ++against;
        c.g = std::min(against, c.k - against);
        if (!visit(static_cast<const SimpleCycle&>(c))) stop = true;
    };

    auto dfs = [&](auto&& self, std::size_t root, std::size_t v) -> void {
        for (std::size_t e : g.incident(v)) {
            if (stop) return;
            const std::size_t w = g.edge(e).other(v);
            if (w == root) {
                if (path.size() >= 3 && path[1] < path.back()) emit(e);
            } else if (w > root && !on_path[w]) {
                on_path[w] = 1;
                path.push_back(w);
                path_edges.push_back(e);
                self(self, root, w);
                path.pop_back();
                path_edges.pop_back();
                on_path[w] = 0;
            }
        }
    };

    for (std::size_t root = 0; root < n && !stop; ++root) {
        on_path[root] = 1;
        path.assign(1, root);
        path_edges.clear();
        dfs(dfs, root, root);
        on_path[root] = 0;
    }
}

inline std::vector<SimpleCycle> simple_cycles(const OrientedGraph& g, std::size_t limit = kMaxCycles) {
    std::vector<SimpleCycle> out;
    for_each_simple_cycle(g, [&](const SimpleCycle& c) {
        out.push_back(c);
        return true;
    }, limit);
    return out;
}

/// True iff every cycle contributes 0 at ω; a unicyclic subgraph's determinant is its cycle's.
inline bool mtt_condition(const OrientedGraph& g, const RootParam& param) {
    if (param.is_identity()) return true;
    bool holds = true;
    for_each_simple_cycle(g, [&](const SimpleCycle& c) {
        holds = cycle_vanishes(param, c.k, c.g);
        return holds;
    });
    return holds;
}

struct SpanningTreeReport {
    std::optional<mpz_class> count;  // set only when condition_holds
    CycloNum minor;
    bool condition_holds = false;
    RootParam parameter;
    VertexId deleted_vertex = 0;
};

/// det L_ω[V \ {v}]; equals the spanning-tree count whenever the condition holds.
inline SpanningTreeReport spanning_trees_via_cofactor(const OrientedGraph& g, const RootParam& param, std::size_t v) {
    if (g.vertex_count() == 0) throw Error(ErrorCode::InvalidArgument, "graph has no vertices");
    if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
    std::vector<std::size_t> rest;
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        if (u != v) rest.push_back(u);
    SpanningTreeReport r;
    r.parameter = param;
    r.deleted_vertex = g.vertex_id(v);
    r.condition_holds = mtt_condition(g, param);
    r.minor = laplacian_minor(g, param, rest);
    if (r.condition_holds) {
        if (!r.minor.is_rational() || !r.minor.to_rational().is_integer() || r.minor.to_rational().sign() < 0)
            throw Error(ErrorCode::NonInteger, "cofactor " + r.minor.to_string() + " is not a non-negative integer");
        r.count = r.minor.to_rational().numerator();
    }
    return r;
}

/// Direction-blind count of spanning trees: (|V|-1)-edge subsets joining every vertex.
inline std::uint64_t brute_force_spanning_trees(const OrientedGraph& g, bool force = false) {
    const std::size_t n = g.vertex_count(), m = g.edge_count();
    if (n <= 1) return 1;
    if (m < n - 1) return 0;
    check_guardrail(m, n - 1, force);
    std::uint64_t count = 0;
    for_each_combination(m, n - 1, [&](const std::vector<std::size_t>& comb) {
        detail::DisjointSets ds(n);
        for (std::size_t e : comb)
            if (!ds.unite(g.edge(e).tail, g.edge(e).head)) return;
        ++count;
    });
    return count;
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_MATRIXTREE_HPP
