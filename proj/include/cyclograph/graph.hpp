#ifndef CYCLOGRAPH_GRAPH_HPP
#define CYCLOGRAPH_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace cyclograph {

using VertexId = long long;

/// An arc tail → head, by dense vertex index.
struct Arc {
    std::size_t tail;
    std::size_t head;

    std::size_t other(std::size_t v) const noexcept { return v == tail ? head : tail; }
    bool touches(std::size_t v) const noexcept { return v == tail || v == head; }
};

/*
 * Directed graph without loops, parallel arcs or digons.
 *
 * Vertices carry caller-supplied integer ids; vertex and edge indices follow
 * insertion order, which fixes the row/column layout of every matrix built
 * from the graph.
 */
class OrientedGraph {
   public:
    std::size_t add_vertex(VertexId id) {
        if (auto it = index_.find(id); it != index_.end()) return it->second;
        const std::size_t idx = ids_.size();
        ids_.push_back(id);
        index_.emplace(id, idx);
        incident_.emplace_back();
        return idx;
    }

    std::size_t add_edge(VertexId tail, VertexId head) {
        if (tail == head) throw Error(ErrorCode::InvalidGraph, "loop at vertex " + std::to_string(tail));
        const std::size_t t = add_vertex(tail);
        const std::size_t h = add_vertex(head);
        if (pairs_.contains({t, h}))
            throw Error(ErrorCode::InvalidGraph,
                        "multiple arc " + std::to_string(tail) + "->" + std::to_string(head));
        if (pairs_.contains({h, t}))
            throw Error(ErrorCode::InvalidGraph, "digon between " + std::to_string(tail) + " and " + std::to_string(head));
        pairs_.insert({t, h});
        const std::size_t e = arcs_.size();
        arcs_.push_back({t, h});
        incident_[t].push_back(e);
        incident_[h].push_back(e);
        return e;
    }

    static OrientedGraph from_edges(const std::vector<std::pair<VertexId, VertexId>>& edges,
                                    const std::vector<VertexId>& vertices = {}) {
        OrientedGraph g;
        for (VertexId v : vertices) g.add_vertex(v);
        for (const auto& [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    std::size_t vertex_count() const noexcept { return ids_.size(); }
    std::size_t edge_count() const noexcept { return arcs_.size(); }
    const Arc& edge(std::size_t e) const { return arcs_.at(e); }
    const std::vector<Arc>& edges() const noexcept { return arcs_; }
    VertexId vertex_id(std::size_t v) const { return ids_.at(v); }
    const std::vector<VertexId>& vertex_ids() const noexcept { return ids_; }
    const std::vector<std::size_t>& incident(std::size_t v) const { return incident_.at(v); }
    std::size_t degree(std::size_t v) const { return incident_.at(v).size(); }

    std::optional<std::size_t> index_of(VertexId id) const {
        if (auto it = index_.find(id); it != index_.end()) return it->second;
        return std::nullopt;
    }
    std::size_t require_index(VertexId id) const {
        if (auto idx = index_of(id)) return *idx;
        throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(id) + " is not in the graph");
    }
    std::optional<std::size_t> find_edge(VertexId tail, VertexId head) const {
        const auto t = index_of(tail), h = index_of(head);
        if (!t || !h) return std::nullopt;
        for (std::size_t e : incident_[*t])
            if (arcs_[e].tail == *t && arcs_[e].head == *h) return e;
        return std::nullopt;
    }

    std::vector<std::size_t> all_vertices() const {
        std::vector<std::size_t> v(vertex_count());
        std::iota(v.begin(), v.end(), std::size_t{0});
        return v;
    }
    std::vector<std::size_t> all_edges() const {
        std::vector<std::size_t> e(edge_count());
        std::iota(e.begin(), e.end(), std::size_t{0});
        return e;
    }

    /// Vertex indices for the given ids, in graph order; UnknownVertex on a miss.
    std::vector<std::size_t> indices_of(const std::vector<VertexId>& ids) const {
        std::vector<std::size_t> out;
        out.reserve(ids.size());
        for (VertexId id : ids) out.push_back(require_index(id));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

   private:
    std::vector<VertexId> ids_;
    std::unordered_map<VertexId, std::size_t> index_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> incident_;
    std::set<std::pair<std::size_t, std::size_t>> pairs_;
};

/*
 * A pair (V', E') of vertex and edge subsets of a parent graph. Edges of E'
 * may have one or both endpoints outside V'. Index lists are kept sorted.
 */
struct Substructure {
    const OrientedGraph* graph = nullptr;
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;

    Substructure() = default;
    Substructure(const OrientedGraph& g, std::vector<std::size_t> vs, std::vector<std::size_t> es)
        : graph(&g), vertices(std::move(vs)), edges(std::move(es)) {
        normalize(vertices, g.vertex_count(), "vertex");
        normalize(edges, g.edge_count(), "edge");
    }

    /// The whole graph as a substructure.
    static Substructure whole(const OrientedGraph& g) { return Substructure(g, g.all_vertices(), g.all_edges()); }

    /// Substructure from external vertex ids and (tail, head) pairs.
    static Substructure from_ids(const OrientedGraph& g, const std::vector<VertexId>& vs,
                                 const std::vector<std::pair<VertexId, VertexId>>& es) {
        std::vector<std::size_t> edge_idx;
        for (const auto& [u, v] : es) {
            auto e = g.find_edge(u, v);
            if (!e) throw Error(ErrorCode::UnknownVertex, "edge " + std::to_string(u) + "->" + std::to_string(v) + " is not in the graph");
            edge_idx.push_back(*e);
        }
        return Substructure(g, g.indices_of(vs), std::move(edge_idx));
    }

    std::vector<char> vertex_mask() const {
        std::vector<char> in(graph->vertex_count(), 0);
        for (std::size_t v : vertices) in[v] = 1;
        return in;
    }

    /// Number of E' edges incident to v.
    std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (std::size_t e : edges) d += graph->edge(e).touches(v) ? 1 : 0;
        return d;
    }

   private:
    static void normalize(std::vector<std::size_t>& xs, std::size_t bound, const char* what) {
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        if (!xs.empty() && xs.back() >= bound)
            throw Error(ErrorCode::UnknownVertex, std::string(what) + " index " + std::to_string(xs.back()) + " out of range");
    }
};

/// A connected part of a substructure, or a lone edge with no endpoint in V'.
struct Component {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;
    bool degenerate = false;
};

struct ComponentClass {
    enum class Kind { RootlessTree, Unicyclic, NormalTree, Irregular, DegenerateEdge };
    Kind kind = Kind::Irregular;
    int k = 0;  // cycle length (Unicyclic only)
    int g = 0;  // edges against the majority direction (Unicyclic only)

    bool regular() const noexcept { return kind == Kind::RootlessTree || kind == Kind::Unicyclic; }
    friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

inline std::string to_string(ComponentClass::Kind kind) {
    switch (kind) {
        case ComponentClass::Kind::RootlessTree: return "rootless_tree";
        case ComponentClass::Kind::Unicyclic: return "unicyclic";
        case ComponentClass::Kind::NormalTree: return "normal_tree";
        case ComponentClass::Kind::Irregular: return "irregular";
        case ComponentClass::Kind::DegenerateEdge: return "degenerate_edge";
    }
    return "unknown";
}

struct CycleInfo {
    std::vector<std::size_t> cycle;  // vertex indices in traversal order
    int k = 0;
    int g = 0;
};

namespace detail {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

}  // namespace detail

/*
 * Partition of V' by connectivity over E' edges with both endpoints in V'.
 * An edge with exactly one endpoint in V' joins that endpoint's component;
 * an edge with none becomes its own degenerate pseudo-component (listed last).
 */
inline std::vector<Component> components(const Substructure& sub) {
    const OrientedGraph& g = *sub.graph;
    const auto in = sub.vertex_mask();
    detail::DisjointSets ds(g.vertex_count());
    for (std::size_t e : sub.edges) {
        const Arc& a = g.edge(e);
        if (in[a.tail] && in[a.head]) ds.unite(a.tail, a.head);
    }
    std::vector<Component> out;
    std::vector<std::size_t> slot(g.vertex_count(), static_cast<std::size_t>(-1));
    for (std::size_t v : sub.vertices) {
        const std::size_t root = ds.find(v);
        if (slot[root] == static_cast<std::size_t>(-1)) {
            slot[root] = out.size();
            out.emplace_back();
        }
        out[slot[root]].vertices.push_back(v);
    }
    std::vector<Component> degenerate;
    for (std::size_t e : sub.edges) {
        const Arc& a = g.edge(e);
        if (in[a.tail])
            out[slot[ds.find(a.tail)]].edges.push_back(e);
        else if (in[a.head])
            out[slot[ds.find(a.head)]].edges.push_back(e);
        else
            degenerate.push_back(Component{{}, {e}, true});
    }
    for (auto& c : degenerate) out.push_back(std::move(c));
    return out;
}

/// Peels pendant vertices, then walks the remaining cycle once.
inline CycleInfo find_cycle(const OrientedGraph& g, const Component& comp) {
    if (comp.degenerate) throw Error(ErrorCode::NoCycle, "degenerate edge has no cycle");
    std::unordered_map<std::size_t, std::size_t> deg;
    for (std::size_t v : comp.vertices) deg[v] = 0;
    for (std::size_t e : comp.edges) {
        const Arc& a = g.edge(e);
        if (!deg.contains(a.tail) || !deg.contains(a.head))
            throw Error(ErrorCode::NoCycle, "component is not a subgraph");
        ++deg[a.tail];
        ++deg[a.head];
    }
    std::vector<char> alive_edge(comp.edges.size(), 1);
    std::vector<std::size_t> stack;
    for (std::size_t v : comp.vertices)
        if (deg[v] == 1) stack.push_back(v);
    std::set<std::size_t> removed;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        if (deg[v] != 1) continue;
        removed.insert(v);
        for (std::size_t i = 0; i < comp.edges.size(); ++i) {
            if (!alive_edge[i]) continue;
            const Arc& a = g.edge(comp.edges[i]);
            if (!a.touches(v)) continue;
            alive_edge[i] = 0;
            --deg[v];
            const std::size_t u = a.other(v);
            if (--deg[u] == 1) stack.push_back(u);
        }
    }
    std::vector<std::size_t> rest;
    for (std::size_t v : comp.vertices)
        if (!removed.contains(v) && deg[v] > 0) rest.push_back(v);
    for (std::size_t v : rest)
        if (deg[v] != 2) throw Error(ErrorCode::NoCycle, "component is not unicyclic");
    if (rest.size() < 3) throw Error(ErrorCode::NoCycle, "component has no cycle");

    CycleInfo info;
    std::size_t cur = rest.front();
    std::size_t came_by = static_cast<std::size_t>(-1);
    int against = 0;
    do {
        info.cycle.push_back(cur);
        std::size_t next_edge = static_cast<std::size_t>(-1);
        for (std::size_t i = 0; i < comp.edges.size(); ++i) {
            if (!alive_edge[i] || comp.edges[i] == came_by) continue;
            if (g.edge(comp.edges[i]).touches(cur)) {
                next_edge = comp.edges[i];
                break;
            }
        }
        const Arc& a = g.edge(next_edge);
        const std::size_t nxt = a.other(cur);
        if (a.tail == nxt) ++against;
        came_by = next_edge;
        cur = nxt;
    } while (cur != rest.front());
    if (info.cycle.size() != rest.size()) throw Error(ErrorCode::NoCycle, "component has more than one cycle");
    info.k = static_cast<int>(info.cycle.size());
    info.g = std::min(against, info.k - against);
    return info;
}

inline ComponentClass classify_component(const OrientedGraph& g, const Component& comp) {
    using Kind = ComponentClass::Kind;
    if (comp.degenerate) return {Kind::DegenerateEdge};
    const std::size_t nv = comp.vertices.size(), ne = comp.edges.size();
    if (nv != ne) return {nv == ne + 1 ? Kind::NormalTree : Kind::Irregular};
    std::set<std::size_t> vs(comp.vertices.begin(), comp.vertices.end());
    for (std::size_t e : comp.edges) {
        const Arc& a = g.edge(e);
        if (!vs.contains(a.tail) || !vs.contains(a.head)) return {Kind::RootlessTree};
    }
    const CycleInfo c = find_cycle(g, comp);
    return {Kind::Unicyclic, c.k, c.g};
}

/// Every component regular (|V'_i| = |E'_i|) and no degenerate edges.
inline bool is_all_regular(const Substructure& sub) {
    for (const auto& c : components(sub))
        if (!classify_component(*sub.graph, c).regular()) return false;
    return true;
}

/*
 * Repeatedly strips a vertex of V' that has exactly one incident E' edge
 * whose other endpoint is also in V', together with that edge.
 */
inline Substructure pendant_reduce(const Substructure& sub) {
    const OrientedGraph& g = *sub.graph;
    std::vector<char> in = sub.vertex_mask();
    std::vector<char> edge_alive(g.edge_count(), 0);
    for (std::size_t e : sub.edges) edge_alive[e] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v : sub.vertices) {
            if (!in[v]) continue;
            std::size_t count = 0, last = 0;
            for (std::size_t e : g.incident(v))
                if (edge_alive[e]) ++count, last = e;
            if (count != 1 || !in[g.edge(last).other(v)]) continue;
            in[v] = 0;
            edge_alive[last] = 0;
            changed = true;
            break;
        }
    }
    std::vector<std::size_t> vs, es;
    for (std::size_t v : sub.vertices)
        if (in[v]) vs.push_back(v);
    for (std::size_t e : sub.edges)
        if (edge_alive[e]) es.push_back(e);
    return Substructure(g, std::move(vs), std::move(es));
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_GRAPH_HPP
