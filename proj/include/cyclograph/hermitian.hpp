#ifndef CYCLOGRAPH_HERMITIAN_HPP
#define CYCLOGRAPH_HERMITIAN_HPP

#include <cstddef>
#include <vector>

#include "cyclotomic.hpp"
#include "graph.hpp"
#include "matrix.hpp"

namespace cyclograph {

/// S_ω restricted to rows V' and columns E'.
struct IncidenceMatrix {
    std::vector<std::size_t> rows;  // vertex indices
    std::vector<std::size_t> cols;  // edge indices
    Matrix<CycloNum> entries;
};

/// A square matrix indexed by vertices; entry(u, v) = conj(entry(v, u)).
struct HermitianMatrix {
    std::vector<std::size_t> index;
    Matrix<CycloNum> entries;
};

/*
 * s_{ve} = -ω if e leaves v, 1 if e enters v, 0 otherwise. Only the direction
 * of e in the parent graph matters; its other endpoint may lie outside V'.
 */
inline IncidenceMatrix build_incidence(const Substructure& sub, const RootParam& param) {
    const OrientedGraph& g = *sub.graph;
    const CycloNum minus_omega = -root_of_unity(param);
    IncidenceMatrix s{sub.vertices, sub.edges, Matrix<CycloNum>(sub.vertices.size(), sub.edges.size())};
    for (std::size_t i = 0; i < sub.vertices.size(); ++i)
        for (std::size_t j = 0; j < sub.edges.size(); ++j) {
            const Arc& a = g.edge(sub.edges[j]);
            if (a.tail == sub.vertices[i])
                s.entries(i, j) = minus_omega;
            else if (a.head == sub.vertices[i])
                s.entries(i, j) = CycloNum(1);
        }
    return s;
}

/*
 * Laplacian of a substructure: the diagonal counts E' edges at each vertex
 * (including edges leaving V'); off-diagonal entries are -ω for u → v and
 * -conj(ω) for v → u whenever that edge is in E'.
 */
inline HermitianMatrix build_laplacian(const Substructure& sub, const RootParam& param) {
    const OrientedGraph& g = *sub.graph;
    const std::size_t n = sub.vertices.size();
    const CycloNum omega = root_of_unity(param);
    const CycloNum fwd = -omega, back = -omega.conj();
    std::vector<std::size_t> pos(g.vertex_count(), n);
    for (std::size_t i = 0; i < n; ++i) pos[sub.vertices[i]] = i;
    HermitianMatrix m{sub.vertices, Matrix<CycloNum>(n, n)};
    std::vector<long long> deg(n, 0);
    for (std::size_t e : sub.edges) {
        const Arc& a = g.edge(e);
        const std::size_t t = pos[a.tail], h = pos[a.head];
        if (t < n) ++deg[t];
        if (h < n) ++deg[h];
        if (t < n && h < n) {
            m.entries(t, h) = fwd;
            m.entries(h, t) = back;
        }
    }
    for (std::size_t i = 0; i < n; ++i) m.entries(i, i) = CycloNum(deg[i]);
    return m;
}

/// L_ω(G) of the whole graph.
inline HermitianMatrix laplacian(const OrientedGraph& g, const RootParam& param) {
    return build_laplacian(Substructure::whole(g), param);
}

/// Principal minor det L_ω(G)[V'], with full-graph degrees on the diagonal.
inline CycloNum laplacian_minor(const OrientedGraph& g, const RootParam& param, const std::vector<std::size_t>& vset) {
    for (std::size_t v : vset)
        if (v >= g.vertex_count())
            throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
    const HermitianMatrix full = laplacian(g, param);
    return determinant(full.entries.sub(vset, vset));
}

inline CycloNum laplacian_minor_ids(const OrientedGraph& g, const RootParam& param, const std::vector<VertexId>& ids) {
    return laplacian_minor(g, param, g.indices_of(ids));
}

inline bool is_hermitian(const Matrix<CycloNum>& m) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (!(m(i, j) == m(j, i).conj())) return false;
    return true;
}

inline CycloNum determinant(const HermitianMatrix& m) { return determinant(m.entries); }

}  // namespace cyclograph

#endif  // CYCLOGRAPH_HERMITIAN_HPP
