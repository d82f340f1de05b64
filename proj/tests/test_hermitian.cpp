#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "cyclograph/decomposition.hpp"
#include "cyclograph/hermitian.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace cyclograph;
using namespace testing_support;

namespace {

const std::vector<RootParam> kParams{RootParam(1, 0), RootParam(2, 1), RootParam(3, 1), RootParam(4, 1),
                                     RootParam(5, 1), RootParam(5, 2), RootParam(6, 1), RootParam(7, 2),
                                     RootParam(8, 3), RootParam(12, 5)};

CycloNum from_strings(unsigned order, const std::vector<std::string>& coeffs) {
    std::vector<Rational> c;
    for (const auto& s : coeffs) c.push_back(Rational::parse(s));
    return CycloNum::from_powers(order, c);
}

}  // namespace

TEST(Incidence, SingleEdgeColumn) {
    const OrientedGraph g = OrientedGraph::from_edges({{1, 2}});
    const RootParam w5(5, 1);
    const IncidenceMatrix s = build_incidence(Substructure::whole(g), w5);
    ASSERT_EQ(s.entries.rows(), 2u);
    ASSERT_EQ(s.entries.cols(), 1u);
    EXPECT_EQ(s.entries(0, 0), -CycloNum::zeta(5));
    EXPECT_EQ(s.entries(1, 0), CycloNum(1));
}

TEST(Incidence, EmptyRowsAndZeroColumns) {
    const OrientedGraph g = house_graph();
    const IncidenceMatrix empty = build_incidence(Substructure(g, {}, g.all_edges()), RootParam(3, 1));
    EXPECT_EQ(empty.entries.rows(), 0u);
    EXPECT_EQ(empty.entries.cols(), 6u);
    const IncidenceMatrix s = build_incidence(Substructure::from_ids(g, {1, 3}, {{4, 5}, {1, 3}}), RootParam(3, 1));
    // Column order follows edge index: 1->3 is edge 1, 4->5 is edge 4.
    EXPECT_TRUE(s.entries(0, 1).is_zero());
    EXPECT_TRUE(s.entries(1, 1).is_zero());
    EXPECT_FALSE(s.entries(0, 0).is_zero());
}

TEST(Incidence, ColumnShape) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 100; ++t) {
        const OrientedGraph g = random_graph(rng, 6, 9);
        const Substructure sub = random_substructure(rng, g);
        const IncidenceMatrix s = build_incidence(sub, RootParam(7, 3));
        for (std::size_t j = 0; j < s.entries.cols(); ++j) {
            int minus = 0, ones = 0;
            for (std::size_t i = 0; i < s.entries.rows(); ++i) {
                if (s.entries(i, j) == CycloNum(1)) ++ones;
                else if (s.entries(i, j) == -CycloNum::zeta(7, 3)) ++minus;
                else EXPECT_TRUE(s.entries(i, j).is_zero());
            }
            EXPECT_LE(minus, 1);
            EXPECT_LE(ones, 1);
            const Arc& a = g.edge(s.cols[j]);
            const bool touches = std::find(sub.vertices.begin(), sub.vertices.end(), a.tail) != sub.vertices.end() ||
                                 std::find(sub.vertices.begin(), sub.vertices.end(), a.head) != sub.vertices.end();
            EXPECT_EQ(minus + ones > 0, touches);
        }
    }
}

TEST(Laplacian, TwoVertexTrees) {
    const OrientedGraph g = OrientedGraph::from_edges({{1, 2}, {2, 3}});
    const RootParam w(5, 2);
    const CycloNum om = root_of_unity(w);
    const HermitianMatrix rootless = build_laplacian(Substructure::from_ids(g, {1, 2}, {{1, 2}, {2, 3}}), w);
    EXPECT_EQ(rootless.entries(0, 0), CycloNum(1));
    EXPECT_EQ(rootless.entries(0, 1), -om);
    EXPECT_EQ(rootless.entries(1, 0), -om.conj());
    EXPECT_EQ(rootless.entries(1, 1), CycloNum(2));
    EXPECT_EQ(determinant(rootless), CycloNum(1));
    const HermitianMatrix normal = build_laplacian(Substructure::from_ids(g, {1, 2}, {{1, 2}}), w);
    EXPECT_EQ(normal.entries(1, 1), CycloNum(1));
    EXPECT_TRUE(determinant(normal).is_zero());
    EXPECT_EQ(build_laplacian(Substructure(g, {}, {}), w).entries.rows(), 0u);
}

TEST(Determinant, Basics) {
    EXPECT_EQ(determinant(Matrix<CycloNum>(0, 0)), CycloNum(1));
    EXPECT_EQ(determinant(Matrix<CycloNum>::identity(3)), CycloNum(1));
    Matrix<CycloNum> m(3, 3, CycloNum(1));
    m(0, 1) = CycloNum::zeta(5);
    for (std::size_t i = 0; i < 3; ++i) m(i, 2) = CycloNum(0);
    EXPECT_TRUE(determinant(m).is_zero());
    // Needs a row swap.
    Matrix<Rational> r(2, 2, Rational(0));
    r(0, 1) = Rational(2);
    r(1, 0) = Rational(3);
    EXPECT_EQ(determinant(r), Rational(-6));
    EXPECT_EQ(error_code([] { determinant(Matrix<CycloNum>(2, 3)); }), ErrorCode::SizeMismatch);
}

TEST(Determinant, MatchesCofactorExpansionOnRandomMatrices) {
    std::mt19937_64 rng(77);
    // Laplace expansion along the first row; independent of elimination.
    std::function<CycloNum(const Matrix<CycloNum>&)> laplace = [&](const Matrix<CycloNum>& a) -> CycloNum {
        const std::size_t n = a.rows();
        if (n == 0) return CycloNum(1);
        CycloNum s(0);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) cols.push_back(c);
            const CycloNum term = a(0, j) * laplace(a.sub(rows, cols));
            s = (j % 2 == 0) ? s + term : s - term;
        }
        return s;
    };
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng() % 5;
        Matrix<CycloNum> a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = (rng() % 4 == 0) ? CycloNum(0)
                                           : CycloNum(static_cast<long long>(rng() % 7) - 3) *
                                                 CycloNum::zeta(12, static_cast<long long>(rng() % 12));
        EXPECT_EQ(determinant(a), laplace(a));
    }
}

TEST(NumericDeterminant, Examples) {
    EXPECT_NEAR(std::abs(numeric_determinant(Matrix<std::complex<double>>(1, 1, 2.0)) - 2.0), 0.0, 1e-15);
    Matrix<CycloNum> m(2, 2);
    m(0, 0) = CycloNum(1);
    m(0, 1) = -CycloNum::zeta(4);
    m(1, 0) = CycloNum::zeta(4);
    m(1, 1) = CycloNum(1);
    EXPECT_NEAR(std::abs(numeric_determinant(m)), 0.0, 1e-12);
}

TEST(NumericDeterminant, AgreesWithExactOnRandom6x6) {
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 30; ++t) {
        Matrix<CycloNum> a(6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                a(i, j) = CycloNum(static_cast<long long>(rng() % 9) - 4) * CycloNum::zeta(5, static_cast<long long>(rng() % 5)) +
                          CycloNum(static_cast<long long>(rng() % 3));
        const auto exact = determinant(a).to_complex();
        const auto approx = numeric_determinant(a);
        EXPECT_LT(std::abs(exact - approx), 1e-6 * std::max(1.0, std::abs(exact)));
    }
}

TEST(LaplacianMinor, Examples) {
    const OrientedGraph tri = OrientedGraph::from_edges({{1, 2}, {2, 3}, {3, 1}});
    EXPECT_TRUE(laplacian_minor(tri, RootParam(1, 0), tri.all_vertices()).is_zero());
    EXPECT_EQ(laplacian_minor(tri, RootParam(5, 1), {}), CycloNum(1));
    EXPECT_EQ(laplacian_minor(tri, RootParam(2, 1), tri.all_vertices()), from_strings(2, oracle::kTriangleMinus1));
    EXPECT_EQ(laplacian_minor(tri, RootParam(2, 1), tri.all_vertices()), CycloNum(4));
    EXPECT_EQ(laplacian_minor(tri, RootParam(4, 1), tri.all_vertices()), from_strings(4, oracle::kTriangleI));
    EXPECT_EQ(error_code([&] { laplacian_minor(tri, RootParam(2, 1), {7}); }), ErrorCode::UnknownVertex);
    EXPECT_EQ(error_code([&] { laplacian_minor_ids(tri, RootParam(2, 1), {7}); }), ErrorCode::UnknownVertex);
}

// Every principal minor of the six-arc example graph against sympy values.
TEST(LaplacianMinor, MatchesSymbolicOracle) {
    const OrientedGraph g = house_graph();
    std::size_t checked = 0;
    for (const auto& m : oracle::house_minors()) {
        const CycloNum expect = from_strings(m.order, m.coeffs);
        const RootParam p(m.order, m.power);
        EXPECT_EQ(laplacian_minor_ids(g, p, m.vset), expect) << p.to_string() << " |vset|=" << m.vset.size();
        ++checked;
    }
    EXPECT_EQ(checked, 6u * 32u);
}

TEST(Laplacian, EqualsIncidenceTimesConjugateTranspose) {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const OrientedGraph g = random_graph(rng, n, static_cast<int>(rng() % (n * (n - 1) / 2 + 1)));
        const Substructure sub = random_substructure(rng, g);
        const RootParam p = kParams[rng() % kParams.size()];
        const IncidenceMatrix s = build_incidence(sub, p);
        const HermitianMatrix l = build_laplacian(sub, p);
        EXPECT_EQ(l.entries, s.entries * conjugate_transpose(s.entries));
        EXPECT_TRUE(is_hermitian(l.entries));
        const CycloNum d = determinant(l);
        EXPECT_EQ(d.conj(), d);
        for (std::size_t i = 0; i < l.entries.rows(); ++i) {
            EXPECT_TRUE(l.entries(i, i).is_rational());
            EXPECT_GE(l.entries(i, i).to_rational().sign(), 0);
        }
    }
}

TEST(Laplacian, WholeGraphMatchesSubstructureDefinition) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 30; ++t) {
        const OrientedGraph g = random_graph(rng, 6, 9);
        const HermitianMatrix l = laplacian(g, RootParam(5, 1));
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            EXPECT_EQ(l.entries(v, v), CycloNum(static_cast<long long>(g.degree(v))));
    }
}

TEST(Laplacian, PendantInvariance) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t) {
        const OrientedGraph g = random_graph(rng, 3 + static_cast<int>(rng() % 6), 2 + static_cast<int>(rng() % 10));
        const Substructure sub = random_substructure(rng, g);
        const RootParam p = kParams[rng() % kParams.size()];
        EXPECT_EQ(determinant(build_laplacian(sub, p)), determinant(build_laplacian(pendant_reduce(sub), p)));
    }
}

TEST(Laplacian, BlockFactorization) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 300; ++t) {
        const OrientedGraph g = random_graph(rng, 3 + static_cast<int>(rng() % 6), 2 + static_cast<int>(rng() % 10));
        const Substructure sub = random_substructure(rng, g);
        const RootParam p = kParams[rng() % kParams.size()];
        CycloNum product(1);
        for (const auto& c : components(sub)) {
            if (c.degenerate) continue;
            product *= determinant(build_laplacian(Substructure(g, c.vertices, c.edges), p));
        }
        EXPECT_EQ(determinant(build_laplacian(sub, p)), product);
    }
}

TEST(Laplacian, TreeDeterminants) {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 200; ++t) {
        // Random tree on 1..n; dropping a leaf vertex (keeping its edge) gives a rootless tree.
        const int n = 2 + static_cast<int>(rng() % 7);
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (int v = 2; v <= n; ++v) {
            VertexId u = 1 + static_cast<VertexId>(rng() % static_cast<unsigned>(v - 1));
            edges.push_back((rng() & 1) ? std::pair<VertexId, VertexId>{u, v} : std::pair<VertexId, VertexId>{v, u});
        }
        const OrientedGraph g = OrientedGraph::from_edges(edges);
        const RootParam p = kParams[rng() % kParams.size()];
        EXPECT_TRUE(determinant(laplacian(g, p)).is_zero());
        std::vector<VertexId> keep;
        for (int v = 1; v < n; ++v) keep.push_back(v);  // n is always a leaf
        const Substructure rootless = Substructure::from_ids(g, keep, edges);
        EXPECT_EQ(determinant(build_laplacian(rootless, p)), CycloNum(1));
    }
}

// For a bare cycle, det = 2 - w - conj(w) where w multiplies the adjacency
// entries a_{uv} = ω (u→v) or conj(ω) (v→u) along the traversal.
TEST(Laplacian, CycleFormula) {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 200; ++t) {
        const int k = 3 + static_cast<int>(rng() % 7);
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (int i = 1; i <= k; ++i) {
            const VertexId u = i, v = i % k + 1;
            edges.push_back((rng() & 1) ? std::pair<VertexId, VertexId>{u, v} : std::pair<VertexId, VertexId>{v, u});
        }
        const OrientedGraph g = OrientedGraph::from_edges(edges);
        const RootParam p = kParams[rng() % kParams.size()];
        const CycloNum om = root_of_unity(p);
        CycloNum w(1);
        for (int i = 1; i <= k; ++i) {
            const VertexId u = i, v = i % k + 1;
            w *= g.find_edge(u, v) ? om : om.conj();
        }
        const CycloNum det = determinant(laplacian(g, p));
        EXPECT_EQ(det, CycloNum(2) - w - w.conj());
        const CycleInfo info = find_cycle(g, components(Substructure::whole(g)).at(0));
        EXPECT_EQ(det, cycle_contribution(p, info.k, info.g));
    }
}

TEST(Laplacian, MixedFourCycleIsTheK4G1Contribution) {
    const OrientedGraph g = OrientedGraph::from_edges({{1, 2}, {2, 3}, {4, 3}, {4, 1}});
    const CycloNum det = determinant(laplacian(g, RootParam(5, 1)));
    EXPECT_EQ(det, from_strings(5, oracle::kMixedFourCycleW5));
    EXPECT_EQ(det, cycle_contribution(RootParam(5, 1), 4, 1));
    EXPECT_EQ(det, alpha());
}
