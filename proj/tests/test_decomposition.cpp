#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cyclograph/decomposition.hpp"
#include "test_support.hpp"

using namespace cyclograph;
using namespace testing_support;

namespace {

const std::vector<RootParam> kParams{RootParam(1, 0), RootParam(2, 1), RootParam(3, 1), RootParam(4, 1),
                                     RootParam(5, 1), RootParam(5, 2), RootParam(6, 1), RootParam(7, 1),
                                     RootParam(8, 3)};

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n, std::size_t max_size) {
    std::vector<std::vector<std::size_t>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_size) continue;
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST(Combinations, BinomialAndSaturation) {
    EXPECT_EQ(binomial(10, 3), 120u);
    EXPECT_EQ(binomial(3, 5), 0u);
    EXPECT_EQ(binomial(0, 0), 1u);
    EXPECT_EQ(binomial(60, 30), 118264581564861424ull);
    EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}

TEST(Combinations, LexicographicOrderAndUnranking) {
    std::vector<std::vector<std::size_t>> seen;
    for_each_combination(6, 3, [&](const std::vector<std::size_t>& c) { seen.push_back(c); });
    ASSERT_EQ(seen.size(), 20u);
    EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    EXPECT_EQ(std::set<std::vector<std::size_t>>(seen.begin(), seen.end()).size(), 20u);
    for (std::size_t r = 0; r < seen.size(); ++r) EXPECT_EQ(unrank_combination(6, 3, r), seen[r]);
    std::size_t empty_calls = 0;
    for_each_combination(4, 0, [&](const std::vector<std::size_t>& c) {
        EXPECT_TRUE(c.empty());
        ++empty_calls;
    });
    EXPECT_EQ(empty_calls, 1u);
}

TEST(CauchyBinet, Conventions) {
    const OrientedGraph g = OrientedGraph::from_edges({{1, 2}, {2, 3}});
    EXPECT_EQ(cauchy_binet_expand(g, RootParam(5, 1), {}), CycloNum(1));
    EXPECT_TRUE(cauchy_binet_expand(g, RootParam(5, 1), g.all_vertices()).is_zero());
    const OrientedGraph lonely = OrientedGraph::from_edges({}, {1, 2});
    EXPECT_EQ(cauchy_binet_expand(lonely, RootParam(5, 1), {}), CycloNum(1));
    EXPECT_TRUE(cauchy_binet_expand(lonely, RootParam(5, 1), {0}).is_zero());
}

TEST(CauchyBinet, EqualsMinorOnRandomGraphEveryVertexSet) {
    std::mt19937_64 rng(6);
    const OrientedGraph g = random_graph(rng, 6, 9);
    for (const auto& p : kParams)
        for (const auto& vset : all_subsets(6, 6))
            EXPECT_EQ(cauchy_binet_expand(g, p, vset), laplacian_minor(g, p, vset)) << p.to_string();
}

TEST(CauchyBinet, ParallelEqualsSerial) {
    std::mt19937_64 rng(61);
    const OrientedGraph g = random_graph(rng, 7, 12);
    const auto vset = g.all_vertices();
    const CycloNum serial = cauchy_binet_expand(g, RootParam(7, 2), vset, {false, 1});
    for (unsigned threads : {2u, 3u, 8u, 1000u}) EXPECT_EQ(cauchy_binet_expand(g, RootParam(7, 2), vset, {false, threads}), serial);
    EXPECT_EQ(serial, laplacian_minor(g, RootParam(7, 2), vset));
}

TEST(CauchyBinet, Guardrail) {
    std::mt19937_64 rng(62);
    const OrientedGraph big = random_graph(rng, 16, 40);  // C(40, 16) > 10^7
    std::vector<std::size_t> vset;
    for (std::size_t v = 0; v < 16; ++v) vset.push_back(v);
    EXPECT_EQ(error_code([&] { cauchy_binet_expand(big, RootParam(3, 1), vset); }), ErrorCode::GuardrailExceeded);
    EXPECT_EQ(error_code([&] { census(big, vset); }), ErrorCode::GuardrailExceeded);
    EXPECT_NO_THROW(check_guardrail(40, 16, true));
}

TEST(StructuralDeterminant, Examples) {
    const OrientedGraph g = OrientedGraph::from_edges({{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {6, 7}});
    const RootParam w5(5, 1);
    // Rootless forest: {1,2} via 1->2, 2->3 and {4} via 4->5.
    EXPECT_EQ(structural_determinant(Substructure::from_ids(g, {1, 2, 4}, {{1, 2}, {2, 3}, {4, 5}}), w5), CycloNum(1));
    // Bare directed triangle.
    EXPECT_EQ(structural_determinant(Substructure::from_ids(g, {1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}}), w5), alpha());
    // Normal tree component.
    EXPECT_TRUE(structural_determinant(Substructure::from_ids(g, {4, 5}, {{4, 5}}), w5).is_zero());
    // Degenerate edge with an otherwise regular part.
    EXPECT_TRUE(structural_determinant(Substructure::from_ids(g, {4}, {{4, 5}, {6, 7}}), w5) == CycloNum(1));
    EXPECT_TRUE(determinant(build_laplacian(Substructure::from_ids(g, {4}, {{4, 5}, {6, 7}}), w5)) == CycloNum(1));
}

TEST(StructuralDeterminant, EqualsEliminationOnEverySubstructure) {
    std::mt19937_64 rng(63);
    for (int t = 0; t < 20; ++t) {
        const OrientedGraph g = random_graph(rng, 5, 7);
        const RootParam p = kParams[rng() % kParams.size()];
        const auto es = all_subsets(g.edge_count(), g.edge_count());
        for (const auto& vset : all_subsets(5, 5))
            for (std::size_t i = 0; i < es.size(); i += 3) {
                const Substructure sub(g, vset, es[i]);
                const CycloNum structural = structural_determinant(sub, p);
                EXPECT_EQ(structural, determinant(build_laplacian(sub, p)));
                if (sub.vertices.size() == sub.edges.size() && !is_all_regular(sub)) {
                    EXPECT_TRUE(structural.is_zero());
                }
            }
    }
}

TEST(Census, BareFourCycle) {
    const OrientedGraph g = OrientedGraph::from_edges({{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    const auto entries = census(g, g.all_vertices());
    ASSERT_EQ(entries.size(), 1u);
    EXPECT_EQ(entries[0].count, 1u);
    EXPECT_EQ(entries[0].key.cls(), CensusClass::Unicyclic);
    EXPECT_EQ(entries[0].key.cycles, (std::vector<CycleSignature>{{4, 4, 0}}));
}

TEST(Census, NoEdges) {
    const OrientedGraph g = OrientedGraph::from_edges({}, {1, 2});
    EXPECT_TRUE(census(g, {0}).empty());
    const auto empty = census(g, {});
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_EQ(empty[0].key.cls(), CensusClass::Forest);
    EXPECT_EQ(empty[0].key.order(), 0u);
}

TEST(Census, ExampleGraphVertexPairIncludesRootlessTree) {
    const OrientedGraph g = house_graph();
    const auto vset = g.indices_of({1, 3});
    const auto entries = census(g, vset);
    ASSERT_EQ(entries.size(), 1u);
    EXPECT_EQ(entries[0].key.cls(), CensusClass::Forest);
    EXPECT_EQ(entries[0].key.forest_order, 2u);
    // The rootless tree {1,3} via 1->3, 3->4 is one of the tallied substructures.
    EXPECT_TRUE(census_key(Substructure::from_ids(g, {1, 3}, {{1, 3}, {3, 4}})).has_value());
    // Brute force: every 2-edge subset that is all-regular on {1,3}.
    std::uint64_t expect = 0;
    for_each_combination(g.edge_count(), 2, [&](const std::vector<std::size_t>& c) {
        if (is_all_regular(Substructure(g, vset, c))) ++expect;
    });
    EXPECT_EQ(entries[0].count, expect);
    EXPECT_EQ(census_sum(entries, RootParam(5, 1)), laplacian_minor(g, RootParam(5, 1), vset));
}

TEST(Census, ClassKeys) {
    const OrientedGraph g = OrientedGraph::from_edges({{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}, {7, 1}, {8, 9}});
    const auto two = census_key(
        Substructure::from_ids(g, {1, 2, 3, 4, 5, 6}, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}}));
    ASSERT_TRUE(two);
    EXPECT_EQ(two->cls(), CensusClass::Mixed);
    const auto tu = census_key(Substructure::from_ids(g, {1, 2, 3, 8}, {{1, 2}, {2, 3}, {3, 1}, {8, 9}}));
    ASSERT_TRUE(tu);
    EXPECT_EQ(tu->cls(), CensusClass::TU);
    EXPECT_EQ(tu->forest_order, 1u);
    const auto uni = census_key(Substructure::from_ids(g, {1, 2, 3, 7}, {{1, 2}, {2, 3}, {3, 1}, {7, 1}}));
    ASSERT_TRUE(uni);
    EXPECT_EQ(uni->cls(), CensusClass::Unicyclic);
    EXPECT_EQ(uni->cycles.front(), (CycleSignature{4, 3, 0}));
    EXPECT_FALSE(census_key(Substructure::from_ids(g, {1, 2}, {{1, 2}})));
}

// Three-way agreement on every vertex subset of many small random graphs.
TEST(Decomposition, ThreeWayOracle) {
    std::mt19937_64 rng(64);
    for (int t = 0; t < 40; ++t) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const OrientedGraph g = random_graph(rng, n, std::min(10, n * (n - 1) / 2));
        const RootParam p = kParams[static_cast<std::size_t>(t) % kParams.size()];
        for (const auto& vset : all_subsets(static_cast<std::size_t>(n), 4)) {
            const CycloNum minor = laplacian_minor(g, p, vset);
            const auto entries = census(g, vset);
            CycloNum by_structure(0);
            std::uint64_t regular = 0;
            for_each_combination(g.edge_count(), vset.size(), [&](const std::vector<std::size_t>& c) {
                const Substructure sub(g, vset, c);
                if (is_all_regular(sub)) {
                    by_structure += structural_determinant(sub, p);
                    ++regular;
                }
            });
            std::uint64_t tallied = 0;
            for (const auto& e : entries) tallied += e.count;
            EXPECT_EQ(tallied, regular);
            EXPECT_EQ(cauchy_binet_expand(g, p, vset), minor);
            EXPECT_EQ(by_structure, minor);
            EXPECT_EQ(census_sum(entries, p), minor);
        }
    }
}
