#ifndef CYCLOGRAPH_DECOMPOSITION_HPP
#define CYCLOGRAPH_DECOMPOSITION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cyclotomic.hpp"
#include "graph.hpp"
#include "hermitian.hpp"

namespace cyclograph {

/// Edge-subset enumerations larger than this need an explicit force.
inline constexpr std::uint64_t kMaxSubsets = 10'000'000;

struct ExpandOptions {
    bool force = false;
    unsigned threads = 1;
};

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    UInt128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

inline void check_guardrail(std::size_t edges, std::size_t choose, bool force) {
    const std::uint64_t count = binomial(edges, choose);
    if (!force && count > kMaxSubsets)
        throw Error(ErrorCode::GuardrailExceeded, std::to_string(count) + " edge subsets exceed the limit of " +
                                                      std::to_string(kMaxSubsets) + " (use --force)");
}

/// Advances a sorted k-subset of {0..n-1} lexicographically; false after the last.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

/// The k-subset of lexicographic rank `rank` (0-based).
inline std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
    std::vector<std::size_t> c;
    c.reserve(k);
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i) {
        while (true) {
            const std::uint64_t block = binomial(n - x - 1, k - i - 1);
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        c.push_back(x++);
    }
    return c;
}

/// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    do {
        f(static_cast<const std::vector<std::size_t>&>(c));
    } while (next_combination(c, n));
}

namespace detail {

// Splits the k-subsets of {0..n-1} into contiguous rank ranges, folds each
// range with `term` and sums the partial results in range order.
template <class Term>
CycloNum parallel_subset_sum(std::size_t n, std::size_t k, unsigned threads, Term term) {
    const std::uint64_t total = binomial(n, k);
    if (total == 0) return CycloNum(0);
    const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total));
    std::vector<CycloNum> partial(chunks);
    auto work = [&](std::uint64_t c) {
        const std::uint64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
        if (lo == hi) return;
        std::vector<std::size_t> comb = unrank_combination(n, k, lo);
        CycloNum acc(0);
        for (std::uint64_t r = lo; r < hi; ++r) {
            acc += term(comb);
            next_combination(comb, n);
        }
        partial[c] = std::move(acc);
    };
    if (chunks == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t c = 0; c < chunks; ++c) pool.emplace_back(work, c);
        for (auto& t : pool) t.join();
    }
    CycloNum sum(0);
    for (auto& p : partial) sum += p;
    return sum;
}

inline std::vector<std::size_t> pick(const std::vector<std::size_t>& from, const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(from[i]);
    return out;
}

}  // namespace detail

/*
 * Brute-force Cauchy-Binet expansion of det L_ω[V']: the sum over every
 * E' ⊆ E with |E'| = |V'| of det L_ω(V', E'), each computed by elimination.
 */
inline CycloNum cauchy_binet_expand(const OrientedGraph& g, const RootParam& param, const std::vector<std::size_t>& vset,
                                    const ExpandOptions& opts = {}) {
    const std::size_t m = g.edge_count(), k = vset.size();
    if (k > m) return k == 0 ? CycloNum(1) : CycloNum(0);
    check_guardrail(m, k, opts.force);
    const std::vector<std::size_t> all = g.all_edges();
    return detail::parallel_subset_sum(m, k, opts.threads, [&](const std::vector<std::size_t>& comb) {
        return determinant(build_laplacian(Substructure(g, vset, detail::pick(all, comb)), param));
    });
}

/*
 * det L_ω(G') from the component structure alone: rootless trees give 1,
 * normal trees 0, a unicyclic component the contribution of its cycle.
 * Degenerate edges never touch L_ω(G') and are skipped; a component with
 * more edges than vertices (outside the all-regular setting) falls back to
 * elimination on its own block.
 */
inline CycloNum structural_determinant(const Substructure& sub, const RootParam& param) {
    const OrientedGraph& g = *sub.graph;
    CycloNum det(1);
    for (const auto& comp : components(sub)) {
        const ComponentClass cls = classify_component(g, comp);
        switch (cls.kind) {
            case ComponentClass::Kind::DegenerateEdge:
            case ComponentClass::Kind::RootlessTree:
                break;
            case ComponentClass::Kind::NormalTree:
                return CycloNum(0);
            case ComponentClass::Kind::Unicyclic:
                if (cycle_vanishes(param, cls.k, cls.g)) return CycloNum(0);
                det *= cycle_contribution(param, cls.k, cls.g);
                break;
            case ComponentClass::Kind::Irregular:
                det *= determinant(build_laplacian(Substructure(g, comp.vertices, comp.edges), param));
                if (det.is_zero()) return det;
                break;
        }
    }
    return det;
}

/// A unicyclic component: order n, cycle length k, minority-direction count g.
struct CycleSignature {
    int n = 0;
    int k = 0;
    int g = 0;
    friend auto operator<=>(const CycleSignature&, const CycleSignature&) = default;
};

enum class CensusClass { Forest, Unicyclic, TU, Mixed };

inline std::string to_string(CensusClass c) {
    switch (c) {
        case CensusClass::Forest: return "forest";
        case CensusClass::Unicyclic: return "unicyclic";
        case CensusClass::TU: return "tu";
        case CensusClass::Mixed: return "mixed";
    }
    return "unknown";
}

/*
 * Class of an all-regular substructure: the multiset of its unicyclic
 * components plus the total order of its rootless-tree part.
 *   Forest     no unicyclic component          (F(n))
 *   Unicyclic  one unicyclic, no trees         (C(n,k,g))
 *   TU         one unicyclic plus trees        (C(n,k,g) ⊔ F(forest_order))
 *   Mixed      two or more unicyclic components
 */
struct CensusKey {
    std::vector<CycleSignature> cycles;  // sorted
    std::size_t forest_order = 0;

    CensusClass cls() const noexcept {
        if (cycles.empty()) return CensusClass::Forest;
        if (cycles.size() == 1) return forest_order == 0 ? CensusClass::Unicyclic : CensusClass::TU;
        return CensusClass::Mixed;
    }
    std::size_t order() const noexcept {
        std::size_t n = forest_order;
        for (const auto& c : cycles) n += static_cast<std::size_t>(c.n);
        return n;
    }
    friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
};

struct CensusEntry {
    CensusKey key;
    std::uint64_t count = 0;
};

/// Key of an all-regular substructure; nullopt otherwise.
inline std::optional<CensusKey> census_key(const Substructure& sub) {
    CensusKey key;
    for (const auto& comp : components(sub)) {
        const ComponentClass cls = classify_component(*sub.graph, comp);
        if (cls.kind == ComponentClass::Kind::RootlessTree)
            key.forest_order += comp.vertices.size();
        else if (cls.kind == ComponentClass::Kind::Unicyclic)
            key.cycles.push_back({static_cast<int>(comp.vertices.size()), cls.k, cls.g});
        else
            return std::nullopt;
    }
    std::sort(key.cycles.begin(), key.cycles.end());
    return key;
}

/// Determinant shared by every substructure of this class.
inline CycloNum contribution(const CensusKey& key, const RootParam& param) {
    CycloNum c(1);
    for (const auto& s : key.cycles) c *= cycle_contribution(param, s.k, s.g);
    return c;
}

/// Tally of all-regular (V', E') over E' ⊆ E with |E'| = |V'|, sorted by key.
inline std::vector<CensusEntry> census(const OrientedGraph& g, const std::vector<std::size_t>& vset,
                                       const ExpandOptions& opts = {}) {
    const std::size_t m = g.edge_count(), k = vset.size();
    std::map<CensusKey, std::uint64_t> tally;
    if (k <= m) {
        check_guardrail(m, k, opts.force);
        const std::vector<std::size_t> all = g.all_edges();
        for_each_combination(m, k, [&](const std::vector<std::size_t>& comb) {
            if (auto key = census_key(Substructure(g, vset, detail::pick(all, comb)))) ++tally[*key];
        });
    }
    std::vector<CensusEntry> out;
    for (auto& [key, count] : tally) out.push_back({key, count});
    return out;
}

/// Σ count · contribution over a census.
inline CycloNum census_sum(const std::vector<CensusEntry>& entries, const RootParam& param) {
    CycloNum s(0);
    for (const auto& e : entries) s += CycloNum(static_cast<long long>(e.count)) * contribution(e.key, param);
    return s;
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_DECOMPOSITION_HPP
