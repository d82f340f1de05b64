#ifndef CYCLOGRAPH_ENUMERATION_HPP
#define CYCLOGRAPH_ENUMERATION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "decomposition.hpp"
#include "graph.hpp"
#include "hermitian.hpp"
#include "matrix.hpp"

namespace cyclograph {

/// Census cross-checks run only up to this many edges.
inline constexpr std::size_t kVerifyEdgeLimit = 10;

enum class PairClass { Vanishing, Alpha, Beta };

inline std::string to_string(PairClass c) {
    switch (c) {
        case PairClass::Vanishing: return "vanishing";
        case PairClass::Alpha: return "alpha";
        case PairClass::Beta: return "beta";
    }
    return "unknown";
}

/// Contribution class of a (k, g) cycle at ω = ζ_5.
inline PairClass classify_pair(int k, int g) {
    if (k < 1 || g < 0 || g > k / 2) throw Error(ErrorCode::InvalidArgument, "need 0 <= g <= k/2");
    switch ((k - 2 * g) % 5) {
        case 0: return PairClass::Vanishing;
        case 2:
        case 3: return PairClass::Alpha;
        default: return PairClass::Beta;
    }
}

struct UnicyclicCounts {
    long long n_alpha = 0;
    long long n_beta = 0;
    long long n_star = 0;
};

namespace detail {

inline void require_all_regular(const Substructure& sub) {
    if (!is_all_regular(sub)) throw Error(ErrorCode::ConditionViolated, "substructure is not all-regular");
}

// A count recovered from exact arithmetic; anything but a small
// non-negative integer means the method itself is broken.
inline long long as_count(const CycloNum& x, const char* what) {
    if (!x.is_rational()) throw Error(ErrorCode::NonIntegerResult, std::string(what) + " is not rational: " + x.to_string());
    const Rational r = x.to_rational();
    if (!r.is_integer() || r.sign() < 0 || !r.numerator().fits_slong_p())
        throw Error(ErrorCode::NonIntegerResult, std::string(what) + " is not a non-negative integer: " + r.to_string());
    return r.numerator().get_si();
}

}  // namespace detail

/*
 * p = 5 recovery. With d1 = det at ζ_5 and d2 = det at ζ_5^2 the two are
 * Galois conjugates and d1·d2 = 5^A, d1/d2 = φ^{2B} where A = n_α + n_β and
 * B = n_α - n_β. B is found by exact division by φ² at most A times.
 */
inline UnicyclicCounts count_alpha_beta(const Substructure& sub) {
    detail::require_all_regular(sub);
    const CycloNum d1 = structural_determinant(sub, RootParam(5, 1));
    const CycloNum d2 = structural_determinant(sub, RootParam(5, 2));
    const CycloNum product = d1 * d2;
    if (product.is_zero()) throw Error(ErrorCode::VanishingComponent, "a unicyclic component vanishes at w5");
    const long long a = log_power_of(product, 5);

    const CycloNum phi2 = golden_ratio() * golden_ratio();
    const CycloNum ratio = d1 / d2;
    std::optional<long long> b;
    CycloNum up = ratio, down = ratio;
    for (long long i = 0; i <= a && !b; ++i) {
        if (up.is_one()) b = i;
        else if (down.is_one()) b = -i;
        up = up / phi2;
        down = down * phi2;
    }
    if (!b || (a + *b) % 2 != 0)
        throw Error(ErrorCode::NonIntegerSolution, "no integer (n_alpha, n_beta) matches the w5 determinants");

    UnicyclicCounts c{(a + *b) / 2, (a - *b) / 2, a};
    if (!(pow(alpha(), static_cast<unsigned>(c.n_alpha)) * pow(beta(), static_cast<unsigned>(c.n_beta)) == d1))
        throw Error(ErrorCode::NonIntegerSolution, "recovered counts do not reproduce the w5 determinant");
    return c;
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// n_* = log_p of the product of determinants over the conjugates ζ_p^q, q = 1..(p-1)/2.
inline UnicyclicCounts galois_count(const Substructure& sub, long long p) {
    if (p < 3 || !is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime");
    if (p > static_cast<long long>(kMaxOrder)) throw Error(ErrorCode::InvalidArgument, "prime exceeds the supported order");
    detail::require_all_regular(sub);
    CycloNum product(1);
    for (long long q = 1; q <= (p - 1) / 2; ++q) {
        product *= structural_determinant(sub, RootParam(static_cast<unsigned>(p), static_cast<unsigned>(q)));
        if (product.is_zero())
            throw Error(ErrorCode::VanishingComponent, "a unicyclic component vanishes at w" + std::to_string(p));
    }
    UnicyclicCounts c;
    c.n_star = log_power_of(product, p);
    return c;
}

struct TriangleCounts {
    long long triangles = 0;
    long long rootless_trees = 0;
    CycloNum minor_w2;
    CycloNum minor_w4;
    bool verified = false;
};

/*
 * On three vertices the all-regular substructures are rootless forests
 * (determinant 1) and triangles (4 at ω = -1, 2 at ω = i), so
 *   m(-1) = F + 4T,  m(i) = F + 2T.
 */
inline TriangleCounts triangle_count(const OrientedGraph& g, const std::vector<std::size_t>& vset, bool verify = false) {
    if (vset.size() != 3) throw Error(ErrorCode::SizeMismatch, "triangle counting needs exactly 3 vertices");
    TriangleCounts r;
    r.minor_w2 = laplacian_minor(g, RootParam(2, 1), vset);
    r.minor_w4 = laplacian_minor(g, RootParam(4, 1), vset);
    r.triangles = detail::as_count((r.minor_w2 - r.minor_w4) / CycloNum(2), "triangle count");
    r.rootless_trees = detail::as_count(CycloNum(2) * r.minor_w4 - r.minor_w2, "rootless tree count");
    if (verify && g.edge_count() <= kVerifyEdgeLimit) {
        long long t = 0, f = 0;
        for (const auto& e : census(g, vset)) {
            if (e.key.cls() == CensusClass::Forest) f += static_cast<long long>(e.count);
            else t += static_cast<long long>(e.count);
        }
        if (t != r.triangles || f != r.rootless_trees)
            throw Error(ErrorCode::VerificationFailed, "triangle counts disagree with the census");
        r.verified = true;
    }
    return r;
}

/// Rows ω_2..ω_6, columns C(4,4,0), C(4,4,1), TU(3,3,0), TU(3,3,1), F(4).
struct FourVertexSystem {
    Matrix<CycloNum> A;
    Matrix<CycloNum> A_inv;
};

inline const std::array<RootParam, 5>& four_vertex_params() {
    static const std::array<RootParam, 5> params{RootParam(2, 1), RootParam(3, 1), RootParam(4, 1), RootParam(5, 1),
                                                 RootParam(6, 1)};
    return params;
}

inline FourVertexSystem four_vertex_system() {
    static const std::array<std::pair<int, int>, 4> cycles{{{4, 0}, {4, 1}, {3, 0}, {3, 1}}};
    Matrix<CycloNum> a(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 4; ++j)
            a(i, j) = cycle_contribution(four_vertex_params()[i], cycles[j].first, cycles[j].second);
        a(i, 4) = CycloNum(1);
    }
    return {a, inverse(a)};
}

struct FourVertexCounts {
    long long c440 = 0;
    long long c441 = 0;
    long long tu330 = 0;
    long long tu331 = 0;
    long long f4 = 0;
    std::vector<CycloNum> determinants;  // minors at ω_2..ω_6
    bool verified = false;

    friend bool operator==(const FourVertexCounts& a, const FourVertexCounts& b) {
        return a.c440 == b.c440 && a.c441 == b.c441 && a.tu330 == b.tu330 && a.tu331 == b.tu331 && a.f4 == b.f4;
    }
};

/// Census tallies grouped as in the five-parameter system.
inline FourVertexCounts four_vertex_census(const std::vector<CensusEntry>& entries) {
    FourVertexCounts c;
    for (const auto& e : entries) {
        const auto n = static_cast<long long>(e.count);
        const auto& key = e.key;
        if (key.cls() == CensusClass::Forest) {
            c.f4 += n;
        } else if (key.cycles.size() == 1) {
            const CycleSignature& s = key.cycles.front();
            if (s.k == 4 && s.g == 0) c.c440 += n;
            else if (s.k == 4 && s.g == 1) c.c441 += n;
            else if (s.k == 3 && s.g == 0) c.tu330 += n;
            else if (s.k == 3 && s.g == 1) c.tu331 += n;
            // C(4,4,2) vanishes at every parameter and is invisible to the system.
        }
    }
    return c;
}

inline FourVertexCounts four_vertex_count(const OrientedGraph& g, const std::vector<std::size_t>& vset, bool verify = false) {
    if (vset.size() != 4) throw Error(ErrorCode::SizeMismatch, "four-vertex counting needs exactly 4 vertices");
    static const FourVertexSystem system = four_vertex_system();
    FourVertexCounts r;
    Matrix<CycloNum> d(5, 1);
    for (std::size_t i = 0; i < 5; ++i) {
        d(i, 0) = laplacian_minor(g, four_vertex_params()[i], vset);
        r.determinants.push_back(d(i, 0));
    }
    const Matrix<CycloNum> x = system.A_inv * d;
    r.c440 = detail::as_count(x(0, 0), "#C(4,4,0)");
    r.c441 = detail::as_count(x(1, 0), "#C(4,4,1)");
    r.tu330 = detail::as_count(x(2, 0), "#TU(3,3,0)");
    r.tu331 = detail::as_count(x(3, 0), "#TU(3,3,1)");
    r.f4 = detail::as_count(x(4, 0), "#F(4)");
    if (verify && g.edge_count() <= kVerifyEdgeLimit) {
        if (!(four_vertex_census(census(g, vset)) == r))
            throw Error(ErrorCode::VerificationFailed, "four-vertex counts disagree with the census");
        r.verified = true;
    }
    return r;
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_ENUMERATION_HPP
