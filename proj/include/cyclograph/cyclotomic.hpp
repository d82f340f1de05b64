#ifndef CYCLOGRAPH_CYCLOTOMIC_HPP
#define CYCLOGRAPH_CYCLOTOMIC_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace cyclograph {

/// Tolerance used when comparing the complex embedding of exact values.
inline constexpr double kFloatTolerance = 1e-9;

/// Largest cyclotomic order the field cache will build.
inline constexpr unsigned kMaxOrder = 1024;

/*
 * The root of unity ω = exp(2πi·power/order).
 *
 * Construction normalizes (order, power) so that power lies in [0, order) and
 * gcd(power, order) == 1; any pair describing ω = 1 collapses to (1, 0).
 * Thus (4, 2) becomes (2, 1) and a rational parameter a/b is represented as
 * (a, b).
 */
struct RootParam {
    unsigned order = 1;
    unsigned power = 0;

    RootParam() = default;
    RootParam(long long order_, long long power_) {
        if (order_ < 1) throw Error(ErrorCode::InvalidArgument, "root order must be positive");
        if (order_ > static_cast<long long>(kMaxOrder))
            throw Error(ErrorCode::InvalidArgument, "root order exceeds " + std::to_string(kMaxOrder));
        long long q = ((power_ % order_) + order_) % order_;
        if (q == 0) return;
        const long long g = std::gcd(q, order_);
        order = static_cast<unsigned>(order_ / g);
        power = static_cast<unsigned>(q / g);
    }

    bool is_identity() const noexcept { return order == 1; }

    /// Shorthand rendering: "1", "-1", "i", "w5", "w5^2".
    std::string to_string() const {
        if (order == 1) return "1";
        if (order == 2) return "-1";
        if (order == 4 && power == 1) return "i";
        std::string s = "w" + std::to_string(order);
        if (power != 1) s += "^" + std::to_string(power);
        return s;
    }

    friend auto operator<=>(const RootParam&, const RootParam&) = default;
};

namespace detail {

using IntPoly = std::vector<long long>;  // coefficients, lowest degree first

inline IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
    // den is monic
    const std::size_t dn = den.size() - 1;
    if (num.size() <= dn) return {0};
    IntPoly quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const long long c = num[i];
        quot[i - dn] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return quot;
}

inline IntPoly cyclotomic_polynomial(unsigned n, std::map<unsigned, IntPoly>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d, memo));
    memo.emplace(n, p);
    return p;
}

/// Φ_n, computed by dividing x^n - 1 by Φ_d for every proper divisor d.
inline IntPoly cyclotomic_polynomial(unsigned n) {
    std::map<unsigned, IntPoly> memo;
    return cyclotomic_polynomial(n, memo);
}

struct CyclotomicField {
    unsigned order = 1;
    std::size_t degree = 1;
    IntPoly modulus;
    // residues[j] = x^j mod Φ_order for j in [0, order)
    std::vector<IntPoly> residues;
    std::vector<unsigned> units;  // q in [1, order) with gcd(q, order) == 1
};

inline std::unique_ptr<CyclotomicField> build_field(unsigned order) {
    auto f = std::make_unique<CyclotomicField>();
    f->order = order;
    f->modulus = cyclotomic_polynomial(order);
    f->degree = f->modulus.size() - 1;
    const std::size_t d = f->degree;
    IntPoly cur(d, 0);
    cur[0] = 1;
    f->residues.reserve(order);
    for (unsigned j = 0; j < order; ++j) {
        f->residues.push_back(cur);
        // cur <- x * cur mod Φ
        const long long top = cur[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1] - top * f->modulus[i];
        cur[0] = -top * f->modulus[0];
    }
    for (unsigned q = 1; q < std::max(order, 2u); ++q)
        if (std::gcd(q, order) == 1) f->units.push_back(q);
    if (order == 1) f->units = {1};
    return f;
}

/// Process-wide cache of field data; concurrent readers, one-time insertion.
inline const CyclotomicField& cyclotomic_field(unsigned order) {
    static std::shared_mutex mutex;
    static std::unordered_map<unsigned, std::unique_ptr<CyclotomicField>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(order); it != cache.end()) return *it->second;
    }
    if (order == 0 || order > kMaxOrder)
        throw Error(ErrorCode::InvalidArgument, "cyclotomic order out of range: " + std::to_string(order));
    auto built = build_field(order);
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(order, std::move(built));
    return *it->second;
}

}  // namespace detail

/*
 * Exact element of the cyclotomic field Q(ζ_n).
 *
 * Stored as the coefficient vector (length φ(n)) of a polynomial in ζ_n
 * reduced modulo Φ_n. Two normalizations keep the representation canonical
 * for a given value and order:
 *   - orders n ≡ 2 (mod 4) are rewritten over n/2, since Q(ζ_n) = Q(ζ_{n/2});
 *   - values with vanishing non-constant part collapse to order 1.
 * Values of different orders are combined in Q(ζ_lcm).
 */
class CycloNum {
   public:
    CycloNum() : field_(&detail::cyclotomic_field(1)), coeffs_(1) {}
    CycloNum(Rational r) : field_(&detail::cyclotomic_field(1)) { coeffs_.push_back(std::move(r)); }
    template <std::signed_integral I>
    CycloNum(I v) : CycloNum(Rational(v)) {}

    /// Builds Σ coeffs[j] ζ_order^j; coeffs may have any length.
    static CycloNum from_powers(unsigned order, const std::vector<Rational>& coeffs) {
        if (order == 0 || order > kMaxOrder)
            throw Error(ErrorCode::InvalidArgument, "cyclotomic order out of range: " + std::to_string(order));
        std::vector<Rational> raw(order);
        for (std::size_t j = 0; j < coeffs.size(); ++j) raw[j % order] += coeffs[j];
        return from_raw(order, std::move(raw));
    }

    /// ζ_order^power.
    static CycloNum zeta(unsigned order, long long power = 1) {
        if (order == 0 || order > kMaxOrder)
            throw Error(ErrorCode::InvalidArgument, "cyclotomic order out of range: " + std::to_string(order));
        std::vector<Rational> raw(order);
        const long long n = order;
        raw[static_cast<std::size_t>(((power % n) + n) % n)] = 1;
        return from_raw(order, std::move(raw));
    }

    unsigned order() const noexcept { return field_->order; }
    std::size_t degree() const noexcept { return field_->degree; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return false;
        return true;
    }
    bool is_zero() const { return is_rational() && coeffs_[0].is_zero(); }
    bool is_one() const { return is_rational() && coeffs_[0].is_one(); }

    Rational to_rational() const {
        if (!is_rational()) throw Error(ErrorCode::NotRational, "value " + to_string() + " is not rational");
        return coeffs_[0];
    }

    std::complex<double> to_complex() const {
        std::complex<double> z = 0.0;
        const double step = 2.0 * std::numbers::pi / order();
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) z += coeffs_[i].to_double() * std::polar(1.0, step * static_cast<double>(i));
        return z;
    }

    /// The same value expressed in Q(ζ_target); order() must divide target.
    CycloNum embed(unsigned target) const {
        if (target % order() != 0)
            throw Error(ErrorCode::InvalidArgument,
                        "cannot embed order " + std::to_string(order()) + " into " + std::to_string(target));
        if (target == order()) return *this;
        const unsigned stride = target / order();
        std::vector<Rational> raw(target);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) raw[(i * stride) % target] = coeffs_[i];
        return reduce_in(detail::cyclotomic_field(target), std::move(raw), /*collapse=*/false);
    }

    /// Image under the automorphism ζ ↦ ζ^q; requires gcd(q, order) == 1.
    CycloNum galois(long long q) const {
        const long long n = order();
        const long long qq = ((q % n) + n) % n;
        if (n > 1 && std::gcd(qq, n) != 1)
            throw Error(ErrorCode::NotCoprime, "sigma_" + std::to_string(q) + " is not an automorphism of Q(zeta_" +
                                                   std::to_string(n) + ")");
        if (n == 1 || qq == 1) return *this;
        std::vector<Rational> raw(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) raw[(i * static_cast<std::size_t>(qq)) % static_cast<std::size_t>(n)] = coeffs_[i];
        return reduce_in(*field_, std::move(raw), true);
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    CycloNum conj() const { return order() == 1 ? *this : galois(static_cast<long long>(order()) - 1); }

    CycloNum inverse() const {
        if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
        if (is_rational()) return CycloNum(coeffs_[0].reciprocal());
        // x^{-1} = (∏_{σ≠1} σ(x)) / N(x)
        CycloNum cofactor(1);
        for (unsigned q : field_->units)
            if (q != 1) cofactor *= galois(q);
        const CycloNum norm = *this * cofactor;
        return cofactor * CycloNum(norm.to_rational().reciprocal());
    }

    CycloNum operator-() const {
        CycloNum r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b) { return add(a, b, false); }
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b) { return add(a, b, true); }

    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        if (a.is_rational()) return b.scaled(a.coeffs_[0]);
        if (b.is_rational()) return a.scaled(b.coeffs_[0]);
        if (a.order() != b.order()) {
            const unsigned n = std::lcm(a.order(), b.order());
            return a.embed(n) * b.embed(n);
        }
        const auto& f = *a.field_;
        std::vector<Rational> raw(f.order);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                raw[(i + j) % f.order] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return reduce_in(f, std::move(raw), true);
    }

    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) {
        if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "cyclotomic division by zero");
        if (b.is_rational()) return a.scaled(b.coeffs_[0].reciprocal());
        return a * b.inverse();
    }

    CycloNum& operator+=(const CycloNum& b) { return *this = *this + b; }
    CycloNum& operator-=(const CycloNum& b) { return *this = *this - b; }
    CycloNum& operator*=(const CycloNum& b) { return *this = *this * b; }
    CycloNum& operator/=(const CycloNum& b) { return *this = *this / b; }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
        const unsigned n = std::lcm(a.order(), b.order());
        return a.embed(n).coeffs_ == b.embed(n).coeffs_;
    }

    /// "a + b*z5 + c*z5^2"; rational values print as plain rationals.
    std::string to_string() const {
        if (is_rational()) return coeffs_[0].to_string();
        if (order() == 1) return coeffs_[0].to_string();
        const std::string z = "z" + std::to_string(order());
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            const bool negative = c.sign() < 0;
            const Rational mag = negative ? -c : c;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            std::string mono = i == 0 ? "" : (i == 1 ? z : z + "^" + std::to_string(i));
            if (i == 0)
                out += mag.to_string();
            else if (mag.is_one())
                out += mono;
            else
                out += mag.to_string() + "*" + mono;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.to_string(); }

   private:
    static CycloNum add(const CycloNum& a, const CycloNum& b, bool subtract) {
        if (a.order() == b.order()) {
            CycloNum r = a;
            for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
                if (!b.coeffs_[i].is_zero()) r.coeffs_[i] = subtract ? r.coeffs_[i] - b.coeffs_[i] : r.coeffs_[i] + b.coeffs_[i];
            r.collapse();
            return r;
        }
        if (b.is_rational()) {
            CycloNum r = a;
            r.coeffs_[0] = subtract ? r.coeffs_[0] - b.coeffs_[0] : r.coeffs_[0] + b.coeffs_[0];
            return r;
        }
        if (a.is_rational()) {
            CycloNum r = subtract ? -b : b;
            r.coeffs_[0] += a.coeffs_[0];
            return r;
        }
        const unsigned n = std::lcm(a.order(), b.order());
        return add(a.embed(n), b.embed(n), subtract);
    }

    CycloNum scaled(const Rational& s) const {
        if (s.is_zero()) return CycloNum();
        CycloNum r = *this;
        if (!s.is_one())
            for (auto& c : r.coeffs_)
                if (!c.is_zero()) c *= s;
        return r;
    }

    // raw is indexed by exponent of ζ_order, length order.
    static CycloNum from_raw(unsigned order, std::vector<Rational> raw) {
        if (order % 4 == 2) {
            // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m
            const unsigned m = order / 2;
            const unsigned shift = (m + 1) / 2;
            std::vector<Rational> folded(m);
            for (unsigned i = 0; i < order; ++i) {
                if (raw[i].is_zero()) continue;
                const std::size_t e = (static_cast<std::size_t>(i) * shift) % m;
                folded[e] += (i % 2 == 0) ? raw[i] : -raw[i];
            }
            return from_raw(m, std::move(folded));
        }
        return reduce_in(detail::cyclotomic_field(order), std::move(raw), true);
    }

    static CycloNum reduce_in(const detail::CyclotomicField& f, std::vector<Rational> raw, bool collapse) {
        CycloNum r;
        r.field_ = &f;
        const std::size_t d = f.degree;
        r.coeffs_.assign(d, Rational());
        for (std::size_t i = 0; i < d && i < raw.size(); ++i) r.coeffs_[i] = std::move(raw[i]);
        for (std::size_t j = d; j < raw.size(); ++j) {
            if (raw[j].is_zero()) continue;
            const auto& res = f.residues[j];
            for (std::size_t i = 0; i < d; ++i)
                if (res[i] != 0) r.coeffs_[i] += raw[j] * Rational(res[i]);
        }
        if (collapse) r.collapse();
        return r;
    }

    void collapse() {
        if (order() == 1) return;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return;
        Rational c = std::move(coeffs_[0]);
        field_ = &detail::cyclotomic_field(1);
        coeffs_.assign(1, std::move(c));
    }

    const detail::CyclotomicField* field_;
    std::vector<Rational> coeffs_;
};

inline CycloNum pow(CycloNum base, unsigned exponent) {
    CycloNum result(1);
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

inline CycloNum root_of_unity(const RootParam& param) { return CycloNum::zeta(param.order, param.power); }

inline CycloNum conjugate(const CycloNum& x) { return x.conj(); }

inline CycloNum galois_apply(long long q, const CycloNum& x) { return x.galois(q); }

/*
 * Determinant of a bare k-cycle with g edges against the majority direction
 * under ω: 2 - ω^{k-2g} - ω^{-(k-2g)}, i.e. 4 sin²((k-2g)·power·π/order).
 * Zero exactly when order divides power·(k-2g).
 */
inline CycloNum cycle_contribution(const RootParam& param, int k, int g) {
    if (k < 1 || g < 0 || g > k / 2)
        throw Error(ErrorCode::InvalidArgument,
                    "cycle signature (k=" + std::to_string(k) + ", g=" + std::to_string(g) + ") out of range");
    const long long e = static_cast<long long>(param.power) * (k - 2 * g);
    return CycloNum(2) - CycloNum::zeta(param.order, e) - CycloNum::zeta(param.order, -e);
}

/// True when the contribution of a (k, g) cycle vanishes under param.
inline bool cycle_vanishes(const RootParam& param, int k, int g) {
    return (static_cast<long long>(param.power) * (k - 2 * g)) % static_cast<long long>(param.order) == 0;
}

/// [n]_p: n mod p folded into [0, (p-1)/2].
inline long long fold_index(long long n, long long p) {
    if (p < 3 || p % 2 == 0) throw Error(ErrorCode::InvalidArgument, "fold_index needs an odd modulus >= 3");
    const long long r = ((n % p) + p) % p;
    return r <= (p - 1) / 2 ? r : p - r;
}

/// Exponent e with x == p^e exactly (e may be negative).
inline long long log_power_of(const CycloNum& x, long long p) {
    if (p < 2) throw Error(ErrorCode::InvalidArgument, "log base must be at least 2");
    const Rational r = x.to_rational();
    if (r.sign() <= 0) throw Error(ErrorCode::NotAPower, r.to_string() + " is not a power of " + std::to_string(p));
    mpz_class num = r.numerator();
    mpz_class den = r.denominator();
    if (num != 1 && den != 1) throw Error(ErrorCode::NotAPower, r.to_string() + " is not a power of " + std::to_string(p));
    const bool negative = den != 1;
    mpz_class& v = negative ? den : num;
    const mpz_class base(static_cast<long>(p));
    long long e = 0;
    while (v != 1) {
        if (mpz_divisible_p(v.get_mpz_t(), base.get_mpz_t()) == 0)
            throw Error(ErrorCode::NotAPower, r.to_string() + " is not a power of " + std::to_string(p));
        v /= base;
        ++e;
    }
    return negative ? -e : e;
}

inline CycloNum sqrt5() {
    return CycloNum::from_powers(5, {Rational(0), Rational(1), Rational(-1), Rational(-1), Rational(1)});
}
inline CycloNum golden_ratio() { return (CycloNum(1) + sqrt5()) / CycloNum(2); }
/// (5 + √5)/2 = 4 sin²(2π/5)
inline CycloNum alpha() { return (CycloNum(5) + sqrt5()) / CycloNum(2); }
/// (5 - √5)/2 = 4 sin²(π/5)
inline CycloNum beta() { return (CycloNum(5) - sqrt5()) / CycloNum(2); }

/// (a, b) with x = a + b√5, or nullopt when x ∉ Q(√5).
inline std::optional<std::pair<Rational, Rational>> as_sqrt5(const CycloNum& x) {
    if (x.is_rational()) return std::make_pair(x.to_rational(), Rational());
    const unsigned n = std::lcm(x.order(), 5u);
    if (n > kMaxOrder) return std::nullopt;
    const CycloNum y = x.embed(n);
    const auto& units = detail::cyclotomic_field(n).units;
    long long flip = 0;
    for (unsigned q : units) {
        if (q % 5 == 1 || q % 5 == 4) {
            if (!(y.galois(q) == y)) return std::nullopt;
        } else if (flip == 0) {
            flip = q;
        }
    }
    const CycloNum moved = y.galois(flip);
    const CycloNum a = (y + moved) / CycloNum(2);
    const CycloNum b = (y - moved) / (CycloNum(2) * sqrt5());
    if (!a.is_rational() || !b.is_rational()) return std::nullopt;
    return std::make_pair(a.to_rational(), b.to_rational());
}

/// Norm Q(√5) → Q: a + b√5 ↦ a² - 5b².
inline Rational field_norm_q5(const CycloNum& x) {
    const auto ab = as_sqrt5(x);
    if (!ab) throw Error(ErrorCode::NotInSubfield, x.to_string() + " is not in Q(sqrt5)");
    const auto& [a, b] = *ab;
    return a * a - Rational(5) * b * b;
}

/// "a + b√5" when x ∈ Q(√5), otherwise the polynomial form.
inline std::string to_display_string(const CycloNum& x) {
    if (x.is_rational()) return x.to_string();
    if (auto ab = as_sqrt5(x)) {
        const auto& [a, b] = *ab;
        std::string out = a.is_zero() ? "" : a.to_string();
        const bool negative = b.sign() < 0;
        const Rational mag = negative ? -b : b;
        const std::string root = mag.is_one() ? "√5" : mag.to_string() + "√5";
        if (out.empty())
            out = (negative ? "-" : "") + root;
        else
            out += (negative ? " - " : " + ") + root;
        return out;
    }
    return x.to_string();
}

/// Fixed-precision decimal preview ("3.618033988750" or "0.5+0.866025403784i").
inline std::string approx_string(const CycloNum& x, int digits = 12) {
    const std::complex<double> z = x.to_complex();
    auto fmt = [digits](double v) {
        if (std::abs(v) < 0.5 * std::pow(10.0, -digits)) v = 0.0;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*f", digits, v);
        return std::string(buf);
    };
    if (x.is_rational() || std::abs(z.imag()) < kFloatTolerance) return fmt(z.real());
    std::string im = fmt(z.imag());
    return fmt(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_CYCLOTOMIC_HPP
