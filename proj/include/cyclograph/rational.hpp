#ifndef CYCLOGRAPH_RATIONAL_HPP
#define CYCLOGRAPH_RATIONAL_HPP

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>

#include "error.hpp"

namespace cyclograph {

// 128-bit intermediates for exact int64 cross products.
__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

/*
 * Exact rational number with a machine-word fast path.
 *
 * Values whose reduced numerator and denominator fit in int64 are kept inline;
 * anything larger is promoted to a GMP rational and demoted again as soon as
 * it fits. Determinants of small Hermitian Laplacians almost never leave the
 * fast path, so the common case costs a couple of overflow-checked integer
 * operations instead of a heap allocation.
 *
 * Invariants (small form): den_ > 0, gcd(|num_|, den_) == 1, num_ != INT64_MIN.
 */
class Rational {
   public:
    Rational() noexcept = default;
    template <std::signed_integral I>
    Rational(I value) {
        set_small_or_big(static_cast<std::int64_t>(value), 1);
    }
    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
        assign(mpq_class(mpz_from(num), mpz_from(den)));
    }
    explicit Rational(const mpq_class& value) { assign(value); }
    explicit Rational(const mpz_class& value) { assign(mpq_class(value)); }

    Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
        if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other) {
        if (this != &other) {
            num_ = other.num_;
            den_ = other.den_;
            big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    /// Parses "p", "-p" or "p/q"; throws ParseError on malformed input.
    static Rational parse(const std::string& text) {
        mpq_class q;
        if (text.empty() || q.set_str(text, 10) != 0)
            throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
        if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
        q.canonicalize();
        return Rational(q);
    }

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    int sign() const noexcept {
        if (big_) return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }

    mpq_class to_mpq() const {
        if (big_) return *big_;
        return mpq_class(mpz_from(num_), mpz_from(den_));
    }
    mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from(num_); }
    mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from(den_); }
    double to_double() const {
        if (big_) return big_->get_d();
        return static_cast<double>(num_) / static_cast<double>(den_);
    }
    std::string to_string() const {
        if (big_) return big_->get_str();
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rational operator-() const {
        Rational r;
        if (big_)
            r.assign(-*big_);
        else
            r.num_ = -num_, r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            std::int64_t n, d;
            if (a.den_ == 1 && b.den_ == 1) {
                if (!__builtin_add_overflow(a.num_, b.num_, &n)) return from_small(n, 1);
            } else {
                const std::int64_t g = std::gcd(a.den_, b.den_);
                std::int64_t lhs, rhs;
                if (!__builtin_mul_overflow(a.num_, b.den_ / g, &lhs) &&
                    !__builtin_mul_overflow(b.num_, a.den_ / g, &rhs) &&
                    !__builtin_add_overflow(lhs, rhs, &n) && !__builtin_mul_overflow(a.den_, b.den_ / g, &d))
                    return reduced(n, d);
            }
        }
        Rational r;
        r.assign(a.to_mpq() + b.to_mpq());
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.num_ == 0 || b.num_ == 0) return Rational();
            std::int64_t n, d;
            if (a.den_ == 1 && b.den_ == 1) {
                if (!__builtin_mul_overflow(a.num_, b.num_, &n)) return from_small(n, 1);
            } else {
                const std::int64_t g1 = std::gcd(a.num_, b.den_);
                const std::int64_t g2 = std::gcd(b.num_, a.den_);
                if (!__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &n) &&
                    !__builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &d))
                    return from_small(n, d);
            }
        }
        Rational r;
        r.assign(a.to_mpq() * b.to_mpq());
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
        return a * b.reciprocal();
    }

    Rational reciprocal() const {
        if (is_zero()) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
        if (big_) {
            Rational r;
            r.assign(1 / *big_);
            return r;
        }
        return num_ > 0 ? from_small(den_, num_) : from_small(-den_, -num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (!a.big_ || !b.big_) return false;  // canonical: big values never fit the small form
        return *a.big_ == *b.big_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            Int128 lhs = static_cast<Int128>(a.num_) * b.den_;
            Int128 rhs = static_cast<Int128>(b.num_) * a.den_;
            return lhs < rhs;
        }
        return a.to_mpq() < b.to_mpq();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

   private:
    static mpz_class mpz_from(std::int64_t v) {
        mpz_class z;
        mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
        return z;
    }

    // n/d already reduced, d > 0 up to sign fixups done by the caller.
    static Rational from_small(std::int64_t n, std::int64_t d) {
        Rational r;
        r.set_small_or_big(n, d);
        return r;
    }

    static Rational reduced(std::int64_t n, std::int64_t d) {
        if (n == std::numeric_limits<std::int64_t>::min()) return from_small(n, d);
        const std::int64_t g = std::gcd(n, d);
        return from_small(n / g, d / g);
    }

    void set_small_or_big(std::int64_t n, std::int64_t d) {
        if (n == std::numeric_limits<std::int64_t>::min() || d == std::numeric_limits<std::int64_t>::min()) {
            assign(mpq_class(mpz_from(n), mpz_from(d)));
            return;
        }
        if (d < 0) n = -n, d = -d;
        num_ = n;
        den_ = d;
        big_.reset();
    }

    void assign(mpq_class value) {
        value.canonicalize();
        const mpz_class& n = value.get_num();
        const mpz_class& d = value.get_den();
        if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
            const long ln = mpz_get_si(n.get_mpz_t());
            const long ld = mpz_get_si(d.get_mpz_t());
            if (ln != std::numeric_limits<long>::min()) {
                num_ = ln;
                den_ = ld;
                big_.reset();
                return;
            }
        }
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(value));
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace cyclograph

#endif  // CYCLOGRAPH_RATIONAL_HPP
