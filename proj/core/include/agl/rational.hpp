#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace agl {

/// Arbitrary-precision integer (GMP-backed).
using Integer = mpz_class;

/**
 * Exact rational number in canonical form: gcd(|num|, den) = 1, den >= 1,
 * zero is 0/1.  All arithmetic is exact; results are always canonical.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);

    /// Parses "p", "-p", or "p/q".  Throws std::invalid_argument on garbage or q = 0.
    static Rational parse(const std::string& s);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const;
    /// Exact e-th power; e may be negative if the value is non-zero.
    Rational pow(long e) const;
    /// Returns the non-negative square root if this is a square of a rational.
    std::optional<Rational> sqrt_exact() const;

    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/**
 * Canonical (non-numeric) ordering used for deterministic set semantics:
 * compares numerators first, then denominators.
 */
int canonical_cmp(const Rational& a, const Rational& b);

} // namespace agl
