#include "agl/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace agl {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
    if (sgn(mpq_class(v.get_den())) == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::invalid_argument("Rational::pow: zero to a negative power");
        return Rational(0);
    }
    const bool invert = e < 0;
    const unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    return invert ? Rational(d, n) : Rational(n, d);
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    const Integer n = v_.get_num(), d = v_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

int canonical_cmp(const Rational& a, const Rational& b) {
    const int c = cmp(a.num(), b.num());
    if (c != 0) return c;
    return cmp(a.den(), b.den());
}

} // namespace agl
