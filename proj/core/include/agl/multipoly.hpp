#pragma once

#include "agl/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace agl {

/**
 * Sparse multivariate polynomial over Q.  Terms map exponent vectors of
 * length num_vars to non-zero coefficients; zero coefficients are never
 * stored.  Variables are 1-based in the text grammar (x1, x2, ...; x, y, z, w
 * are aliases for x1..x4) and 0-based in the API.
 */
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPoly(std::size_t num_vars = 1) : nvars_(num_vars) {}

    static MultiPoly constant(std::size_t num_vars, const Rational& c);
    static MultiPoly variable(std::size_t num_vars, std::size_t index);

    /**
     * Parses the grammar: terms `c*x1^e1*...*xg^eg` joined by + and -, with
     * integer or p/q coefficients; explicit '*' is optional between factors.
     * With num_vars = 0 the variable count is inferred from the largest index.
     */
    static MultiPoly parse(const std::string& text, std::size_t num_vars = 0);

    std::size_t num_vars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// Coefficient of an exponent vector (zero if absent).
    Rational coeff(const Exponents& e) const;
    void set_coeff(const Exponents& e, const Rational& c);

    /// Largest exponent of variable i over the support.
    std::uint32_t degree_in(std::size_t i) const;
    /// Largest total degree of a monomial.
    std::uint32_t total_degree() const;

    Rational eval(const std::vector<Rational>& point) const;

    MultiPoly partial(std::size_t i) const;

    /// P(x1 + t*v1, ..., xg + t*vg) as a polynomial in (x1..xg, t); t is the
    /// extra last variable.
    MultiPoly shift_by_direction(const std::vector<Rational>& v) const;

    /// Same polynomial viewed in a larger variable ring (new variables unused).
    MultiPoly widen(std::size_t new_num_vars) const;

    /// Substitutes an exact value for variable i; the variable count is kept,
    /// the substituted variable no longer occurs.
    MultiPoly substitute(std::size_t i, const Rational& value) const;

    /// Coefficient list c0..cd of a polynomial that involves at most variable i.
    std::vector<Rational> univariate_coeffs(std::size_t i) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
    friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
    MultiPoly scaled(const Rational& c) const;

    friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
        return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const MultiPoly& p, const MultiPoly& q) { return !(p == q); }

    std::string str() const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

} // namespace agl
