#include "agl/degeneracy.hpp"

#include "agl/errors.hpp"
#include "agl/linalg.hpp"

#include <map>

namespace agl {

std::optional<std::vector<Rational>> ga_degeneracy(const MultiPoly& p) {
    if (p.is_constant()) throw ConstantPolynomial("ga_degeneracy of a constant polynomial");
    const std::size_t g = p.num_vars();

    // Stack the coefficient vectors of the partials: one matrix row per
    // monomial appearing in any dP/dx_l, one column per l.  A kernel vector v
    // is exactly a direction with v . grad(P) = 0 as a polynomial.
    std::vector<MultiPoly> partials;
    partials.reserve(g);
    for (std::size_t l = 0; l < g; ++l) partials.push_back(p.partial(l));

    std::map<MultiPoly::Exponents, std::size_t> row_of;
    for (const auto& d : partials)
        for (const auto& [e, c] : d.terms())
            row_of.emplace(e, row_of.size());

    std::vector<std::vector<Rational>> m(row_of.size(), std::vector<Rational>(g, Rational(0)));
    for (std::size_t l = 0; l < g; ++l)
        for (const auto& [e, c] : partials[l].terms()) m[row_of[e]][l] = c;

    return nullspace_vector(m);
}

bool gm_degeneracy(const MultiPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("gm_degeneracy of the zero polynomial");
    const std::size_t g = p.num_vars();
    std::vector<std::vector<Integer>> rows;
    rows.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) {
        std::vector<Integer> row;
        row.reserve(g);
        for (auto x : e) row.push_back(Integer(static_cast<long>(x)));
        rows.push_back(std::move(row));
    }
    return rank_bareiss(std::move(rows)) < g;
}

std::uint32_t hypersurface_degree(const MultiPoly& p) {
    std::uint32_t total = 0;
    for (std::size_t i = 0; i < p.num_vars(); ++i) total += p.degree_in(i);
    return total;
}

bool translation_invariance_certificate(const MultiPoly& p, const std::vector<Rational>& v) {
    if (v.size() != p.num_vars()) throw DimensionMismatch("translation_invariance_certificate: direction has wrong length");
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || !x.is_zero();
    if (!nonzero) throw std::invalid_argument("translation_invariance_certificate: direction must be non-zero");
    const MultiPoly shifted = p.shift_by_direction(v);
    return shifted - p.widen(p.num_vars() + 1) == MultiPoly(p.num_vars() + 1);
}

} // namespace agl
