#pragma once

#include "agl/multipoly.hpp"

#include <optional>
#include <vector>

namespace agl {

/**
 * Degeneracy of P with respect to the additive group power Ga^g: looks for a
 * non-zero direction v with v . grad(P) = 0 as a polynomial identity, i.e. a
 * direction along which P is constant.  Returns such a v (primitive integer
 * vector) or nullopt, which certifies non-degeneracy.
 *
 * The direction criterion is only stated as a necessary condition for
 * degeneracy; here v-existence is treated as equivalent, since a linear
 * change of coordinates along v makes P independent of one variable.
 *
 * Throws ConstantPolynomial for constant P.
 */
std::optional<std::vector<Rational>> ga_degeneracy(const MultiPoly& p);

/**
 * Degeneracy of P with respect to Gm^g: P is degenerate iff the exponent
 * vectors of its support span a proper subspace of Q^g (rank < g, computed by
 * exact fraction-free elimination).  Throws ZeroPolynomial.
 */
bool gm_degeneracy(const MultiPoly& p);

/**
 * Degree of the hypersurface P = 0 under the product-of-P^1 line bundle:
 * the sum over variables of the largest exponent appearing in the support.
 */
std::uint32_t hypersurface_degree(const MultiPoly& p);

/**
 * True iff P(x + t v) - P(x) is identically zero, by exact symbolic
 * expansion in g+1 variables.  Throws DimensionMismatch on a bad v.
 */
bool translation_invariance_certificate(const MultiPoly& p, const std::vector<Rational>& v);

} // namespace agl
