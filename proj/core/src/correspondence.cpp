#include "agl/correspondence.hpp"

#include "agl/errors.hpp"
#include "agl/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace agl {

namespace {

bool field_valued(const GroupDescriptor& g) {
    return g.kind() == GroupKind::Additive || g.kind() == GroupKind::Multiplicative;
}

// Degree of the ambient closure under the conventions used throughout:
// P^1 for Ga and Gm, the curve itself with the line bundle at the origin
// for an elliptic curve.  Both have degree 1.
unsigned closure_degree(const GroupDescriptor&) {
    return 1;
}

GroupElement wrap_target(const GroupDescriptor& target, const Rational& v) {
    return target.kind() == GroupKind::Additive ? GroupElement::add(v) : GroupElement::mul(v);
}

} // namespace

Correspondence Correspondence::graph(const GroupDescriptor& source, const GroupDescriptor& target, MultiPoly phi) {
    if (!field_valued(source) || !field_valued(target))
        throw std::invalid_argument("Correspondence::graph: source and target must be Ga or Gm");
    if (phi.num_vars() != 1) throw std::invalid_argument("Correspondence::graph: phi must be univariate");
    if (phi.is_constant()) throw std::invalid_argument("Correspondence::graph: phi must be non-constant (dominance)");
    Correspondence c(Kind::Graph, source, target);
    c.d_source_ = 1;
    c.d_target_ = phi.degree_in(0);
    c.poly_ = std::move(phi);
    return c;
}

Correspondence Correspondence::coord_proj(const GroupDescriptor& curve, CoordAxis axis) {
    if (!curve.is_elliptic()) throw std::invalid_argument("Correspondence::coord_proj: source must be an elliptic curve");
    Correspondence c(Kind::CoordProj, curve, GroupDescriptor::additive());
    c.axis_ = axis;
    c.d_source_ = 1;
    c.d_target_ = axis == CoordAxis::X ? 2 : 3;
    return c;
}

Correspondence Correspondence::square_shift(const GroupDescriptor& source, const Rational& u) {
    if (!field_valued(source)) throw std::invalid_argument("Correspondence::square_shift: source must be Ga or Gm");
    Correspondence c(Kind::SquareShift, source, GroupDescriptor::additive());
    c.shift_ = u;
    c.d_source_ = 2;
    c.d_target_ = 1;
    return c;
}

Correspondence Correspondence::implicit(const GroupDescriptor& source, const GroupDescriptor& target, MultiPoly relation) {
    if (!field_valued(source) || !field_valued(target))
        throw std::invalid_argument("Correspondence::implicit: source and target must be Ga or Gm");
    if (relation.num_vars() != 2) throw std::invalid_argument("Correspondence::implicit: relation must be bivariate");
    if (relation.degree_in(0) == 0 || relation.degree_in(1) == 0)
        throw std::invalid_argument("Correspondence::implicit: relation must depend on both variables (dominance)");
    Correspondence c(Kind::Implicit, source, target);
    c.d_source_ = relation.degree_in(1);
    c.d_target_ = relation.degree_in(0);
    c.poly_ = std::move(relation);
    return c;
}

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs_in, const FactorBudget& budget) {
    // Normalize: strip high zero coefficients.
    std::vector<Rational> coeffs = coeffs_in;
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    std::vector<Rational> roots;
    if (coeffs.empty())
        throw std::invalid_argument("rational_roots: zero polynomial has infinitely many roots");
    if (coeffs.size() == 1) return roots;

    // Factor out y^k; y = 0 is then a root.
    std::size_t low = 0;
    while (low < coeffs.size() && coeffs[low].is_zero()) ++low;
    if (low > 0) {
        roots.push_back(Rational(0));
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(low));
    }
    const std::size_t deg = coeffs.size() - 1;
    if (deg == 0) return roots;

    auto horner = [&](const Rational& v) {
        Rational acc(0);
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * v + coeffs[i];
        return acc;
    };

    if (deg == 1) {
        roots.push_back(-coeffs[0] / coeffs[1]);
    } else if (deg == 2) {
        // Quadratic formula with an exact square-root test.
        const Rational disc = coeffs[1] * coeffs[1] - Rational(4) * coeffs[2] * coeffs[0];
        if (const auto s = disc.sqrt_exact()) {
            roots.push_back((-coeffs[1] + *s) / (Rational(2) * coeffs[2]));
            roots.push_back((-coeffs[1] - *s) / (Rational(2) * coeffs[2]));
        }
    } else {
        // Clear denominators to a primitive integer polynomial, then test
        // candidates p/q with p | constant term, q | leading term.
        Integer l = 1;
        for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        std::vector<Integer> ic;
        ic.reserve(coeffs.size());
        Integer content = 0;
        for (const auto& c : coeffs) {
            Integer t = c.num() * (l / c.den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.get_mpz_t());
            ic.push_back(std::move(t));
        }
        for (auto& t : ic) t /= content;

        const auto ps = divisors(factorize(ic.front(), budget));
        const auto qs = divisors(factorize(ic.back(), budget));
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
                if (g != 1) continue;
                const Rational cand(p, q);
                if (horner(cand).is_zero()) roots.push_back(cand);
                if (horner(-cand).is_zero()) roots.push_back(-cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) { return canonical_cmp(a, b) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

FiniteSet Correspondence::fiber(const GroupElement& p, const FactorBudget& budget) const {
    if (!on_group(source_, p)) throw MixedGroups("fiber argument " + p.str() + " is not in " + source_.str());
    std::vector<GroupElement> out;
    switch (kind_) {
        case Kind::Graph: {
            const Rational w = poly_.eval({p.value()});
            if (target_.kind() == GroupKind::Multiplicative && w.is_zero()) break;
            out.push_back(wrap_target(target_, w));
            break;
        }
        case Kind::CoordProj: {
            if (p.is_infinity()) break; // the origin has no affine coordinates
            out.push_back(GroupElement::add(axis_ == CoordAxis::X ? p.x() : p.y()));
            break;
        }
        case Kind::SquareShift: {
            if (const auto s = p.value().sqrt_exact()) {
                out.push_back(GroupElement::add(*s - shift_));
                if (!s->is_zero()) out.push_back(GroupElement::add(-*s - shift_));
            }
            break;
        }
        case Kind::Implicit: {
            const MultiPoly restricted = poly_.substitute(0, p.value());
            const auto coeffs = restricted.univariate_coeffs(1);
            bool all_zero = true;
            for (const auto& c : coeffs) all_zero = all_zero && c.is_zero();
            if (all_zero)
                throw Unsupported("fiber over " + p.str() + " is the whole target (reducible relation)");
            for (const auto& r : rational_roots(coeffs, budget)) {
                if (target_.kind() == GroupKind::Multiplicative && r.is_zero()) continue;
                out.push_back(wrap_target(target_, r));
            }
            break;
        }
    }
    return FiniteSet::from_elements(target_, std::move(out));
}

FiniteSet Correspondence::image(const FiniteSet& a, const FactorBudget& budget, unsigned threads) const {
    if (a.group() != source_) throw MixedGroups("image argument set is not over the source group");
    std::vector<std::vector<GroupElement>> parts(threads > 1 ? threads : 1);
    parallel_chunks(a.size(), threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const FiniteSet f = fiber(a[i], budget);
            parts[chunk].insert(parts[chunk].end(), f.begin(), f.end());
        }
    });
    std::vector<GroupElement> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return FiniteSet::from_elements(target_, std::move(all));
}

unsigned Correspondence::degree() const {
    return d_source_ * closure_degree(target_) + d_target_ * closure_degree(source_);
}

bool Correspondence::is_subgroup_translate() const {
    switch (kind_) {
        case Kind::CoordProj:
        case Kind::SquareShift:
            return false;
        case Kind::Implicit:
            throw Unsupported("no decision procedure for implicit correspondences");
        case Kind::Graph: {
            const bool src_mul = source_.kind() == GroupKind::Multiplicative;
            const bool tgt_mul = target_.kind() == GroupKind::Multiplicative;
            if (src_mul && tgt_mul) {
                // Translates of subgroups of Gm x Gm are exactly graphs of c x^n.
                return poly_.terms().size() == 1;
            }
            if (!src_mul && !tgt_mul) {
                // Cosets of lines in Ga x Ga: affine-linear graphs.
                return poly_.degree_in(0) <= 1;
            }
            // The only connected subgroups of Gm x Ga (either order) are the
            // factors; no non-constant graph is a coset of one.
            return false;
        }
    }
    return false;
}

std::string Correspondence::str() const {
    switch (kind_) {
        case Kind::Graph: return "graph(" + poly_.str() + "): " + source_.str() + " -> " + target_.str();
        case Kind::CoordProj: return std::string("coordproj(") + (axis_ == CoordAxis::X ? "x" : "y") + "): " + source_.str() + " -> Ga";
        case Kind::SquareShift: return "squareshift(u=" + shift_.str() + "): " + source_.str() + " -> Ga";
        case Kind::Implicit: return "implicit(" + poly_.str() + "): " + source_.str() + " -> " + target_.str();
    }
    return "?";
}

FiniteSet image_sum(const std::vector<Correspondence>& cs, const FiniteSet& a,
                    const FactorBudget& budget, unsigned threads) {
    if (cs.empty()) throw std::invalid_argument("image_sum: need at least one correspondence");
    const GroupDescriptor& target = cs.front().target();
    for (const auto& c : cs) {
        if (c.source() != a.group()) throw MixedGroups("image_sum: correspondence source differs from the set's group");
        if (c.target() != target) throw MixedGroups("image_sum: correspondences have different targets");
    }
    if (a.empty()) return FiniteSet(target);

    FiniteSet acc = cs.front().image(a, budget, threads);
    if (acc.empty()) throw IrrationalFiber("image_sum: " + cs.front().str() + " has no rational image point over the set");
    for (std::size_t i = 1; i < cs.size(); ++i) {
        const FiniteSet img = cs[i].image(a, budget, threads);
        if (img.empty()) throw IrrationalFiber("image_sum: " + cs[i].str() + " has no rational image point over the set");
        acc = sumset(acc, img, threads);
    }
    return acc;
}

} // namespace agl
