#pragma once

#include "agl/factor.hpp"
#include "agl/finite_set.hpp"
#include "agl/multipoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace agl {

/**
 * Common zero set of a list of polynomials inside G^g for G additive or
 * multiplicative.  The dimension is declared by the caller, never computed;
 * consumers of bound shapes must treat it as such.
 */
struct VarietySpec {
    std::size_t num_vars;
    std::vector<MultiPoly> equations;
    std::optional<std::size_t> declared_dim;
    GroupDescriptor group;

    VarietySpec(std::size_t g, std::vector<MultiPoly> eqs, std::optional<std::size_t> dim, GroupDescriptor grp);
};

/// Point of Z^l x Z/n x Z/m: a free part and two reduced residues.
struct TorsionPoint {
    std::vector<Integer> free_part;
    std::uint64_t res_n = 0;
    std::uint64_t res_m = 0;

    friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
        return a.free_part == b.free_part && a.res_n == b.res_n && a.res_m == b.res_m;
    }
    friend bool operator<(const TorsionPoint& a, const TorsionPoint& b);
};

/// Finite subset of Z^l x Z/nZ x Z/mZ.
struct TorsionSet {
    std::size_t l = 0;
    std::uint64_t n = 1;
    std::uint64_t m = 1;
    std::vector<TorsionPoint> points;

    TorsionSet(std::size_t free_rank, std::uint64_t mod_n, std::uint64_t mod_m, std::vector<TorsionPoint> pts);
};

struct TorsionUnfolding {
    TorsionSet cell;                              // the densest-cell subset S'
    std::vector<std::vector<Integer>> lifted;     // its image in Z^{l+2}, aligned with cell.points
};

/**
 * Greedy Ruzsa covering: a maximal X subseteq A whose translates x + B are
 * pairwise disjoint, taken in canonical element order.  Then
 * |X| <= ceil(|A+B| / |B|) and A subseteq X + B - B; both postconditions are
 * re-verified by enumeration before returning.  Throws MixedGroups/EmptySet.
 */
FiniteSet ruzsa_cover(const FiniteSet& a, const FiniteSet& b, unsigned threads = 1);

/**
 * Splits each torsion coordinate into 10 intervals, keeps the densest of the
 * 100 cells (ties to the smallest interval pair), and lifts its residues to
 * integer representatives.  The lift preserves additive quadruples in both
 * directions; |cell| >= |S|/100 by pigeonhole.  The quadruple property is
 * verified internally (exhaustively when |S'| <= 40).  Throws EmptySet.
 */
TorsionUnfolding torsion_unfold(const TorsionSet& s);

/**
 * Rank of the multiplicative lattice spanned by a finite set of non-zero
 * rationals: the integer rank of the prime-exponent matrix (signs are
 * torsion and ignored).  Throws on factorization budget exhaustion.
 */
std::size_t mult_rank(const FiniteSet& a, const FactorBudget& budget = {});

/// True iff every equation of V vanishes on the tuple.
bool satisfies(const VarietySpec& v, const std::vector<Rational>& tuple);

/**
 * Exact |V intersect A^g| by depth-first enumeration of A^g, pruning with
 * every equation whose variables form a prefix of the assigned ones.
 * Enumeration is parallelized over the first coordinate.  Throws
 * BudgetExceeded when |A|^g exceeds max_tuples, and MixedGroups when the
 * set's group differs from the variety's.
 */
std::uint64_t count_points(const VarietySpec& v, const FiniteSet& a,
                           std::uint64_t max_tuples = 100'000'000, unsigned threads = 1);

/// CSV rows (set size, count, declared_dim, doubling) for count experiments.
struct CountRecord {
    std::size_t set_size = 0;
    std::uint64_t count = 0;
    std::optional<std::size_t> declared_dim;
    Rational doubling = Rational(0);
};
std::string count_records_csv(const std::vector<CountRecord>& rows);

} // namespace agl
