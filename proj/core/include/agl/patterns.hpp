#pragma once

#include "agl/finite_set.hpp"

#include <utility>
#include <vector>

namespace agl {

/**
 * Generalised arithmetic progression
 *   { base + l_1 step_1 + ... + l_k step_k : 0 <= l_i <= length_i - 1 }
 * in any of the three groups.  Proper when all products of indices give
 * distinct elements.
 */
struct GapSpec {
    GroupDescriptor group;
    GroupElement base;
    std::vector<GroupElement> steps;
    std::vector<unsigned long> lengths;

    /// Validates: equal-length steps/lengths, k >= 1, lengths >= 2, membership.
    GapSpec(GroupDescriptor g, GroupElement base_point,
            std::vector<GroupElement> step_points, std::vector<unsigned long> side_lengths);
};

enum class PatternKind { AP, GP, SquareAP };

/**
 * Longest-pattern result.  For AP the witness chain is first, first + step,
 * ...; for GP the `step` field is the ratio.  A report of length l >= 1
 * always reproduces a subset of the input set.
 */
struct PatternReport {
    PatternKind kind;
    std::size_t length = 0;
    Rational first = Rational(0);
    Rational step = Rational(0);

    friend bool operator==(const PatternReport& a, const PatternReport& b) {
        return a.kind == b.kind && a.length == b.length && a.first == b.first && a.step == b.step;
    }
};

/// Enumerates the progression; second component is the properness flag
/// (|set| equals the product of the lengths).
std::pair<FiniteSet, bool> gap_enumerate(const GapSpec& spec);

/**
 * Longest arithmetic progression inside a finite set of rationals (O(n^2)
 * dynamic program over sorted pairs).  Chains use a non-zero difference;
 * singletons report length 1.  Ties break to the smallest first term, then
 * the smallest difference.  Throws EmptySet.
 */
PatternReport longest_ap(const std::vector<Rational>& values);

/**
 * Longest geometric progression; ratios 0, 1, -1 are excluded as degenerate
 * and zeros cannot sit in a ratio chain.  The reported ratio has absolute
 * value > 1 (a set-level canonical choice).  Throws EmptySet.
 */
PatternReport longest_gp(const std::vector<Rational>& values);

/**
 * Longest chain u, u+d, ..., u+ld whose squares all lie in the input and are
 * pairwise distinct.  Both square roots of every rational square in the
 * input participate, so chains may mix signs.  Reports length 0 when the
 * input contains no rational square.  Throws EmptySet on empty input.
 */
PatternReport longest_square_ap(const std::vector<Rational>& values);

/// d_1 + ... + d_t + t - 3; the degree of the canonical class in the smooth
/// case, positive values flagging general type.
long long canonical_degree(const std::vector<unsigned long>& degrees, std::size_t t);

} // namespace agl
