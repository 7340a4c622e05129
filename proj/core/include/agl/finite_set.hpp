#pragma once

#include "agl/group.hpp"

#include <optional>
#include <vector>

namespace agl {

/**
 * Deduplicated finite set of elements of one group, kept in canonical order.
 * Construction validates membership of every element; values are immutable
 * afterwards and safe to share between threads.
 */
class FiniteSet {
public:
    explicit FiniteSet(GroupDescriptor group) : group_(std::move(group)) {}

    /// Sorts, dedups and validates.  Throws NotOnGroup on a bad element.
    static FiniteSet from_elements(const GroupDescriptor& group, std::vector<GroupElement> elems);

    const GroupDescriptor& group() const { return group_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const std::vector<GroupElement>& elements() const { return elems_; }
    const GroupElement& operator[](std::size_t i) const { return elems_[i]; }
    bool contains(const GroupElement& e) const;

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    friend bool operator==(const FiniteSet& a, const FiniteSet& b) {
        return a.group_ == b.group_ && a.elems_ == b.elems_;
    }
    friend bool operator!=(const FiniteSet& a, const FiniteSet& b) { return !(a == b); }

private:
    friend FiniteSet sumset(const FiniteSet&, const FiniteSet&, unsigned);
    static FiniteSet trusted(const GroupDescriptor& group, std::vector<GroupElement> sorted_unique);

    GroupDescriptor group_;
    std::vector<GroupElement> elems_;
};

/// Set of generators of a finitely generated subgroup; elements of `group`.
struct SubgroupBasis {
    GroupDescriptor group;
    std::vector<GroupElement> generators;

    SubgroupBasis(GroupDescriptor g, std::vector<GroupElement> gens);
    std::size_t rank_bound() const { return generators.size(); }
};

/**
 * A + B = { a + b : a in A, b in B } under the group law (the product set
 * when the group is multiplicative).  Deterministic result; pair generation
 * is split across `threads` workers and merged.
 */
FiniteSet sumset(const FiniteSet& a, const FiniteSet& b, unsigned threads = 1);

/// g-fold sumset gA; iterated(A, 1) = A.
FiniteSet iterated(const FiniteSet& a, unsigned g, unsigned threads = 1);

/// Doubling constant |A+A| / |A| as an exact rational.  Throws EmptySet.
Rational doubling(const FiniteSet& a, unsigned threads = 1);

/**
 * Box { n_1 g_1 + ... + n_r g_r : |n_i| <= L }, optionally translated by
 * `base`.  Scalar multiples of each generator are cached incrementally, so
 * the build costs O(rL) group operations plus the (2L+1)^r combinations.
 * Generators are not checked for independence.
 */
FiniteSet box(const SubgroupBasis& basis, unsigned long side, const std::optional<GroupElement>& base = std::nullopt);

/// CSV with one (size, doubling) row per set: the doubling statistics export.
std::string doubling_stats_csv(const std::vector<FiniteSet>& sets, unsigned threads = 1);

} // namespace agl
