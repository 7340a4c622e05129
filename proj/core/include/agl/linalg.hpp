#pragma once

#include "agl/rational.hpp"

#include <optional>
#include <vector>

namespace agl {

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t rank_bareiss(std::vector<std::vector<Integer>> m);

/// Rank of a rational matrix; rows are scaled to integers first.
std::size_t rank_exact(const std::vector<std::vector<Rational>>& m);

/**
 * A non-zero vector v with M v = 0, normalized to a primitive integer vector
 * whose first non-zero entry is positive, or nullopt when the kernel is
 * trivial.  Exact arithmetic throughout.
 */
std::optional<std::vector<Rational>> nullspace_vector(const std::vector<std::vector<Rational>>& m);

} // namespace agl
