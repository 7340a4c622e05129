#pragma once

#include "agl/rational.hpp"

#include <map>
#include <vector>

namespace agl {

/**
 * Budget for integer factorization: trial division up to trial_limit, then
 * Pollard rho with at most rho_steps iterations overall.  Running out throws
 * FactorizationBudgetExceeded; results are never silently truncated.
 */
struct FactorBudget {
    unsigned long trial_limit = 1'000'000;
    unsigned long rho_steps = 2'000'000;
};

/// Prime factorization of |n| as prime -> multiplicity; n must be non-zero.
std::map<Integer, unsigned> factorize(const Integer& n, const FactorBudget& budget = {});

/// All positive divisors from a factorization, sorted ascending.
std::vector<Integer> divisors(const std::map<Integer, unsigned>& factors);

} // namespace agl
