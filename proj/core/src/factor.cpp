#include "agl/factor.hpp"

#include "agl/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace agl {

namespace {

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Pollard rho (Brent variant).  Decrements *steps per iteration and throws
// when the budget runs out.  n must be odd, composite and > 1.
Integer rho_factor(const Integer& n, unsigned long* steps) {
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        Integer saved_y = y;
        unsigned long power = 1, lam = 0;
        while (d == 1) {
            if (*steps == 0) throw FactorizationBudgetExceeded("factorization budget exceeded on a " + std::to_string(mpz_sizeinbase(n.get_mpz_t(), 10)) + "-digit number");
            --*steps;
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
                saved_y = y;
            }
            y = (y * y + c) % n;
            ++lam;
            Integer diff = x - y;
            if (diff == 0) break; // cycle without factor; retry with another c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
        (void)saved_y;
    }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out, const FactorBudget& budget, unsigned long* rho_steps) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    const Integer d = rho_factor(n, rho_steps);
    factor_into(d, out, budget, rho_steps);
    factor_into(n / d, out, budget, rho_steps);
}

} // namespace

std::map<Integer, unsigned> factorize(const Integer& n, const FactorBudget& budget) {
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    Integer m = ::abs(n);
    std::map<Integer, unsigned> out;
    if (m == 1) return out;

    for (unsigned long p = 2; p <= budget.trial_limit && Integer(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out[Integer(static_cast<long>(p))] += 1;
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    if (m == 1) return out;
    if (is_probable_prime(m)) {
        out[m] += 1;
        return out;
    }
    unsigned long rho_steps = budget.rho_steps;
    factor_into(m, out, budget, &rho_steps);
    return out;
}

std::vector<Integer> divisors(const std::map<Integer, unsigned>& factors) {
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace agl
