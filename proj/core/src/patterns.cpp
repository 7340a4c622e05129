#include "agl/patterns.hpp"

#include "agl/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace agl {

GapSpec::GapSpec(GroupDescriptor g, GroupElement base_point,
                 std::vector<GroupElement> step_points, std::vector<unsigned long> side_lengths)
    : group(std::move(g)), base(std::move(base_point)), steps(std::move(step_points)), lengths(std::move(side_lengths)) {
    if (steps.empty() || steps.size() != lengths.size())
        throw std::invalid_argument("GapSpec: steps and lengths must be non-empty and of equal length");
    for (auto l : lengths)
        if (l < 2) throw std::invalid_argument("GapSpec: lengths must be >= 2");
    if (!on_group(group, base)) throw NotOnGroup("GapSpec base is not in " + group.str());
    for (const auto& s : steps)
        if (!on_group(group, s)) throw NotOnGroup("GapSpec step is not in " + group.str());
}

std::pair<FiniteSet, bool> gap_enumerate(const GapSpec& spec) {
    const GroupDescriptor& g = spec.group;
    unsigned long long total = 1;
    for (auto l : spec.lengths) total *= l;

    std::vector<GroupElement> combos{spec.base};
    for (std::size_t i = 0; i < spec.steps.size(); ++i) {
        // multiples[l] = l * step_i, built incrementally.
        std::vector<GroupElement> multiples(spec.lengths[i], identity_element(g));
        for (unsigned long l = 1; l < spec.lengths[i]; ++l)
            multiples[l] = op(g, multiples[l - 1], spec.steps[i]);
        std::vector<GroupElement> next;
        next.reserve(combos.size() * multiples.size());
        for (const auto& p : combos)
            for (const auto& m : multiples) next.push_back(op(g, p, m));
        combos = std::move(next);
    }
    FiniteSet set = FiniteSet::from_elements(g, std::move(combos));
    const bool proper = set.size() == total;
    return {std::move(set), proper};
}

namespace {

std::vector<Rational> dedup_sorted(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

PatternReport longest_ap(const std::vector<Rational>& values) {
    const std::vector<Rational> v = dedup_sorted(values);
    if (v.empty()) throw EmptySet("longest_ap of the empty set");

    PatternReport best{PatternKind::AP, 1, v.front(), Rational(0)};
    const std::size_t n = v.size();
    std::vector<std::map<Rational, std::size_t>> dp(n);
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Rational d = v[j] - v[i];
            const auto it = dp[i].find(d);
            const std::size_t len = (it == dp[i].end() ? 1 : it->second) + 1;
            dp[j][d] = len;
            const Rational u = v[j] - Rational(Integer(static_cast<long>(len - 1))) * d;
            if (len > best.length || (len == best.length && (u < best.first || (u == best.first && d < best.step)))) {
                best.length = len;
                best.first = u;
                best.step = d;
            }
        }
    }
    return best;
}

PatternReport longest_gp(const std::vector<Rational>& values) {
    std::vector<Rational> v = dedup_sorted(values);
    if (v.empty()) throw EmptySet("longest_gp of the empty set");

    v.erase(std::remove_if(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); }), v.end());
    if (v.empty()) {
        // Input was {0}: a zero cannot sit in a ratio chain, report it alone.
        return PatternReport{PatternKind::GP, 1, Rational(0), Rational(1)};
    }

    // Process by increasing absolute value so that canonical ratios (|q| > 1)
    // always extend forward.  Equal absolute values differ by sign only and
    // ratio -1 is excluded.
    std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) {
        const Rational aa = a.abs(), ab = b.abs();
        if (aa != ab) return aa < ab;
        return a < b;
    });

    PatternReport best{PatternKind::GP, 1, *std::min_element(v.begin(), v.end()), Rational(1)};
    const std::size_t n = v.size();
    std::vector<std::map<Rational, std::size_t>> dp(n);
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (v[i].abs() == v[j].abs()) continue; // ratio would be -1
            const Rational q = v[j] / v[i];
            const auto it = dp[i].find(q);
            const std::size_t len = (it == dp[i].end() ? 1 : it->second) + 1;
            dp[j][q] = len;
            const Rational u = v[j] / q.pow(static_cast<long>(len - 1));
            if (len > best.length || (len == best.length && (u < best.first || (u == best.first && q < best.step)))) {
                best.length = len;
                best.first = u;
                best.step = q;
            }
        }
    }
    return best;
}

PatternReport longest_square_ap(const std::vector<Rational>& values) {
    const std::vector<Rational> input = dedup_sorted(values);
    if (input.empty()) throw EmptySet("longest_square_ap of the empty set");

    // Signed square roots of every rational square (0 contributes once).
    std::vector<Rational> roots;
    for (const auto& a : input) {
        if (const auto r = a.sqrt_exact()) {
            roots.push_back(*r);
            if (!r->is_zero()) roots.push_back(-*r);
        }
    }
    const std::vector<Rational> v = dedup_sorted(roots);
    if (v.empty()) return PatternReport{PatternKind::SquareAP, 0, Rational(0), Rational(0)};

    // Singleton witness: the smallest non-negative root (roots are symmetric,
    // so one always exists).
    const auto first_nonneg = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x.sign() >= 0; });
    PatternReport best{PatternKind::SquareAP, 1, *first_nonneg, Rational(0)};
    const std::size_t n = v.size();

    // dp[j][d]: longest chain ending at v[j] with difference d whose squares
    // are pairwise distinct.  Two chain entries v[j] - k1 d and v[j] - k2 d
    // square to the same value iff k1 + k2 = 2 v[j] / d, so distinctness of a
    // length-L chain is exactly "2 v[j] / d is not an integer in [1, 2L-3]".
    std::vector<std::map<Rational, std::size_t>> dp(n);
    auto injectivity_cap = [](const Rational& end, const Rational& d) -> std::size_t {
        const Rational s = (Rational(2) * end) / d;
        if (!s.is_integer() || s.sign() <= 0) return std::numeric_limits<std::size_t>::max();
        const Integer num = s.num();
        if (!num.fits_ulong_p()) return std::numeric_limits<std::size_t>::max();
        return static_cast<std::size_t>((num.get_ui() + 2) / 2);
    };

    auto consider = [&best](std::size_t len, const Rational& end, const Rational& d) {
        // Canonical representative: the chain and its mirror (-end, same d)
        // carry the same squares; prefer the one with non-negative sum.
        Rational u = end - Rational(Integer(static_cast<long>(len - 1))) * d;
        const Rational sum = Rational(Integer(static_cast<long>(len))) * u +
                             d * Rational(Integer(static_cast<long>(len * (len - 1) / 2)));
        if (sum.sign() < 0) u = -end;
        if (len > best.length || (len == best.length && (d < best.step || (d == best.step && u < best.first)))) {
            best.length = len;
            best.first = u;
            best.step = d;
        }
    };

    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Rational d = v[j] - v[i];
            const auto it = dp[i].find(d);
            std::size_t len = (it == dp[i].end() ? 1 : it->second) + 1;
            len = std::min(len, injectivity_cap(v[j], d));
            dp[j][d] = len;
            if (len >= 2) consider(len, v[j], d);
        }
    }
    return best;
}

long long canonical_degree(const std::vector<unsigned long>& degrees, std::size_t t) {
    if (degrees.size() != t) throw std::invalid_argument("canonical_degree: need exactly t degrees");
    long long total = 0;
    for (auto d : degrees) total += static_cast<long long>(d);
    return total + static_cast<long long>(t) - 3;
}

} // namespace agl
