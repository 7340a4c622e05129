#include "agl/structure.hpp"

#include "agl/errors.hpp"
#include "agl/linalg.hpp"
#include "agl/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace agl {

VarietySpec::VarietySpec(std::size_t g, std::vector<MultiPoly> eqs, std::optional<std::size_t> dim, GroupDescriptor grp)
    : num_vars(g), equations(std::move(eqs)), declared_dim(dim), group(std::move(grp)) {
    if (group.is_elliptic())
        throw std::invalid_argument("VarietySpec: the group must be Ga or Gm");
    for (const auto& e : equations)
        if (e.num_vars() != num_vars) throw std::invalid_argument("VarietySpec: equation has wrong variable count");
}

bool operator<(const TorsionPoint& a, const TorsionPoint& b) {
    if (a.free_part != b.free_part) return a.free_part < b.free_part;
    if (a.res_n != b.res_n) return a.res_n < b.res_n;
    return a.res_m < b.res_m;
}

TorsionSet::TorsionSet(std::size_t free_rank, std::uint64_t mod_n, std::uint64_t mod_m, std::vector<TorsionPoint> pts)
    : l(free_rank), n(mod_n), m(mod_m), points(std::move(pts)) {
    if (n == 0 || m == 0) throw std::invalid_argument("TorsionSet: moduli must be positive");
    for (auto& p : points) {
        if (p.free_part.size() != l) throw std::invalid_argument("TorsionSet: free part has wrong length");
        p.res_n %= n;
        p.res_m %= m;
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

FiniteSet ruzsa_cover(const FiniteSet& a, const FiniteSet& b, unsigned threads) {
    if (a.group() != b.group()) throw MixedGroups("ruzsa_cover over different groups");
    if (a.empty() || b.empty()) throw EmptySet("ruzsa_cover needs non-empty sets");
    const GroupDescriptor& g = a.group();

    // Greedy maximal disjoint family of translates x + B, canonical order.
    std::set<GroupElement, CanonicalLess> covered;
    std::vector<GroupElement> chosen;
    std::vector<GroupElement> translate;
    translate.reserve(b.size());
    for (const auto& x : a) {
        translate.clear();
        bool disjoint = true;
        for (const auto& q : b) {
            GroupElement t = op(g, x, q);
            if (covered.count(t)) {
                disjoint = false;
                break;
            }
            translate.push_back(std::move(t));
        }
        if (!disjoint) continue;
        covered.insert(translate.begin(), translate.end());
        chosen.push_back(x);
    }
    FiniteSet cover = FiniteSet::from_elements(g, std::move(chosen));

    // Re-verify both postconditions by enumeration before returning.
    const FiniteSet ab = sumset(a, b, threads);
    const std::uint64_t bound = (ab.size() + b.size() - 1) / b.size();
    if (cover.size() > bound)
        throw std::logic_error("ruzsa_cover: size bound violated");
    std::vector<GroupElement> b_inv;
    b_inv.reserve(b.size());
    for (const auto& q : b) b_inv.push_back(inverse(g, q));
    const FiniteSet diff = sumset(b, FiniteSet::from_elements(g, std::move(b_inv)), threads);
    const FiniteSet reach = sumset(cover, diff, threads);
    for (const auto& x : a)
        if (!reach.contains(x)) throw std::logic_error("ruzsa_cover: covering inclusion violated");
    return cover;
}

namespace {

std::vector<Integer> lift_point(const TorsionPoint& p) {
    std::vector<Integer> v = p.free_part;
    v.push_back(Integer(static_cast<unsigned long>(p.res_n)));
    v.push_back(Integer(static_cast<unsigned long>(p.res_m)));
    return v;
}

// The quadruple property s1+s2 = s3+s4 <=> lift(s1)+lift(s2) = lift(s3)+lift(s4)
// holds iff, over all unordered pairs, equal group-side pair sums always have
// equal lifted pair sums and vice versa; checking pairs this way covers every
// quadruple.
void verify_freiman_pairs(const TorsionSet& cell, const std::vector<std::vector<Integer>>& lifted) {
    using TorsionKey = std::pair<std::vector<Integer>, std::pair<std::uint64_t, std::uint64_t>>;
    std::map<std::vector<Integer>, TorsionKey> lift_to_torsion;
    std::map<TorsionKey, std::vector<Integer>> torsion_to_lift;
    const std::size_t n = cell.points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            std::vector<Integer> lift_sum = lifted[i];
            for (std::size_t k = 0; k < lift_sum.size(); ++k) lift_sum[k] += lifted[j][k];
            std::vector<Integer> free_sum = cell.points[i].free_part;
            for (std::size_t k = 0; k < free_sum.size(); ++k) free_sum[k] += cell.points[j].free_part[k];
            const TorsionKey group_sum{std::move(free_sum),
                                       {(cell.points[i].res_n + cell.points[j].res_n) % cell.n,
                                        (cell.points[i].res_m + cell.points[j].res_m) % cell.m}};
            auto [it1, fresh1] = lift_to_torsion.emplace(lift_sum, group_sum);
            if (!fresh1 && it1->second != group_sum)
                throw std::logic_error("torsion_unfold: lifted sums collide with distinct group sums");
            auto [it2, fresh2] = torsion_to_lift.emplace(group_sum, lift_sum);
            if (!fresh2 && it2->second != lift_sum)
                throw std::logic_error("torsion_unfold: group sums collide with distinct lifted sums");
        }
    }
}

} // namespace

TorsionUnfolding torsion_unfold(const TorsionSet& s) {
    if (s.points.empty()) throw EmptySet("torsion_unfold of an empty set");

    // Interval index of a residue x mod n: floor(10 x / n), so cell (i, j)
    // collects points with residues in [i n/10, (i+1) n/10) x [j m/10, ...).
    auto cell_of = [&s](const TorsionPoint& p) {
        const std::uint64_t i = (10 * p.res_n) / s.n;
        const std::uint64_t j = (10 * p.res_m) / s.m;
        return std::make_pair(i, j);
    };

    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<TorsionPoint>> cells;
    for (const auto& p : s.points) cells[cell_of(p)].push_back(p);

    // Densest cell, ties to the smallest (i, j).
    auto best = cells.begin();
    for (auto it = cells.begin(); it != cells.end(); ++it)
        if (it->second.size() > best->second.size()) best = it;

    TorsionSet cell(s.l, s.n, s.m, best->second);
    if (cell.points.size() * 100 < s.points.size())
        throw std::logic_error("torsion_unfold: pigeonhole density violated");

    TorsionUnfolding out{std::move(cell), {}};
    out.lifted.reserve(out.cell.points.size());
    for (const auto& p : out.cell.points) out.lifted.push_back(lift_point(p));

    if (out.cell.points.size() <= 40) verify_freiman_pairs(out.cell, out.lifted);
    return out;
}

std::size_t mult_rank(const FiniteSet& a, const FactorBudget& budget) {
    if (a.group().kind() != GroupKind::Multiplicative)
        throw MixedGroups("mult_rank requires a set over the multiplicative group");

    // Exponent vector of each element over the primes of its numerator and
    // denominator; sign is torsion and ignored.
    std::map<Integer, std::size_t> prime_col;
    std::vector<std::map<Integer, long>> exponents;
    for (const auto& e : a) {
        std::map<Integer, long> vec;
        for (const auto& [p, k] : factorize(e.value().num(), budget)) vec[p] += static_cast<long>(k);
        for (const auto& [p, k] : factorize(e.value().den(), budget)) vec[p] -= static_cast<long>(k);
        for (const auto& [p, k] : vec)
            if (k != 0) prime_col.emplace(p, prime_col.size());
        exponents.push_back(std::move(vec));
    }
    if (prime_col.empty()) return 0;

    std::vector<std::vector<Integer>> rows;
    rows.reserve(exponents.size());
    for (const auto& vec : exponents) {
        std::vector<Integer> row(prime_col.size(), Integer(0));
        for (const auto& [p, k] : vec)
            if (k != 0) row[prime_col[p]] = Integer(k);
        rows.push_back(std::move(row));
    }
    return rank_bareiss(std::move(rows));
}

bool satisfies(const VarietySpec& v, const std::vector<Rational>& tuple) {
    if (tuple.size() != v.num_vars) throw DimensionMismatch("satisfies: tuple has wrong length");
    for (const auto& eq : v.equations)
        if (!eq.eval(tuple).is_zero()) return false;
    return true;
}

namespace {

// Highest 1-based variable index an equation involves (0 for constants).
std::size_t max_var_of(const MultiPoly& p) {
    std::size_t mv = 0;
    for (std::size_t i = 0; i < p.num_vars(); ++i)
        if (p.degree_in(i) > 0) mv = i + 1;
    return mv;
}

std::uint64_t dfs_count(const VarietySpec& v, const std::vector<const GroupElement*>& values,
                        const std::vector<std::vector<const MultiPoly*>>& at_depth,
                        std::vector<Rational>& tuple, std::size_t depth) {
    if (depth == v.num_vars) return 1;
    std::uint64_t total = 0;
    for (const auto* e : values) {
        tuple[depth] = e->value();
        bool ok = true;
        for (const auto* eq : at_depth[depth + 1]) {
            if (!eq->eval(tuple).is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) total += dfs_count(v, values, at_depth, tuple, depth + 1);
    }
    return total;
}

} // namespace

std::uint64_t count_points(const VarietySpec& v, const FiniteSet& a, std::uint64_t max_tuples, unsigned threads) {
    if (a.group() != v.group) throw MixedGroups("count_points: set group differs from variety group");
    // |A|^g within budget, checked exactly.
    Integer tuples;
    mpz_ui_pow_ui(tuples.get_mpz_t(), static_cast<unsigned long>(a.size()), static_cast<unsigned long>(v.num_vars));
    if (cmp(tuples, Integer(static_cast<unsigned long>(max_tuples))) > 0)
        throw BudgetExceeded("count_points: |A|^g = " + tuples.get_str() + " exceeds the budget of " + std::to_string(max_tuples));
    if (a.empty()) return v.num_vars == 0 ? 1 : 0;

    // Bucket equations by the depth at which all their variables are set.
    // Equations evaluate with unset variables defaulted, so only prefix
    // equations are safe to test early; pad with a dummy eval guard.
    std::vector<std::vector<const MultiPoly*>> at_depth(v.num_vars + 1);
    for (const auto& eq : v.equations) at_depth[std::max<std::size_t>(max_var_of(eq), 1)].push_back(&eq);

    std::vector<const GroupElement*> values;
    values.reserve(a.size());
    for (const auto& e : a) values.push_back(&e);

    std::vector<std::uint64_t> partial(threads > 1 ? threads : 1, 0);
    parallel_chunks(a.size(), threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::vector<Rational> tuple(v.num_vars, Rational(0));
        std::uint64_t local = 0;
        for (std::size_t i = begin; i < end; ++i) {
            tuple[0] = values[i]->value();
            bool ok = true;
            for (const auto* eq : at_depth[1]) {
                if (!eq->eval(tuple).is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (ok) local += v.num_vars == 1 ? 1 : dfs_count(v, values, at_depth, tuple, 1);
        }
        partial[chunk] += local;
    });
    std::uint64_t total = 0;
    for (auto x : partial) total += x;
    return total;
}

std::string count_records_csv(const std::vector<CountRecord>& rows) {
    std::ostringstream os;
    os << "set_size,count,declared_dim,doubling\n";
    for (const auto& r : rows) {
        os << r.set_size << "," << r.count << ",";
        if (r.declared_dim) os << *r.declared_dim;
        os << "," << r.doubling.str() << "\n";
    }
    return os.str();
}

} // namespace agl
