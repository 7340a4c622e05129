#include "agl/finite_set.hpp"

#include "agl/errors.hpp"
#include "agl/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace agl {

namespace {

void sort_unique(std::vector<GroupElement>& v) {
    std::sort(v.begin(), v.end(), CanonicalLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

FiniteSet FiniteSet::from_elements(const GroupDescriptor& group, std::vector<GroupElement> elems) {
    for (const auto& e : elems) {
        if (!on_group(group, e))
            throw NotOnGroup("element " + e.str() + " is not in " + group.str());
    }
    sort_unique(elems);
    FiniteSet s(group);
    s.elems_ = std::move(elems);
    return s;
}

FiniteSet FiniteSet::trusted(const GroupDescriptor& group, std::vector<GroupElement> sorted_unique) {
    FiniteSet s(group);
    s.elems_ = std::move(sorted_unique);
    return s;
}

bool FiniteSet::contains(const GroupElement& e) const {
    return std::binary_search(elems_.begin(), elems_.end(), e, CanonicalLess{});
}

SubgroupBasis::SubgroupBasis(GroupDescriptor g, std::vector<GroupElement> gens)
    : group(std::move(g)), generators(std::move(gens)) {
    for (const auto& e : generators)
        if (!on_group(group, e)) throw NotOnGroup("generator " + e.str() + " is not in " + group.str());
}

FiniteSet sumset(const FiniteSet& a, const FiniteSet& b, unsigned threads) {
    if (a.group() != b.group()) throw MixedGroups("sumset of sets over different groups");
    const GroupDescriptor& g = a.group();
    if (a.empty() || b.empty()) return FiniteSet(g);

    const std::size_t na = a.size();
    std::vector<std::vector<GroupElement>> parts(threads > 1 ? threads : 1);
    parallel_chunks(na, threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        auto& out = parts[chunk];
        out.reserve((end - begin) * b.size());
        for (std::size_t i = begin; i < end; ++i)
            for (const auto& q : b) out.push_back(op(g, a[i], q));
        std::sort(out.begin(), out.end(), CanonicalLess{});
        out.erase(std::unique(out.begin(), out.end()), out.end());
    });

    // Merge the sorted runs; the result does not depend on the partitioning.
    std::vector<GroupElement> merged = std::move(parts[0]);
    for (std::size_t k = 1; k < parts.size(); ++k) {
        if (parts[k].empty()) continue;
        std::vector<GroupElement> next;
        next.reserve(merged.size() + parts[k].size());
        std::merge(merged.begin(), merged.end(), parts[k].begin(), parts[k].end(),
                   std::back_inserter(next), CanonicalLess{});
        next.erase(std::unique(next.begin(), next.end()), next.end());
        merged = std::move(next);
    }
    return FiniteSet::trusted(g, std::move(merged));
}

FiniteSet iterated(const FiniteSet& a, unsigned g, unsigned threads) {
    if (g == 0) throw std::invalid_argument("iterated: g must be >= 1");
    if (g == 1) return a;
    // (g+h)A = gA + hA, so halve recursively.
    const FiniteSet half = iterated(a, g / 2, threads);
    FiniteSet out = sumset(half, half, threads);
    if (g % 2 == 1) out = sumset(out, a, threads);
    return out;
}

Rational doubling(const FiniteSet& a, unsigned threads) {
    if (a.empty()) throw EmptySet("doubling of the empty set");
    const FiniteSet twice = sumset(a, a, threads);
    return Rational(Integer(twice.size()), Integer(a.size()));
}

FiniteSet box(const SubgroupBasis& basis, unsigned long side, const std::optional<GroupElement>& base) {
    const GroupDescriptor& g = basis.group;
    if (base && !on_group(g, *base)) throw NotOnGroup("box base point is not in " + g.str());
    const long long l = static_cast<long long>(side);

    // multiples[i][l + n] = n * gen_i for n in [-L, L], built incrementally.
    std::vector<std::vector<GroupElement>> multiples;
    for (const auto& gen : basis.generators) {
        std::vector<GroupElement> m(2 * side + 1, identity_element(g));
        for (long long n = 1; n <= l; ++n) {
            m[static_cast<std::size_t>(l + n)] = op(g, m[static_cast<std::size_t>(l + n - 1)], gen);
            m[static_cast<std::size_t>(l - n)] = inverse(g, m[static_cast<std::size_t>(l + n)]);
        }
        multiples.push_back(std::move(m));
    }

    std::vector<GroupElement> combos{base ? *base : identity_element(g)};
    for (const auto& m : multiples) {
        std::vector<GroupElement> next;
        next.reserve(combos.size() * m.size());
        for (const auto& p : combos)
            for (const auto& q : m) next.push_back(op(g, p, q));
        combos = std::move(next);
    }
    return FiniteSet::from_elements(g, std::move(combos));
}

std::string doubling_stats_csv(const std::vector<FiniteSet>& sets, unsigned threads) {
    std::ostringstream os;
    os << "size,doubling\n";
    for (const auto& s : sets) os << s.size() << "," << doubling(s, threads).str() << "\n";
    return os.str();
}

} // namespace agl
