#include "agl/finite_set.hpp"
#include "agl/multipoly.hpp"
#include "agl/structure.hpp"

#include <benchmark/benchmark.h>

using namespace agl;

namespace {

FiniteSet powers_of_two(unsigned n) {
    const auto gm = GroupDescriptor::multiplicative();
    std::vector<GroupElement> e;
    Rational x(1);
    for (unsigned i = 0; i < n; ++i, x *= Rational(2)) e.push_back(GroupElement::mul(x));
    return FiniteSet::from_elements(gm, e);
}

void BM_Sumset(benchmark::State& state) {
    const auto a = powers_of_two(static_cast<unsigned>(state.range(0)));
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sumset(a, a, threads));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Sumset)->Args({64, 1})->Args({256, 1})->Args({256, 4});

void BM_Box(benchmark::State& state) {
    const auto gm = GroupDescriptor::multiplicative();
    const SubgroupBasis basis(gm, {GroupElement::mul(2), GroupElement::mul(3), GroupElement::mul(5)});
    const auto side = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(box(basis, side));
    }
}
BENCHMARK(BM_Box)->Arg(1)->Arg(2)->Arg(3);

void BM_CountPoints(benchmark::State& state) {
    const auto gm = GroupDescriptor::multiplicative();
    const VarietySpec v(3, {MultiPoly::parse("X2X3 - X1 + 1")}, 2, gm);
    std::vector<GroupElement> e;
    for (long i = -static_cast<long>(state.range(0)); i <= state.range(0); ++i)
        e.push_back(GroupElement::mul(Rational(2).pow(i)));
    e.push_back(GroupElement::mul(3));
    const auto a = FiniteSet::from_elements(gm, e);
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_points(v, a, 100000000, threads));
    }
}
BENCHMARK(BM_CountPoints)->Args({6, 1})->Args({6, 4})->Args({10, 4});

} // namespace
