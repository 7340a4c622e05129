#include "agl/group.hpp"

#include <benchmark/benchmark.h>

using namespace agl;

namespace {

void BM_EcAdd(benchmark::State& state) {
    const auto e = GroupDescriptor::elliptic(0, -2);
    const auto p = GroupElement::ec_affine(3, 5);
    auto q = scalar_mul(e, 2, p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(op(e, p, q));
    }
}
BENCHMARK(BM_EcAdd);

void BM_EcScalarMul(benchmark::State& state) {
    const auto e = GroupDescriptor::elliptic(0, -2);
    const auto p = GroupElement::ec_affine(3, 5);
    const long long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scalar_mul(e, n, p));
    }
}
BENCHMARK(BM_EcScalarMul)->Arg(4)->Arg(8)->Arg(16);

void BM_MulOp(benchmark::State& state) {
    const auto gm = GroupDescriptor::multiplicative();
    const auto p = GroupElement::mul(Rational(Integer(355), Integer(113)));
    const auto q = GroupElement::mul(Rational(Integer(-777), Integer(1000)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(op(gm, p, q));
    }
}
BENCHMARK(BM_MulOp);

} // namespace
