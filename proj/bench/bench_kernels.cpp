/*
   Copyright 2026 The qch Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <stdexcept>

#include "qch/chverify.hpp"
#include "qch/kernels.hpp"
#include "qch/rmatrix.hpp"

using namespace qch;

namespace {

// A dense-ish Hecke element on k strands: the product of all generators
// plus the identity, squared.
template <class K>
SparseOperator<K> hecke_word(const HeckeRep<K>& rep, int N, int k) {
    auto x = SparseOperator<K>::identity(N, k);
    for (int i = 1; i < k; ++i) x = x * (rep.generator(i, k) + SparseOperator<K>::identity(N, k));
    return x;
}

template <class K>
void compose(benchmark::State& st, const FieldContext<K>& ctx, bool parallel) {
    const int k = static_cast<int>(st.range(0));
    auto r = dj_glmn(2, 1).op;
    HeckeRep<K> rep(lift(r, ctx), ctx);
    const auto x = hecke_word(rep, 3, k);
    const auto y = kernels::compose_serial(x, x);
    if (!(kernels::compose_parallel(x, y) == kernels::compose_serial(x, y)))
        throw std::logic_error("parallel product differs from the serial one");
    for (auto _ : st) {
        auto z = parallel ? kernels::compose_parallel(x, y) : kernels::compose_serial(x, y);
        benchmark::DoNotOptimize(z);
    }
    st.counters["dim"] = static_cast<double>(x.dim());
}

void BM_ComposeSerialRational(benchmark::State& st) { compose(st, FieldContext<Rational>(Rational(6, 5)), false); }
void BM_ComposeParallelRational(benchmark::State& st) { compose(st, FieldContext<Rational>(Rational(6, 5)), true); }
void BM_ComposeSerialSymbolic(benchmark::State& st) { compose(st, FieldContext<Scalar>{}, false); }
void BM_ComposeParallelSymbolic(benchmark::State& st) { compose(st, FieldContext<Scalar>{}, true); }

// Normal form of the (2|1) left side, one thread against all of them.
void normal_forms(benchmark::State& st, int threads) {
    FieldContext<Rational> num(Rational(6, 5));
    QuantumMatrixAlgebra<Rational> a(lift(dj_glmn(2, 1).op, num), lift(permutation(3).op, num), num);
    const auto lhs = ch_lhs(a, 2, 1);
    a.normal_form(lhs);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(threads > 0 ? threads : saved);
    for (auto _ : st) {
        auto nf = a.normal_form(lhs);
        benchmark::DoNotOptimize(nf);
    }
    omp_set_num_threads(saved);
}

void BM_NormalFormSerial(benchmark::State& st) { normal_forms(st, 1); }
void BM_NormalFormParallel(benchmark::State& st) { normal_forms(st, 0); }

}  // namespace

BENCHMARK(BM_ComposeSerialRational)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComposeParallelRational)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComposeSerialSymbolic)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComposeParallelSymbolic)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalFormSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalFormParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
