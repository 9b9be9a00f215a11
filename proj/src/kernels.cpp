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

#include "qch/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qch::kernels {

namespace {

// Dense accumulator for one output row, reset lazily through the touched list.
template <class K>
struct RowScratch {
    explicit RowScratch(Index dim) : acc(dim, K(0)), mark(dim, 0) {}
    std::vector<K> acc;
    std::vector<char> mark;
    std::vector<Index> touched;
};

template <class K>
typename SparseOperator<K>::Row multiply_row(const SparseOperator<K>& x, const SparseOperator<K>& y, Index i,
                                             RowScratch<K>& s) {
    for (const auto& [k, xv] : x.row(i))
        for (const auto& [j, yv] : y.row(k)) {
            if (!s.mark[j]) {
                s.mark[j] = 1;
                s.touched.push_back(j);
                s.acc[j] = xv * yv;
            } else {
                s.acc[j] += xv * yv;
            }
        }
    std::sort(s.touched.begin(), s.touched.end());
    typename SparseOperator<K>::Row out;
    out.reserve(s.touched.size());
    for (Index j : s.touched) {
        if (!qch::is_zero(s.acc[j])) out.emplace_back(j, std::move(s.acc[j]));
        s.acc[j] = K(0);
        s.mark[j] = 0;
    }
    s.touched.clear();
    return out;
}

template <class K>
void check_shapes(const SparseOperator<K>& x, const SparseOperator<K>& y) {
    if (x.N() != y.N() || x.arity() != y.arity()) throw ShapeError("operator shapes differ in product");
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int thread_id() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

template <class K>
SparseOperator<K> compose_serial(const SparseOperator<K>& x, const SparseOperator<K>& y) {
    check_shapes(x, y);
    SparseOperator<K> out(x.N(), x.arity());
    RowScratch<K> scratch(x.dim());
    for (Index i = 0; i < x.dim(); ++i) out.set_row(i, multiply_row(x, y, i, scratch));
    return out;
}

template <class K>
SparseOperator<K> compose_parallel(const SparseOperator<K>& x, const SparseOperator<K>& y) {
    check_shapes(x, y);
    SparseOperator<K> out(x.N(), x.arity());
    const long dim = static_cast<long>(x.dim());
#pragma omp parallel
    {
        RowScratch<K> scratch(x.dim());
#pragma omp for schedule(dynamic, 8)
        for (long i = 0; i < dim; ++i) out.set_row(static_cast<Index>(i), multiply_row(x, y, static_cast<Index>(i), scratch));
    }
    return out;
}

template SparseOperator<Scalar> compose_serial(const SparseOperator<Scalar>&, const SparseOperator<Scalar>&);
template SparseOperator<Scalar> compose_parallel(const SparseOperator<Scalar>&, const SparseOperator<Scalar>&);
template SparseOperator<Rational> compose_serial(const SparseOperator<Rational>&, const SparseOperator<Rational>&);
template SparseOperator<Rational> compose_parallel(const SparseOperator<Rational>&,
                                                   const SparseOperator<Rational>&);

}  // namespace qch::kernels
