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

#ifndef QCH_KERNELS_HPP
#define QCH_KERNELS_HPP

#include "qch/tensorop.hpp"

namespace qch::kernels {

// Sparse product XY. The serial version is the reference; the parallel one
// splits rows across OpenMP threads and must agree with it exactly.
template <class K>
SparseOperator<K> compose_serial(const SparseOperator<K>& x, const SparseOperator<K>& y);
template <class K>
SparseOperator<K> compose_parallel(const SparseOperator<K>& x, const SparseOperator<K>& y);

/// Rows below this dimension are multiplied serially by operator*.
inline constexpr Index kParallelThreshold = 64;

int max_threads();
/// OpenMP thread number inside a parallel region, 0 outside.
int thread_id();

}  // namespace qch::kernels

#endif
