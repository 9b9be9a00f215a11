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

// Shared helpers for the test binaries.

#ifndef QCH_TESTS_SUPPORT_HPP
#define QCH_TESTS_SUPPORT_HPP

#include <random>

#include "qch/scalars.hpp"
#include "qch/tensorop.hpp"

namespace qch::testing {

inline LaurentPoly random_laurent(std::mt19937& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms), expo(-3, 3), num(-5, 5), den(1, 4);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        p += LaurentPoly::monomial(c, expo(rng));
    }
    return p;
}

inline Scalar random_scalar(std::mt19937& rng) {
    LaurentPoly d;
    while (d.is_zero()) d = random_laurent(rng, 2);
    return Scalar(random_laurent(rng), d);
}

template <class K>
K random_value(std::mt19937& rng);

template <>
inline Scalar random_value<Scalar>(std::mt19937& rng) {
    return Scalar(random_laurent(rng, 2));
}

template <>
inline Rational random_value<Rational>(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

/// Random sparse operator with roughly `density` fraction of entries filled.
template <class K>
SparseOperator<K> random_operator(std::mt19937& rng, int N, int arity, double density = 0.3) {
    SparseOperator<K> op(N, arity);
    std::bernoulli_distribution fill(density);
    for (Index i = 0; i < op.dim(); ++i)
        for (Index j = 0; j < op.dim(); ++j)
            if (fill(rng)) op.set(i, j, random_value<K>(rng));
    return op;
}

}  // namespace qch::testing

#endif
