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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qch/rmatrix.hpp"

using namespace qch;

namespace {

const FieldContext<Scalar> sym;
const FieldContext<Rational> at_one(1);

Index pi(int N, int a, int b) { return static_cast<Index>((a - 1) * N + (b - 1)); }

}  // namespace

TEST_CASE("permutation") {
    auto p = permutation(2);
    CHECK(p.op.get(pi(2, 1, 2), pi(2, 2, 1)) == Scalar(1));
    CHECK(p.op * p.op == SparseOperator<Scalar>::identity(2, 2));
    CHECK(hecke_check(lift(p.op, at_one), at_one));
    CHECK_FALSE(hecke_check(p.op, sym));
    CHECK_FALSE(hecke_check(p.op * Scalar(2), sym));
    CHECK_FALSE(hecke_check(lift(p.op, at_one) * Rational(2), at_one));
    CHECK(yang_baxter_check(p.op));
}

TEST_CASE("super permutation") {
    auto p = super_permutation(1, 1);
    CHECK(p.op.get(pi(2, 2, 2), pi(2, 2, 2)) == Scalar(-1));
    CHECK(p.op.get(pi(2, 1, 2), pi(2, 2, 1)) == Scalar(1));
    CHECK(super_permutation(3, 0).op == permutation(3).op);
    CHECK(yang_baxter_check(p.op));
    CHECK(hecke_check(lift(p.op, at_one), at_one));
}

TEST_CASE("Drinfeld-Jimbo R-matrices") {
    const Scalar q = Scalar::q(), qi = Scalar::q_pow(-1);
    auto r = dj_glmn(1, 1);
    // block on span{v1 v2, v2 v1}
    CHECK(r.op.get(pi(2, 1, 2), pi(2, 1, 2)) == q - qi);
    CHECK(r.op.get(pi(2, 1, 2), pi(2, 2, 1)) == Scalar(1));
    CHECK(r.op.get(pi(2, 2, 1), pi(2, 1, 2)) == Scalar(1));
    CHECK(r.op.get(pi(2, 2, 1), pi(2, 2, 1)).is_zero());
    // eigenvalues q and -q^-1: characteristic polynomial of the block
    Scalar tr = q - qi, det = Scalar(-1);
    CHECK(q * q - tr * q + det == Scalar(0));
    CHECK(qi * qi + tr * qi + det == Scalar(0));
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 0}, {1, 1}, {2, 1}, {1, 2}, {0, 2}, {3, 0}}) {
        auto d = dj_glmn(m, n);
        CAPTURE(d.label);
        CHECK(yang_baxter_check(d.op));
        CHECK(hecke_check(d.op, sym));
    }
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n) {
            if (m + n == 0) continue;
            CHECK(lift(dj_glmn(m, n).op, at_one) == lift(super_permutation(m, n).op, at_one));
        }
}

TEST_CASE("broken Yang-Baxter fixture") {
    auto p = permutation(2).op;
    p.add_to(pi(2, 1, 1), pi(2, 1, 2), Scalar(1));
    CHECK_FALSE(yang_baxter_check(p));
}

TEST_CASE("compatible pairs and twist") {
    auto r = dj_glmn(1, 1).op;
    auto p = permutation(2).op;
    CHECK(compatible_check(r, r));
    CHECK(compatible_check(r, p));
    auto r2 = substitute_q_power(dj_glmn(1, 1), 2).op;
    CHECK(yang_baxter_check(r2));
    CHECK_FALSE(compatible_check(r, r2));
    auto rf = twist_rf(r, p);
    CHECK(rf == p * inverse(r) * p);
    CHECK(yang_baxter_check(rf));
    CHECK(compatible_check(rf, p));
    CHECK(twist_rf(r, r) == inverse(r));
    CHECK_NOTHROW(skew_inverse(rf));
    CHECK_NOTHROW(skew_inverse(twist_rf(r, r)));
    auto g = dj_glmn(2, 1).op;
    CHECK(compatible_check(g, permutation(3).op));
}

TEST_CASE("strict skew invertibility of shipped R-matrices") {
    for (auto spec : {dj_glmn(2, 0), dj_glmn(1, 1), dj_glmn(2, 1), dj_glmn(1, 2)}) {
        CAPTURE(spec.label);
        auto d = d_operator(spec.op);
        CHECK(is_invertible(d));
        auto dp = d_operator(permutation(spec.N()).op);
        CHECK(is_invertible(dp));
        CHECK_NOTHROW(skew_inverse(twist_rf(spec.op, permutation(spec.N()).op)));
        CHECK_NOTHROW(skew_inverse(twist_rf(spec.op, spec.op)));
        // [R, D (x) D] = 0
        auto dd = tensor_power(d, 2);
        CHECK(spec.op * dd == dd * spec.op);
    }
    auto ds = d_operator(lift(super_permutation(1, 1).op, at_one));
    CHECK(ds(0, 0) == 1);
    CHECK(ds(1, 1) == -1);
}

TEST_CASE("JSON round trip and errors") {
    auto r = dj_glmn(1, 1);
    auto back = rmatrix_from_json(rmatrix_to_json(r));
    CHECK(back.op == r.op);
    CHECK_THROWS_AS(rmatrix_from_json("{"), ConfigError);
    CHECK_THROWS_AS(rmatrix_from_json(R"({"N":2,"entries":[{"in":[1,3],"out":[1,1],"coeff":"1"}]})"), ConfigError);
    CHECK_THROWS_AS(rmatrix_from_json(R"({"N":2,"entries":[{"in":[1,1],"out":[1,1],"coeff":"q+"}]})"), ConfigError);
    CHECK_THROWS_AS(rmatrix_from_json(R"({"entries":[]})"), ConfigError);
    auto p = rmatrix_from_json(R"({"N":2,"entries":[{"in":[1,2],"out":[2,1],"coeff":"1"},{"in":[2,1],"out":[1,2],"coeff":"1"},
        {"in":[1,1],"out":[1,1],"coeff":"1"},{"in":[2,2],"out":[2,2],"coeff":"1"}]})");
    CHECK(p.op == permutation(2).op);
}
