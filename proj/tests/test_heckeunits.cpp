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
#include "qch/heckeunits.hpp"
#include "qch/rmatrix.hpp"

using namespace qch;

namespace {

using Op = SparseOperator<Scalar>;

StandardTableau T(std::vector<std::vector<int>> rows) { return StandardTableau(std::move(rows)); }

HeckeRep<Scalar> rep11(StrandOrder o = StrandOrder::Forward) {
    return HeckeRep<Scalar>(dj_glmn(1, 1).op, FieldContext<Scalar>{}, o);
}

Scalar qp(int e) { return Scalar::q_pow(e); }

}  // namespace

TEST_CASE("construction rejects non-Hecke R") {
    CHECK_THROWS_AS(HeckeRep<Scalar>(permutation(2).op, FieldContext<Scalar>{}), DomainError);
    CHECK_NOTHROW(HeckeRep<Rational>(lift(permutation(2).op, FieldContext<Rational>(1)), FieldContext<Rational>(1)));
}

TEST_CASE("arity two units") {
    auto rep = rep11();
    const auto& r = rep.r();
    auto id = Op::identity(2, 2);
    auto e2 = rep.diagonal_unit(T({{1, 2}}));
    auto e11 = rep.diagonal_unit(T({{1}, {2}}));
    CHECK(e2 == (r + id * qp(-1)) * (Scalar(1) / qnum(2)));
    CHECK(e11 == (id * qp(1) - r) * (Scalar(1) / qnum(2)));
    CHECK(e2 + e11 == id);
    // R = q E(2) - q^-1 E(11)
    CHECK(r == e2 * qp(1) - e11 * qp(-1));
}

TEST_CASE("Jucys-Murphy elements") {
    auto rep = rep11();
    auto J = rep.jm_elements(3);
    auto id = Op::identity(2, 3);
    auto j2 = rep.jm_elements(2)[1];
    auto id2 = Op::identity(2, 2);
    CHECK(((j2 - id2 * qp(2)) * (j2 - id2 * qp(-2))).is_zero());
    auto e2 = rep.diagonal_unit(T({{1, 2}}));
    CHECK(j2 * e2 == e2 * qp(2));
    for (std::size_t a = 0; a < J.size(); ++a)
        for (std::size_t b = 0; b < J.size(); ++b) CHECK(J[a] * J[b] == J[b] * J[a]);
    // annihilating polynomial of J_3 over contents -2..2
    Op prod = id;
    for (int c = -2; c <= 2; ++c) prod = prod * (J[2] - id * qp(2 * c));
    CHECK(prod.is_zero());
    // J and L are related by J = 1 + (q - q^-1) L
    const auto& L = rep.additive_jm(3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(J[i] == id + L[i] * (qp(1) - qp(-1)));
}

TEST_CASE("projector equals full-spectrum reference") {
    auto rep = rep11();
    for (int k = 1; k <= 4; ++k)
        for (const auto& p : partitions_of(k))
            for (const auto& t : standard_tableaux(p)) {
                CAPTURE(t.to_string());
                CHECK(rep.diagonal_unit(t) == rep.diagonal_unit_reference(t));
            }
}

TEST_CASE("completeness and orthogonality") {
    for (auto order : {StrandOrder::Forward, StrandOrder::Reversed}) {
        auto rep = rep11(order);
        for (int k = 1; k <= 4; ++k) {
            Op sum(2, k);
            std::vector<Op> es;
            for (const auto& p : partitions_of(k))
                for (const auto& t : standard_tableaux(p)) es.push_back(rep.diagonal_unit(t));
            for (std::size_t a = 0; a < es.size(); ++a) {
                sum += es[a];
                CHECK(es[a] * es[a] == es[a]);
                for (std::size_t b = a + 1; b < es.size(); ++b) CHECK((es[a] * es[b]).is_zero());
            }
            CHECK(sum == Op::identity(2, k));
        }
    }
}

TEST_CASE("intertwining and off-diagonal units") {
    auto rep = rep11();
    auto t = T({{1, 2}, {3}});
    auto u = T({{1, 3}, {2}});
    int l = ell(t, 2);
    CHECK(l == 2);
    // sigma_k(l) E_t = E_{s_k t} sigma_k(-l)
    CHECK(rep.sigma_shift(2, l, 3) * rep.diagonal_unit(t) == rep.diagonal_unit(u) * rep.sigma_shift(2, -l, 3));
    auto eab = rep.offdiagonal_unit(t, 2, true);
    auto eba = rep.offdiagonal_unit(t, 2, false);
    CHECK(eab * eba == rep.diagonal_unit(t));
    CHECK(eba * eab == rep.diagonal_unit(u));
    CHECK((eab * eab).is_zero());
    CHECK(rep.unit(t, u) == eab);
    CHECK(rep.unit(u, t) == eba);
    // non-standard target: k, k+1 in one row or column
    CHECK(rep.sigma_shift(1, -1, 3) * rep.diagonal_unit(t) == Op(2, 3));
    CHECK(rep.sigma_shift(1, 1, 3) * rep.diagonal_unit(u) == Op(2, 3));
    CHECK_THROWS_AS(rep.offdiagonal_unit(t, 1, true), NonStandardTarget);
}

TEST_CASE("chain construction matches projectors") {
    auto rep = rep11();
    for (int k = 2; k <= 3; ++k)
        for (const auto& p : partitions_of(k)) {
            auto ts = standard_tableaux(p);
            for (const auto& a : ts)
                for (int i = 1; i < k; ++i)
                    if (auto b = apply_transposition(a, i)) {
                        int l = ell(a, i);
                        // E_b = E_{ba} E_a E_{ab} = w(l) w(-l) sigma(l) E_a sigma(l)
                        auto lhs = rep.sigma_shift(i, l, k) * rep.diagonal_unit(a) * rep.sigma_shift(i, l, k);
                        CHECK(lhs * (omega(l) * omega(-l)) == rep.diagonal_unit(*b));
                    }
        }
}

TEST_CASE("unitarity and parametrized braid relation") {
    auto rep = rep11();
    for (int x : {2, 3}) {
        Scalar f = qnum(x + 1) * qnum(x - 1) / (qnum(x) * qnum(x));
        CHECK(rep.sigma_shift(1, x, 2) * rep.sigma_shift(1, -x, 2) == Op::identity(2, 2) * f);
    }
    int x = 1, y = 2;
    CHECK(rep.sigma_shift(1, x, 3) * rep.sigma_shift(2, x + y, 3) * rep.sigma_shift(1, y, 3) ==
          rep.sigma_shift(2, y, 3) * rep.sigma_shift(1, x + y, 3) * rep.sigma_shift(2, x, 3));
    CHECK(rep.sigma_shift(1, 1, 2) == rep.r() + Op::identity(2, 2) * qp(-1));
    CHECK_THROWS_AS(rep.sigma_shift(1, 0, 2), DomainError);
}

TEST_CASE("matrix unit multiplication table") {
    auto rep = rep11();
    for (int k = 2; k <= 4; ++k) {
        std::vector<StandardTableau> all;
        for (const auto& p : partitions_of(k))
            for (const auto& t : standard_tableaux(p)) all.push_back(t);
        for (const auto& a : all)
            for (const auto& b : all) {
                if (!(a.shape() == b.shape())) continue;
                auto eab = rep.unit(a, b);
                for (const auto& c : all)
                    for (const auto& d : all) {
                        if (!(c.shape() == d.shape())) continue;
                        auto prod = eab * rep.unit(c, d);
                        if (b == c)
                            CHECK(prod == rep.unit(a, d));
                        else
                            CHECK(prod.is_zero());
                    }
            }
    }
}

TEST_CASE("branching under embedding") {
    for (auto order : {StrandOrder::Forward, StrandOrder::Reversed}) {
        auto rep = rep11(order);
        for (int k : {2, 3}) {
            int m = k + 1;
            for (const auto& p : partitions_of(k))
                for (const auto& t : standard_tableaux(p)) {
                    Op sum(2, m);
                    for (const auto& mu : partitions_of(m))
                        for (const auto& s : standard_tableaux(mu))
                            if (includes(t, s)) sum += rep.diagonal_unit(s);
                    CHECK(rep.place(rep.diagonal_unit(t), 0, m) == sum);
                }
        }
    }
    // forward placement is the plain widening
    auto rep = rep11();
    auto e2 = rep.diagonal_unit(T({{1, 2}}));
    CHECK(embed_shift(e2, 0, 3) == embed_at(e2, 1, 3));
    CHECK(embed_shift(e2, 1, 3) == embed_at(e2, 2, 3));
    CHECK_THROWS_AS(embed_shift(e2, 2, 3), RangeError);
}

TEST_CASE("GL(m|n) type detection") {
    auto rep = rep11();
    auto r = glmn_type_check(rep, 1, 1);
    CHECK(r.rectangle_vanishes);
    CHECK(r.rectangle_spot_check);
    CHECK(r.others_nonzero.size() == 4);
    CHECK(r.verdict);
    HeckeRep<Scalar> gl2(dj_glmn(2, 0).op, FieldContext<Scalar>{});
    CHECK_FALSE(glmn_type_check(gl2, 1, 1).verdict);
    CHECK(glmn_type_check(gl2, 2, 0).verdict);
    FieldContext<Rational> one(1);
    HeckeRep<Rational> sp(lift(super_permutation(1, 1).op, one), one);
    CHECK(glmn_type_check(sp, 1, 1).verdict);
}

TEST_CASE("numeric GL(2|1) units at arity 3") {
    FieldContext<Rational> ctx(Rational(6, 5));
    HeckeRep<Rational> rep(lift(dj_glmn(2, 1).op, ctx), ctx);
    SparseOperator<Rational> sum(3, 3);
    for (const auto& p : partitions_of(3))
        for (const auto& t : standard_tableaux(p)) sum += rep.diagonal_unit(t);
    CHECK(sum == SparseOperator<Rational>::identity(3, 3));
}
