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
#include <array>

#include "doctest.h"
#include "qch/chverify.hpp"
#include "qch/rmatrix.hpp"

using namespace qch;

namespace {

using Alg = QuantumMatrixAlgebra<Scalar>;
using Mat = AlgMatrix<Scalar>;

Alg rtt11() { return Alg(dj_glmn(1, 1).op, permutation(2).op, FieldContext<Scalar>{}); }
Alg rea11() { return Alg(dj_glmn(1, 1).op, dj_glmn(1, 1).op, FieldContext<Scalar>{}); }
std::array<Alg, 2> pairs11() { return {rtt11(), rea11()}; }

QuantumMatrixAlgebra<Rational> super11() {
    FieldContext<Rational> one(1);
    auto p = lift(super_permutation(1, 1).op, one);
    return QuantumMatrixAlgebra<Rational>(p, p, one);
}

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

bool term_is(const CHTerm& t, int sign, int qpow, const Partition& shape) {
    return t.sign == sign && t.q_power == qpow && t.shape == shape;
}

}  // namespace

TEST_CASE("coefficient plan at (1,1)") {
    auto plan = ch_coefficients(1, 1);
    REQUIRE(plan.terms.size() == 3);
    CHECK(plan.degree() == 3);
    REQUIRE(plan.terms[0].size() == 1);
    CHECK(term_is(plan.terms[0][0], 1, 0, P({1})));
    REQUIRE(plan.terms[1].size() == 2);
    CHECK(term_is(plan.terms[1][0], 1, -1, P({1, 1})));
    CHECK(term_is(plan.terms[1][1], -1, 1, P({2})));
    REQUIRE(plan.terms[2].size() == 1);
    CHECK(term_is(plan.terms[2][0], -1, 0, P({2, 1})));
    CHECK(plan.describe(1) == "+ q^-1 s(1,1) - q^1 s(2)");
}

TEST_CASE("coefficient plan for GL(m) uses columns") {
    for (int m = 1; m <= 4; ++m) {
        auto plan = ch_coefficients(m, 0);
        for (int i = 0; i <= m; ++i) {
            REQUIRE(plan.terms[static_cast<std::size_t>(i)].size() == 1);
            const auto& t = plan.terms[static_cast<std::size_t>(i)][0];
            CHECK(t.k == i);
            CHECK(term_is(t, i % 2 ? -1 : 1, i, Partition(std::vector<int>(static_cast<std::size_t>(i), 1))));
        }
    }
}

TEST_CASE("coefficient weights") {
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            if (m + n == 0) continue;
            auto plan = ch_coefficients(m, n);
            for (int i = 0; i <= m + n; ++i) {
                const auto& row = plan.terms[static_cast<std::size_t>(i)];
                CHECK_FALSE(row.empty());
                for (const auto& t : row) {
                    CHECK(t.shape.weight() == m * n + i);
                    CHECK(t.k >= std::max(0, i - n));
                    CHECK(t.k <= std::min(i, m));
                }
            }
        }
    CHECK_THROWS_AS(ch_coefficients(0, 0), RangeError);
    CHECK_THROWS_AS(ch_coefficients(-1, 1), RangeError);
}

TEST_CASE("left side at (1,1) matches its expansion") {
    auto a = rtt11();
    auto s = [&](std::vector<int> p) { return a.schur_function(Partition(std::move(p))); };
    Mat expect = a.matrix_power_bar(2).times_right(s({1}));
    expect += a.generators().times_right(s({1, 1}) * Scalar::q_pow(-1) - s({2}) * Scalar::q_pow(1));
    expect -= Mat::identity(2).times_right(s({2, 1}));
    CHECK(ch_lhs(a, 1, 1) == expect);
}

TEST_CASE("Cayley-Hamilton at (1,1)") {
    for (auto& a : pairs11()) {
        auto rep = verify_ch(a, 1, 1);
        CHECK(rep.verdict);
        CHECK(rep.homogeneous);
        CHECK(rep.degree == 3);
        CHECK(rep.context == "symbolic");
        REQUIRE(rep.entries.size() == 4);
        for (const auto& e : rep.entries) {
            CHECK(e.homogeneous);
            CHECK(e.normal_form == 1);
            CHECK(e.ideal == 1);
            CHECK(e.terms > 0);
        }
        CHECK_NOTHROW(require(rep));
    }
}

TEST_CASE("ideal spot check picks the requested number of entries") {
    auto a = rtt11();
    CHOptions opt;
    opt.mode = VerifyMode::Ideal;
    opt.ideal_entries = 2;
    opt.seed = 9;
    auto rep = verify_ch(a, 1, 1, opt);
    int checked = 0;
    for (const auto& e : rep.entries) {
        CHECK(e.normal_form == -1);
        checked += e.ideal == 1;
    }
    CHECK(checked == 2);
    CHECK(rep.verdict);
}

TEST_CASE("wrong type is reported") {
    // GL(2) R-matrix against the (1|1) identity
    Alg a(dj_glmn(2, 0).op, permutation(2).op, FieldContext<Scalar>{});
    CHOptions opt;
    opt.mode = VerifyMode::NormalForm;
    auto rep = verify_ch(a, 1, 1, opt);
    CHECK_FALSE(rep.verdict);
    CHECK_THROWS_AS(require(rep), VerificationFailed);
}

TEST_CASE("GL(m) regression") {
    for (int m : {1, 2}) {
        Alg a(dj_glmn(m, 0).op, permutation(m).op, FieldContext<Scalar>{});
        auto rep = verify_ch(a, m, 0);
        CHECK(rep.verdict);
        CHECK(rep.degree == m);
    }
    Alg b(dj_glmn(2, 0).op, dj_glmn(2, 0).op, FieldContext<Scalar>{});
    CHECK(verify_ch(b, 2, 0).verdict);
}

TEST_CASE("homogeneity at (2,1) and (1,2)") {
    FieldContext<Rational> num;
    for (auto [m, n] : {std::pair{2, 1}, std::pair{1, 2}}) {
        QuantumMatrixAlgebra<Rational> a(lift(dj_glmn(m, n).op, num), lift(permutation(3).op, num), num);
        auto lhs = ch_lhs(a, m, n);
        CHECK(lhs.is_homogeneous(5));
        for (const auto& e : lhs.entries()) CHECK(e.is_homogeneous(5));
    }
}

TEST_CASE("P elements") {
    auto a = rtt11();
    PElementSet<Scalar> pe(a, 1, 1);
    CHECK(pe.arity() == 4);
    CHECK(pe.p_row(0, 2).is_zero());
    CHECK(pe.p_col(2, 0).is_zero());
    CHECK(pe.p_plus_row(0, 1).is_zero());
    CHECK(pe.p_plus_col(1, 0).is_zero());
    CHECK(distinguished_tableau(DistinguishedKind::col, 1, 1, 1, 0).shape() == P({2}));
    CHECK_FALSE(pe.p_col(1, 0).is_zero());
    CHECK(pe.rectangle_term().is_zero());
    CHECK_THROWS_AS(pe.phi_sum(0), RangeError);
    CHECK_THROWS_AS(pe.phi_sum(3), RangeError);
}

TEST_CASE("one step of the chain from both sides") {
    for (auto& a : pairs11()) {
        PElementSet<Scalar> pe(a, 1, 1);
        auto lhs = pe.p_plus_row(0, 1) + pe.p_plus_col(0, 1) + pe.p_row(0, 2) + pe.p_col(1, 1);
        auto rhs = a.phi(a.matrix_power_bar(1)).times_right(a.schur_function(P({1, 1})));
        CHECK(a.normal_form(lhs - rhs).is_zero());
    }
}

TEST_CASE("telescoping chain at (1,1)") {
    for (auto& a : pairs11()) {
        auto rep = telescope_check(a, 1, 1);
        CHECK(rep.start);
        REQUIRE(rep.steps.size() == 1);
        CHECK(rep.steps[0].first == 1);
        CHECK(rep.steps[0].second);
        CHECK(rep.end);
        CHECK(rep.rectangle_vanishes);
        CHECK(rep.chain_sum);
        CHECK(rep.verdict);
        CHECK(rep.failure.empty());
    }
    auto a = rtt11();
    CHECK_THROWS_AS(telescope_check(a, 1, 0), RangeError);
}

TEST_CASE("rectangular powers") {
    for (auto& a : pairs11())
        for (auto [r, s] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
            auto rep = rect_identity(a, r, s);
            CHECK(rep.holds);
            CHECK(rep.row_index == s + 1);
            CHECK(rep.residual.empty());
        }
    // (r, s) = (1, 0) written out
    auto a = rtt11();
    auto m2 = a.matrix_power_tableau(StandardTableau({{1, 2}})).first;
    auto rhs = a.matrix_power_bar(2) + a.generators().times_right(a.schur_function(P({1}))) * Scalar::q_pow(-1);
    CHECK(a.normal_form(m2 * qnum(2) - rhs).is_zero());
}

TEST_CASE("character table") {
    CHECK(character(P({2}), P({1, 1})) == 1);
    CHECK(character(P({1, 1}), P({2})) == -1);
    CHECK(character(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(character(P({2, 1}), P({3})) == -1);
    CHECK(character(P({2, 1}), P({2, 1})) == 0);
    CHECK(character(P({2, 2}), P({3, 1})) == -1);
    // column orthogonality at the identity class
    for (int n = 1; n <= 5; ++n) {
        long long sum = 0, fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        for (const auto& l : partitions_of(n)) {
            long long d = character(l, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
            sum += d * d;
        }
        CHECK(sum == fact);
    }
    CHECK_THROWS_AS(character(P({2}), P({1})), ShapeError);
}

TEST_CASE("supercommutative oracle") {
    CHECK_THROWS_AS(SuperClassicalOracle(2, 1), Unsupported);
    SuperClassicalOracle o(1, 1);
    CHECK(o.parity(0) == 0);
    CHECK(o.parity(1) == 1);
    CHECK(o.parity(2) == 1);
    CHECK(o.parity(3) == 0);
    auto w = [](std::vector<int> l) { return NCPoly<Rational>::monomial(Word::from_letters(l)); };
    CHECK(is_zero(o.reduce(w({1, 1}))));
    CHECK(is_zero(o.reduce(w({2, 2}))));
    CHECK(is_zero(o.reduce(w({0, 3}) - w({3, 0}))));
    CHECK(is_zero(o.reduce(w({1, 2}) + w({2, 1}))));
    CHECK(is_zero(o.reduce(w({0, 1}) - w({1, 0}))));
    CHECK_FALSE(is_zero(o.reduce(w({1, 2}))));
    // s_(1) is the supertrace
    auto s1 = o.schur(P({1}));
    CHECK(s1.size() == 2);
    CHECK(s1.at({0}) == Rational(1));
    CHECK(s1.at({3}) == Rational(-1));
    for (const auto& e : o.ch_polynomial()) CHECK(is_zero(e));
}

TEST_CASE("super permutation pair against the oracle") {
    auto a = super11();
    SuperClassicalOracle o(1, 1);
    for (const auto& r : a.relations()) CHECK(is_zero(o.reduce(r)));
    auto rep = verify_ch(a, 1, 1);
    CHECK(rep.verdict);
    CHECK(rep.context == "rational:1");
    const auto lhs = ch_lhs(a, 1, 1);
    for (const auto& e : lhs.entries()) CHECK(is_zero(o.reduce(e)));
    for (auto shape : {P({1}), P({2}), P({1, 1}), P({2, 1}), P({3})}) CHECK(o.reduce(a.schur_function(shape)) == o.schur(shape));
}
