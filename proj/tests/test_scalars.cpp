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
#include "qch/field.hpp"
#include "qch/scalars.hpp"
#include "support.hpp"

using namespace qch;

namespace {

const Scalar q = Scalar::q();

Scalar qi(int e) { return Scalar::q_pow(e); }

}  // namespace

TEST_CASE("qnum small values") {
    CHECK(qnum(0).is_zero());
    CHECK(qnum(1) == Scalar(1));
    CHECK(qnum(3) == qi(2) + Scalar(1) + qi(-2));
    CHECK(qnum(-3) == -qnum(3));
    CHECK(qnum(2) == q + q.inverse());
    // oracle: the defining quotient
    for (int k = -6; k <= 6; ++k) CHECK(qnum(k) == (qi(k) - qi(-k)) / (q - q.inverse()));
}

TEST_CASE("qnum at q=1 is the integer") {
    for (int k = -8; k <= 8; ++k) CHECK(eval_at(qnum(k), 1) == k);
}

TEST_CASE("omega") {
    CHECK(omega(1) == Scalar(1) / (q + q.inverse()));
    CHECK(omega(0).is_zero());
    CHECK_THROWS_AS(omega(-1), DomainError);
    for (int l = 2; l <= 6; ++l) {
        Scalar lhs = omega(l) * omega(-l);
        Scalar rhs = qnum(l) * qnum(l) / (qnum(l + 1) * qnum(l - 1));
        CHECK(lhs == rhs);
    }
    CHECK(omega(2) * omega(-2) == qnum(2) * qnum(2) / (qnum(3) * qnum(1)));
}

TEST_CASE("eval_at") {
    CHECK(eval_at(qnum(2), 1) == 2);
    CHECK(eval_at(qnum(2), 2) == Rational(5, 2));
    CHECK_THROWS_AS(eval_at(Scalar(1) / (q - q.inverse()), 1), PoleError);
    CHECK_THROWS_AS(eval_at(q, 0), ZeroQError);
    CHECK(eval_at(qi(-2), Rational(1, 3)) == 9);
}

TEST_CASE("parse_scalar") {
    CHECK(parse_scalar("(q^2-1)/q") == q - q.inverse());
    CHECK(parse_scalar("3/2") == Scalar(Rational(3, 2)));
    CHECK(parse_scalar("q^-1 + q") == qnum(2));
    CHECK(parse_scalar("  -q^(-2) * 3 ") == Scalar(-3) * qi(-2));
    CHECK(parse_scalar("(1+q)^2") == Scalar(1) + Scalar(2) * q + qi(2));
    CHECK_THROWS_AS(parse_scalar("q +"), SyntaxError);
    CHECK_THROWS_AS(parse_scalar("1/0"), SyntaxError);
    CHECK_THROWS_AS(parse_scalar("(q"), SyntaxError);
    CHECK_THROWS_AS(parse_scalar("x"), SyntaxError);
    try {
        parse_scalar("q + $");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("normalization is canonical") {
    Scalar a(LaurentPoly::q_power(2) - LaurentPoly(1), LaurentPoly::q_power(1) - LaurentPoly(1));
    CHECK(a == q + Scalar(1));
    CHECK(a.is_laurent());
    Scalar b(LaurentPoly(2), LaurentPoly::monomial(-4, 3));
    CHECK(b.den() == LaurentPoly(1));
    CHECK(b == Scalar(Rational(-1, 2)) * qi(-3));
    Scalar c(LaurentPoly(1), LaurentPoly::monomial(2, 1) + LaurentPoly::monomial(6, 3));
    CHECK(c.den().low() == 0);
    CHECK(c.den().coeff(0) == 1);
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 rng(7);
    for (int it = 0; it < 120; ++it) {
        Scalar a = testing::random_scalar(rng), b = testing::random_scalar(rng), c = testing::random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
        // equality agrees with cross multiplication
        bool cross = (a.num() * b.den() - b.num() * a.den()).is_zero();
        CHECK(cross == (a == b));
        CHECK(parse_scalar(a.to_string()) == a);
    }
}

TEST_CASE("content identities") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> wide(-6, 6), pos(1, 6);
    for (int it = 0; it < 120; ++it) {
        int x = wide(rng), y = wide(rng);
        CHECK(qi(x) * qnum(y) + qi(-y) * qnum(x) == qnum(x + y));
    }
    for (int it = 0; it < 120; ++it) {
        int x = pos(rng), y = wide(rng), z = wide(rng);
        Scalar lhs = qi(-x) * qnum(x + y + 1) * qnum(z) / qnum(x) + q * qnum(y) * qnum(x + z + 1) +
                     qi(z - y) * qnum(x + 1);
        Scalar rhs = qnum(x + 1) * qnum(y + 1) * qnum(x + z) / qnum(x);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("numeric context") {
    FieldContext<Rational> ctx(Rational(6, 5));
    CHECK(ctx.qn(2) == Rational(6, 5) + Rational(5, 6));
    CHECK_NOTHROW(ctx.validate(6));
    FieldContext<Rational> one(1);
    CHECK(one.qn(5) == 5);
    // k_q(-1) = (-1)^(k-1) k, so no nonzero rational is degenerate here
    FieldContext<Rational> minus(-1);
    CHECK_NOTHROW(minus.validate(8));
    CHECK_THROWS_AS(FieldContext<Rational>(0), ZeroQError);
}
