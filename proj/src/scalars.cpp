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

#include "qch/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <utility>

namespace qch {

namespace {

using Dense = std::vector<Rational>;

void trim_dense(Dense& v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

// Remainder of a modulo b (b nonzero, both trimmed). Quotient written to *quot when given.
Dense dense_divmod(Dense a, const Dense& b, Dense* quot) {
    const std::size_t db = b.size() - 1;
    if (quot) quot->clear();
    if (a.size() < b.size()) return a;
    Dense q(a.size() - db, Rational(0));
    const Rational& lead = b.back();
    for (std::size_t i = a.size(); i-- > db;) {
        if (sgn(a[i]) == 0) continue;
        Rational f = a[i] / lead;
        q[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
    }
    a.resize(db);
    trim_dense(a);
    if (quot) {
        trim_dense(q);
        *quot = std::move(q);
    }
    return a;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
    if (sgn(c) != 0) {
        coeffs_.push_back(c);
        coeffs_.back().canonicalize();
    }
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
    LaurentPoly p(c);
    if (!p.is_zero()) p.low_ = exponent;
    return p;
}

std::size_t LaurentPoly::term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; }));
}

Rational LaurentPoly::coeff(int e) const {
    if (is_zero() || e < low_ || e > high()) return 0;
    return coeffs_[static_cast<std::size_t>(e - low_)];
}

void LaurentPoly::trim() {
    trim_dense(coeffs_);
    std::size_t first = 0;
    while (first < coeffs_.size() && sgn(coeffs_[first]) == 0) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    if (first > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
        low_ += static_cast<int>(first);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(high(), o.high());
    if (lo < low_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
        low_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        coeffs_.clear();
        low_ = 0;
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int e) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += e;
    return r;
}

Rational LaurentPoly::eval(const Rational& q0) const {
    if (is_zero()) return 0;
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q0 + coeffs_[i];
    Rational base = low_ >= 0 ? q0 : Rational(1) / q0;
    Rational p = 1;
    for (int k = 0; k < std::abs(low_); ++k) p *= base;
    return acc * p;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        int e = low_ + static_cast<int>(i);
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
        if (mono.empty()) {
            out += a.get_str();
        } else if (a == 1) {
            out += mono;
        } else {
            out += a.get_str() + "*" + mono;
        }
    }
    return out;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly(0);
    Dense x = a.dense(), y = b.dense();
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        Dense r = dense_divmod(x, y, nullptr);
        x = std::move(y);
        y = std::move(r);
    }
    Rational lead = x.back();
    for (auto& c : x) c /= lead;
    LaurentPoly g;
    for (std::size_t i = 0; i < x.size(); ++i) g += LaurentPoly::monomial(x[i], static_cast<int>(i));
    return g;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    if (a.is_zero()) return a;
    Dense q;
    Dense r = dense_divmod(a.dense(), b.dense(), &q);
    if (!r.empty()) throw DomainError("inexact polynomial division");
    LaurentPoly out;
    for (std::size_t i = 0; i < q.size(); ++i)
        out += LaurentPoly::monomial(q[i], a.low() - b.low() + static_cast<int>(i));
    return out;
}

Scalar::Scalar(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DomainError("zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.coeffs_.size() > 1) {
        LaurentPoly g = poly_gcd(num_, den_);
        if (g.coeffs_.size() > 1) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
    }
    num_.low_ -= den_.low_;
    den_.low_ = 0;
    if (den_.coeffs_[0] != 1) {
        Rational inv = Rational(1) / den_.coeffs_[0];
        num_ *= inv;
        den_ *= inv;
    }
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (is_laurent() && o.is_laurent()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    LaurentPoly g = poly_gcd(den_, o.den_);
    LaurentPoly b1 = exact_divide(den_, g);
    LaurentPoly d1 = exact_divide(o.den_, g);
    num_ = num_ * d1 + o.num_ * b1;
    den_ = b1 * o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    num_ *= o.num_;
    if (!(is_laurent() && o.is_laurent())) {
        den_ *= o.den_;
        normalize();
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero scalar");
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::to_string() const {
    if (is_laurent()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Scalar qnum(int k) {
    int a = std::abs(k);
    LaurentPoly p;
    for (int j = 0; j < a; ++j) p += LaurentPoly::q_power(a - 1 - 2 * j);
    Scalar s(p);
    return k < 0 ? -s : s;
}

Scalar omega(int ell) {
    if (ell == -1) throw DomainError("omega(-1) has a vanishing denominator");
    return qnum(ell) / qnum(ell + 1);
}

Scalar pow(const Scalar& s, int e) {
    Scalar base = e < 0 ? s.inverse() : s;
    unsigned n = static_cast<unsigned>(std::abs(e));
    Scalar r(1);
    while (n) {
        if (n & 1u) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

Rational eval_at(const Scalar& s, const Rational& q0) {
    if (sgn(q0) == 0) throw ZeroQError("q0 must be nonzero");
    Rational d = s.den().eval(q0);
    if (sgn(d) == 0) throw PoleError("denominator " + s.den().to_string() + " vanishes at q = " + q0.get_str());
    return s.num().eval(q0) / d;
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

class Parser {
   public:
    explicit Parser(std::string_view t) : text_(t) {}

    Scalar parse_all() {
        Scalar s = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return s;
    }

   private:
    [[noreturn]] void fail(const std::string& what) { throw SyntaxError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Scalar term() {
        Scalar acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Scalar d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    Scalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = primary();
        if (!accept('^')) return base;
        int e = exponent();
        if (e < 0 && base.is_zero()) fail("negative power of zero");
        return pow(base, e);
    }

    int exponent() {
        bool paren = accept('(');
        int sign = 1;
        if (accept('-'))
            sign = -1;
        else
            accept('+');
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        if (pos_ - start > 6) fail("exponent too large");
        int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (paren && !accept(')')) fail("expected ')'");
        return sign * e;
    }

    Scalar primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar s = expr();
            if (!accept(')')) fail("expected ')'");
            return s;
        }
        if (c == 'q') {
            ++pos_;
            return Scalar::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
        }
        fail("unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse_all(); }

Rational parse_rational(std::string_view text) {
    Scalar s = parse_scalar(text);
    if (!s.is_laurent() || s.num().high() > 0 || s.num().low() < 0)
        throw SyntaxError("expected a rational constant", 0);
    return s.num().coeff(0);
}

}  // namespace qch
