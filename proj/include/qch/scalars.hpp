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

#ifndef QCH_SCALARS_HPP
#define QCH_SCALARS_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qch/errors.hpp"

namespace qch {

using Rational = mpq_class;

/// Laurent polynomial in q with rational coefficients.
///
/// Stored densely from the lowest exponent; both end coefficients are nonzero
/// unless the polynomial is zero, in which case the vector is empty.
class LaurentPoly {
   public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT: implicit constant embedding
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(const Rational& c, int exponent);
    static LaurentPoly q_power(int exponent) { return monomial(1, exponent); }

    bool is_zero() const { return coeffs_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    std::size_t term_count() const;
    /// Coefficient of q^e; zero when absent.
    Rational coeff(int e) const;
    const std::vector<Rational>& dense() const { return coeffs_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    /// Multiply by q^e.
    LaurentPoly shifted(int e) const;
    Rational eval(const Rational& q0) const;
    std::string to_string() const;

   private:
    friend class Scalar;
    void trim();

    int low_ = 0;
    std::vector<Rational> coeffs_;
};

/// Monic gcd of the polynomial parts (q-power factors ignored).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
/// Exact division of polynomial parts; throws DomainError if not exact.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Reduced fraction of Laurent polynomials: an element of Q(q).
///
/// The denominator has lowest exponent 0 and lowest coefficient 1, which makes
/// the representation unique, so == compares structurally.
class Scalar {
   public:
    Scalar() : den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}                 // NOLINT
    Scalar(const Rational& c) : num_(c), den_(1) {}      // NOLINT
    Scalar(const LaurentPoly& p) : num_(p), den_(1) {}   // NOLINT
    Scalar(const LaurentPoly& num, const LaurentPoly& den);

    static Scalar q() { return Scalar(LaurentPoly::q_power(1)); }
    static Scalar q_pow(int e) { return Scalar(LaurentPoly::q_power(e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.coeffs_.size() == 1; }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

   private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

/// (q^k - q^-k)/(q - q^-1).
Scalar qnum(int k);
/// ell_q / (ell+1)_q.
Scalar omega(int ell);
Scalar pow(const Scalar& s, int e);

Rational eval_at(const Scalar& s, const Rational& q0);
Scalar parse_scalar(std::string_view text);
Rational parse_rational(std::string_view text);

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline std::string to_string(const Scalar& s) { return s.to_string(); }
std::string to_string(const Rational& r);

}  // namespace qch

#endif
