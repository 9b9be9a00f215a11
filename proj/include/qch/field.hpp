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

#ifndef QCH_FIELD_HPP
#define QCH_FIELD_HPP

#include <string>
#include <utility>

#include "qch/scalars.hpp"

namespace qch {

// Coefficient context. Every algebraic module is templated on the field K and
// receives a FieldContext<K> that knows how to realize q.
template <class K>
struct FieldContext;

/// Symbolic q: coefficients live in Q(q).
template <>
struct FieldContext<Scalar> {
    static constexpr bool numeric = false;

    Scalar q() const { return Scalar::q(); }
    Scalar q_pow(int e) const { return Scalar::q_pow(e); }
    Scalar qn(int k) const { return qnum(k); }
    Scalar lift(const Scalar& s) const { return s; }
    void validate(int /*kmax*/) const {}
    std::string describe() const { return "symbolic"; }
};

/// q specialized to a nonzero rational q0.
template <>
struct FieldContext<Rational> {
    static constexpr bool numeric = true;

    explicit FieldContext(Rational q_value = Rational(6, 5)) : q0(std::move(q_value)) {
        q0.canonicalize();
        if (sgn(q0) == 0) throw ZeroQError("q0 must be nonzero");
    }

    Rational q() const { return q0; }
    Rational q_pow(int e) const { return eval_at(Scalar::q_pow(e), q0); }
    Rational qn(int k) const { return eval_at(qnum(k), q0); }
    Rational lift(const Scalar& s) const { return eval_at(s, q0); }
    /// Throws DegenerateQ unless k_q(q0) != 0 for 1 <= k <= kmax.
    void validate(int kmax) const {
        for (int k = 1; k <= kmax; ++k)
            if (sgn(qn(k)) == 0)
                throw DegenerateQ("q-integer " + std::to_string(k) + " vanishes at q0 = " + q0.get_str());
    }
    std::string describe() const { return "rational:" + q0.get_str(); }

    Rational q0;
};

}  // namespace qch

#endif
