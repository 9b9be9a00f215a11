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

#ifndef QCH_CHVERIFY_HPP
#define QCH_CHVERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qch/qmalgebra.hpp"

namespace qch {

/// One summand (-1)^k q^{2k-i} s_{Lambda(k, i-k)} of the coefficient C_i.
struct CHTerm {
    int k = 0;
    int sign = 1;
    int q_power = 0;
    Partition shape;
};

/// Coefficients C_0..C_{m+n} of the Cayley-Hamilton identity of GL(m|n) type.
struct CHCoefficientPlan {
    int m = 0;
    int n = 0;
    std::vector<std::vector<CHTerm>> terms;  // indexed by i

    /// Degree of every entry of the identity: mn + m + n.
    int degree() const { return m * n + m + n; }
    std::string describe(int i) const;
};

/// Throws RangeError for negative m, n or m = n = 0.
CHCoefficientPlan ch_coefficients(int m, int n);

/// C_i as an element of the algebra.
template <class K>
NCPoly<K> ch_coefficient(QuantumMatrixAlgebra<K>& alg, const CHCoefficientPlan& plan, int i);

/// sum_i M^{bar(m+n-i)} C_i.
template <class K>
AlgMatrix<K> ch_lhs(QuantumMatrixAlgebra<K>& alg, int m, int n);

enum class VerifyMode { NormalForm, Ideal, Both };

struct EntryVerdict {
    int row = 0;
    int col = 0;
    std::size_t terms = 0;        // words before reduction
    bool homogeneous = false;
    int normal_form = -1;         // 1 zero, 0 nonzero, -1 not checked
    int ideal = -1;               // same encoding
    std::string residual;         // nonzero normal form, if any
};

struct CHOptions {
    VerifyMode mode = VerifyMode::Both;
    /// Number of entries checked by ideal membership; negative means all.
    int ideal_entries = -1;
    std::uint64_t seed = 1;
};

struct CHReport {
    int m = 0;
    int n = 0;
    int degree = 0;
    std::string context;
    bool homogeneous = false;
    std::vector<EntryVerdict> entries;
    bool verdict = false;
    double seconds = 0;
};

/// Builds ch_lhs and checks every entry against the relations.
template <class K>
CHReport verify_ch(QuantumMatrixAlgebra<K>& alg, int m, int n, const CHOptions& opt = {});

/// Throws VerificationFailed with the first nonzero residual when the report fails.
void require(const CHReport& report);

/// The matrices P_row, P_col, P^+, P_+ and the combinations Phi_i at arity (m+1)(n+1).
///
/// Matrix units occupy the trailing strands, with the largest entry of the
/// tableau on the strand next to the braid chain.
template <class K>
class PElementSet {
   public:
    PElementSet(QuantumMatrixAlgebra<K>& alg, int m, int n);

    int arity() const { return A_; }
    const AlgMatrix<K>& p_row(int r, int s);
    const AlgMatrix<K>& p_col(int r, int s);
    /// P^+(r, s); zero for r = 0.
    const AlgMatrix<K>& p_plus_row(int r, int s);
    /// P_+(r, s); zero for s = 0.
    const AlgMatrix<K>& p_plus_col(int r, int s);
    AlgMatrix<K> phi_sum(int i);
    /// (-1)^m (m+1)_q (n+1)_q Tr_{2..A}(M_2 ... M_A E) for the rectangle unit.
    AlgMatrix<K> rectangle_term();

   private:
    const AlgMatrix<K>& element(DistinguishedKind kind, int r, int s);

    QuantumMatrixAlgebra<K>& alg_;
    int m_, n_, A_;
    std::map<std::tuple<int, int, int>, AlgMatrix<K>> cache_;
    AlgMatrix<K> zero_;
};

struct TelescopeReport {
    bool start = false;                 // Phi_1 = phi(M^{bar(m+n)}) s_{Lambda(0,0)}
    std::vector<std::pair<int, bool>> steps;  // i, Phi_{i+1} - Phi_i identity
    bool end = false;                   // Phi_{m+n} identity with the rectangle term
    bool rectangle_vanishes = false;
    bool chain_sum = false;             // sum of right sides equals phi(ch_lhs)
    bool verdict = false;
    std::string failure;
    double seconds = 0;
};

template <class K>
TelescopeReport telescope_check(QuantumMatrixAlgebra<K>& alg, int m, int n);

struct RectReport {
    int r = 0;
    int s = 0;
    int row_index = 0;
    bool holds = false;
    std::string residual;
    double seconds = 0;
};

/// (-1)^s (s+1)_q (r+1)_q M^{(((r+1)^{s+1}); s+1)} against its expansion in bar powers.
template <class K>
RectReport rect_identity(QuantumMatrixAlgebra<K>& alg, int r, int s);

/// Free supercommutative algebra on the entries of a (1|1) supermatrix; the
/// entry M_i^j has parity |i| + |j|. Shares no code with the rewriting layer.
class SuperClassicalOracle {
   public:
    using Monomial = std::vector<int>;  // sorted generator indices
    using Poly = std::map<Monomial, Rational>;
    using Matrix = std::vector<Poly>;    // row-major N x N

    /// Throws Unsupported unless (m, n) = (1, 1).
    SuperClassicalOracle(int m, int n);

    int N() const { return m_ + n_; }
    int parity(int g) const;
    /// Image of a free-algebra element.
    Poly reduce(const NCPoly<Rational>& p) const;
    Poly multiply(const Poly& a, const Poly& b) const;

    Matrix generators() const;
    Matrix matrix_product(const Matrix& a, const Matrix& b) const;
    /// str(M^k).
    Poly power_sum(int k) const;
    /// Schur function from power sums by the Frobenius formula.
    Poly schur(const Partition& shape) const;
    /// Entries of sum_i M^{m+n-i} C_i at q = 1.
    Matrix ch_polynomial() const;

   private:
    int m_, n_;
};

/// chi^lambda(mu) by the Murnaghan-Nakayama rule.
long long character(const Partition& lambda, const Partition& mu);

bool is_zero(const SuperClassicalOracle::Poly& p);

}  // namespace qch

#endif
