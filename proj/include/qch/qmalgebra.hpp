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

#ifndef QCH_QMALGEBRA_HPP
#define QCH_QMALGEBRA_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qch/heckeunits.hpp"
#include "qch/ncpoly.hpp"
#include "qch/rewrite.hpp"

namespace qch {

/// The quantum matrix algebra M(R, F) for a compatible pair with Hecke R.
///
/// Products of the copies M_1..M_k are built once per arity and cached, as
/// are Schur functions and the rewriting system. Not safe for concurrent use.
template <class K>
class QuantumMatrixAlgebra {
   public:
    /// Throws DomainError when R is not a Hecke solution of the braid relation
    /// or the pair is not compatible; NotSkewInvertible when R or R_f lacks a
    /// skew inverse.
    QuantumMatrixAlgebra(SparseOperator<K> r, SparseOperator<K> f, FieldContext<K> ctx);

    int N() const { return r_.N(); }
    const FieldContext<K>& ctx() const { return ctx_; }
    const SparseOperator<K>& R() const { return r_; }
    const SparseOperator<K>& F() const { return f_; }
    /// D^R and D^{R_f}.
    const ScalarMatrix<K>& d_r() const { return dr_; }
    const ScalarMatrix<K>& d_rf() const { return drf_; }
    HeckeRep<K>& rep(StrandOrder order = StrandOrder::Forward);

    AlgMatrix<K> generators() const { return AlgMatrix<K>::generators(N()); }
    /// M_1 = M (x) Id, M_{j+1} = F_j M_j F_j^-1, all at arity k.
    const std::vector<AlgOperator<K>>& mbar_copies(int k);
    /// M_1 ... M_k at arity k.
    const AlgOperator<K>& mbar_product(int k);
    /// M_from ... M_to at arity k.
    AlgOperator<K> mbar_product(int from, int to, int k);

    /// Nonzero entries of R_1 M_1 M_2 - M_1 M_2 R_1.
    const std::vector<NCPoly<K>>& relations();
    /// Nonzero entries of R_j M_j M_{j+1} - M_j M_{j+1} R_j at arity k.
    std::vector<NCPoly<K>> relations_at(int j, int k);

    /// Rewriting system completed through the given degree.
    const RewriteSystem<K>& rewrite_system(int degree);
    NCPoly<K> normal_form(const NCPoly<K>& p, ReductionStrategy s = ReductionStrategy::Leftmost);
    AlgMatrix<K> normal_form(const AlgMatrix<K>& m);
    bool ideal_member(const NCPoly<K>& p);
    /// Largest degree accepted by ideal_member.
    void set_ideal_bound(int degree) { ideal_bound_ = degree; ideal_.reset(); }

    /// R_t R_{t-1} ... R_1 at arity k; the identity for t = 0.
    SparseOperator<K> braid_chain(int t, int k) const;

    /// Tr_{1..k}(M_1 ... M_k x) for x of arity k.
    NCPoly<K> y_element(const SparseOperator<K>& x);
    NCPoly<K> power_sum(int k);
    /// s_lambda from the row-reading tableau; s_0 = 1.
    const NCPoly<K>& schur_function(const Partition& shape);
    /// y(E_t) for a specific tableau.
    NCPoly<K> schur_function(const StandardTableau& t, StrandOrder order = StrandOrder::Forward);

    /// Tr_{2..k}(M_1 ... M_k x).
    AlgMatrix<K> matrix_power_hecke(const SparseOperator<K>& x);
    /// M^(lambda; i) with i the row holding the largest entry of t.
    std::pair<AlgMatrix<K>, int> matrix_power_tableau(const StandardTableau& t);
    /// Tr_{2..k}(M_1 ... M_k R_{k-1} ... R_1); Id for k = 0.
    const AlgMatrix<K>& matrix_power_bar(int k);
    /// M phi(M^{bar k-1}).
    AlgMatrix<K> matrix_power_bar_iterative(int k);
    /// Tr_{2..k}(M_2 ... M_k x) for x of arity k.
    AlgMatrix<K> traced_tail(const SparseOperator<K>& x);

    /// Tr_{R(2)}(F_1 X_1 F_1^-1 R_1).
    AlgMatrix<K> phi(const AlgMatrix<K>& x);
    /// Tr_{R_f(2)}(F_1^-1 X_1 R_1^-1 F_1).
    AlgMatrix<K> phi_inverse(const AlgMatrix<K>& x);

   private:
    SparseOperator<K> trailing_weights(int k) const;

    SparseOperator<K> r_, f_, r_inv_, f_inv_;
    FieldContext<K> ctx_;
    ScalarMatrix<K> dr_, drf_;
    std::unique_ptr<HeckeRep<K>> forward_, reversed_;

    std::map<int, std::vector<AlgOperator<K>>> copies_;
    std::map<int, AlgOperator<K>> products_;
    std::map<int, AlgMatrix<K>> bar_powers_;
    std::map<std::string, NCPoly<K>> schur_;
    std::vector<NCPoly<K>> relations_;
    bool have_relations_ = false;
    std::unique_ptr<RewriteSystem<K>> rewrite_;
    std::unique_ptr<IdealOracle<K>> ideal_;
    int ideal_bound_ = 6;
};

}  // namespace qch

#endif
