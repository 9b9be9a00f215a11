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

#ifndef QCH_HECKEUNITS_HPP
#define QCH_HECKEUNITS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qch/field.hpp"
#include "qch/tableaux.hpp"
#include "qch/tensorop.hpp"

namespace qch {

/// How abstract generators sit on tensor strands at arity k.
///
/// Forward sends sigma_i to R_i. Reversed sends sigma_i to R_{k-i}, so an
/// element of H_s acts on the last s strands and the largest tableau entry
/// lives on strand 1.
enum class StrandOrder { Forward, Reversed };

/// Images of Hecke algebra elements under the R-matrix representation.
///
/// Units are computed at arity |t| and cached; use place() to move an element
/// of H_s into a larger tensor power.
template <class K>
class HeckeRep {
   public:
    HeckeRep(SparseOperator<K> r, FieldContext<K> ctx, StrandOrder order = StrandOrder::Forward);

    const SparseOperator<K>& r() const { return r_; }
    const FieldContext<K>& ctx() const { return ctx_; }
    int N() const { return r_.N(); }
    StrandOrder order() const { return order_; }

    /// Image of sigma_i in H_k.
    SparseOperator<K> generator(int i, int k) const;
    /// sigma_i + (q^-x / x_q) Id.
    SparseOperator<K> sigma_shift(int i, int x, int k) const;
    /// Multiplicative Jucys-Murphy elements J_1 = Id, J_{i+1} = sigma_i J_i sigma_i.
    std::vector<SparseOperator<K>> jm_elements(int k) const;
    /// Additive elements L_1 = 0, L_{i+1} = sigma_i L_i sigma_i + sigma_i, eigenvalue q^c c_q.
    const std::vector<SparseOperator<K>>& additive_jm(int k);

    /// Primitive idempotent E_t at arity |t|.
    const SparseOperator<K>& diagonal_unit(const StandardTableau& t);
    /// Same element from the full-spectrum product over J_2..J_k.
    SparseOperator<K> diagonal_unit_reference(const StandardTableau& t) const;
    /// E_{t, s_k t} when `to_swapped`, else E_{s_k t, t}. Throws NonStandardTarget.
    SparseOperator<K> offdiagonal_unit(const StandardTableau& t, int k, bool to_swapped);
    /// E_{a,b} for tableaux of one shape, built along transposition chains.
    SparseOperator<K> unit(const StandardTableau& a, const StandardTableau& b);

    /// Image of x in H_s under sigma_j -> sigma_{j+shift}, at arity total.
    SparseOperator<K> place(const SparseOperator<K>& x, int shift, int total) const;

   private:
    K content_eigenvalue(int c) const;
    /// Chain of transpositions from the row-reading tableau to t.
    std::vector<int> chain_from_root(const StandardTableau& t) const;

    SparseOperator<K> r_;
    FieldContext<K> ctx_;
    StrandOrder order_;

    mutable std::mutex mu_;
    std::map<int, std::unique_ptr<std::vector<SparseOperator<K>>>> additive_;
    std::map<std::string, std::unique_ptr<SparseOperator<K>>> units_;
    std::map<std::string, std::unique_ptr<SparseOperator<K>>> prefix_;
};

/// Image of x under sigma_j -> sigma_{j+i}: Id^{(x)i} (x) x (x) Id.
template <class K>
SparseOperator<K> embed_shift(const SparseOperator<K>& x, int i, int total);

struct GlmnReport {
    bool rectangle_vanishes = false;
    bool rectangle_spot_check = false;
    std::vector<std::pair<std::string, bool>> others_nonzero;  // shape, verdict
    bool verdict = false;
};

/// Kernel test for GL(m|n) type at arity (m+1)(n+1).
template <class K>
GlmnReport glmn_type_check(HeckeRep<K>& rep, int m, int n);

}  // namespace qch

#endif
