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

#include "qch/qmalgebra.hpp"

#include "qch/rmatrix.hpp"

namespace qch {

namespace {

template <class K>
std::vector<NCPoly<K>> entries(const AlgOperator<K>& x) {
    std::vector<NCPoly<K>> out;
    for (Index i = 0; i < x.dim(); ++i)
        for (const auto& [j, p] : x.row(i)) out.push_back(p);
    return out;
}

template <class K>
SparseOperator<K> as_operator(const ScalarMatrix<K>& d) {
    return tensor_power(d, 1);
}

}  // namespace

template <class K>
QuantumMatrixAlgebra<K>::QuantumMatrixAlgebra(SparseOperator<K> r, SparseOperator<K> f, FieldContext<K> ctx)
    : r_(std::move(r)), f_(std::move(f)), ctx_(std::move(ctx)) {
    if (r_.arity() != 2 || f_.arity() != 2 || r_.N() != f_.N()) throw ShapeError("R and F must be arity-2 operators on one V");
    forward_ = std::make_unique<HeckeRep<K>>(r_, ctx_, StrandOrder::Forward);
    reversed_ = std::make_unique<HeckeRep<K>>(r_, ctx_, StrandOrder::Reversed);
    if (!yang_baxter_check(f_)) throw DomainError("F does not satisfy the braid relation");
    if (!compatible_check(r_, f_)) throw DomainError("R and F are not a compatible pair");
    r_inv_ = inverse(r_);
    f_inv_ = inverse(f_);
    dr_ = d_operator(r_);
    drf_ = d_operator(twist_rf(r_, f_));
}

template <class K>
HeckeRep<K>& QuantumMatrixAlgebra<K>::rep(StrandOrder order) {
    return order == StrandOrder::Forward ? *forward_ : *reversed_;
}

template <class K>
const std::vector<AlgOperator<K>>& QuantumMatrixAlgebra<K>::mbar_copies(int k) {
    if (k < 1) throw RangeError("copies need k >= 1");
    auto it = copies_.find(k);
    if (it != copies_.end()) return it->second;
    std::vector<AlgOperator<K>> out;
    out.push_back(embed_at(AlgOperator<K>::from_matrix(generators()), 1, k));
    for (int j = 1; j < k; ++j) {
        auto fj = embed_at(f_, j, k);
        auto fj_inv = embed_at(f_inv_, j, k);
        out.push_back(fj * out.back() * fj_inv);
    }
    return copies_.emplace(k, std::move(out)).first->second;
}

template <class K>
const AlgOperator<K>& QuantumMatrixAlgebra<K>::mbar_product(int k) {
    if (k < 1) throw RangeError("product needs k >= 1");
    auto it = products_.find(k);
    if (it != products_.end()) return it->second;
    AlgOperator<K> x = k == 1 ? mbar_copies(1)[0] : embed_at(mbar_product(k - 1), 1, k) * mbar_copies(k).back();
    return products_.emplace(k, std::move(x)).first->second;
}

template <class K>
AlgOperator<K> QuantumMatrixAlgebra<K>::mbar_product(int from, int to, int k) {
    if (from < 1 || to > k || from > to) throw RangeError("copy range out of bounds");
    if (from == 1 && to == k) return mbar_product(k);
    const auto& c = mbar_copies(k);
    AlgOperator<K> x = c[static_cast<std::size_t>(from - 1)];
    for (int j = from + 1; j <= to; ++j) x = x * c[static_cast<std::size_t>(j - 1)];
    return x;
}

template <class K>
const std::vector<NCPoly<K>>& QuantumMatrixAlgebra<K>::relations() {
    if (!have_relations_) {
        relations_ = relations_at(1, 2);
        have_relations_ = true;
    }
    return relations_;
}

template <class K>
std::vector<NCPoly<K>> QuantumMatrixAlgebra<K>::relations_at(int j, int k) {
    if (j < 1 || j + 1 > k) throw RangeError("relation slot out of range");
    auto rj = embed_at(r_, j, k);
    auto x = mbar_product(j, j + 1, k);
    auto lhs = rj * x;
    lhs -= x * rj;
    return entries(lhs);
}

template <class K>
const RewriteSystem<K>& QuantumMatrixAlgebra<K>::rewrite_system(int degree) {
    if (!rewrite_) rewrite_ = std::make_unique<RewriteSystem<K>>(RewriteSystem<K>::build(N(), relations()));
    if (rewrite_->completed_degree() < degree) rewrite_->complete(degree);
    return *rewrite_;
}

template <class K>
NCPoly<K> QuantumMatrixAlgebra<K>::normal_form(const NCPoly<K>& p, ReductionStrategy s) {
    return rewrite_system(std::max(2, p.max_degree())).normal_form(p, s);
}

template <class K>
AlgMatrix<K> QuantumMatrixAlgebra<K>::normal_form(const AlgMatrix<K>& m) {
    AlgMatrix<K> out(m.size());
    int d = 2;
    for (const auto& p : m.entries()) d = std::max(d, p.max_degree());
    const auto& rs = rewrite_system(d);
#pragma omp parallel for schedule(dynamic, 1)
    for (int ij = 0; ij < m.size() * m.size(); ++ij) {
        const int i = ij / m.size(), j = ij % m.size();
        out(i, j) = rs.normal_form(m(i, j));
    }
    return out;
}

template <class K>
bool QuantumMatrixAlgebra<K>::ideal_member(const NCPoly<K>& p) {
    if (!ideal_) ideal_ = std::make_unique<IdealOracle<K>>(relations(), ideal_bound_);
    return ideal_->member(p);
}

template <class K>
SparseOperator<K> QuantumMatrixAlgebra<K>::braid_chain(int t, int k) const {
    if (t < 0 || t > k - 1) throw RangeError("braid chain longer than the tensor power");
    SparseOperator<K> x = SparseOperator<K>::identity(N(), k);
    for (int j = t; j >= 1; --j) x = x * embed_at(r_, j, k);
    return x;
}

template <class K>
SparseOperator<K> QuantumMatrixAlgebra<K>::trailing_weights(int k) const {
    if (k == 1) return SparseOperator<K>::identity(N(), 1);
    return embed_at(tensor_power(dr_, k - 1), 2, k);
}

template <class K>
NCPoly<K> QuantumMatrixAlgebra<K>::y_element(const SparseOperator<K>& x) {
    const int k = x.arity();
    return contract_full(mbar_product(k), x * tensor_power(dr_, k));
}

template <class K>
NCPoly<K> QuantumMatrixAlgebra<K>::power_sum(int k) {
    if (k < 1) throw RangeError("power sums start at k = 1");
    return y_element(braid_chain(k - 1, k));
}

template <class K>
const NCPoly<K>& QuantumMatrixAlgebra<K>::schur_function(const Partition& shape) {
    const std::string key = shape.to_string();
    auto it = schur_.find(key);
    if (it != schur_.end()) return it->second;
    NCPoly<K> s = shape.weight() == 0 ? NCPoly<K>::constant(K(1))
                                      : y_element(rep().diagonal_unit(row_reading_tableau(shape)));
    return schur_.emplace(key, std::move(s)).first->second;
}

template <class K>
NCPoly<K> QuantumMatrixAlgebra<K>::schur_function(const StandardTableau& t, StrandOrder order) {
    return y_element(rep(order).diagonal_unit(t));
}

template <class K>
AlgMatrix<K> QuantumMatrixAlgebra<K>::matrix_power_hecke(const SparseOperator<K>& x) {
    const int k = x.arity();
    return contract_leading(mbar_product(k), x * trailing_weights(k));
}

template <class K>
std::pair<AlgMatrix<K>, int> QuantumMatrixAlgebra<K>::matrix_power_tableau(const StandardTableau& t) {
    const int k = t.size();
    if (k < 1) throw RangeError("tableau must be nonempty");
    const int row = t.cell_of(k).row;
    if (k == 1) return {generators(), row};
    return {matrix_power_hecke(rep(StrandOrder::Reversed).diagonal_unit(t)), row};
}

template <class K>
const AlgMatrix<K>& QuantumMatrixAlgebra<K>::matrix_power_bar(int k) {
    if (k < 0) throw RangeError("matrix power index must be nonnegative");
    auto it = bar_powers_.find(k);
    if (it != bar_powers_.end()) return it->second;
    AlgMatrix<K> m = k == 0 ? AlgMatrix<K>::identity(N())
                   : k == 1 ? generators()
                            : matrix_power_hecke(braid_chain(k - 1, k));
    return bar_powers_.emplace(k, std::move(m)).first->second;
}

template <class K>
AlgMatrix<K> QuantumMatrixAlgebra<K>::matrix_power_bar_iterative(int k) {
    if (k < 0) throw RangeError("matrix power index must be nonnegative");
    AlgMatrix<K> m = AlgMatrix<K>::identity(N());
    const AlgMatrix<K> gen = generators();
    for (int j = 1; j <= k; ++j) m = gen * phi(m);
    return m;
}

template <class K>
AlgMatrix<K> QuantumMatrixAlgebra<K>::traced_tail(const SparseOperator<K>& x) {
    const int k = x.arity();
    if (k < 2) throw RangeError("traced tail needs arity >= 2");
    return contract_leading(mbar_product(2, k, k), x * trailing_weights(k));
}

template <class K>
AlgMatrix<K> QuantumMatrixAlgebra<K>::phi(const AlgMatrix<K>& x) {
    auto x1 = embed_at(AlgOperator<K>::from_matrix(x), 1, 2);
    auto u = f_ * x1 * f_inv_;
    return contract_leading(u, r_ * trailing_weights(2));
}

template <class K>
AlgMatrix<K> QuantumMatrixAlgebra<K>::phi_inverse(const AlgMatrix<K>& x) {
    auto x1 = embed_at(AlgOperator<K>::from_matrix(x), 1, 2);
    auto u = f_inv_ * x1 * r_inv_;
    return contract_leading(u, f_ * embed_at(as_operator(drf_), 2, 2));
}

template class QuantumMatrixAlgebra<Scalar>;
template class QuantumMatrixAlgebra<Rational>;

}  // namespace qch
