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

#ifndef QCH_TENSOROP_HPP
#define QCH_TENSOROP_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qch/field.hpp"
#include "qch/scalars.hpp"

namespace qch {

using Index = std::uint32_t;

/// Flattening of multi-indices in {0..N-1}^k: slot 1 is the most significant digit.
struct IndexSpace {
    int N = 1;
    int arity = 1;

    Index dim() const;
    Index flatten(const std::vector<int>& digits) const;
    std::vector<int> digits(Index idx) const;
    /// Digit in slot (1-based).
    int digit(Index idx, int slot) const;
    Index stride(int slot) const;
};

/// Dense N x N matrix; entry (i, j) is M_i^j.
template <class K>
class ScalarMatrix {
   public:
    ScalarMatrix() = default;
    explicit ScalarMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), K(0)) {}
    static ScalarMatrix identity(int n);

    int size() const { return n_; }
    K& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    const K& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    bool is_zero() const;

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
        ScalarMatrix c(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                if (qch::is_zero(a(i, k))) continue;
                for (int j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

   private:
    int n_ = 0;
    std::vector<K> a_;
};

/// Gauss-Jordan inverse; throws NotInvertible when singular.
template <class K>
ScalarMatrix<K> inverse(const ScalarMatrix<K>& m);
template <class K>
bool is_invertible(const ScalarMatrix<K>& m);

/// Sparse linear map on V^{(x)k}. Row = input multi-index, column = output multi-index.
///
/// X(v_I) = sum_J X_I^J v_J and products are (XY)_I^J = sum_K X_I^K Y_K^J.
template <class K>
class SparseOperator {
   public:
    using Entry = std::pair<Index, K>;
    using Row = std::vector<Entry>;  // sorted by column, no zeros

    SparseOperator() = default;
    SparseOperator(int N, int arity);
    static SparseOperator identity(int N, int arity);

    int N() const { return space_.N; }
    int arity() const { return space_.arity; }
    const IndexSpace& space() const { return space_; }
    Index dim() const { return space_.dim(); }

    const Row& row(Index i) const { return rows_[i]; }
    /// Replace a row; entries must be sorted by column and nonzero.
    void set_row(Index i, Row r) { rows_[i] = std::move(r); }
    K get(Index in, Index out) const;
    void set(Index in, Index out, const K& v);
    void add_to(Index in, Index out, const K& v);

    std::size_t nnz() const;
    bool is_zero() const;
    SparseOperator transposed() const;

    SparseOperator& operator+=(const SparseOperator& o);
    SparseOperator& operator-=(const SparseOperator& o);
    SparseOperator& operator*=(const K& c);
    friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
    friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }
    friend SparseOperator operator*(SparseOperator a, const K& c) { return a *= c; }
    friend SparseOperator operator*(const K& c, SparseOperator a) { return a *= c; }
    friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
        return a.space_.N == b.space_.N && a.space_.arity == b.space_.arity && a.rows_ == b.rows_;
    }

    template <class K2, class F>
    SparseOperator<K2> map(F&& f) const {
        SparseOperator<K2> out(N(), arity());
        for (Index i = 0; i < dim(); ++i) {
            typename SparseOperator<K2>::Row r;
            for (const auto& [j, v] : rows_[i]) {
                K2 w = f(v);
                if (!qch::is_zero(w)) r.emplace_back(j, std::move(w));
            }
            out.set_row(i, std::move(r));
        }
        return out;
    }

   private:
    IndexSpace space_;
    std::vector<Row> rows_;
};

template <class K>
SparseOperator<K> operator*(const SparseOperator<K>& x, const SparseOperator<K>& y);

/// Dense-storage guard: throws Unsupported when arity * log2(N) > 20.
void check_dense_budget(int N, int arity);

/// Id^{(x)(i-1)} (x) X (x) Id^{(x)(k-p-i+1)} with 1-based slot i.
template <class K>
SparseOperator<K> embed_at(const SparseOperator<K>& x, int i, int k);

/// Psi with sum_{a,b} X_{ia}^{kb} Psi_{bj}^{al} = delta_i^l delta_j^k.
template <class K>
SparseOperator<K> skew_inverse(const SparseOperator<K>& x);

/// D_i^j = sum_b Psi_{ib}^{jb}.
template <class K>
ScalarMatrix<K> d_operator(const SparseOperator<K>& x);

/// sum_{i,j} D_i^j M_j^i.
template <class K>
K rtrace_scalar(const ScalarMatrix<K>& d, const ScalarMatrix<K>& m);

/// D^{(x)k} as an operator.
template <class K>
SparseOperator<K> tensor_power(const ScalarMatrix<K>& d, int k);

/// Contract slots keep+1..k of U against D: result_A^B = sum (D^{(x)(k-keep)})_I^J U_{AJ}^{BI}.
template <class K>
SparseOperator<K> rtrace_trailing(const ScalarMatrix<K>& d, const SparseOperator<K>& u, int keep);

/// Full R-trace of an operator: sum (D^{(x)k})_I^J U_J^I.
template <class K>
K rtrace_full(const ScalarMatrix<K>& d, const SparseOperator<K>& u);

/// Exact inverse by dense Gauss-Jordan.
template <class K>
SparseOperator<K> inverse(const SparseOperator<K>& x);

template <class K>
SparseOperator<K> scalar_identity(int N, int arity, const K& c);

template <class K>
std::string describe_nonzero(const SparseOperator<K>& x);

}  // namespace qch

#endif
