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

#include "qch/tensorop.hpp"

#include <algorithm>
#include <cmath>

#include "qch/kernels.hpp"

namespace qch {

Index IndexSpace::dim() const {
    Index d = 1;
    for (int s = 0; s < arity; ++s) d *= static_cast<Index>(N);
    return d;
}

Index IndexSpace::flatten(const std::vector<int>& digits) const {
    Index idx = 0;
    for (int d : digits) idx = idx * static_cast<Index>(N) + static_cast<Index>(d);
    return idx;
}

std::vector<int> IndexSpace::digits(Index idx) const {
    std::vector<int> out(static_cast<std::size_t>(arity));
    for (int s = arity - 1; s >= 0; --s) {
        out[static_cast<std::size_t>(s)] = static_cast<int>(idx % static_cast<Index>(N));
        idx /= static_cast<Index>(N);
    }
    return out;
}

Index IndexSpace::stride(int slot) const {
    Index st = 1;
    for (int s = slot; s < arity; ++s) st *= static_cast<Index>(N);
    return st;
}

int IndexSpace::digit(Index idx, int slot) const {
    return static_cast<int>((idx / stride(slot)) % static_cast<Index>(N));
}

void check_dense_budget(int N, int arity) {
    if (static_cast<double>(arity) * std::log2(static_cast<double>(N)) > 20.0)
        throw Unsupported("dense intermediate of size " + std::to_string(N) + "^" + std::to_string(arity) +
                          " exceeds the memory budget");
}

template <class K>
ScalarMatrix<K> ScalarMatrix<K>::identity(int n) {
    ScalarMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
}

template <class K>
bool ScalarMatrix<K>::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const K& x) { return qch::is_zero(x); });
}

namespace {

template <class K>
bool gauss_jordan(ScalarMatrix<K> a, ScalarMatrix<K>* inv) {
    const int n = a.size();
    ScalarMatrix<K> b = ScalarMatrix<K>::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!qch::is_zero(a(r, c))) {
                p = r;
                break;
            }
        if (p < 0) return false;
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(b(p, j), b(c, j));
            }
        K piv = K(1) / a(c, c);
        for (int j = 0; j < n; ++j) {
            if (!qch::is_zero(a(c, j))) a(c, j) *= piv;
            if (!qch::is_zero(b(c, j))) b(c, j) *= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || qch::is_zero(a(r, c))) continue;
            K f = a(r, c);
            for (int j = 0; j < n; ++j) {
                if (!qch::is_zero(a(c, j))) a(r, j) -= f * a(c, j);
                if (!qch::is_zero(b(c, j))) b(r, j) -= f * b(c, j);
            }
        }
    }
    if (inv) *inv = std::move(b);
    return true;
}

}  // namespace

template <class K>
ScalarMatrix<K> inverse(const ScalarMatrix<K>& m) {
    ScalarMatrix<K> out;
    if (!gauss_jordan(m, &out)) throw NotInvertible("matrix is singular");
    return out;
}

template <class K>
bool is_invertible(const ScalarMatrix<K>& m) {
    return gauss_jordan(m, static_cast<ScalarMatrix<K>*>(nullptr));
}

template <class K>
SparseOperator<K>::SparseOperator(int N, int arity) : space_{N, arity} {
    if (N < 1 || arity < 1) throw RangeError("operator needs N >= 1 and arity >= 1");
    rows_.resize(space_.dim());
}

template <class K>
SparseOperator<K> SparseOperator<K>::identity(int N, int arity) {
    SparseOperator op(N, arity);
    for (Index i = 0; i < op.dim(); ++i) op.rows_[i].emplace_back(i, K(1));
    return op;
}

template <class K>
K SparseOperator<K>::get(Index in, Index out) const {
    const Row& r = rows_[in];
    auto it = std::lower_bound(r.begin(), r.end(), out, [](const Entry& e, Index j) { return e.first < j; });
    if (it != r.end() && it->first == out) return it->second;
    return K(0);
}

template <class K>
void SparseOperator<K>::set(Index in, Index out, const K& v) {
    Row& r = rows_[in];
    auto it = std::lower_bound(r.begin(), r.end(), out, [](const Entry& e, Index j) { return e.first < j; });
    bool present = it != r.end() && it->first == out;
    if (qch::is_zero(v)) {
        if (present) r.erase(it);
    } else if (present) {
        it->second = v;
    } else {
        r.insert(it, Entry(out, v));
    }
}

template <class K>
void SparseOperator<K>::add_to(Index in, Index out, const K& v) {
    if (qch::is_zero(v)) return;
    Row& r = rows_[in];
    auto it = std::lower_bound(r.begin(), r.end(), out, [](const Entry& e, Index j) { return e.first < j; });
    if (it != r.end() && it->first == out) {
        it->second += v;
        if (qch::is_zero(it->second)) r.erase(it);
    } else {
        r.insert(it, Entry(out, v));
    }
}

template <class K>
std::size_t SparseOperator<K>::nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

template <class K>
bool SparseOperator<K>::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

template <class K>
SparseOperator<K> SparseOperator<K>::transposed() const {
    SparseOperator t(N(), arity());
    for (Index i = 0; i < dim(); ++i)
        for (const auto& [j, v] : rows_[i]) t.rows_[j].emplace_back(i, v);
    return t;
}

namespace {

template <class K>
typename SparseOperator<K>::Row merge_rows(const typename SparseOperator<K>::Row& a,
                                           const typename SparseOperator<K>::Row& b, bool subtract) {
    typename SparseOperator<K>::Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? K(-b[j].second) : b[j].second);
            ++j;
        } else {
            K v = subtract ? K(a[i].second - b[j].second) : K(a[i].second + b[j].second);
            if (!qch::is_zero(v)) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

template <class K>
SparseOperator<K>& SparseOperator<K>::operator+=(const SparseOperator& o) {
    if (o.N() != N() || o.arity() != arity()) throw ShapeError("operator shapes differ");
    for (Index i = 0; i < dim(); ++i)
        if (!o.rows_[i].empty()) rows_[i] = merge_rows<K>(rows_[i], o.rows_[i], false);
    return *this;
}

template <class K>
SparseOperator<K>& SparseOperator<K>::operator-=(const SparseOperator& o) {
    if (o.N() != N() || o.arity() != arity()) throw ShapeError("operator shapes differ");
    for (Index i = 0; i < dim(); ++i)
        if (!o.rows_[i].empty()) rows_[i] = merge_rows<K>(rows_[i], o.rows_[i], true);
    return *this;
}

template <class K>
SparseOperator<K>& SparseOperator<K>::operator*=(const K& c) {
    if (qch::is_zero(c)) {
        for (auto& r : rows_) r.clear();
        return *this;
    }
    for (auto& r : rows_)
        for (auto& e : r) e.second *= c;
    return *this;
}

template <class K>
SparseOperator<K> operator*(const SparseOperator<K>& x, const SparseOperator<K>& y) {
    if (x.dim() >= kernels::kParallelThreshold && kernels::max_threads() > 1)
        return kernels::compose_parallel(x, y);
    return kernels::compose_serial(x, y);
}

template <class K>
SparseOperator<K> embed_at(const SparseOperator<K>& x, int i, int k) {
    const int p = x.arity();
    if (i < 1 || i > k - p + 1) throw RangeError("embedding slot out of range");
    const int N = x.N();
    if (i == 1 && k == p) return x;
    IndexSpace pre{N, i - 1}, post{N, k - p - i + 1};
    const Index dpre = i > 1 ? pre.dim() : 1;
    const Index dpost = k - p - i + 1 > 0 ? post.dim() : 1;
    const Index dx = x.dim();
    SparseOperator<K> out(N, k);
    for (Index a = 0; a < dpre; ++a)
        for (Index r = 0; r < dx; ++r) {
            const auto& row = x.row(r);
            if (row.empty()) continue;
            for (Index s = 0; s < dpost; ++s) {
                typename SparseOperator<K>::Row nr;
                nr.reserve(row.size());
                for (const auto& [c, v] : row) nr.emplace_back((a * dx + c) * dpost + s, v);
                out.set_row((a * dx + r) * dpost + s, std::move(nr));
            }
        }
    return out;
}

template <class K>
SparseOperator<K> skew_inverse(const SparseOperator<K>& x) {
    if (x.arity() != 2) throw ShapeError("skew inverse needs an arity-2 operator");
    const int N = x.N();
    ScalarMatrix<K> xr(N * N);
    for (Index row = 0; row < x.dim(); ++row) {
        int i = static_cast<int>(row) / N, a = static_cast<int>(row) % N;
        for (const auto& [col, v] : x.row(row)) {
            int k = static_cast<int>(col) / N, b = static_cast<int>(col) % N;
            xr(i * N + k, a * N + b) = v;
        }
    }
    ScalarMatrix<K> pr;
    try {
        pr = inverse(xr);
    } catch (const NotInvertible&) {
        throw NotSkewInvertible("reshuffled operator is singular");
    }
    SparseOperator<K> psi(N, 2);
    // pr[(a,b),(l,j)] = Psi_{bj}^{al}
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int l = 0; l < N; ++l)
                for (int j = 0; j < N; ++j) {
                    const K& v = pr(a * N + b, l * N + j);
                    if (!qch::is_zero(v))
                        psi.set(static_cast<Index>(b * N + j), static_cast<Index>(a * N + l), v);
                }
    return psi;
}

template <class K>
ScalarMatrix<K> d_operator(const SparseOperator<K>& x) {
    SparseOperator<K> psi = skew_inverse(x);
    const int N = x.N();
    ScalarMatrix<K> d(N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            K acc(0);
            for (int b = 0; b < N; ++b) acc += psi.get(static_cast<Index>(i * N + b), static_cast<Index>(j * N + b));
            d(i, j) = acc;
        }
    return d;
}

template <class K>
K rtrace_scalar(const ScalarMatrix<K>& d, const ScalarMatrix<K>& m) {
    if (d.size() != m.size()) throw ShapeError("trace operands differ in size");
    K acc(0);
    for (int i = 0; i < d.size(); ++i)
        for (int j = 0; j < d.size(); ++j)
            if (!qch::is_zero(d(i, j)) && !qch::is_zero(m(j, i))) acc += d(i, j) * m(j, i);
    return acc;
}

template <class K>
SparseOperator<K> tensor_power(const ScalarMatrix<K>& d, int k) {
    const int N = d.size();
    SparseOperator<K> cur(N, 1);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (!qch::is_zero(d(i, j))) cur.set(static_cast<Index>(i), static_cast<Index>(j), d(i, j));
    for (int s = 2; s <= k; ++s) {
        SparseOperator<K> next(N, s);
        for (Index r = 0; r < cur.dim(); ++r)
            for (int i = 0; i < N; ++i) {
                typename SparseOperator<K>::Row row;
                for (const auto& [c, v] : cur.row(r))
                    for (int j = 0; j < N; ++j)
                        if (!qch::is_zero(d(i, j))) row.emplace_back(c * static_cast<Index>(N) + static_cast<Index>(j), v * d(i, j));
                next.set_row(r * static_cast<Index>(N) + static_cast<Index>(i), std::move(row));
            }
        cur = std::move(next);
    }
    return cur;
}

template <class K>
SparseOperator<K> rtrace_trailing(const ScalarMatrix<K>& d, const SparseOperator<K>& u, int keep) {
    const int k = u.arity();
    const int t = k - keep;
    if (keep < 1 || t < 0) throw RangeError("bad partial trace split");
    if (t == 0) return u;
    const int N = u.N();
    SparseOperator<K> dt = tensor_power(d, t);
    const Index dT = dt.dim();
    SparseOperator<K> out(N, keep);
    for (Index row = 0; row < u.dim(); ++row) {
        Index A = row / dT, J = row % dT;
        for (const auto& [col, v] : u.row(row)) {
            Index B = col / dT, I = col % dT;
            K w = dt.get(I, J);
            if (!qch::is_zero(w)) out.add_to(A, B, w * v);
        }
    }
    return out;
}

template <class K>
K rtrace_full(const ScalarMatrix<K>& d, const SparseOperator<K>& u) {
    SparseOperator<K> dt = tensor_power(d, u.arity());
    K acc(0);
    for (Index row = 0; row < u.dim(); ++row)
        for (const auto& [col, v] : u.row(row)) {
            K w = dt.get(col, row);
            if (!qch::is_zero(w)) acc += w * v;
        }
    return acc;
}

template <class K>
SparseOperator<K> inverse(const SparseOperator<K>& x) {
    check_dense_budget(x.N(), x.arity());
    const int n = static_cast<int>(x.dim());
    ScalarMatrix<K> m(n);
    for (Index r = 0; r < x.dim(); ++r)
        for (const auto& [c, v] : x.row(r)) m(static_cast<int>(r), static_cast<int>(c)) = v;
    ScalarMatrix<K> inv = inverse(m);
    SparseOperator<K> out(x.N(), x.arity());
    for (int r = 0; r < n; ++r) {
        typename SparseOperator<K>::Row row;
        for (int c = 0; c < n; ++c)
            if (!qch::is_zero(inv(r, c))) row.emplace_back(static_cast<Index>(c), inv(r, c));
        out.set_row(static_cast<Index>(r), std::move(row));
    }
    return out;
}

template <class K>
SparseOperator<K> scalar_identity(int N, int arity, const K& c) {
    return SparseOperator<K>::identity(N, arity) * c;
}

template <class K>
std::string describe_nonzero(const SparseOperator<K>& x) {
    auto fmt = [&](Index idx) {
        std::string s = "(";
        auto dg = x.space().digits(idx);
        for (std::size_t i = 0; i < dg.size(); ++i) s += (i ? "," : "") + std::to_string(dg[i] + 1);
        return s + ")";
    };
    for (Index r = 0; r < x.dim(); ++r)
        if (!x.row(r).empty()) {
            const auto& [c, v] = x.row(r).front();
            return fmt(r) + "->" + fmt(c) + ": " + to_string(v);
        }
    return "zero";
}

#define QCH_INSTANTIATE(K)                                                                          \
    template class ScalarMatrix<K>;                                                                 \
    template class SparseOperator<K>;                                                               \
    template ScalarMatrix<K> inverse(const ScalarMatrix<K>&);                                       \
    template bool is_invertible(const ScalarMatrix<K>&);                                            \
    template SparseOperator<K> operator*(const SparseOperator<K>&, const SparseOperator<K>&);       \
    template SparseOperator<K> embed_at(const SparseOperator<K>&, int, int);                        \
    template SparseOperator<K> skew_inverse(const SparseOperator<K>&);                              \
    template ScalarMatrix<K> d_operator(const SparseOperator<K>&);                                  \
    template K rtrace_scalar(const ScalarMatrix<K>&, const ScalarMatrix<K>&);                       \
    template SparseOperator<K> tensor_power(const ScalarMatrix<K>&, int);                           \
    template SparseOperator<K> rtrace_trailing(const ScalarMatrix<K>&, const SparseOperator<K>&, int); \
    template K rtrace_full(const ScalarMatrix<K>&, const SparseOperator<K>&);                       \
    template SparseOperator<K> inverse(const SparseOperator<K>&);                                   \
    template SparseOperator<K> scalar_identity(int, int, const K&);                                 \
    template std::string describe_nonzero(const SparseOperator<K>&);

QCH_INSTANTIATE(Scalar)
QCH_INSTANTIATE(Rational)

#undef QCH_INSTANTIATE

}  // namespace qch
