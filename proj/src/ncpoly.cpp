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

#include "qch/ncpoly.hpp"

#include <algorithm>

#include "qch/kernels.hpp"

namespace qch {

Word Word::from_letters(const std::vector<int>& letters) {
    Word w;
    for (int g : letters) w = w * letter(g);
    return w;
}

std::vector<int> Word::letters() const {
    std::vector<int> out(static_cast<std::size_t>(len));
    for (int p = 0; p < len; ++p) out[static_cast<std::size_t>(p)] = at(p);
    return out;
}

std::string Word::to_string(int N) const {
    if (len == 0) return "1";
    std::string s;
    for (int p = 0; p < len; ++p) {
        if (p) s += '*';
        int g = at(p);
        s += "M" + std::to_string(g / N + 1) + std::to_string(g % N + 1);
    }
    return s;
}

template <class K>
std::string NCPoly<K>::to_string(int N) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) s += " + ";
        first = false;
        const K& c = it->second;
        if (c == K(1)) {
            s += it->first.to_string(N);
        } else {
            s += "(" + qch::to_string(c) + ")";
            if (it->first.len > 0) s += "*" + it->first.to_string(N);
        }
    }
    return s;
}

template <class K>
AlgMatrix<K> AlgMatrix<K>::identity(int n) {
    AlgMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = NCPoly<K>::constant(K(1));
    return m;
}

template <class K>
AlgMatrix<K> AlgMatrix<K>::generators(int n) {
    if (n * n > Word::kMaxLetters) throw Unsupported("at most 32 generators fit in a word letter");
    AlgMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = NCPoly<K>::monomial(Word::letter(i * n + j));
    return m;
}

template <class K>
bool AlgMatrix<K>::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const NCPoly<K>& p) { return p.is_zero(); });
}

template <class K>
bool AlgMatrix<K>::is_homogeneous(int d) const {
    return std::all_of(e_.begin(), e_.end(), [d](const NCPoly<K>& p) { return p.is_homogeneous(d); });
}

template <class K>
AlgMatrix<K>& AlgMatrix<K>::operator+=(const AlgMatrix& o) {
    if (n_ != o.n_) throw ShapeError("matrix size mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

template <class K>
AlgMatrix<K>& AlgMatrix<K>::operator-=(const AlgMatrix& o) {
    if (n_ != o.n_) throw ShapeError("matrix size mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

template <class K>
AlgMatrix<K>& AlgMatrix<K>::operator*=(const K& c) {
    for (auto& p : e_) p *= c;
    return *this;
}

template <class K>
AlgMatrix<K> AlgMatrix<K>::times_right(const NCPoly<K>& p) const {
    AlgMatrix out(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * p;
    return out;
}

template <class K>
AlgOperator<K>::AlgOperator(int N, int arity) : space_{N, arity} {
    check_dense_budget(N, arity);
    rows_.resize(space_.dim());
}

template <class K>
AlgOperator<K> AlgOperator<K>::from_matrix(const AlgMatrix<K>& m) {
    AlgOperator out(m.size(), 1);
    for (int i = 0; i < m.size(); ++i) {
        Row r;
        for (int j = 0; j < m.size(); ++j)
            if (!m(i, j).is_zero()) r.emplace_back(static_cast<Index>(j), m(i, j));
        out.rows_[static_cast<Index>(i)] = std::move(r);
    }
    return out;
}

template <class K>
const NCPoly<K>* AlgOperator<K>::find(Index in, Index out) const {
    const auto& r = rows_[in];
    auto it = std::lower_bound(r.begin(), r.end(), out, [](const Entry& e, Index c) { return e.first < c; });
    if (it == r.end() || it->first != out) return nullptr;
    return &it->second;
}

template <class K>
std::size_t AlgOperator<K>::nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

template <class K>
bool AlgOperator<K>::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

template <class K>
AlgOperator<K>& AlgOperator<K>::operator-=(const AlgOperator& o) {
    if (N() != o.N() || arity() != o.arity()) throw ShapeError("operator shape mismatch");
    for (Index i = 0; i < dim(); ++i) {
        std::map<Index, NCPoly<K>> acc;
        for (auto& [c, p] : rows_[i]) acc[c] += p;
        for (const auto& [c, p] : o.rows_[i]) acc[c] -= p;
        Row r;
        for (auto& [c, p] : acc)
            if (!p.is_zero()) r.emplace_back(c, std::move(p));
        rows_[i] = std::move(r);
    }
    return *this;
}

namespace {

template <class K>
typename AlgOperator<K>::Row flush(std::map<Index, NCPoly<K>>& acc) {
    typename AlgOperator<K>::Row r;
    r.reserve(acc.size());
    for (auto& [c, p] : acc)
        if (!p.is_zero()) r.emplace_back(c, std::move(p));
    acc.clear();
    return r;
}

void check_shapes(int n1, int a1, int n2, int a2) {
    if (n1 != n2 || a1 != a2) throw ShapeError("operator shape mismatch");
}

}  // namespace

template <class K>
AlgOperator<K> embed_at(const AlgOperator<K>& x, int i, int k) {
    const int p = x.arity();
    if (i < 1 || i > k - p + 1) throw RangeError("embedding slot out of range");
    const int N = x.N();
    if (i == 1 && k == p) return x;
    const Index dpre = IndexSpace{N, i - 1}.dim();
    const Index dpost = IndexSpace{N, k - p - i + 1}.dim();
    const Index dx = x.dim();
    AlgOperator<K> out(N, k);
    for (Index a = 0; a < dpre; ++a)
        for (Index r = 0; r < dx; ++r) {
            const auto& row = x.row(r);
            if (row.empty()) continue;
            for (Index s = 0; s < dpost; ++s) {
                typename AlgOperator<K>::Row nr;
                nr.reserve(row.size());
                for (const auto& [c, v] : row) nr.emplace_back((a * dx + c) * dpost + s, v);
                out.set_row((a * dx + r) * dpost + s, std::move(nr));
            }
        }
    return out;
}

template <class K>
AlgOperator<K> operator*(const AlgOperator<K>& x, const AlgOperator<K>& y) {
    check_shapes(x.N(), x.arity(), y.N(), y.arity());
    AlgOperator<K> out(x.N(), x.arity());
    const long long n = static_cast<long long>(x.dim());
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < n; ++i) {
        std::map<Index, NCPoly<K>> acc;
        for (const auto& [k, a] : x.row(static_cast<Index>(i)))
            for (const auto& [j, b] : y.row(k)) acc[j].add_product(a, b, K(1));
        out.set_row(static_cast<Index>(i), flush(acc));
    }
    return out;
}

template <class K>
AlgOperator<K> operator*(const AlgOperator<K>& x, const SparseOperator<K>& s) {
    check_shapes(x.N(), x.arity(), s.N(), s.arity());
    AlgOperator<K> out(x.N(), x.arity());
    const long long n = static_cast<long long>(x.dim());
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < n; ++i) {
        std::map<Index, NCPoly<K>> acc;
        for (const auto& [k, a] : x.row(static_cast<Index>(i)))
            for (const auto& [j, c] : s.row(k)) acc[j].add_scaled(a, c);
        out.set_row(static_cast<Index>(i), flush(acc));
    }
    return out;
}

template <class K>
AlgOperator<K> operator*(const SparseOperator<K>& s, const AlgOperator<K>& x) {
    check_shapes(x.N(), x.arity(), s.N(), s.arity());
    AlgOperator<K> out(x.N(), x.arity());
    const long long n = static_cast<long long>(x.dim());
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < n; ++i) {
        std::map<Index, NCPoly<K>> acc;
        for (const auto& [k, c] : s.row(static_cast<Index>(i)))
            for (const auto& [j, a] : x.row(k)) acc[j].add_scaled(a, c);
        out.set_row(static_cast<Index>(i), flush(acc));
    }
    return out;
}

template <class K>
NCPoly<K> contract_full(const AlgOperator<K>& x, const SparseOperator<K>& w) {
    check_shapes(x.N(), x.arity(), w.N(), w.arity());
    const long long n = static_cast<long long>(x.dim());
    const int nt = kernels::max_threads();
    std::vector<NCPoly<K>> partial(static_cast<std::size_t>(nt));
#pragma omp parallel for schedule(dynamic, 8) num_threads(nt)
    for (long long j = 0; j < n; ++j) {
        auto& acc = partial[static_cast<std::size_t>(kernels::thread_id())];
        for (const auto& [k, p] : x.row(static_cast<Index>(j))) {
            K c = w.get(k, static_cast<Index>(j));
            if (!qch::is_zero(c)) acc.add_scaled(p, c);
        }
    }
    NCPoly<K> out;
    for (const auto& p : partial) out += p;
    return out;
}

template <class K>
AlgMatrix<K> contract_leading(const AlgOperator<K>& x, const SparseOperator<K>& w) {
    check_shapes(x.N(), x.arity(), w.N(), w.arity());
    const int N = x.N();
    const Index tail = IndexSpace{N, x.arity() - 1}.dim();
    AlgMatrix<K> out(N);
#pragma omp parallel for schedule(dynamic, 1)
    for (int ab = 0; ab < N * N; ++ab) {
        const int a = ab / N, b = ab % N;
        NCPoly<K> acc;
        for (Index jp = 0; jp < tail; ++jp) {
            const Index in = static_cast<Index>(a) * tail + jp;
            const Index col = static_cast<Index>(b) * tail + jp;
            for (const auto& [k, p] : x.row(in)) {
                K c = w.get(k, col);
                if (!qch::is_zero(c)) acc.add_scaled(p, c);
            }
        }
        out(a, b) = std::move(acc);
    }
    return out;
}

#define QCH_INSTANTIATE_NCPOLY(K)                                                             \
    template class NCPoly<K>;                                                                 \
    template class AlgMatrix<K>;                                                              \
    template class AlgOperator<K>;                                                            \
    template AlgOperator<K> embed_at(const AlgOperator<K>&, int, int);                        \
    template AlgOperator<K> operator*(const AlgOperator<K>&, const AlgOperator<K>&);          \
    template AlgOperator<K> operator*(const AlgOperator<K>&, const SparseOperator<K>&);       \
    template AlgOperator<K> operator*(const SparseOperator<K>&, const AlgOperator<K>&);       \
    template NCPoly<K> contract_full(const AlgOperator<K>&, const SparseOperator<K>&);        \
    template AlgMatrix<K> contract_leading(const AlgOperator<K>&, const SparseOperator<K>&);

QCH_INSTANTIATE_NCPOLY(Scalar)
QCH_INSTANTIATE_NCPOLY(Rational)

}  // namespace qch
