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

#include "qch/heckeunits.hpp"

#include <deque>

#include "qch/rmatrix.hpp"

namespace qch {

template <class K>
HeckeRep<K>::HeckeRep(SparseOperator<K> r, FieldContext<K> ctx, StrandOrder order)
    : r_(std::move(r)), ctx_(std::move(ctx)), order_(order) {
    if (r_.arity() != 2) throw ShapeError("R-matrix must have arity 2");
    if (!yang_baxter_check(r_)) throw DomainError("R-matrix does not satisfy the braid relation");
    if (!hecke_check(r_, ctx_)) throw DomainError("R-matrix does not satisfy the Hecke condition");
}

template <class K>
SparseOperator<K> HeckeRep<K>::generator(int i, int k) const {
    if (i < 1 || i > k - 1) throw RangeError("generator index out of range");
    return embed_at(r_, order_ == StrandOrder::Forward ? i : k - i, k);
}

template <class K>
SparseOperator<K> HeckeRep<K>::sigma_shift(int i, int x, int k) const {
    if (x == 0) throw DomainError("sigma shift needs x != 0");
    K c = ctx_.lift(Scalar::q_pow(-x) / qnum(x));
    return generator(i, k) + SparseOperator<K>::identity(N(), k) * c;
}

template <class K>
std::vector<SparseOperator<K>> HeckeRep<K>::jm_elements(int k) const {
    std::vector<SparseOperator<K>> out{SparseOperator<K>::identity(N(), k)};
    for (int i = 1; i < k; ++i) {
        auto g = generator(i, k);
        out.push_back(g * out.back() * g);
    }
    return out;
}

template <class K>
const std::vector<SparseOperator<K>>& HeckeRep<K>::additive_jm(int k) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = additive_.find(k);
        if (it != additive_.end()) return *it->second;
    }
    auto v = std::make_unique<std::vector<SparseOperator<K>>>();
    v->push_back(SparseOperator<K>(N(), k));
    for (int i = 1; i < k; ++i) {
        auto g = generator(i, k);
        v->push_back(g * v->back() * g + g);
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = additive_.emplace(k, std::move(v));
    return *it->second;
}

template <class K>
K HeckeRep<K>::content_eigenvalue(int c) const {
    return ctx_.lift(Scalar::q_pow(c) * qnum(c));
}

template <class K>
const SparseOperator<K>& HeckeRep<K>::diagonal_unit(const StandardTableau& t) {
    const int s = t.size();
    if (s < 1) throw ShapeError("matrix unit needs a nonempty tableau");
    const std::string key = t.to_string();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = units_.find(key);
        if (it != units_.end()) return *it->second;
    }
    SparseOperator<K> e = SparseOperator<K>::identity(N(), s);
    if (s > 1) {
        StandardTableau prev = t.restrict_to(s - 1);
        e = place(diagonal_unit(prev), 0, s);
        const auto& L = additive_jm(s)[static_cast<std::size_t>(s - 1)];
        const int ct = t.content(s);
        const K et = content_eigenvalue(ct);
        for (int c : prev.shape().addable_contents()) {
            if (c == ct) continue;
            K ec = content_eigenvalue(c);
            K den = et - ec;
            if (qch::is_zero(den)) throw DegenerateQ("content eigenvalues coincide at this q");
            auto factor = L - SparseOperator<K>::identity(N(), s) * ec;
            e = e * factor;
            e *= K(1) / den;
        }
    }
    auto p = std::make_unique<SparseOperator<K>>(std::move(e));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = units_.emplace(key, std::move(p));
    return *it->second;
}

template <class K>
SparseOperator<K> HeckeRep<K>::diagonal_unit_reference(const StandardTableau& t) const {
    const int k = t.size();
    auto J = jm_elements(k);
    auto e = SparseOperator<K>::identity(N(), k);
    for (int i = 2; i <= k; ++i) {
        const int ct = t.content(i);
        const K target = ctx_.lift(Scalar::q_pow(2 * ct));
        for (int c = -(i - 1); c <= i - 1; ++c) {
            if (c == ct) continue;
            const K val = ctx_.lift(Scalar::q_pow(2 * c));
            K den = target - val;
            if (qch::is_zero(den)) throw DegenerateQ("q^{2c} values coincide at this q");
            e = e * (J[static_cast<std::size_t>(i - 1)] - SparseOperator<K>::identity(N(), k) * val);
            e *= K(1) / den;
        }
    }
    return e;
}

template <class K>
SparseOperator<K> HeckeRep<K>::offdiagonal_unit(const StandardTableau& t, int k, bool to_swapped) {
    auto swapped = apply_transposition(t, k);
    if (!swapped) throw NonStandardTarget("transposition target is not standard");
    const int l = ell(t, k);
    const int s = t.size();
    const auto& e = diagonal_unit(t);
    auto sig = sigma_shift(k, l, s);
    if (to_swapped) return (e * sig) * ctx_.lift(omega(l));
    return (sig * e) * ctx_.lift(omega(-l));
}

template <class K>
std::vector<int> HeckeRep<K>::chain_from_root(const StandardTableau& t) const {
    const StandardTableau root = row_reading_tableau(t.shape());
    std::deque<std::pair<StandardTableau, std::vector<int>>> queue;
    std::vector<StandardTableau> seen{root};
    queue.emplace_back(root, std::vector<int>{});
    while (!queue.empty()) {
        auto [cur, path] = queue.front();
        queue.pop_front();
        if (cur == t) return path;
        for (int i = 1; i < cur.size(); ++i) {
            auto nxt = apply_transposition(cur, i);
            if (!nxt || std::find(seen.begin(), seen.end(), *nxt) != seen.end()) continue;
            seen.push_back(*nxt);
            auto p = path;
            p.push_back(i);
            queue.emplace_back(*nxt, std::move(p));
        }
    }
    throw DomainError("tableau unreachable from the row-reading tableau");
}

template <class K>
SparseOperator<K> HeckeRep<K>::unit(const StandardTableau& a, const StandardTableau& b) {
    if (!(a.shape() == b.shape())) throw ShapeError("matrix units need tableaux of one shape");
    if (a == b) return diagonal_unit(a);
    const StandardTableau root = row_reading_tableau(a.shape());
    const int s = a.size();
    // E_{a,root}
    SparseOperator<K> left = SparseOperator<K>::identity(N(), s);
    {
        auto path = chain_from_root(a);
        std::vector<StandardTableau> ts{root};
        for (int k : path) ts.push_back(*apply_transposition(ts.back(), k));
        for (std::size_t i = path.size(); i-- > 0;) left = left * offdiagonal_unit(ts[i], path[i], false);
        if (path.empty()) left = diagonal_unit(root);
    }
    SparseOperator<K> right = SparseOperator<K>::identity(N(), s);
    {
        auto path = chain_from_root(b);
        std::vector<StandardTableau> ts{root};
        for (int k : path) ts.push_back(*apply_transposition(ts.back(), k));
        for (std::size_t i = 0; i < path.size(); ++i) right = right * offdiagonal_unit(ts[i], path[i], true);
        if (path.empty()) right = diagonal_unit(root);
    }
    return left * right;
}

template <class K>
SparseOperator<K> HeckeRep<K>::place(const SparseOperator<K>& x, int shift, int total) const {
    const int s = x.arity();
    if (shift < 0 || shift + s > total) throw RangeError("placement exceeds the tensor power");
    if (order_ == StrandOrder::Forward) return embed_at(x, shift + 1, total);
    return embed_at(x, total - shift - s + 1, total);
}

template <class K>
SparseOperator<K> embed_shift(const SparseOperator<K>& x, int i, int total) {
    if (i < 0 || x.arity() + i > total) throw RangeError("shift embedding out of range");
    return embed_at(x, i + 1, total);
}

template <class K>
GlmnReport glmn_type_check(HeckeRep<K>& rep, int m, int n) {
    if (m < 0 || n < 0) throw RangeError("m and n must be nonnegative");
    const int a = (m + 1) * (n + 1);
    const Partition rect(std::vector<int>(static_cast<std::size_t>(m + 1), n + 1));
    GlmnReport rpt;
    auto rect_ts = standard_tableaux(rect);
    rpt.rectangle_vanishes = rep.diagonal_unit(rect_ts.front()).is_zero();
    rpt.rectangle_spot_check = rep.diagonal_unit(rect_ts.back()).is_zero();
    bool all = true;
    for (const auto& mu : partitions_of(a)) {
        if (mu == rect) continue;
        bool nz = !rep.diagonal_unit(row_reading_tableau(mu)).is_zero();
        rpt.others_nonzero.emplace_back(mu.to_string(), nz);
        all = all && nz;
    }
    rpt.verdict = rpt.rectangle_vanishes && rpt.rectangle_spot_check && all;
    return rpt;
}

template class HeckeRep<Scalar>;
template class HeckeRep<Rational>;
template SparseOperator<Scalar> embed_shift(const SparseOperator<Scalar>&, int, int);
template SparseOperator<Rational> embed_shift(const SparseOperator<Rational>&, int, int);
template GlmnReport glmn_type_check(HeckeRep<Scalar>&, int, int);
template GlmnReport glmn_type_check(HeckeRep<Rational>&, int, int);

}  // namespace qch
