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

#ifndef QCH_NCPOLY_HPP
#define QCH_NCPOLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qch/errors.hpp"
#include "qch/tensorop.hpp"

namespace qch {

/// Word in the generators g = i*N + j (the entry M_i^j), packed 5 bits per
/// letter with the first letter in the high bits.
///
/// Words compare by length, then lexicographically; this is the graded-lex
/// order with g_11 < g_12 < ... < g_NN.
struct Word {
    static constexpr int kBits = 5;
    static constexpr int kMaxLength = 12;
    static constexpr int kMaxLetters = 1 << kBits;

    std::uint64_t code = 0;
    int len = 0;

    static Word letter(int g) {
        if (g < 0 || g >= kMaxLetters) throw RangeError("generator index does not fit in a word letter");
        return Word{static_cast<std::uint64_t>(g), 1};
    }
    static Word from_letters(const std::vector<int>& letters);

    int at(int pos) const {
        return static_cast<int>((code >> (kBits * (len - 1 - pos))) & (kMaxLetters - 1));
    }
    /// Subword of n letters starting at pos.
    Word sub(int pos, int n) const {
        if (n == 0) return Word{};
        std::uint64_t mask = (n >= 12) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (kBits * n)) - 1);
        return Word{(code >> (kBits * (len - pos - n))) & mask, n};
    }
    std::vector<int> letters() const;
    std::string to_string(int N) const;

    friend Word operator*(const Word& a, const Word& b) {
        if (a.len + b.len > kMaxLength) throw BoundExceeded("word longer than the packed limit");
        return Word{(a.code << (kBits * b.len)) | b.code, a.len + b.len};
    }
    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.len <=> b.len; c != 0) return c;
        return a.code <=> b.code;
    }
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::uint64_t x = w.code * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(w.len);
        return static_cast<std::size_t>(x ^ (x >> 29));
    }
};

/// Element of the free algebra: a finite sum of words with coefficients in K.
template <class K>
class NCPoly {
   public:
    using Terms = std::map<Word, K>;

    NCPoly() = default;
    static NCPoly constant(const K& c) {
        NCPoly p;
        p.add(Word{}, c);
        return p;
    }
    static NCPoly monomial(const Word& w, const K& c = K(1)) {
        NCPoly p;
        p.add(w, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    K coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? K(0) : it->second;
    }
    /// Largest word and its coefficient; the polynomial must be nonzero.
    const std::pair<const Word, K>& leading() const { return *terms_.rbegin(); }

    void add(const Word& w, const K& c) {
        if (qch::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (qch::is_zero(it->second)) terms_.erase(it);
        }
    }
    /// this += c * p
    void add_scaled(const NCPoly& p, const K& c) {
        if (qch::is_zero(c)) return;
        for (const auto& [w, v] : p.terms_) add(w, v * c);
    }
    /// this += c * (p * q) without forming the product.
    void add_product(const NCPoly& p, const NCPoly& q, const K& c) {
        if (qch::is_zero(c)) return;
        for (const auto& [u, a] : p.terms_) {
            K ac = a * c;
            for (const auto& [w, b] : q.terms_) add(u * w, ac * b);
        }
    }
    void erase(const Word& w) { terms_.erase(w); }

    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    NCPoly& operator*=(const K& c) {
        if (qch::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_) v *= c;
        return *this;
    }
    NCPoly operator-() const {
        NCPoly r = *this;
        for (auto& [w, v] : r.terms_) v = -v;
        return r;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const K& c) { return a *= c; }
    friend NCPoly operator*(const K& c, NCPoly a) { return a *= c; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        r.add_product(a, b, K(1));
        return r;
    }
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

    /// True when every word has length d (the zero polynomial is homogeneous of any degree).
    bool is_homogeneous(int d) const {
        for (const auto& [w, c] : terms_)
            if (w.len != d) return false;
        return true;
    }
    int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.len; }
    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.len; }

    std::string to_string(int N) const;

   private:
    Terms terms_;
};

/// N x N matrix with entries in the free algebra; entry (i, j) is X_i^j.
template <class K>
class AlgMatrix {
   public:
    AlgMatrix() = default;
    explicit AlgMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n * n)) {}
    static AlgMatrix identity(int n);
    /// The matrix M of generators, M_i^j = g_{iN+j}.
    static AlgMatrix generators(int n);

    int size() const { return n_; }
    NCPoly<K>& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
    const NCPoly<K>& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }
    const std::vector<NCPoly<K>>& entries() const { return e_; }

    bool is_zero() const;
    bool is_homogeneous(int d) const;

    AlgMatrix& operator+=(const AlgMatrix& o);
    AlgMatrix& operator-=(const AlgMatrix& o);
    AlgMatrix& operator*=(const K& c);
    friend AlgMatrix operator+(AlgMatrix a, const AlgMatrix& b) { return a += b; }
    friend AlgMatrix operator-(AlgMatrix a, const AlgMatrix& b) { return a -= b; }
    friend AlgMatrix operator*(AlgMatrix a, const K& c) { return a *= c; }
    friend bool operator==(const AlgMatrix& a, const AlgMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    /// Matrix product with noncommuting entries.
    friend AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b) {
        AlgMatrix c(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int j = 0; j < a.n_; ++j)
                for (int k = 0; k < a.n_; ++k) c(i, j).add_product(a(i, k), b(k, j), K(1));
        return c;
    }
    /// Right multiplication of every entry by an algebra element.
    AlgMatrix times_right(const NCPoly<K>& p) const;

   private:
    int n_ = 0;
    std::vector<NCPoly<K>> e_;
};

/// Operator on V^{(x)k} with entries in the free algebra. Same index
/// conventions as SparseOperator: row = input, column = output.
template <class K>
class AlgOperator {
   public:
    using Entry = std::pair<Index, NCPoly<K>>;
    using Row = std::vector<Entry>;  // sorted by column, no zero entries

    AlgOperator() = default;
    AlgOperator(int N, int arity);
    static AlgOperator from_matrix(const AlgMatrix<K>& m);

    int N() const { return space_.N; }
    int arity() const { return space_.arity; }
    Index dim() const { return space_.dim(); }
    const IndexSpace& space() const { return space_; }
    const Row& row(Index i) const { return rows_[i]; }
    void set_row(Index i, Row r) { rows_[i] = std::move(r); }
    /// Entry or nullptr when zero.
    const NCPoly<K>* find(Index in, Index out) const;
    std::size_t nnz() const;
    bool is_zero() const;

    AlgOperator& operator-=(const AlgOperator& o);
    friend bool operator==(const AlgOperator& a, const AlgOperator& b) {
        return a.space_.N == b.space_.N && a.space_.arity == b.space_.arity && a.rows_ == b.rows_;
    }

   private:
    IndexSpace space_;
    std::vector<Row> rows_;
};

/// Id^{(x)(i-1)} (x) X (x) Id^{...} with 1-based slot i, at arity k.
template <class K>
AlgOperator<K> embed_at(const AlgOperator<K>& x, int i, int k);

template <class K>
AlgOperator<K> operator*(const AlgOperator<K>& x, const AlgOperator<K>& y);
template <class K>
AlgOperator<K> operator*(const AlgOperator<K>& x, const SparseOperator<K>& s);
template <class K>
AlgOperator<K> operator*(const SparseOperator<K>& s, const AlgOperator<K>& x);

/// sum_{J,K} X_J^K W_K^J.
template <class K>
NCPoly<K> contract_full(const AlgOperator<K>& x, const SparseOperator<K>& w);

/// result_a^b = sum_{J,K} X_{(a,J)}^K W_K^{(b,J)}: contraction of slots 2..k.
template <class K>
AlgMatrix<K> contract_leading(const AlgOperator<K>& x, const SparseOperator<K>& w);

}  // namespace qch

#endif
