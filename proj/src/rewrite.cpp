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

#include "qch/rewrite.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_set>

namespace qch {

template <class K>
NCPoly<K> Echelon<K>::reduce(NCPoly<K> p) const {
    while (!p.is_zero()) {
        const auto& [w, c] = p.leading();
        auto it = rows_.find(w);
        if (it == rows_.end()) break;
        p.add_scaled(it->second, -c);
    }
    return p;
}

template <class K>
bool Echelon<K>::insert(NCPoly<K> p) {
    p = reduce(std::move(p));
    if (p.is_zero()) return false;
    const Word lead = p.leading().first;
    K inv = K(1) / p.leading().second;
    p *= inv;
    rows_.emplace(lead, std::move(p));
    return true;
}

template <class K>
void Echelon<K>::make_reduced() {
    for (auto& [lead, row] : rows_) {
        std::vector<Word> hits;
        for (const auto& [w, c] : row.terms())
            if (w < lead && rows_.count(w)) hits.push_back(w);
        for (const auto& w : hits) {
            K c = row.coeff(w);
            row.add_scaled(rows_.at(w), -c);
        }
    }
}

template <class K>
RewriteSystem<K> RewriteSystem<K>::build(int N, const std::vector<NCPoly<K>>& rels) {
    RewriteSystem rs;
    rs.N_ = N;
    rs.relations_ = rels;
    Echelon<K> e;
    for (const auto& r : rels) {
        if (!r.is_homogeneous(2)) throw DomainError("rewrite system expects quadratic homogeneous relations");
        e.insert(r);
    }
    e.make_reduced();
    for (const auto& [lead, row] : e.rows()) rs.add_rule(row);
    rs.rank2_ = static_cast<int>(rs.rules_.size());
    return rs;
}

template <class K>
void RewriteSystem<K>::add_rule(NCPoly<K> p) {
    const auto& [lead, lc] = p.leading();
    Word w = lead;
    if (!(lc == K(1))) p *= K(1) / lc;
    p.erase(w);
    Rule<K> rule{w, -p};
    if (static_cast<int>(index_.size()) <= w.len) index_.resize(static_cast<std::size_t>(w.len + 1));
    index_[static_cast<std::size_t>(w.len)].emplace(w, rules_.size());
    max_lead_ = std::max(max_lead_, w.len);
    rules_.push_back(std::move(rule));
}

template <class K>
typename RewriteSystem<K>::Match RewriteSystem<K>::find_match(const Word& w, ReductionStrategy s) const {
    auto probe = [&](int pos) -> Match {
        for (int L = 2; L <= std::min(max_lead_, w.len - pos); ++L) {
            const auto& idx = index_[static_cast<std::size_t>(L)];
            if (idx.empty()) continue;
            auto it = idx.find(w.sub(pos, L));
            if (it != idx.end()) return Match{pos, it->second};
        }
        return Match{};
    };
    if (s == ReductionStrategy::Leftmost) {
        for (int pos = 0; pos + 1 < w.len; ++pos)
            if (auto m = probe(pos); m.pos >= 0) return m;
    } else {
        for (int pos = w.len - 2; pos >= 0; --pos)
            if (auto m = probe(pos); m.pos >= 0) return m;
    }
    return Match{};
}

template <class K>
bool RewriteSystem<K>::is_normal(const Word& w) const {
    return find_match(w, ReductionStrategy::Leftmost).pos < 0;
}

template <class K>
std::vector<Word> RewriteSystem<K>::admissible(int degree) const {
    std::vector<Word> cur{Word{}};
    const int letters = N_ * N_;
    for (int d = 1; d <= degree; ++d) {
        std::vector<Word> next;
        for (const auto& w : cur)
            for (int g = 0; g < letters; ++g) {
                Word x = w * Word::letter(g);
                bool ok = true;
                for (int L = 2; L <= std::min(max_lead_, x.len) && ok; ++L) {
                    const auto& idx = index_[static_cast<std::size_t>(L)];
                    if (idx.count(x.sub(x.len - L, L))) ok = false;
                }
                if (ok) next.push_back(x);
            }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

template <class K>
NCPoly<K> RewriteSystem<K>::normal_form(const NCPoly<K>& p, ReductionStrategy s) const {
    std::map<Word, K> work(p.terms().begin(), p.terms().end());
    NCPoly<K> out;
    while (!work.empty()) {
        auto it = std::prev(work.end());
        const Word w = it->first;
        const K c = std::move(it->second);
        work.erase(it);
        const Match m = find_match(w, s);
        if (m.pos < 0) {
            out.add(w, c);
            continue;
        }
        const Rule<K>& r = rules_[m.rule];
        const Word pre = w.sub(0, m.pos);
        const Word suf = w.sub(m.pos + r.lead.len, w.len - m.pos - r.lead.len);
        for (const auto& [u, t] : r.tail.terms()) {
            Word nw = pre * u * suf;
            K v = c * t;
            auto [jt, inserted] = work.try_emplace(nw, v);
            if (!inserted) {
                jt->second += v;
                if (qch::is_zero(jt->second)) work.erase(jt);
            }
        }
    }
    return out;
}

template <class K>
void RewriteSystem<K>::complete(int degree) {
    for (int D = completed_ + 1; D <= degree; ++D) {
        const std::size_t n0 = rules_.size();
        for (std::size_t i = 0; i < n0; ++i)
            for (std::size_t j = 0; j < n0; ++j) {
                const Word a = rules_[i].lead, b = rules_[j].lead;
                for (int o = 1; o < std::min(a.len, b.len); ++o) {
                    if (a.len + b.len - o != D) continue;
                    if (a.sub(a.len - o, o) != b.sub(0, o)) continue;
                    const Word u = a.sub(0, a.len - o);
                    const Word v = b.sub(o, b.len - o);
                    NCPoly<K> sp = rules_[i].tail * NCPoly<K>::monomial(v);
                    sp -= NCPoly<K>::monomial(u) * rules_[j].tail;
                    NCPoly<K> nf = normal_form(sp);
                    if (!nf.is_zero()) add_rule(std::move(nf));
                }
            }
        completed_ = D;
    }
}

template <class K>
IdealOracle<K>::IdealOracle(std::vector<NCPoly<K>> rels, int max_degree, std::size_t max_words)
    : max_degree_(max_degree), max_words_(max_words) {
    for (auto& r : rels) {
        if (r.is_zero()) continue;
        const int d = r.max_degree();
        if (!r.is_homogeneous(d)) throw DomainError("ideal oracle expects homogeneous relations");
        const std::size_t idx = rels_.size();
        for (const auto& [w, c] : r.terms()) by_word_[w].push_back(idx);
        if (std::find(lengths_.begin(), lengths_.end(), d) == lengths_.end()) lengths_.push_back(d);
        rels_.push_back(std::move(r));
    }
    std::sort(lengths_.begin(), lengths_.end());
}

template <class K>
bool IdealOracle<K>::member(const NCPoly<K>& p) const {
    std::map<int, NCPoly<K>> parts;
    for (const auto& [w, c] : p.terms()) parts[w.len].add(w, c);
    for (const auto& [d, part] : parts) {
        if (d > max_degree_) throw BoundExceeded("ideal membership degree " + std::to_string(d) + " above bound");
        if (!member_homogeneous(part)) return false;
    }
    return true;
}

template <class K>
bool IdealOracle<K>::member_homogeneous(const NCPoly<K>& p) const {
    if (p.is_zero()) return true;
    const int d = p.max_degree();
    // The span of the products u*r*w splits along connected components of
    // the word graph; each component of p is tested on its own.
    std::unordered_set<Word, WordHash> seen;
    for (const auto& [start, c0] : p.terms()) {
        if (seen.count(start)) continue;
        std::vector<Word> component{start};
        seen.insert(start);
        std::set<std::tuple<std::uint64_t, int, std::size_t, std::uint64_t>> used;  // (u, |u|, relation, w)
        Echelon<K> span;
        for (std::size_t head = 0; head < component.size(); ++head) {
            const Word W = component[head];
            for (int L : lengths_) {
                for (int pos = 0; pos + L <= d; ++pos) {
                    auto it = by_word_.find(W.sub(pos, L));
                    if (it == by_word_.end()) continue;
                    const Word u = W.sub(0, pos);
                    const Word v = W.sub(pos + L, d - pos - L);
                    for (std::size_t ri : it->second) {
                        if (!used.emplace(u.code, u.len, ri, v.code).second) continue;
                        NCPoly<K> g;
                        for (const auto& [w, c] : rels_[ri].terms()) {
                            Word x = u * w * v;
                            g.add(x, c);
                            if (seen.insert(x).second) {
                                component.push_back(x);
                                if (seen.size() > max_words_)
                                    throw BoundExceeded("ideal membership search exceeds " +
                                                        std::to_string(max_words_) + " words");
                            }
                        }
                        span.insert(std::move(g));
                    }
                }
            }
        }
        NCPoly<K> part;
        for (const auto& w : component) part.add(w, p.coeff(w));
        if (!span.contains(part)) return false;
    }
    return true;
}

template class Echelon<Scalar>;
template class Echelon<Rational>;
template class RewriteSystem<Scalar>;
template class RewriteSystem<Rational>;
template class IdealOracle<Scalar>;
template class IdealOracle<Rational>;

}  // namespace qch
