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

#ifndef QCH_REWRITE_HPP
#define QCH_REWRITE_HPP

#include <cstddef>
#include <map>
#include <unordered_map>
#include <vector>

#include "qch/ncpoly.hpp"

namespace qch {

/// Sparse row echelon form over K with pivot = largest word of each row.
template <class K>
class Echelon {
   public:
    /// Adds p; returns false when p was already in the span.
    bool insert(NCPoly<K> p);
    /// Remainder of p after cancelling leading words against pivots.
    NCPoly<K> reduce(NCPoly<K> p) const;
    bool contains(const NCPoly<K>& p) const { return reduce(p).is_zero(); }
    std::size_t rank() const { return rows_.size(); }
    /// Rows keyed by pivot word; each row is monic in its pivot.
    const std::map<Word, NCPoly<K>>& rows() const { return rows_; }
    /// Clears every pivot word out of every other row.
    void make_reduced();

   private:
    std::map<Word, NCPoly<K>> rows_;
};

/// Rewriting rule lead -> tail; every word of tail is smaller than lead.
template <class K>
struct Rule {
    Word lead;
    NCPoly<K> tail;
};

enum class ReductionStrategy { Leftmost, Rightmost };

/// Rewriting system for a two-sided ideal generated by homogeneous
/// quadratic relations, under the graded-lex order on words.
///
/// build() keeps the quadratic rules from a reduced echelon form of the
/// relations. complete(d) adds the rules produced by overlaps up to degree d,
/// after which normal forms of degree <= d are unique.
template <class K>
class RewriteSystem {
   public:
    RewriteSystem() = default;
    static RewriteSystem build(int N, const std::vector<NCPoly<K>>& rels);

    void complete(int degree);
    int completed_degree() const { return completed_; }

    int N() const { return N_; }
    /// Number of quadratic rules (rank of the relation matrix).
    int rank() const { return rank2_; }
    const std::vector<Rule<K>>& rules() const { return rules_; }
    const std::vector<NCPoly<K>>& relations() const { return relations_; }

    bool is_normal(const Word& w) const;
    /// Normal words of the given degree, ascending.
    std::vector<Word> admissible(int degree) const;

    /// Repeatedly rewrites the largest reducible word, at its leftmost (or
    /// rightmost) reducible factor.
    NCPoly<K> normal_form(const NCPoly<K>& p, ReductionStrategy s = ReductionStrategy::Leftmost) const;

   private:
    struct Match {
        int pos = -1;
        std::size_t rule = 0;
    };
    Match find_match(const Word& w, ReductionStrategy s) const;
    void add_rule(NCPoly<K> p);

    int N_ = 0;
    int rank2_ = 0;
    int completed_ = 2;
    int max_lead_ = 0;
    std::vector<NCPoly<K>> relations_;
    std::vector<Rule<K>> rules_;
    // lead length -> lead word -> rule index
    std::vector<std::unordered_map<Word, std::size_t, WordHash>> index_;
};

/// Decides membership in the two-sided ideal generated by homogeneous
/// relations by linear algebra in each degree.
///
/// Only the words reachable from p through products u*r*w are ever
/// materialized; BoundExceeded is thrown when that set exceeds max_words or
/// when p has degree above max_degree.
template <class K>
class IdealOracle {
   public:
    IdealOracle(std::vector<NCPoly<K>> rels, int max_degree, std::size_t max_words = 400000);
    bool member(const NCPoly<K>& p) const;
    int max_degree() const { return max_degree_; }

   private:
    bool member_homogeneous(const NCPoly<K>& p) const;

    std::vector<NCPoly<K>> rels_;
    int max_degree_;
    std::size_t max_words_;
    std::vector<int> lengths_;
    std::unordered_map<Word, std::vector<std::size_t>, WordHash> by_word_;
};

template <class K>
bool ideal_member(const NCPoly<K>& p, const std::vector<NCPoly<K>>& rels, int max_degree) {
    return IdealOracle<K>(rels, max_degree).member(p);
}

}  // namespace qch

#endif
