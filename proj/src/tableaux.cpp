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

#include "qch/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qch {

Partition::Partition(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 0) throw ShapeError("negative part in partition");
        if (p > 0) parts_.push_back(p);
    }
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > parts_[i - 1]) throw ShapeError("partition parts must be weakly decreasing");
    // zeros may only trail: (1,0,1) is rejected
    bool seen_zero = false;
    for (int p : parts) {
        if (p == 0) seen_zero = true;
        else if (seen_zero) throw ShapeError("zero part followed by a positive part");
    }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row_length(int r) const {
    if (r < 1 || r > rows()) return 0;
    return parts_[static_cast<std::size_t>(r - 1)];
}

bool Partition::contains(const Partition& other) const {
    if (other.rows() > rows()) return false;
    for (int r = 1; r <= other.rows(); ++r)
        if (other.row_length(r) > row_length(r)) return false;
    return true;
}

std::vector<int> Partition::addable_contents() const {
    std::vector<int> out;
    for (int r = 1; r <= rows() + 1; ++r) {
        int len = row_length(r);
        if (r == 1 || row_length(r - 1) > len) out.push_back(len + 1 - r);
    }
    return out;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw ShapeError("bad partition entry '" + item + "'");
            parts.push_back(v);
        } catch (const std::logic_error&) {
            throw ShapeError("bad partition entry '" + item + "'");
        }
    }
    return Partition(parts);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (k < 0) throw RangeError("negative weight");
    partitions_rec(k, k, cur, out);
    return out;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    shape_ = Partition(parts);
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    const int n = shape_.weight();
    cells_.assign(static_cast<std::size_t>(n), Cell{0, 0});
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            int e = rows_[r][c];
            if (e < 1 || e > n || cells_[static_cast<std::size_t>(e - 1)].row != 0)
                throw ShapeError("tableau filling is not a bijection onto 1..n");
            cells_[static_cast<std::size_t>(e - 1)] = Cell{static_cast<int>(r) + 1, static_cast<int>(c) + 1};
            if (c > 0 && rows_[r][c - 1] >= e) throw ShapeError("tableau rows must increase");
            if (r > 0 && rows_[r - 1][c] >= e) throw ShapeError("tableau columns must increase");
        }
    }
}

int StandardTableau::entry_at(int row, int col) const {
    if (!shape_.contains_cell(row, col)) throw IndexError("cell outside the tableau");
    return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
}

std::vector<int> StandardTableau::reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
    return w;
}

StandardTableau StandardTableau::restrict_to(int k) const {
    if (k < 0 || k > size()) throw RangeError("restriction size out of range");
    std::vector<std::vector<int>> rows;
    for (const auto& r : rows_) {
        std::vector<int> kept;
        for (int e : r)
            if (e <= k) kept.push_back(e);
        if (!kept.empty()) rows.push_back(std::move(kept));
    }
    return StandardTableau(std::move(rows));
}

std::string StandardTableau::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) s += "/";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) s += ",";
            s += std::to_string(rows_[r][c]);
        }
    }
    return s;
}

namespace {

void fill_rec(const Partition& shape, int next, std::vector<std::vector<int>>& rows,
              std::vector<StandardTableau>& out) {
    if (next > shape.weight()) {
        out.emplace_back(rows);
        return;
    }
    for (int r = 1; r <= shape.rows(); ++r) {
        auto& row = rows[static_cast<std::size_t>(r - 1)];
        int len = static_cast<int>(row.size());
        if (len >= shape.row_length(r)) continue;
        if (r > 1 && static_cast<int>(rows[static_cast<std::size_t>(r - 2)].size()) <= len) continue;
        row.push_back(next);
        fill_rec(shape, next + 1, rows, out);
        rows[static_cast<std::size_t>(r - 1)].pop_back();
    }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    std::vector<StandardTableau> out;
    if (shape.weight() == 0) {
        out.emplace_back(std::vector<std::vector<int>>{});
        return out;
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
    fill_rec(shape, 1, rows, out);
    std::sort(out.begin(), out.end());
    return out;
}

StandardTableau row_reading_tableau(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : shape.parts()) {
        std::vector<int> row;
        for (int c = 0; c < len; ++c) row.push_back(next++);
        rows.push_back(std::move(row));
    }
    return StandardTableau(std::move(rows));
}

int ell(const StandardTableau& t, int k) {
    if (k < 1 || k > t.size() - 1) throw IndexError("ell index out of range");
    return t.content(k) - t.content(k + 1);
}

std::optional<StandardTableau> apply_transposition(const StandardTableau& t, int k) {
    if (k < 1 || k > t.size() - 1) throw IndexError("transposition index out of range");
    Cell a = t.cell_of(k), b = t.cell_of(k + 1);
    if (a.row == b.row || a.col == b.col) return std::nullopt;
    auto rows = t.rows();
    rows[static_cast<std::size_t>(a.row - 1)][static_cast<std::size_t>(a.col - 1)] = k + 1;
    rows[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)] = k;
    return StandardTableau(std::move(rows));
}

bool includes(const StandardTableau& inner, const StandardTableau& outer) {
    if (!outer.shape().contains(inner.shape())) return false;
    for (int e = 1; e <= inner.size(); ++e)
        if (!(inner.cell_of(e) == outer.cell_of(e))) return false;
    return true;
}

namespace {

std::vector<int> plain_parts(int m, int n, int r, int s) {
    std::vector<int> parts;
    for (int i = 0; i < r; ++i) parts.push_back(n + 1);
    for (int i = r; i < m; ++i) parts.push_back(n);
    parts.push_back(s);
    return parts;
}

void check_params(FamilyKind kind, int m, int n, int r, int s) {
    if (m < 0 || n < 0) throw RangeError("m and n must be nonnegative");
    bool ok = false;
    switch (kind) {
        case FamilyKind::plain: ok = 0 <= r && r <= m && 0 <= s && s <= n; break;
        case FamilyKind::plus_row: ok = 1 <= r && r <= m && 0 <= s && s <= n; break;
        case FamilyKind::plus_col: ok = 0 <= r && r <= m && 1 <= s && s <= n; break;
    }
    if (!ok)
        throw RangeError("family parameters out of range: m=" + std::to_string(m) + " n=" + std::to_string(n) +
                         " r=" + std::to_string(r) + " s=" + std::to_string(s));
}

}  // namespace

Partition lambda_family(FamilyKind kind, int m, int n, int r, int s) {
    check_params(kind, m, n, r, s);
    std::vector<int> parts = plain_parts(m, n, r, s);
    if (kind == FamilyKind::plus_row) parts[0] += 1;
    if (kind == FamilyKind::plus_col) parts.push_back(1);
    return Partition(parts);
}

StandardTableau distinguished_tableau(DistinguishedKind kind, int m, int n, int r, int s) {
    Partition shape;
    Cell special{0, 0};
    switch (kind) {
        case DistinguishedKind::row:
            if (s < 1) throw RangeError("row tableau needs s >= 1");
            shape = lambda_family(FamilyKind::plain, m, n, r, s);
            special = Cell{m + 1, s};
            break;
        case DistinguishedKind::col:
            if (r < 1) throw RangeError("column tableau needs r >= 1");
            shape = lambda_family(FamilyKind::plain, m, n, r, s);
            special = Cell{r, n + 1};
            break;
        case DistinguishedKind::plus_row:
            shape = lambda_family(FamilyKind::plus_row, m, n, r, s);
            special = Cell{1, n + 2};
            break;
        case DistinguishedKind::plus_col:
            shape = lambda_family(FamilyKind::plus_col, m, n, r, s);
            special = Cell{m + 2, 1};
            break;
    }
    std::vector<int> parts = shape.parts();
    auto& len = parts[static_cast<std::size_t>(special.row - 1)];
    if (len != special.col) throw RangeError("distinguished cell is not removable");
    --len;
    StandardTableau base = row_reading_tableau(Partition(parts));
    auto rows = base.rows();
    rows.resize(static_cast<std::size_t>(shape.rows()));
    rows[static_cast<std::size_t>(special.row - 1)].push_back(shape.weight());
    return StandardTableau(std::move(rows));
}

}  // namespace qch
