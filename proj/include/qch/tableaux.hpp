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

#ifndef QCH_TABLEAUX_HPP
#define QCH_TABLEAUX_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qch/errors.hpp"

namespace qch {

/// Weakly decreasing list of positive parts. Zero parts are dropped on construction.
class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int rows() const { return static_cast<int>(parts_.size()); }
    /// Length of row r (1-based); 0 beyond the last row.
    int row_length(int r) const;
    bool contains_cell(int r, int c) const { return c >= 1 && c <= row_length(r); }
    bool contains(const Partition& other) const;
    /// Contents of cells that can be added keeping a partition.
    std::vector<int> addable_contents() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

   private:
    std::vector<int> parts_;
};

Partition parse_partition(std::string_view text);
/// Partitions of k in reverse lexicographic order ((k) first).
std::vector<Partition> partitions_of(int k);

struct Cell {
    int row;  // 1-based
    int col;  // 1-based
    int content() const { return col - row; }
    friend bool operator==(const Cell&, const Cell&) = default;
};

class StandardTableau {
   public:
    /// rows[r][c] holds the entry in row r+1, column c+1. Throws ShapeError if not standard.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.weight(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Cell cell_of(int entry) const { return cells_.at(static_cast<std::size_t>(entry - 1)); }
    int entry_at(int row, int col) const;
    int content(int entry) const { return cell_of(entry).content(); }
    /// Entries read row by row.
    std::vector<int> reading_word() const;
    /// Tableau formed by entries 1..k.
    StandardTableau restrict_to(int k) const;
    std::string to_string() const;

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }
    friend bool operator<(const StandardTableau& a, const StandardTableau& b) {
        return a.reading_word() < b.reading_word();
    }

   private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<Cell> cells_;
};

/// All standard tableaux of the shape, ordered lexicographically by reading word.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);
/// The tableau filled row by row (first in the order above).
StandardTableau row_reading_tableau(const Partition& shape);

/// Content difference c(k) - c(k+1).
int ell(const StandardTableau& t, int k);
/// Swap k and k+1; nullopt when the result is not standard.
std::optional<StandardTableau> apply_transposition(const StandardTableau& t, int k);
bool includes(const StandardTableau& inner, const StandardTableau& outer);

enum class FamilyKind { plain, plus_row, plus_col };
enum class DistinguishedKind { row, col, plus_row, plus_col };

Partition lambda_family(FamilyKind kind, int m, int n, int r, int s);
/// Family tableau with the largest entry in the distinguished cell and the rest filled row by row.
StandardTableau distinguished_tableau(DistinguishedKind kind, int m, int n, int r, int s);

}  // namespace qch

#endif
