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

#ifndef QCH_RMATRIX_HPP
#define QCH_RMATRIX_HPP

#include <optional>
#include <string>
#include <utility>

#include "qch/field.hpp"
#include "qch/tensorop.hpp"

namespace qch {

/// An arity-2 operator with symbolic entries plus bookkeeping.
struct RMatrixSpec {
    SparseOperator<Scalar> op;
    std::string label;
    std::optional<std::pair<int, int>> declared_type;

    int N() const { return op.N(); }
};

RMatrixSpec permutation(int N);
/// (-1)^{|a||b|} v_b (x) v_a with |i| = 1 for i > m (1-based).
RMatrixSpec super_permutation(int m, int n);
/// Drinfeld-Jimbo GL(m|n) R-matrix; the (q - q^-1) terms sit on v_i (x) v_j with i < j.
RMatrixSpec dj_glmn(int m, int n);

/// Parse the JSON R-matrix format; throws ConfigError on malformed input.
RMatrixSpec rmatrix_from_json(const std::string& json_text, const std::string& label = "custom");
RMatrixSpec load_rmatrix_file(const std::string& path);
std::string rmatrix_to_json(const RMatrixSpec& r);

/// Substitute q -> q^factor in every entry.
RMatrixSpec substitute_q_power(const RMatrixSpec& r, int factor);

/// Specialize symbolic entries into the context's field.
template <class K>
SparseOperator<K> lift(const SparseOperator<Scalar>& op, const FieldContext<K>& ctx);

/// R_1 R_2 R_1 == R_2 R_1 R_2 on V^{(x)3}.
template <class K>
bool yang_baxter_check(const SparseOperator<K>& r);
/// (R - q)(R + q^-1) == 0.
template <class K>
bool hecke_check(const SparseOperator<K>& r, const FieldContext<K>& ctx);
/// R_1 F_2 F_1 == F_2 F_1 R_2 and R_2 F_1 F_2 == F_1 F_2 R_1.
template <class K>
bool compatible_check(const SparseOperator<K>& r, const SparseOperator<K>& f);
/// F^-1 R^-1 F.
template <class K>
SparseOperator<K> twist_rf(const SparseOperator<K>& r, const SparseOperator<K>& f);

/// Parity of a 0-based index in the (m|n) grading.
inline int parity(int i, int m) { return i >= m ? 1 : 0; }

}  // namespace qch

#endif
