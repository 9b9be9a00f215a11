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

#include "qch/rmatrix.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qch {

namespace {

Index pair_index(int N, int a, int b) { return static_cast<Index>(a * N + b); }

}  // namespace

RMatrixSpec permutation(int N) {
    if (N < 1) throw RangeError("N must be positive");
    SparseOperator<Scalar> p(N, 2);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) p.set(pair_index(N, a, b), pair_index(N, b, a), Scalar(1));
    return {std::move(p), "P(" + std::to_string(N) + ")", std::nullopt};
}

RMatrixSpec super_permutation(int m, int n) {
    if (m < 0 || n < 0 || m + n < 1) throw RangeError("need m, n >= 0 and m + n >= 1");
    const int N = m + n;
    SparseOperator<Scalar> p(N, 2);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            int sign = parity(a, m) * parity(b, m) ? -1 : 1;
            p.set(pair_index(N, a, b), pair_index(N, b, a), Scalar(sign));
        }
    return {std::move(p), "P(" + std::to_string(m) + "|" + std::to_string(n) + ")", std::make_pair(m, n)};
}

RMatrixSpec dj_glmn(int m, int n) {
    if (m < 0 || n < 0 || m + n < 1) throw RangeError("need m, n >= 0 and m + n >= 1");
    const int N = m + n;
    const Scalar q = Scalar::q(), qi = Scalar::q_pow(-1);
    SparseOperator<Scalar> r(N, 2);
    for (int i = 0; i < N; ++i) {
        r.set(pair_index(N, i, i), pair_index(N, i, i), parity(i, m) ? -qi : q);
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            int sign = parity(i, m) * parity(j, m) ? -1 : 1;
            r.set(pair_index(N, i, j), pair_index(N, j, i), Scalar(sign));
            if (i < j) r.set(pair_index(N, i, j), pair_index(N, i, j), q - qi);
        }
    }
    return {std::move(r), "DJ(" + std::to_string(m) + "|" + std::to_string(n) + ")", std::make_pair(m, n)};
}

RMatrixSpec rmatrix_from_json(const std::string& json_text, const std::string& label) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("R-matrix file is not valid JSON: ") + e.what());
    }
    try {
        int N = doc.at("N").get<int>();
        if (N < 1 || N > 5) throw ConfigError("R-matrix dimension must lie in 1..5");
        SparseOperator<Scalar> op(N, 2);
        for (const auto& e : doc.at("entries")) {
            auto in = e.at("in").get<std::vector<int>>();
            auto out = e.at("out").get<std::vector<int>>();
            if (in.size() != 2 || out.size() != 2) throw ConfigError("entry indices must be pairs");
            for (int v : in)
                if (v < 1 || v > N) throw ConfigError("entry index out of range");
            for (int v : out)
                if (v < 1 || v > N) throw ConfigError("entry index out of range");
            Scalar c;
            try {
                c = parse_scalar(e.at("coeff").get<std::string>());
            } catch (const SyntaxError& se) {
                throw ConfigError(std::string("bad coefficient: ") + se.what());
            }
            op.add_to(pair_index(N, in[0] - 1, in[1] - 1), pair_index(N, out[0] - 1, out[1] - 1), c);
        }
        return {std::move(op), label, std::nullopt};
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed R-matrix file: ") + e.what());
    }
}

RMatrixSpec load_rmatrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open R-matrix file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return rmatrix_from_json(ss.str(), path);
}

std::string rmatrix_to_json(const RMatrixSpec& r) {
    nlohmann::ordered_json doc;
    const int N = r.N();
    doc["N"] = N;
    doc["entries"] = nlohmann::ordered_json::array();
    for (Index row = 0; row < r.op.dim(); ++row)
        for (const auto& [col, v] : r.op.row(row)) {
            int i = static_cast<int>(row) / N, j = static_cast<int>(row) % N;
            int k = static_cast<int>(col) / N, l = static_cast<int>(col) % N;
            doc["entries"].push_back({{"in", {i + 1, j + 1}}, {"out", {k + 1, l + 1}}, {"coeff", v.to_string()}});
        }
    return doc.dump(2);
}

namespace {

LaurentPoly stretch(const LaurentPoly& p, int factor) {
    LaurentPoly out;
    for (int e = p.low(); !p.is_zero() && e <= p.high(); ++e) {
        Rational c = p.coeff(e);
        if (sgn(c) != 0) out += LaurentPoly::monomial(c, e * factor);
    }
    return out;
}

}  // namespace

RMatrixSpec substitute_q_power(const RMatrixSpec& r, int factor) {
    RMatrixSpec out{r.op.map<Scalar>([&](const Scalar& s) {
                        return Scalar(stretch(s.num(), factor), stretch(s.den(), factor));
                    }),
                    r.label + "[q->q^" + std::to_string(factor) + "]", std::nullopt};
    return out;
}

template <class K>
SparseOperator<K> lift(const SparseOperator<Scalar>& op, const FieldContext<K>& ctx) {
    return op.map<K>([&](const Scalar& s) { return ctx.lift(s); });
}

template <class K>
bool yang_baxter_check(const SparseOperator<K>& r) {
    auto r1 = embed_at(r, 1, 3), r2 = embed_at(r, 2, 3);
    return r1 * r2 * r1 == r2 * r1 * r2;
}

template <class K>
bool hecke_check(const SparseOperator<K>& r, const FieldContext<K>& ctx) {
    const int N = r.N();
    auto id = SparseOperator<K>::identity(N, 2);
    auto a = r - id * ctx.q();
    auto b = r + id * ctx.q_pow(-1);
    return (a * b).is_zero();
}

template <class K>
bool compatible_check(const SparseOperator<K>& r, const SparseOperator<K>& f) {
    if (r.N() != f.N()) return false;
    auto r1 = embed_at(r, 1, 3), r2 = embed_at(r, 2, 3);
    auto f1 = embed_at(f, 1, 3), f2 = embed_at(f, 2, 3);
    return r1 * f2 * f1 == f2 * f1 * r2 && r2 * f1 * f2 == f1 * f2 * r1;
}

template <class K>
SparseOperator<K> twist_rf(const SparseOperator<K>& r, const SparseOperator<K>& f) {
    return inverse(f) * inverse(r) * f;
}

#define QCH_INSTANTIATE(K)                                                                     \
    template SparseOperator<K> lift(const SparseOperator<Scalar>&, const FieldContext<K>&);    \
    template bool yang_baxter_check(const SparseOperator<K>&);                                 \
    template bool hecke_check(const SparseOperator<K>&, const FieldContext<K>&);               \
    template bool compatible_check(const SparseOperator<K>&, const SparseOperator<K>&);        \
    template SparseOperator<K> twist_rf(const SparseOperator<K>&, const SparseOperator<K>&);

QCH_INSTANTIATE(Scalar)
QCH_INSTANTIATE(Rational)

#undef QCH_INSTANTIATE

}  // namespace qch
