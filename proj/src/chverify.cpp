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

#include "qch/chverify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

namespace qch {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int sign_of(int k) { return k % 2 == 0 ? 1 : -1; }

std::string clip(std::string s, std::size_t n = 240) {
    if (s.size() > n) s = s.substr(0, n) + " ...";
    return s;
}

template <class K>
bool vanishes(QuantumMatrixAlgebra<K>& alg, const AlgMatrix<K>& x) {
    return alg.normal_form(x).is_zero();
}

}  // namespace

std::string CHCoefficientPlan::describe(int i) const {
    std::string s;
    for (const auto& t : terms.at(static_cast<std::size_t>(i))) {
        s += t.sign > 0 ? " + " : " - ";
        if (t.q_power != 0) s += "q^" + std::to_string(t.q_power) + " ";
        s += "s(" + t.shape.to_string() + ")";
    }
    return s.empty() ? "0" : s.substr(1);
}

CHCoefficientPlan ch_coefficients(int m, int n) {
    if (m < 0 || n < 0 || m + n == 0) throw RangeError("Cayley-Hamilton plan needs m, n >= 0 and m + n >= 1");
    CHCoefficientPlan plan;
    plan.m = m;
    plan.n = n;
    for (int i = 0; i <= m + n; ++i) {
        std::vector<CHTerm> row;
        for (int k = std::max(0, i - n); k <= std::min(i, m); ++k)
            row.push_back(CHTerm{k, sign_of(k), 2 * k - i, lambda_family(FamilyKind::plain, m, n, k, i - k)});
        plan.terms.push_back(std::move(row));
    }
    return plan;
}

template <class K>
NCPoly<K> ch_coefficient(QuantumMatrixAlgebra<K>& alg, const CHCoefficientPlan& plan, int i) {
    NCPoly<K> c;
    for (const auto& t : plan.terms.at(static_cast<std::size_t>(i)))
        c.add_scaled(alg.schur_function(t.shape), alg.ctx().lift(Scalar(t.sign) * Scalar::q_pow(t.q_power)));
    return c;
}

template <class K>
AlgMatrix<K> ch_lhs(QuantumMatrixAlgebra<K>& alg, int m, int n) {
    const auto plan = ch_coefficients(m, n);
    AlgMatrix<K> lhs(alg.N());
    for (int i = 0; i <= m + n; ++i) lhs += alg.matrix_power_bar(m + n - i).times_right(ch_coefficient(alg, plan, i));
    return lhs;
}

template <class K>
CHReport verify_ch(QuantumMatrixAlgebra<K>& alg, int m, int n, const CHOptions& opt) {
    const auto t0 = Clock::now();
    const auto plan = ch_coefficients(m, n);
    CHReport rep;
    rep.m = m;
    rep.n = n;
    rep.degree = plan.degree();
    rep.context = alg.ctx().describe();
    const AlgMatrix<K> lhs = ch_lhs(alg, m, n);
    const int N = alg.N();
    rep.homogeneous = lhs.is_homogeneous(rep.degree);

    AlgMatrix<K> nf;
    if (opt.mode != VerifyMode::Ideal) nf = alg.normal_form(lhs);

    std::vector<int> ideal_pick;
    if (opt.mode != VerifyMode::NormalForm) {
        std::vector<int> all(static_cast<std::size_t>(N * N));
        std::iota(all.begin(), all.end(), 0);
        if (opt.ideal_entries >= 0 && opt.ideal_entries < N * N) {
            std::mt19937_64 rng(opt.seed);
            std::shuffle(all.begin(), all.end(), rng);
            all.resize(static_cast<std::size_t>(opt.ideal_entries));
            std::sort(all.begin(), all.end());
        }
        ideal_pick = std::move(all);
        alg.set_ideal_bound(std::max(rep.degree, 2));
    }

    bool ok = rep.homogeneous;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            EntryVerdict e;
            e.row = a + 1;
            e.col = b + 1;
            e.terms = lhs(a, b).size();
            e.homogeneous = lhs(a, b).is_homogeneous(rep.degree);
            if (opt.mode != VerifyMode::Ideal) {
                e.normal_form = nf(a, b).is_zero() ? 1 : 0;
                if (!e.normal_form) e.residual = clip(nf(a, b).to_string(N));
                ok = ok && e.normal_form == 1;
            }
            if (std::find(ideal_pick.begin(), ideal_pick.end(), a * N + b) != ideal_pick.end()) {
                e.ideal = alg.ideal_member(lhs(a, b)) ? 1 : 0;
                ok = ok && e.ideal == 1;
            }
            rep.entries.push_back(std::move(e));
        }
    rep.verdict = ok;
    rep.seconds = since(t0);
    return rep;
}

void require(const CHReport& report) {
    if (report.verdict) return;
    if (!report.homogeneous) throw VerificationFailed("Cayley-Hamilton entries are not homogeneous", "");
    for (const auto& e : report.entries)
        if (e.normal_form == 0 || e.ideal == 0)
            throw VerificationFailed(
                "Cayley-Hamilton entry (" + std::to_string(e.row) + "," + std::to_string(e.col) + ") does not vanish",
                e.residual);
    throw VerificationFailed("Cayley-Hamilton verification failed", "");
}

template <class K>
PElementSet<K>::PElementSet(QuantumMatrixAlgebra<K>& alg, int m, int n)
    : alg_(alg), m_(m), n_(n), A_((m + 1) * (n + 1)), zero_(alg.N()) {
    if (m < 0 || n < 0) throw RangeError("m and n must be nonnegative");
}

template <class K>
const AlgMatrix<K>& PElementSet<K>::element(DistinguishedKind kind, int r, int s) {
    const auto key = std::make_tuple(static_cast<int>(kind), r, s);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const StandardTableau t = distinguished_tableau(kind, m_, n_, r, s);
    const int S = t.size();
    // Reversed strands put the largest entry first, right next to R_{A-S}.
    auto x = embed_at(alg_.rep(StrandOrder::Reversed).diagonal_unit(t), A_ - S + 1, A_);
    x = x * alg_.braid_chain(A_ - S, A_);
    return cache_.emplace(key, alg_.traced_tail(x)).first->second;
}

template <class K>
const AlgMatrix<K>& PElementSet<K>::p_row(int r, int s) {
    if (s == n_ + 1) return zero_;
    return element(DistinguishedKind::row, r, s);
}

template <class K>
const AlgMatrix<K>& PElementSet<K>::p_col(int r, int s) {
    if (r == m_ + 1) return zero_;
    return element(DistinguishedKind::col, r, s);
}

template <class K>
const AlgMatrix<K>& PElementSet<K>::p_plus_row(int r, int s) {
    if (r == 0) return zero_;
    return element(DistinguishedKind::plus_row, r, s);
}

template <class K>
const AlgMatrix<K>& PElementSet<K>::p_plus_col(int r, int s) {
    if (s == 0) return zero_;
    return element(DistinguishedKind::plus_col, r, s);
}

template <class K>
AlgMatrix<K> PElementSet<K>::phi_sum(int i) {
    const int m = m_, n = n_;
    if (i < 1 || i > m + n) throw RangeError("Phi index out of range");
    const auto& ctx = alg_.ctx();
    AlgMatrix<K> out(alg_.N());
    for (int k = std::max(0, i - n); k <= std::min(i - 1, m); ++k) {
        Scalar c = Scalar(sign_of(k)) * qnum(i - k) * qnum(m + n - i + k + 2) / qnum(m + n - i + 2);
        out += p_row(k, i - k) * ctx.lift(c);
    }
    for (int k = std::max(1, i - n); k <= std::min(i, m); ++k) {
        Scalar c = Scalar(sign_of(k)) * qnum(k) * qnum(m + n - k + 2) / qnum(m + n - i + 2);
        out -= p_col(k, i - k) * ctx.lift(c);
    }
    return out;
}

template <class K>
AlgMatrix<K> PElementSet<K>::rectangle_term() {
    const Partition rect(std::vector<int>(static_cast<std::size_t>(m_ + 1), n_ + 1));
    const auto& e = alg_.rep(StrandOrder::Reversed).diagonal_unit(row_reading_tableau(rect));
    Scalar c = Scalar(sign_of(m_)) * qnum(m_ + 1) * qnum(n_ + 1);
    return alg_.traced_tail(e) * alg_.ctx().lift(c);
}

template <class K>
TelescopeReport telescope_check(QuantumMatrixAlgebra<K>& alg, int m, int n) {
    const auto t0 = Clock::now();
    if (m < 1 || n < 1) throw RangeError("telescoping chain needs m, n >= 1");
    TelescopeReport rep;
    PElementSet<K> pe(alg, m, n);
    const auto plan = ch_coefficients(m, n);
    const int mn = m + n;
    auto rhs = [&](int i) {
        return alg.phi(alg.matrix_power_bar(mn - i)).times_right(ch_coefficient(alg, plan, i));
    };
    auto note = [&](const std::string& what) {
        if (rep.failure.empty()) rep.failure = what;
    };

    rep.start = vanishes(alg, pe.phi_sum(1) - rhs(0));
    if (!rep.start) note("Phi_1 identity");
    for (int i = 1; i < mn; ++i) {
        bool ok = vanishes(alg, pe.phi_sum(i + 1) - pe.phi_sum(i) - rhs(i));
        rep.steps.emplace_back(i, ok);
        if (!ok) note("step identity at i = " + std::to_string(i));
    }
    const AlgMatrix<K> rect = pe.rectangle_term();
    rep.rectangle_vanishes = rect.is_zero();
    const Partition last = lambda_family(FamilyKind::plain, m, n, m, n);
    AlgMatrix<K> end_rhs = AlgMatrix<K>::identity(alg.N()).times_right(alg.schur_function(last));
    end_rhs *= alg.ctx().lift(Scalar(sign_of(m + 1)) * Scalar::q_pow(m - n));
    rep.end = vanishes(alg, pe.phi_sum(mn) - end_rhs - rect);
    if (!rep.end) note("Phi_{m+n} identity");
    if (!rep.rectangle_vanishes) note("rectangle term");

    AlgMatrix<K> total(alg.N());
    for (int i = 0; i <= mn; ++i) total += rhs(i);
    rep.chain_sum = total == alg.phi(ch_lhs(alg, m, n));
    if (!rep.chain_sum) note("chain sum");

    rep.verdict = rep.start && rep.end && rep.rectangle_vanishes && rep.chain_sum &&
                  std::all_of(rep.steps.begin(), rep.steps.end(), [](const auto& s) { return s.second; });
    rep.seconds = since(t0);
    return rep;
}

template <class K>
RectReport rect_identity(QuantumMatrixAlgebra<K>& alg, int r, int s) {
    const auto t0 = Clock::now();
    if (r < 0 || s < 0) throw RangeError("rectangle parameters must be nonnegative");
    RectReport rep;
    rep.r = r;
    rep.s = s;
    const Partition rect(std::vector<int>(static_cast<std::size_t>(s + 1), r + 1));
    auto [power, row] = alg.matrix_power_tableau(row_reading_tableau(rect));
    rep.row_index = row;
    const auto& ctx = alg.ctx();
    AlgMatrix<K> diff = power * ctx.lift(Scalar(sign_of(s)) * qnum(s + 1) * qnum(r + 1));
    for (int i = 0; i <= s + r; ++i) {
        NCPoly<K> c;
        for (int k = std::max(0, i - r); k <= std::min(i, s); ++k)
            c.add_scaled(alg.schur_function(lambda_family(FamilyKind::plain, s, r, k, i - k)),
                         ctx.lift(Scalar(sign_of(k)) * Scalar::q_pow(2 * k - i)));
        diff -= alg.matrix_power_bar(s + r + 1 - i).times_right(c);
    }
    const AlgMatrix<K> nf = alg.normal_form(diff);
    rep.holds = nf.is_zero() && row == s + 1;
    for (const auto& p : nf.entries())
        if (!p.is_zero()) {
            rep.residual = clip(p.to_string(alg.N()));
            break;
        }
    rep.seconds = since(t0);
    return rep;
}

SuperClassicalOracle::SuperClassicalOracle(int m, int n) : m_(m), n_(n) {
    if (m != 1 || n != 1) throw Unsupported("the supercommutative oracle covers (m|n) = (1|1) only");
}

int SuperClassicalOracle::parity(int g) const {
    const int i = g / N(), j = g % N();
    return ((i >= m_ ? 1 : 0) + (j >= m_ ? 1 : 0)) % 2;
}

namespace {

// Sorts letters by adjacent swaps; each swap of two odd letters flips the sign.
// Returns 0 when an odd letter repeats.
int sort_signed(std::vector<int>& w, const SuperClassicalOracle& o) {
    int sign = 1;
    for (std::size_t i = 1; i < w.size(); ++i)
        for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
            if (o.parity(w[j - 1]) && o.parity(w[j])) sign = -sign;
            std::swap(w[j - 1], w[j]);
        }
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1] && o.parity(w[i])) return 0;
    return sign;
}

void add_term(SuperClassicalOracle::Poly& p, const SuperClassicalOracle::Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) p.erase(it);
    }
}

}  // namespace

SuperClassicalOracle::Poly SuperClassicalOracle::reduce(const NCPoly<Rational>& p) const {
    Poly out;
    for (const auto& [w, c] : p.terms()) {
        auto letters = w.letters();
        int sg = sort_signed(letters, *this);
        if (sg) add_term(out, letters, sg > 0 ? c : Rational(-c));
    }
    return out;
}

SuperClassicalOracle::Poly SuperClassicalOracle::multiply(const Poly& a, const Poly& b) const {
    Poly out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            Monomial w = x;
            w.insert(w.end(), y.begin(), y.end());
            int sg = sort_signed(w, *this);
            if (sg) add_term(out, w, sg > 0 ? Rational(cx * cy) : Rational(-(cx * cy)));
        }
    return out;
}

SuperClassicalOracle::Matrix SuperClassicalOracle::generators() const {
    Matrix m(static_cast<std::size_t>(N() * N()));
    for (int g = 0; g < N() * N(); ++g) m[static_cast<std::size_t>(g)][Monomial{g}] = Rational(1);
    return m;
}

SuperClassicalOracle::Matrix SuperClassicalOracle::matrix_product(const Matrix& a, const Matrix& b) const {
    const int n = N();
    Matrix c(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                for (const auto& [mono, v] :
                     multiply(a[static_cast<std::size_t>(i * n + l)], b[static_cast<std::size_t>(l * n + j)]))
                    add_term(c[static_cast<std::size_t>(i * n + j)], mono, v);
    return c;
}

SuperClassicalOracle::Poly SuperClassicalOracle::power_sum(int k) const {
    if (k < 1) throw RangeError("power sums start at k = 1");
    Matrix p = generators();
    for (int j = 1; j < k; ++j) p = matrix_product(p, generators());
    Poly out;
    for (int i = 0; i < N(); ++i)
        for (const auto& [mono, v] : p[static_cast<std::size_t>(i * N() + i)])
            add_term(out, mono, i >= m_ ? Rational(-v) : v);
    return out;
}

long long character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) throw ShapeError("character needs partitions of one weight");
    const int len = lambda.rows();
    std::vector<int> beta;
    for (int i = 0; i < len; ++i) beta.push_back(lambda.parts()[static_cast<std::size_t>(i)] + len - 1 - i);
    // recursive rim-hook removal on the beta-set
    auto rec = [](auto&& self, std::vector<int> b, const std::vector<int>& parts, std::size_t at) -> long long {
        if (at == parts.size()) return 1;
        const int r = parts[at];
        long long total = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const int to = b[i] - r;
            if (to < 0 || std::find(b.begin(), b.end(), to) != b.end()) continue;
            int between = 0;
            for (int x : b)
                if (x > to && x < b[i]) ++between;
            auto nb = b;
            nb[i] = to;
            total += (between % 2 ? -1 : 1) * self(self, nb, parts, at + 1);
        }
        return total;
    };
    return rec(rec, beta, mu.parts(), 0);
}

SuperClassicalOracle::Poly SuperClassicalOracle::schur(const Partition& shape) const {
    const int k = shape.weight();
    Poly out;
    if (k == 0) {
        out[Monomial{}] = Rational(1);
        return out;
    }
    for (const auto& mu : partitions_of(k)) {
        long long chi = character(shape, mu);
        if (chi == 0) continue;
        // z_mu = prod i^{m_i} m_i!
        long long z = 1;
        std::map<int, int> mult;
        for (int p : mu.parts()) ++mult[p];
        for (const auto& [p, c] : mult)
            for (int t = 1; t <= c; ++t) z *= static_cast<long long>(p) * t;
        Poly term;
        term[Monomial{}] = Rational(1);
        for (int p : mu.parts()) term = multiply(term, power_sum(p));
        Rational c(static_cast<long>(chi), static_cast<long>(z));
        c.canonicalize();
        for (const auto& [mono, v] : term) add_term(out, mono, v * c);
    }
    return out;
}

SuperClassicalOracle::Matrix SuperClassicalOracle::ch_polynomial() const {
    const auto plan = ch_coefficients(m_, n_);
    const int n = N();
    Matrix total(static_cast<std::size_t>(n * n));
    Matrix power(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) power[static_cast<std::size_t>(i * n + i)][Monomial{}] = Rational(1);
    std::vector<Matrix> powers{power};
    for (int k = 1; k <= m_ + n_; ++k) powers.push_back(matrix_product(powers.back(), generators()));
    for (int i = 0; i <= m_ + n_; ++i) {
        Poly c;
        for (const auto& t : plan.terms[static_cast<std::size_t>(i)])
            for (const auto& [mono, v] : schur(t.shape)) add_term(c, mono, t.sign > 0 ? v : Rational(-v));
        const Matrix& pw = powers[static_cast<std::size_t>(m_ + n_ - i)];
        for (std::size_t e = 0; e < total.size(); ++e)
            for (const auto& [mono, v] : multiply(pw[e], c)) add_term(total[e], mono, v);
    }
    return total;
}

bool is_zero(const SuperClassicalOracle::Poly& p) { return p.empty(); }

#define QCH_INSTANTIATE_CH(K)                                                                       \
    template NCPoly<K> ch_coefficient(QuantumMatrixAlgebra<K>&, const CHCoefficientPlan&, int);     \
    template AlgMatrix<K> ch_lhs(QuantumMatrixAlgebra<K>&, int, int);                               \
    template CHReport verify_ch(QuantumMatrixAlgebra<K>&, int, int, const CHOptions&);              \
    template class PElementSet<K>;                                                                  \
    template TelescopeReport telescope_check(QuantumMatrixAlgebra<K>&, int, int);                   \
    template RectReport rect_identity(QuantumMatrixAlgebra<K>&, int, int);

QCH_INSTANTIATE_CH(Scalar)
QCH_INSTANTIATE_CH(Rational)

}  // namespace qch
