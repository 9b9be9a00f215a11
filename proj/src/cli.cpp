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

#include "qch/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qch/chverify.hpp"
#include "qch/rmatrix.hpp"

namespace qch::cli {

using json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const char* pair_name(PairKind p) {
    switch (p) {
        case PairKind::rtt: return "rtt";
        case PairKind::rea: return "rea";
        case PairKind::custom: return "custom";
    }
    return "";
}

bool wants(const CaseConfig& c, const std::string& task) {
    return std::find(c.tasks.begin(), c.tasks.end(), task) != c.tasks.end();
}

std::string tristate(int v) { return v < 0 ? "unchecked" : v ? "zero" : "nonzero"; }

template <class K>
bool all_tableaux_agree(QuantumMatrixAlgebra<K>& alg, const Partition& p) {
    const auto& ref = alg.schur_function(p);
    for (const auto& t : standard_tableaux(p))
        if (!alg.normal_form(alg.schur_function(t) - ref).is_zero()) return false;
    return true;
}

bool in_fat_hook(const Partition& p, int m, int n) { return p.row_length(m + 1) <= n; }

/// Runs the tasks over one coefficient field.
template <class K>
class Runner {
   public:
    Runner(const CaseConfig& c, FieldContext<K> ctx, SparseOperator<K> r, SparseOperator<K> f)
        : c_(c), ctx_(std::move(ctx)), r_(std::move(r)), f_(std::move(f)) {}

    json task(const std::string& name) {
        if (name == "axioms") return axioms();
        if (name == "units") return units();
        if (name == "glmn") return glmn();
        if (name == "schur") return schur();
        if (name == "ch") return ch();
        if (name == "telescope") return telescope();
        return rect();
    }

   private:
    HeckeRep<K>& rep() {
        if (!rep_) rep_ = std::make_unique<HeckeRep<K>>(r_, ctx_);
        return *rep_;
    }
    QuantumMatrixAlgebra<K>& alg() {
        if (!alg_) alg_ = std::make_unique<QuantumMatrixAlgebra<K>>(r_, f_, ctx_);
        return *alg_;
    }

    json axioms() {
        json d;
        d["yangBaxter"] = yang_baxter_check(r_);
        d["hecke"] = hecke_check(r_, ctx_);
        d["fYangBaxter"] = yang_baxter_check(f_);
        d["compatible"] = compatible_check(r_, f_);
        bool skew = true;
        try {
            (void)d_operator(r_);
            (void)d_operator(twist_rf(r_, f_));
        } catch (const NotSkewInvertible&) {
            skew = false;
        } catch (const NotInvertible&) {
            skew = false;
        }
        d["skewInvertible"] = skew;
        bool ok = true;
        for (const auto& v : d) ok = ok && v.template get<bool>();
        return verdict(ok, std::move(d));
    }

    json units() {
        const int top = std::min(4, c_.effective_arity_bound());
        auto& h = rep();
        json arities = json::array();
        bool ok = true;
        for (int k = 2; k <= top; ++k) {
            std::vector<StandardTableau> all;
            for (const auto& p : partitions_of(k))
                for (const auto& t : standard_tableaux(p)) all.push_back(t);
            bool table = true;
            std::size_t count = 0;
            for (const auto& a : all)
                for (const auto& b : all) {
                    if (!(a.shape() == b.shape())) continue;
                    ++count;
                    const auto eab = h.unit(a, b);
                    for (const auto& cc : all)
                        for (const auto& dd : all) {
                            if (!(cc.shape() == dd.shape())) continue;
                            const auto prod = eab * h.unit(cc, dd);
                            table = table && (b == cc ? prod == h.unit(a, dd) : prod.is_zero());
                        }
                }
            SparseOperator<K> sum(h.N(), k);
            for (const auto& t : all) sum += h.diagonal_unit(t);
            const bool complete = sum == SparseOperator<K>::identity(h.N(), k);
            bool branching = true;
            if (k + 1 <= top)
                for (const auto& t : all) {
                    SparseOperator<K> up(h.N(), k + 1);
                    for (const auto& mu : partitions_of(k + 1))
                        for (const auto& s : standard_tableaux(mu))
                            if (includes(t, s)) up += h.diagonal_unit(s);
                    branching = branching && h.place(h.diagonal_unit(t), 0, k + 1) == up;
                }
            json a;
            a["arity"] = k;
            a["units"] = count;
            a["table"] = table;
            a["completeness"] = complete;
            if (k + 1 <= top) a["branching"] = branching;
            arities.push_back(std::move(a));
            ok = ok && table && complete && branching;
        }
        json d;
        d["maxArity"] = top;
        d["arities"] = std::move(arities);
        return verdict(ok, std::move(d));
    }

    json glmn() {
        const GlmnReport g = glmn_type_check(rep(), c_.m, c_.n);
        json d;
        d["rectangle"] = Partition(std::vector<int>(static_cast<std::size_t>(c_.m + 1), c_.n + 1)).to_string();
        d["rectangleVanishes"] = g.rectangle_vanishes;
        d["spotCheck"] = g.rectangle_spot_check;
        json others = json::array();
        for (const auto& [shape, nz] : g.others_nonzero) others.push_back(json{{"shape", shape}, {"nonzero", nz}});
        d["othersNonzero"] = std::move(others);
        return verdict(g.verdict, std::move(d));
    }

    json schur() {
        auto& a = alg();
        const int top = std::min(3, c_.effective_arity_bound());
        bool ok = true;
        json tab = json::array();
        for (int k = 1; k <= top; ++k)
            for (const auto& p : partitions_of(k)) {
                const bool agree = all_tableaux_agree(a, p);
                tab.push_back(json{{"shape", p.to_string()}, {"tableaux", standard_tableaux(p).size()}, {"agree", agree}});
                ok = ok && agree;
            }
        json d;
        d["maxWeight"] = top;
        d["tableauIndependence"] = std::move(tab);
        if (top >= 2) {
            const auto diff = a.power_sum(2) - a.schur_function(Partition({2})) * ctx_.lift(Scalar::q_pow(1)) +
                              a.schur_function(Partition({1, 1})) * ctx_.lift(Scalar::q_pow(-1));
            const bool p2 = a.normal_form(diff).is_zero();
            d["powerSum2"] = p2;
            ok = ok && p2;
        }
        json fat = json::array();
        for (int k = 1; k <= top; ++k) {
            Echelon<K> e;
            int shapes = 0;
            for (const auto& p : partitions_of(k))
                if (in_fat_hook(p, c_.m, c_.n)) {
                    ++shapes;
                    e.insert(a.normal_form(a.schur_function(p)));
                }
            fat.push_back(json{{"weight", k}, {"shapes", shapes}, {"rank", e.rank()}});
            ok = ok && static_cast<int>(e.rank()) == shapes;
        }
        d["fatHookIndependence"] = std::move(fat);
        const Partition rect(std::vector<int>(static_cast<std::size_t>(c_.m + 1), c_.n + 1));
        if (rect.weight() <= c_.effective_arity_bound()) {
            const bool zero = a.normal_form(a.schur_function(rect)).is_zero();
            d["rectangleVanishes"] = zero;
            ok = ok && zero;
        } else {
            d["rectangleVanishes"] = nullptr;
        }
        return verdict(ok, std::move(d));
    }

    json ch() {
        auto& a = alg();
        CHOptions opt;
        opt.seed = c_.seed;
        // N = 2 is cheap enough to run the ideal oracle on every entry
        opt.ideal_entries = a.N() <= 2 ? -1 : 3;
        const CHReport rep = verify_ch(a, c_.m, c_.n, opt);
        const auto plan = ch_coefficients(c_.m, c_.n);
        json d;
        d["degree"] = rep.degree;
        d["context"] = rep.context;
        json coeffs = json::array();
        for (int i = 0; i <= c_.m + c_.n; ++i) coeffs.push_back(json{{"i", i}, {"C", plan.describe(i)}});
        d["coefficients"] = std::move(coeffs);
        d["homogeneous"] = rep.homogeneous;
        json entries = json::array();
        for (const auto& e : rep.entries) {
            json x;
            x["row"] = e.row;
            x["col"] = e.col;
            x["terms"] = e.terms;
            x["homogeneous"] = e.homogeneous;
            x["normalForm"] = tristate(e.normal_form);
            x["ideal"] = tristate(e.ideal);
            if (!e.residual.empty()) x["residual"] = e.residual;
            entries.push_back(std::move(x));
        }
        d["entries"] = std::move(entries);
        return verdict(rep.verdict, std::move(d));
    }

    json telescope() {
        const TelescopeReport t = telescope_check(alg(), c_.m, c_.n);
        json d;
        d["start"] = t.start;
        json steps = json::array();
        for (const auto& [i, ok] : t.steps) steps.push_back(json{{"i", i}, {"holds", ok}});
        d["steps"] = std::move(steps);
        d["end"] = t.end;
        d["rectangleVanishes"] = t.rectangle_vanishes;
        d["chainSum"] = t.chain_sum;
        if (!t.failure.empty()) d["failure"] = t.failure;
        return verdict(t.verdict, std::move(d));
    }

    json rect() {
        auto& a = alg();
        json cases = json::array();
        bool ok = true;
        for (int s = 0; s <= 1; ++s)
            for (int r = 0; r <= 1; ++r) {
                if ((r + 1) * (s + 1) > c_.effective_arity_bound()) continue;
                const RectReport x = rect_identity(a, r, s);
                json j{{"r", r}, {"s", s}, {"rowIndex", x.row_index}, {"holds", x.holds}};
                if (!x.residual.empty()) j["residual"] = x.residual;
                cases.push_back(std::move(j));
                ok = ok && x.holds;
            }
        return verdict(ok, json{{"cases", std::move(cases)}});
    }

    static json verdict(bool ok, json details) {
        json t;
        t["verdict"] = ok;
        t["details"] = std::move(details);
        return t;
    }

    const CaseConfig& c_;
    FieldContext<K> ctx_;
    SparseOperator<K> r_, f_;
    std::unique_ptr<HeckeRep<K>> rep_;
    std::unique_ptr<QuantumMatrixAlgebra<K>> alg_;
};

std::pair<RMatrixSpec, RMatrixSpec> load_pair(const CaseConfig& c) {
    if (c.pair == PairKind::custom) {
        RMatrixSpec r = load_rmatrix_file(c.rfile);
        RMatrixSpec f = c.ffile.empty() ? permutation(r.N()) : load_rmatrix_file(c.ffile);
        if (f.N() != r.N()) throw ConfigError("R and F files disagree on N");
        return {r, f};
    }
    RMatrixSpec r = dj_glmn(c.m, c.n);
    return {r, c.pair == PairKind::rtt ? permutation(r.N()) : r};
}

json config_json(const CaseConfig& c) {
    json j;
    j["m"] = c.m;
    j["n"] = c.n;
    j["pair"] = pair_name(c.pair);
    if (c.pair == PairKind::custom) {
        j["rfile"] = c.rfile;
        j["ffile"] = c.ffile;
    }
    j["q"] = c.q0 ? c.q0->get_str() : "symbolic";
    j["tasks"] = c.tasks;
    j["arityBound"] = c.effective_arity_bound();
    j["allowLong"] = c.allow_long;
    j["seed"] = c.seed;
    return j;
}

template <class K>
void run_tasks(const CaseConfig& c, FieldContext<K> ctx, const RMatrixSpec& r, const RMatrixSpec& f, json& tasks,
               bool& ok, std::ostringstream& text) {
    Runner<K> runner(c, ctx, lift(r.op, ctx), lift(f.op, ctx));
    for (const auto& name : task_names()) {
        if (!wants(c, name)) continue;
        const auto t0 = Clock::now();
        json t;
        t["name"] = name;
        try {
            json res = runner.task(name);
            t["verdict"] = res["verdict"];
            t["details"] = std::move(res["details"]);
        } catch (const Error& e) {
            t["verdict"] = false;
            t["error"] = e.what();
        }
        t["seconds"] = since(t0);
        const bool pass = t["verdict"].get<bool>();
        ok = ok && pass;
        text << std::left << std::setw(10) << name << (pass ? "PASS" : "FAIL") << "  " << std::fixed
             << std::setprecision(3) << t["seconds"].get<double>() << " s";
        if (name == "axioms" && t.contains("details"))
            for (auto it = t["details"].begin(); it != t["details"].end(); ++it)
                text << "  " << it.key() << ":" << (it.value().template get<bool>() ? "true" : "false");
        if (t.contains("error")) text << "  error: " << t["error"].get<std::string>();
        text << "\n";
        tasks.push_back(std::move(t));
    }
}

}  // namespace

const std::vector<std::string>& task_names() {
    static const std::vector<std::string> names{"axioms", "units", "glmn", "schur", "ch", "telescope", "rect"};
    return names;
}

std::optional<Rational> parse_q(const std::string& text) {
    if (text == "symbolic") return std::nullopt;
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0)
        throw ConfigError("--q expects 'symbolic' or a rational P/Q, got '" + text + "'");
    q.canonicalize();
    if (sgn(q) == 0) throw ConfigError("--q must be nonzero");
    return q;
}

void validate(const CaseConfig& c) {
    if (c.m < 0 || c.n < 0 || c.m + c.n == 0) throw ConfigError("need m, n >= 0 and m + n >= 1");
    if (c.m + c.n > 5) throw ConfigError("m + n above 5 is not supported");
    if (c.tasks.empty()) throw ConfigError("no tasks requested");
    for (const auto& t : c.tasks)
        if (std::find(task_names().begin(), task_names().end(), t) == task_names().end())
            throw ConfigError("unknown task '" + t + "'");
    if (c.pair == PairKind::custom && c.rfile.empty()) throw ConfigError("--pair custom needs --rfile");
    if (c.pair != PairKind::custom && (!c.rfile.empty() || !c.ffile.empty()))
        throw ConfigError("--rfile and --ffile need --pair custom");
    if (c.arity_bound < 0) throw ConfigError("--arity-bound must be positive");
    const int a = (c.m + 1) * (c.n + 1);
    if ((wants(c, "ch") || wants(c, "telescope")) && c.effective_arity_bound() < a)
        throw ConfigError("ch and telescope need --arity-bound >= " + std::to_string(a));
    if (wants(c, "telescope") && (c.m < 1 || c.n < 1)) throw ConfigError("telescope needs m, n >= 1");
    const bool heavy = wants(c, "schur") || wants(c, "ch") || wants(c, "telescope") || wants(c, "rect");
    if (!c.q0 && c.m + c.n >= 3 && heavy && !c.allow_long)
        throw ConfigError("symbolic q with m + n >= 3 is long-running; pass --allow-long or use --q 6/5");
    if (c.q0) FieldContext<Rational>(*c.q0).validate(c.effective_arity_bound());
}

namespace {

json skeleton(const CaseConfig& c) {
    json report;
    report["schema"] = kReportSchema;
    report["version"] = kVersion;
    report["config"] = config_json(c);
    json env;
    env["qMode"] = c.q0 ? "rational" : "symbolic";
    if (c.q0) env["q0"] = c.q0->get_str();
    env["wordOrder"] = "graded-lex, row-major generators";
    env["reduction"] = "leftmost";
    env["idealOracle"] = "exact linear algebra per degree";
    report["environment"] = std::move(env);
    return report;
}

}  // namespace

RunResult run(const CaseConfig& c) {
    RunResult out;
    json report = skeleton(c);

    std::ostringstream text;
    try {
        validate(c);
        const auto [r, f] = load_pair(c);
        json tasks = json::array();
        bool ok = true;
        if (c.q0)
            run_tasks<Rational>(c, FieldContext<Rational>(*c.q0), r, f, tasks, ok, text);
        else
            run_tasks<Scalar>(c, FieldContext<Scalar>{}, r, f, tasks, ok, text);
        report["tasks"] = std::move(tasks);
        report["verdict"] = ok;
        out.exit_code = ok ? 0 : 1;
        text << "verdict   " << (ok ? "PASS" : "FAIL") << "\n";
    } catch (const Error& e) {
        // invalid input: bad flags, unreadable or malformed R-matrix files, degenerate q
        report["tasks"] = json::array();
        report["verdict"] = false;
        report["error"] = e.what();
        out.exit_code = 2;
        text << "error: " << e.what() << "\n";
    }
    out.report = std::move(report);
    out.summary = text.str();
    return out;
}

json strip_timings(const json& report) {
    if (report.is_object()) {
        json out = json::object();
        for (const auto& [k, v] : report.items())
            if (k != "seconds") out[k] = strip_timings(v);
        return out;
    }
    if (report.is_array()) {
        json out = json::array();
        for (const auto& v : report) out.push_back(strip_timings(v));
        return out;
    }
    return report;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cayley-Hamilton verification for GL(m|n)-type quantum matrix algebras", "qch"};
    CaseConfig c;
    std::string pair = "rtt", q = "symbolic", tasks = "ch";
    app.add_option("--m", c.m, "even part of the type")->capture_default_str();
    app.add_option("--n", c.n, "odd part of the type")->capture_default_str();
    app.add_option("--pair", pair, "rtt (F = P), rea (F = R) or custom")
        ->check(CLI::IsMember({"rtt", "rea", "custom"}))
        ->capture_default_str();
    app.add_option("--rfile", c.rfile, "R-matrix JSON file for --pair custom");
    app.add_option("--ffile", c.ffile, "F-matrix JSON file for --pair custom (default: permutation)");
    app.add_option("--q", q, "'symbolic' or a nonzero rational P/Q")->capture_default_str();
    app.add_option("--tasks", tasks, "comma-separated subset of axioms,units,glmn,schur,ch,telescope,rect")
        ->capture_default_str();
    app.add_option("--arity-bound", c.arity_bound, "largest tensor power (default (m+1)(n+1))");
    app.add_option("--report", c.report_path, "write the JSON report here");
    app.add_flag("--allow-long", c.allow_long, "allow symbolic runs with m + n >= 3");
    app.add_option("--seed", c.seed, "seed for randomized subsets")->capture_default_str();
    app.set_version_flag("--version", kVersion);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 2;
    }

    RunResult res;
    try {
        c.pair = pair == "rtt" ? PairKind::rtt : pair == "rea" ? PairKind::rea : PairKind::custom;
        c.q0 = parse_q(q);
        c.tasks.clear();
        std::stringstream ss(tasks);
        for (std::string t; std::getline(ss, t, ',');)
            if (!t.empty()) c.tasks.push_back(t);
        res = run(c);
    } catch (const Error& e) {
        c.tasks.clear();
        res.exit_code = 2;
        res.summary = std::string("error: ") + e.what() + "\n";
        res.report = skeleton(c);
        res.report["tasks"] = json::array();
        res.report["verdict"] = false;
        res.report["error"] = e.what();
    }
    out << res.summary;
    if (!c.report_path.empty()) {
        std::ofstream f(c.report_path);
        if (!f) {
            err << "cannot write report to " << c.report_path << "\n";
            return 2;
        }
        f << res.report.dump(2) << "\n";
    }
    if (res.exit_code == 2) err << "invalid input\n";
    return res.exit_code;
}

}  // namespace qch::cli
