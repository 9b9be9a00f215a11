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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "qch/cli.hpp"

#ifndef QCH_TEST_DATA
#define QCH_TEST_DATA "tests/data"
#endif

using namespace qch;
using namespace qch::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    args.insert(args.begin(), "qch");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return std::string(QCH_TEST_DATA) + "/" + f; }

CaseConfig cfg(int m, int n, PairKind pair, std::vector<std::string> tasks) {
    CaseConfig c;
    c.m = m;
    c.n = n;
    c.pair = pair;
    c.tasks = std::move(tasks);
    return c;
}

}  // namespace

TEST_CASE("flagship run") {
    auto o = call({"--m", "1", "--n", "1", "--pair", "rtt", "--q", "symbolic", "--tasks", "ch"});
    CHECK(o.code == 0);
    CHECK(o.out.find("ch        PASS") != std::string::npos);
}

TEST_CASE("reflection equation run with several tasks") {
    auto o = call({"--m", "1", "--n", "1", "--pair", "rea", "--q", "symbolic", "--tasks", "axioms,units,glmn,ch,telescope"});
    CHECK(o.code == 0);
    for (const char* t : {"axioms", "units", "glmn", "ch", "telescope"}) CHECK(o.out.find(t) != std::string::npos);
}

TEST_CASE("broken Yang-Baxter file") {
    auto o = call({"--m", "1", "--n", "1", "--pair", "custom", "--rfile", data("broken.json"), "--tasks", "axioms"});
    CHECK(o.code == 1);
    CHECK(o.out.find("yangBaxter:false") != std::string::npos);
    auto r = run([] {
        auto c = cfg(1, 1, PairKind::custom, {"axioms", "ch"});
        c.rfile = data("broken.json");
        return c;
    }());
    CHECK(r.exit_code == 1);
    CHECK(r.report["tasks"][0]["details"]["yangBaxter"] == false);
    // the algebra cannot be built, so ch fails with an error
    CHECK(r.report["tasks"][1]["verdict"] == false);
    CHECK(r.report["tasks"][1].contains("error"));
}

TEST_CASE("custom file equal to the shipped R-matrix") {
    auto o = call({"--m", "1", "--n", "1", "--pair", "custom", "--rfile", data("dj11.json"), "--tasks", "axioms,glmn,ch"});
    CHECK(o.code == 0);
}

TEST_CASE("invalid input exits with 2") {
    CHECK(call({"--q", "0"}).code == 2);
    CHECK(call({"--q", "abc"}).code == 2);
    CHECK(call({"--tasks", "nonsense"}).code == 2);
    CHECK(call({"--pair", "custom"}).code == 2);
    CHECK(call({"--pair", "custom", "--rfile", data("missing.json")}).code == 2);
    CHECK(call({"--m", "2", "--n", "0", "--tasks", "telescope"}).code == 2);
    CHECK(call({"--m", "2", "--n", "1", "--tasks", "ch"}).code == 2);
    CHECK(call({"--m", "1", "--n", "1", "--tasks", "ch", "--arity-bound", "3"}).code == 2);
    CHECK(call({"--m", "0", "--n", "0"}).code == 2);
    CHECK(call({"--no-such-flag"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("q parsing") {
    CHECK_FALSE(parse_q("symbolic").has_value());
    CHECK(*parse_q("6/5") == Rational(6, 5));
    CHECK(*parse_q("12/10") == Rational(6, 5));
    CHECK(*parse_q("-2") == Rational(-2));
    CHECK_THROWS_AS(parse_q("0/3"), ConfigError);
    CHECK_THROWS_AS(parse_q("1/0"), ConfigError);
}

TEST_CASE("report layout") {
    auto r = run(cfg(1, 1, PairKind::rtt, {"ch", "axioms"}));
    const auto& j = r.report;
    CHECK(j["schema"] == "qch.report/1");
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"schema", "version", "config", "environment", "tasks", "verdict"});
    // tasks run in dependency order regardless of the order requested
    REQUIRE(j["tasks"].size() == 2);
    CHECK(j["tasks"][0]["name"] == "axioms");
    CHECK(j["tasks"][1]["name"] == "ch");
    const auto& ch = j["tasks"][1]["details"];
    CHECK(ch["degree"] == 3);
    CHECK(ch["entries"].size() == 4);
    for (const auto& e : ch["entries"]) {
        CHECK(e["normalForm"] == "zero");
        CHECK(e["ideal"] == "zero");
    }
    CHECK(j["verdict"] == true);
}

TEST_CASE("reports are deterministic apart from timings") {
    auto c = cfg(1, 1, PairKind::rea, {"axioms", "glmn", "schur", "ch", "rect"});
    c.q0 = Rational(6, 5);
    auto a = run(c), b = run(c);
    CHECK(strip_timings(a.report).dump() == strip_timings(b.report).dump());
    CHECK(a.summary.size() == b.summary.size());
    CHECK(strip_timings(a.report).dump().find("seconds") == std::string::npos);
}

TEST_CASE("numeric spot checks use the seed") {
    auto c = cfg(2, 1, PairKind::rtt, {"ch"});
    c.q0 = Rational(6, 5);
    c.seed = 3;
    auto r = run(c);
    CHECK(r.exit_code == 0);
    int checked = 0;
    for (const auto& e : r.report["tasks"][0]["details"]["entries"]) {
        CHECK(e["normalForm"] == "zero");
        checked += e["ideal"] == "zero";
    }
    CHECK(checked == 3);
}
