/*
   Copyright 2026 The sextactic authors

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

#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "sextactic/cli.hpp"

namespace sextactic {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::map<std::string, std::string> machine_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto eq = line.find(" = ");
        if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 3);
    }
    return kv;
}

std::string fixture_path(const std::string& name) { return std::string(SEXTACTIC_FIXTURE_DIR) + "/" + name; }

TEST(Cli, Hessian2Golden) {
    Outcome r = run({"--format", "machine", "hessian2", "--implicit", "x^4 - x^3*y + y^3*z"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto kv = machine_values(r.out);
    EXPECT_EQ(kv["H2"], "-44442639360*x^3*y^18 + 33331979520*x^2*y^19 - 11904278400*x*y^20 + 1587237120*y^21");
    EXPECT_EQ(kv["degree"], "21");
    Outcome n = run({"--format", "machine", "--normalize", "hessian2", "--implicit", "x^4 - x^3*y + y^3*z"});
    EXPECT_EQ(machine_values(n.out)["H2"], "56*x^3*y^18 - 42*x^2*y^19 + 15*x*y^20 - 2*y^21");
}

TEST(Cli, HessianAndOsculate) {
    Outcome h = run({"--format", "machine", "hessian", "--implicit", "y^2*z - x^3 - x^2*z"});
    EXPECT_EQ(machine_values(h.out)["H"], "-8*x^2*z + 24*x*y^2 + 8*y^2*z");
    Outcome o = run({"--format", "machine", "osculate", "--implicit", "y^2*z - x^3 - x^2*z", "--point", "(-1:0:1)"});
    EXPECT_EQ(machine_values(o.out)["O_p"], "2*x^2 + 3*x*z + y^2 + z^2");
}

TEST(Cli, CountExamples) {
    Outcome r = run({"count", "--profile", "quintic_ex38.profile"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\ns                = 2\n"), std::string::npos) << r.out;
    auto kv = machine_values(run({"--format", "machine", "count", "--profile", fixture_path("binomial_quintic.profile")}).out);
    EXPECT_EQ(kv["s"], "0");
    EXPECT_EQ(kv["weight(0:0:1)"], "17");
    EXPECT_EQ(kv["weight(1:0:0)"], "13");
}

TEST(Cli, WronskiFactorTable) {
    Outcome r = run({"wronski", "--param", "(s^5 : s^3*t^2 : t^5)"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("s | 1 | 17\nt | 1 | 13\n"), std::string::npos) << r.out;
    auto kv = machine_values(run({"--format", "machine", "wronski", "--param", "(s^5 : s^3*t^2 : t^5)"}).out);
    EXPECT_EQ(kv["content"], "-2809741879384473600000");
    EXPECT_EQ(kv["factors"], "s^17 t^13");
    EXPECT_EQ(kv["weights"], "17,13");
    auto q = machine_values(run({"--format", "machine", "wronski", "--param", "(s^5 : s^3*t^2 : s*t^4 + t^5)"}).out);
    EXPECT_EQ(q["weights"], "17,10,1,1,1");
    EXPECT_EQ(q["total"], "30");
}

TEST(Cli, OmegaAt) {
    auto kv = machine_values(
        run({"--format", "machine", "wronski", "--omega", "--param", "(s*t^2 - s^3 : t^3 - s^2*t : s^3)", "--at", "(1:0)"})
            .out);
    EXPECT_EQ(kv["omega"], "2*x^2 + 3*x*z + y^2 + z^2");
}

TEST(Cli, Orders) {
    Outcome r = run({"--format", "machine", "orders", "--param", "(s*t^3 : t^4 : s^3*t - s^4)", "--poly", "@hessian2",
                 "--implicit", "x^4 - x^3*y + y^3*z", "--at", "(1:0),(1:4)"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto kv = machine_values(r.out);
    EXPECT_EQ(kv["order(1:0)"], "81");
    EXPECT_EQ(kv["order(1:4)"], "1");
    EXPECT_EQ(kv["degree"], "84");
    Outcome wrong = run({"orders", "--param", "(s*t^3 : t^4 : s^3*t - s^4)", "--poly", "@hessian", "--implicit",
                     "x^3 + y^3 + z^3"});
    EXPECT_EQ(wrong.code, 1);
    EXPECT_EQ(run({"orders", "--param", "(s*t^3 : t^4 : s^3*t - s^4)", "--poly", "@hessian"}).code, 2);
}

TEST(Cli, BranchCommands) {
    auto kv = machine_values(run({"--format", "machine", "weight", "--branch", "cusp_3_5.branch"}).out);
    EXPECT_EQ(kv["w2"], "17");
    EXPECT_EQ(kv["ladder"], "0,3,5,6,8,10");
    auto two = machine_values(run({"--format", "machine", "weight", "--branch", fixture_path("cusp_2_2.branch")}).out);
    EXPECT_EQ(two["w2"], "10");
    EXPECT_EQ(two["c"], "5");
    Outcome lad = run({"ladder", "--branch", "smooth_sextactic.branch"});
    EXPECT_EQ(lad.code, 0);
    Outcome ob = run({"--format", "machine", "osc-branch", "--branch", "smooth_sextactic.branch"});
    auto o = machine_values(ob.out);
    EXPECT_TRUE(o["conic"] == "x^2 - y*z" || o["conic"] == "-x^2 + y*z") << ob.out;
}

TEST(Cli, MultiplicityBounds) {
    Outcome ok = run({"--format", "machine", "check-lemma37", "--ms", "2,2", "--d", "5", "--l", "4"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(machine_values(ok.out)["feasible_c"], "5");
    EXPECT_EQ(run({"check-lemma37", "--ms", "3,2", "--d", "5", "--l", "4"}).code, 1);
    EXPECT_EQ(run({"check-lemma37", "--ms", "3,x", "--d", "5"}).code, 2);
}

TEST(Cli, Predict) {
    auto kv = machine_values(run({"--format", "machine", "predict39", "--profile", "quintic_ex38.profile"}).out);
    EXPECT_EQ(kv["H2(0:0:1)"], "108");
    EXPECT_EQ(kv["H2(1:0:0)"], "55");
    EXPECT_EQ(kv["H(0:0:1)"], "29");
}

TEST(Cli, ErrorsAndExitCodes) {
    Outcome syntax = run({"hessian", "--implicit", "x^2 + 3y"});
    EXPECT_EQ(syntax.code, 1);
    EXPECT_NE(syntax.err.find("SyntaxError"), std::string::npos);
    EXPECT_NE(syntax.err.find("bytes 7..8"), std::string::npos) << syntax.err;
    EXPECT_NE(syntax.err.find("x^2 + 3y\n         ^"), std::string::npos) << syntax.err;
    Outcome low = run({"hessian", "--implicit", "x^2 + y*z"});
    EXPECT_EQ(low.code, 1);
    EXPECT_NE(low.err.find("DegreeTooLow"), std::string::npos);
    EXPECT_EQ(run({"osculate", "--implicit", "y^2*z - x^3 - x^2*z", "--point", "(0:0:1)"}).code, 1);
    EXPECT_EQ(run({"osculate", "--implicit", "y^2*z - x^3 - x^2*z", "--point", "(1:1:1)"}).code, 1);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"hessian"}).code, 2);
    EXPECT_EQ(run({"--format", "xml", "hessian", "--implicit", "x^3"}).code, 2);
    EXPECT_EQ(run({"weight", "--branch", "/nonexistent/file.branch"}).code, 2);
    Outcome trunc = run({"weight", "--branch", fixture_path("smooth_sextactic.branch")});
    EXPECT_EQ(trunc.code, 0);
    Outcome badprof = run({"count", "--profile", fixture_path("cusp_3_5.branch")});
    EXPECT_EQ(badprof.code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DeterministicOutput) {
    std::vector<std::vector<std::string>> cases = {
        {"hessian2", "--implicit", "x^4 - x^3*y + y^3*z", "--variant", "cayley1865"},
        {"wronski", "--param", "(s^5 : s^3*t^2 : s*t^4 + t^5)"},
        {"--format", "machine", "examples", "quintic"},
        {"count", "--profile", "quartic_ex25.profile"},
    };
    for (const auto& args : cases) {
        Outcome a = run(args), b = run(args);
        EXPECT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, ExamplesRun) {
    Outcome list = run({"examples"});
    EXPECT_EQ(list.code, 0);
    for (const auto& fx : bundled_examples()) {
        Outcome r = run({"--format", "machine", "examples", std::string(fx.name)});
        EXPECT_EQ(r.code, 0) << fx.name << ": " << r.err;
    }
    auto kv = machine_values(run({"--format", "machine", "examples", "quintic"}).out);
    EXPECT_EQ(kv["s"], "2");
    EXPECT_EQ(kv["weights"], "17,10,1,1,1");
    EXPECT_EQ(kv["(H2.C)(0:1)"], "108");
    Outcome file = run({"examples", "cusp_3_5.branch"});
    EXPECT_EQ(file.out, std::string(*fixture_file("cusp_3_5.branch")));
}

TEST(Cli, EmbeddedFixturesMatchFiles) {
    for (const auto& f : fixture_files()) {
        std::ifstream in(fixture_path(std::string(f.name)));
        ASSERT_TRUE(in) << f.name;
        std::stringstream ss;
        ss << in.rdbuf();
        EXPECT_EQ(ss.str(), std::string(f.text)) << f.name;
    }
}

}  // namespace
}  // namespace sextactic
