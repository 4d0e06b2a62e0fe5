/*
 * Copyright 2026 The iqlin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "iqlin/commands.hpp"

using namespace iqlin;
using namespace iqlin::testing;

namespace {

const std::filesystem::path kData = IQLIN_DATA_DIR;
const std::filesystem::path kGolden = IQLIN_GOLDEN_DIR;

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SystemDocument data(const char* name) { return load_document(kData / name); }

struct CheckRun {
    int code;
    std::string out;
    std::string err;
};

CheckRun check(const SystemDocument& doc, std::vector<PointVector> pts, const std::string& method)
{
    std::ostringstream out;
    std::ostringstream err;
    CheckOptions opts;
    opts.method = method;
    const int code = run_check(doc, pts, opts, out, err);
    return {code, out.str(), err.str()};
}

std::string scan(const SystemDocument& doc, ScanOptions opts)
{
    std::ostringstream out;
    run_scan2d(doc, opts, out);
    return out.str();
}

}  // namespace

TEST(CheckCommand, UnitedAllMethods)
{
    auto doc = data("united_1x1.json");
    auto yes = check(doc, {pt({"3/2"})}, "all");
    EXPECT_EQ(yes.code, kExitOk);
    EXPECT_EQ(yes.out, "(3/2): member [abs interval twosided shary rohn vertex oracle]\n");
    auto no = check(doc, {pt({"1"})}, "abs");
    EXPECT_EQ(no.code, kExitNotMember);
    EXPECT_EQ(no.out, "(1): not member (absolute bound violated at row 1)\n");
    auto pts = parse_points(slurp(kData / "points_1d.json"), 1);
    auto all = check(doc, pts, "all");
    EXPECT_EQ(all.out, slurp(kGolden / "check_united_all.txt"));
}

TEST(CheckCommand, MethodErrors)
{
    auto doc = data("outer_exists.json");
    EXPECT_THROW((void)check(doc, {pt({"0"})}, "shary"), UsageError);
    EXPECT_THROW((void)check(doc, {pt({"0"})}, "rohn"), UsageError);
    EXPECT_THROW((void)check(doc, {pt({"0"})}, "magic"), UsageError);
    EXPECT_THROW((void)check(doc, {pt({"0", "1"})}, "abs"), UsageError);
    EXPECT_EQ(check(doc, {pt({"0"})}, "oracle").code, kExitOk);
    EXPECT_EQ(check(doc, {pt({"1/4"})}, "interval").code, kExitNotMember);
}

TEST(CheckCommand, AbsIneqDocument)
{
    auto doc = data("absineq_1x1.json");
    auto r = check(doc, {pt({"3/2"}), pt({"0"})}, "all");
    EXPECT_EQ(r.code, kExitNotMember);
    EXPECT_NE(r.out.find("(3/2): member [abs interval twosided shary rohn vertex absineq oracle]"), std::string::npos)
        << r.out;
}

TEST(CheckCommand, NeverDisagreesOnGeneratedCorpus)
{
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        GenOptions g;
        g.spec.rows = 1 + seed % 2;
        g.spec.cols = 1 + (seed / 2) % 2;
        g.spec.kappa = 1 + (seed / 4) % 2;
        g.spec.zero_prob = 0.4;
        g.spec.seed = seed;
        g.form = seed % 3 == 0 ? "generalized" : "classic";
        auto doc = run_gen(g);
        Rng rng(seed);
        std::vector<PointVector> pts{PointVector(doc.cols(), Rational(0))};
        for (int k = 0; k < 4; ++k) pts.push_back(random_point(rng, doc.cols(), 2, 2));
        auto r = check(doc, pts, "all");
        ASSERT_NE(r.code, kExitCrossCheck) << r.err;
    }
}

TEST(DecomposeCommand, Goldens)
{
    for (const char* name : {"three_blocks", "outer_exists"}) {
        std::ostringstream a;
        std::ostringstream b;
        run_decompose(data((std::string(name) + ".json").c_str()), a);
        run_decompose(data((std::string(name) + ".json").c_str()), b);
        EXPECT_EQ(a.str(), b.str());
        EXPECT_EQ(a.str(), slurp(kGolden / ("decompose_" + std::string(name) + ".txt")));
    }
    std::ostringstream u;
    run_decompose(data("united_1x1.json"), u);
    EXPECT_NE(u.str().find("kappa: 1\n"), std::string::npos);
    std::ostringstream g;
    run_decompose(SystemDocument{to_generalized(data("outer_exists.json"))}, g);
    EXPECT_NE(g.str().find("recomposed prefix: E b[1] A a[1,1]"), std::string::npos) << g.str();
}

TEST(ConvertCommand, TargetsAndGolden)
{
    auto flat = run_convert(data("outer_exists.json"), "ae-flatten");
    EXPECT_EQ(emit_document(flat), slurp(kGolden / "convert_outer_exists.json"));
    const auto& ae = std::get<AESystem>(flat.system);
    EXPECT_EQ(ae.rows(), 2U);

    auto from_abs = run_convert(data("absineq_1x1.json"), "from-absineq");
    const auto& ae2 = std::get<AESystem>(from_abs.system);
    EXPECT_EQ(ae2.a(0, 0), iv(2, 4));
    EXPECT_EQ(ae2.alpha[0], Quantifier::Forall);
    EXPECT_EQ(ae2.b[0], iv(3, 7));
    EXPECT_EQ(ae2.beta[0], Quantifier::Exists);

    auto single = run_convert(data("tolerable_1x1.json"), "ae-flatten");
    EXPECT_EQ(std::get<AESystem>(single.system).rows(), 1U);
    auto to_abs = run_convert(data("three_blocks.json"), "to-absineq");
    EXPECT_EQ(std::get<AbsIneqSystem>(to_abs.system).c_mat.rows(), 6U);

    EXPECT_THROW((void)run_convert(data("united_1x1.json"), "from-absineq"), UsageError);
    EXPECT_THROW((void)run_convert(data("united_1x1.json"), "sideways"), UsageError);
}

TEST(ScanCommand, GoldensAndDeterminism)
{
    ScanOptions pw;
    parse_bounds("-1,1,-1,1", pw);
    pw.resolution = 5;
    pw.threads = 3;
    auto doc = data("pointwise_2d.json");
    const std::string csv = scan(doc, pw);
    EXPECT_EQ(csv, slurp(kGolden / "scan_pointwise.csv"));
    pw.threads = 1;
    EXPECT_EQ(scan(doc, pw), csv);

    ScanOptions svg;
    svg.resolution = 16;
    svg.format = "svg";
    svg.threads = 4;
    EXPECT_EQ(scan(data("united_1x2.json"), svg), slurp(kGolden / "scan_united_1x2.svg"));
}

TEST(ScanCommand, RowCountAndErrors)
{
    ScanOptions opts;
    opts.resolution = 100;
    const std::string csv = scan(data("united_1x2.json"), opts);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 100 * 100 + 1);
    EXPECT_THROW((void)scan(data("united_1x1.json"), opts), UsageError);
    opts.format = "png";
    EXPECT_THROW((void)scan(data("united_1x2.json"), opts), UsageError);
    ScanOptions b;
    EXPECT_THROW(parse_bounds("1,0,0,1", b), UsageError);
    EXPECT_THROW(parse_bounds("0,1,0", b), UsageError);
}

TEST(GenCommand, DeterministicAndShapes)
{
    GenOptions g;
    g.spec.seed = 1;
    EXPECT_EQ(emit_document(run_gen(g)), slurp(kGolden / "gen_seed1.json"));
    EXPECT_EQ(emit_document(run_gen(g)), emit_document(run_gen(g)));
    g.spec.rows = 2;
    g.spec.cols = 3;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        g.spec.seed = seed;
        auto doc = run_gen(g);
        auto q = std::get<ClassicIQSystem>(doc.system).prefix().quantifiers();
        // kappa = 1: no existential before a universal
        bool seen_e = false;
        for (auto x : q) {
            ASSERT_FALSE(seen_e && x == Quantifier::Forall);
            seen_e = seen_e || x == Quantifier::Exists;
        }
    }
    g.spec.zero_prob = 1.0;
    g.spec.kappa = 2;
    auto zero = run_gen(g);
    EXPECT_TRUE(member_absform(to_generalized(zero), pt({"9", "-2", "1/3"})).member);
    g.form = "weird";
    EXPECT_THROW((void)run_gen(g), UsageError);
}
