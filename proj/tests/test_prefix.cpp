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
#include <string>
#include <vector>

#include "helpers.hpp"
#include "iqlin/oracle.hpp"
#include "iqlin/prefix.hpp"

using namespace iqlin;
using iqlin::testing::iv;

namespace {

std::vector<Quantifier> letters(const std::string& s)
{
    std::vector<Quantifier> q;
    for (char c : s) q.push_back(c == 'A' ? Quantifier::Forall : Quantifier::Exists);
    return q;
}

// Shape test for one block given outer-to-inner letters.
bool block_ok(const std::string& block, bool innermost, bool outermost)
{
    const auto first_e = block.find('E');
    const bool sorted = block.find('A', first_e == std::string::npos ? block.size() : first_e) == std::string::npos;
    if (!sorted) return false;
    const bool has_a = block.find('A') != std::string::npos;
    const bool has_e = first_e != std::string::npos;
    if (has_a && has_e) return true;
    if (has_a) return innermost;
    return outermost;
}

// Every cut set (innermost-first positions) that satisfies the block rules.
std::vector<std::vector<std::size_t>> brute_force_cuts(const std::string& outer_to_inner)
{
    const std::size_t mu = outer_to_inner.size();
    std::vector<std::vector<std::size_t>> valid;
    for (std::uint32_t mask = 0; mask < (1U << (mu - 1)); ++mask) {
        std::vector<std::size_t> cuts{0};
        for (std::size_t p = 1; p < mu; ++p) {
            if ((mask >> (p - 1)) & 1U) cuts.push_back(p);
        }
        cuts.push_back(mu);
        const std::size_t kappa = cuts.size() - 1;
        bool ok = true;
        for (std::size_t s = 1; s <= kappa && ok; ++s) {
            // positions cuts[s-1]+1 .. cuts[s], innermost-first; outermost-first
            // indices mu - cuts[s] .. mu - cuts[s-1] - 1.
            std::string block = outer_to_inner.substr(mu - cuts[s], cuts[s] - cuts[s - 1]);
            ok = block_ok(block, s == 1, s == kappa);
        }
        if (ok) valid.push_back(cuts);
    }
    return valid;
}

std::string word(std::uint32_t bits, std::size_t len)
{
    std::string s;
    for (std::size_t k = 0; k < len; ++k) s.push_back(((bits >> k) & 1U) ? 'E' : 'A');
    return s;
}

ClassicIQSystem two_by_two_example()
{
    // outer -> inner: E E A E A A
    auto prefix = QuantifierPrefix::parse("E a[1,1] E b[2] A a[2,2] E b[1] A a[1,2] A a[2,1]", 2, 2);
    IntervalMatrix a({{iv(1, 2), iv(3, 4)}, {iv(5, 6), iv(7, 8)}});
    IntervalVector b({iv(-1, 1), iv(2, 3)});
    return {a, b, prefix};
}

}  // namespace

TEST(ParamRef, TextForms)
{
    EXPECT_EQ(ParamRef::matrix(1, 0).str(), "a[2,1]");
    EXPECT_EQ(ParamRef::rhs(2).str(), "b[3]");
    EXPECT_EQ(ParamRef::parse("a[2,1]"), ParamRef::matrix(1, 0));
    EXPECT_EQ(ParamRef::parse("b[3]"), ParamRef::rhs(2));
    EXPECT_THROW((void)ParamRef::parse("a[0,1]"), PrefixError);
    EXPECT_THROW((void)ParamRef::parse("c[1]"), PrefixError);
    EXPECT_THROW((void)ParamRef::parse("a[1]"), PrefixError);
}

TEST(QuantifierPrefix, ParseValidates)
{
    auto p = QuantifierPrefix::parse("E b[1] A a[1,1]", 1, 1);
    EXPECT_EQ(p.size(), 2U);
    EXPECT_EQ(p.bindings()[0].param, ParamRef::rhs(0));
    EXPECT_EQ(p.bindings()[1].quantifier, Quantifier::Forall);
    EXPECT_EQ(p.str(), "E b[1] A a[1,1]");
    EXPECT_EQ(QuantifierPrefix::parse("∃ b[1] ∀ a[1,1]", 1, 1), p);
    EXPECT_THROW((void)QuantifierPrefix::parse("A a[1,1] A a[1,1]", 1, 1), PrefixError);
    EXPECT_THROW((void)QuantifierPrefix::parse("A a[1,1]", 1, 1), PrefixError);
    EXPECT_THROW((void)QuantifierPrefix::parse("A a[1,2] E b[1]", 1, 1), PrefixError);
    EXPECT_THROW((void)QuantifierPrefix::parse("X a[1,1] E b[1]", 1, 1), PrefixError);
    EXPECT_THROW((void)QuantifierPrefix::parse("A a[1,1] E", 1, 1), PrefixError);
}

TEST(Decompose, ThreeBlockExample)
{
    auto q = letters("EEAEAA");
    auto blocks = decompose_ae_blocks(q);
    ASSERT_EQ(blocks.kappa(), 3U);
    EXPECT_EQ(blocks.cuts, (std::vector<std::size_t>{0, 2, 4, 6}));
    EXPECT_EQ(blocks.shapes,
              (std::vector<BlockShape>{BlockShape::AllForall, BlockShape::Alternating, BlockShape::AllExists}));
    EXPECT_EQ(block_patterns(q, blocks), (std::vector<std::string>{"AA", "AE", "EE"}));
    EXPECT_EQ(blocks.block_of(0), 2U);
    EXPECT_EQ(blocks.block_of(2), 1U);
    EXPECT_EQ(blocks.block_of(5), 0U);
}

TEST(Decompose, SingleBlockShapes)
{
    for (const char* s : {"EEEE", "AAAA", "AAEE", "AE", "E", "A"}) {
        auto blocks = decompose_ae_blocks(letters(s));
        EXPECT_EQ(blocks.kappa(), 1U) << s;
    }
    EXPECT_EQ(decompose_ae_blocks(letters("EA")).kappa(), 2U);
    EXPECT_EQ(decompose_ae_blocks(letters("AEAE")).kappa(), 2U);
}

TEST(Decompose, UniqueAgainstBruteForce)
{
    for (std::size_t mu = 1; mu <= 10; ++mu) {
        for (std::uint32_t bits = 0; bits < (1U << mu); ++bits) {
            const std::string s = word(bits, mu);
            auto valid = brute_force_cuts(s);
            ASSERT_EQ(valid.size(), 1U) << s;
            auto blocks = decompose_ae_blocks(letters(s));
            ASSERT_EQ(blocks.cuts, valid.front()) << s;
            // kappa == 1 exactly for A*E*
            const bool ae_shape = s.find("EA") == std::string::npos;
            ASSERT_EQ(blocks.kappa() == 1, ae_shape) << s;
        }
    }
}

TEST(BuildTuples, TolerableStyleOneByOne)
{
    ClassicIQSystem sys(IntervalMatrix({{iv(2, 4)}}), IntervalVector({iv(6, 8)}),
                        QuantifierPrefix::parse("A a[1,1] E b[1]", 1, 1));
    auto gen = build_tuples(sys);
    ASSERT_EQ(gen.kappa(), 1U);
    EXPECT_EQ(gen.block(0).a_forall(0, 0), iv(2, 4));
    EXPECT_EQ(gen.block(0).b_exists[0], iv(6, 8));
    EXPECT_TRUE(gen.block(0).a_exists.is_zero());
    EXPECT_TRUE(gen.block(0).b_forall.is_zero());
}

TEST(BuildTuples, AllForall)
{
    ClassicIQSystem sys(IntervalMatrix({{iv(2, 4)}}), IntervalVector({iv(6, 8)}),
                        QuantifierPrefix::parse("A b[1] A a[1,1]", 1, 1));
    auto gen = build_tuples(sys);
    ASSERT_EQ(gen.kappa(), 1U);
    EXPECT_EQ(gen.block(0).a_forall, sys.a());
    EXPECT_EQ(gen.block(0).b_forall, sys.b());
    EXPECT_TRUE(gen.block(0).a_exists.is_zero());
    EXPECT_TRUE(gen.block(0).b_exists.is_zero());
}

TEST(BuildTuples, ThreeBlocksDisjoint)
{
    auto sys = two_by_two_example();
    auto gen = build_tuples(sys);
    ASSERT_EQ(gen.kappa(), 3U);
    // innermost block: A a[1,2], A a[2,1]
    EXPECT_EQ(gen.block(0).a_forall(0, 1), iv(3, 4));
    EXPECT_EQ(gen.block(0).a_forall(1, 0), iv(5, 6));
    // middle block: A a[2,2], E b[1]
    EXPECT_EQ(gen.block(1).a_forall(1, 1), iv(7, 8));
    EXPECT_EQ(gen.block(1).b_exists[0], iv(-1, 1));
    // outermost block: E a[1,1], E b[2]
    EXPECT_EQ(gen.block(2).a_exists(0, 0), iv(1, 2));
    EXPECT_EQ(gen.block(2).b_exists[1], iv(2, 3));
    EXPECT_TRUE(validate_disjoint(gen, sys.a(), sys.b()).ok());
    EXPECT_EQ(gen.summed_matrix(), sys.a());
    EXPECT_EQ(gen.summed_rhs(), sys.b());
}

TEST(ValidateDisjoint, ReportsOverlapAndSum)
{
    Block inner = Block::zero(1, 1);
    Block outer = Block::zero(1, 1);
    inner.a_forall(0, 0) = iv(1, 2);
    outer.a_forall(0, 0) = iv(1, 2);
    GeneralizedIQSystem gen(1, 1, {inner, outer});
    auto r = validate_disjoint(gen, IntervalMatrix({{iv(2, 4)}}), IntervalVector({iv(0, 0)}));
    EXPECT_EQ(r.problem, DisjointnessReport::Problem::Overlap);
    EXPECT_EQ(r.where, ParamRef::matrix(0, 0));
    EXPECT_EQ(r.describe(), "more than one nonzero piece at a[1,1]");

    Block single = Block::zero(1, 1);
    single.a_exists(0, 0) = iv(1, 3);
    GeneralizedIQSystem g1(1, 1, {single});
    auto s = validate_disjoint(g1, IntervalMatrix({{iv(1, 4)}}), IntervalVector({iv(0, 0)}));
    EXPECT_EQ(s.problem, DisjointnessReport::Problem::SumMismatch);
    EXPECT_EQ(s.where, ParamRef::matrix(0, 0));

    EXPECT_THROW((void)recompose_prefix(gen), PrefixError);
}

TEST(GeneralizedSystem, RejectsBadShapes)
{
    EXPECT_THROW(GeneralizedIQSystem(1, 1, {}), DimensionError);
    EXPECT_THROW(GeneralizedIQSystem(2, 1, {Block::zero(1, 1)}), DimensionError);
}

TEST(Recompose, RoundTripOneByOne)
{
    ClassicIQSystem sys(IntervalMatrix({{iv(2, 4)}}), IntervalVector({iv(6, 8)}),
                        QuantifierPrefix::parse("A a[1,1] E b[1]", 1, 1));
    auto gen = build_tuples(sys);
    auto back = recompose_prefix(gen);
    EXPECT_EQ(back, sys.prefix());
    auto regen = build_tuples(recompose_system(gen));
    EXPECT_EQ(regen, gen);
}

TEST(Recompose, ZeroParameterGoesExistentialInnermost)
{
    Block blk = Block::zero(1, 1);
    blk.a_forall(0, 0) = iv(1, 2);
    auto prefix = recompose_prefix(GeneralizedIQSystem(1, 1, {blk}));
    EXPECT_EQ(prefix.str(), "A a[1,1] E b[1]");

    Block all_e = Block::zero(1, 2);
    all_e.a_exists(0, 0) = iv(1, 2);
    all_e.a_exists(0, 1) = iv(-1, 2);
    all_e.b_exists[0] = iv(0, 2);
    auto p2 = recompose_prefix(GeneralizedIQSystem(1, 2, {all_e}));
    for (const auto& b : p2.bindings()) EXPECT_EQ(b.quantifier, Quantifier::Exists);
}

TEST(Recompose, RoundTripRandomSystems)
{
    std::size_t checked = 0;
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        InstanceSpec spec;
        spec.rows = 1 + seed % 3;
        spec.cols = 1 + (seed / 3) % 3;
        spec.kappa = 1 + (seed / 9) % 4;
        spec.seed = seed;
        ClassicIQSystem sys = [&] {
            try {
                return random_classic_system(spec);
            } catch (const std::invalid_argument&) {
                spec.kappa = 1;
                return random_classic_system(spec);
            }
        }();
        bool has_zero = false;
        for (std::size_t i = 0; i < sys.rows(); ++i) {
            for (std::size_t j = 0; j < sys.cols(); ++j) has_zero = has_zero || sys.a()(i, j).is_zero();
            has_zero = has_zero || sys.b()[i].is_zero();
        }
        if (has_zero) continue;
        auto gen = build_tuples(sys);
        ASSERT_EQ(gen.kappa(), spec.kappa);
        ASSERT_TRUE(validate_disjoint(gen, sys.a(), sys.b()).ok());
        auto again = recompose_system(gen);
        ASSERT_EQ(build_tuples(again), gen) << sys.prefix().str();
        ASSERT_EQ(decompose_ae_blocks(again.prefix()), decompose_ae_blocks(sys.prefix()));
        ++checked;
    }
    EXPECT_GT(checked, 300U);
}

TEST(BuildTuples, PartitionAndDisjointnessExhaustive)
{
    // Every prefix order of a 2x2 system would be 6! * 2^6; sample all quantifier
    // words over a fixed parameter order plus a few orders.
    IntervalMatrix a({{iv(1, 2), iv(-3, 4)}, {iv(0, 1), iv(5, 5)}});
    IntervalVector b({iv(-1, 1), iv(2, 3)});
    std::vector<ParamRef> order{ParamRef::matrix(0, 0), ParamRef::matrix(0, 1), ParamRef::rhs(0),
                                ParamRef::matrix(1, 0), ParamRef::matrix(1, 1), ParamRef::rhs(1)};
    for (int rot = 0; rot < 6; ++rot) {
        for (std::uint32_t bits = 0; bits < 64; ++bits) {
            std::vector<Binding> bindings;
            for (std::size_t k = 0; k < 6; ++k) {
                bindings.push_back(
                    {order[(k + rot) % 6], ((bits >> k) & 1U) ? Quantifier::Exists : Quantifier::Forall});
            }
            ClassicIQSystem sys(a, b, QuantifierPrefix(2, 2, bindings));
            auto gen = build_tuples(sys);
            ASSERT_EQ(gen.kappa(), decompose_ae_blocks(sys.prefix()).kappa());
            ASSERT_TRUE(validate_disjoint(gen, a, b).ok());
        }
    }
}
