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

#include <limits>
#include <random>
#include <sstream>

#include <gmpxx.h>

#include "iqlin/rational.hpp"

using iqlin::Rational;

namespace {

mpz_class z(long long v) { return mpz_class(std::to_string(v)); }

}  // namespace

TEST(Rational, LowestTermsAndSign)
{
    Rational r(6, -4);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(r.small_num(), -3);
    EXPECT_EQ(r.small_den(), 2);
    EXPECT_EQ(Rational(0, -7).str(), "0");
    EXPECT_EQ(Rational(0, 5), Rational(0));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParseForms)
{
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational::parse("-3/2"), Rational(-3, 2));
    EXPECT_EQ(Rational::parse("+2"), Rational(2));
    EXPECT_EQ(Rational::parse("0.125"), Rational(1, 8));
    EXPECT_EQ(Rational::parse("-1.5e-3"), Rational(-3, 2000));
    EXPECT_EQ(Rational::parse("2.5E2"), Rational(250));
    EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "--1", "0x10", "1 /2", "3/-2"}) {
        EXPECT_THROW((void)Rational::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(Rational, ArithmeticAndDivisionByZero)
{
    Rational a(1, 3);
    Rational b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_EQ(-a, Rational(-1, 3));
    EXPECT_THROW((void)(a / Rational(0)), std::domain_error);
}

TEST(Rational, Ordering)
{
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
    EXPECT_EQ(iqlin::abs(Rational(-5, 3)), Rational(5, 3));
    EXPECT_EQ(iqlin::min(Rational(1), Rational(2)), Rational(1));
    EXPECT_EQ(iqlin::max(Rational(1), Rational(2)), Rational(2));
}

TEST(Rational, SpillsToBigAndBack)
{
    const long long big = std::numeric_limits<long long>::max();
    Rational r(big);
    Rational s = r * r;
    EXPECT_FALSE(s.is_small());
    EXPECT_EQ(s.to_mpq(), mpq_class(z(big) * z(big)));
    Rational back = s / r;
    EXPECT_TRUE(back.is_small());
    EXPECT_EQ(back, r);
    EXPECT_EQ(Rational(std::numeric_limits<long long>::min()) - Rational(1),
              Rational(mpq_class(z(std::numeric_limits<long long>::min()) - 1)));
}

TEST(Rational, StreamsCanonicalText)
{
    std::ostringstream os;
    os << Rational(-10, 4);
    EXPECT_EQ(os.str(), "-5/2");
}

// Randomized comparison against GMP's mpq_class used directly.
TEST(Rational, AgreesWithGmpOnRandomOperands)
{
    std::mt19937_64 gen(42);
    std::uniform_int_distribution<long long> wide(std::numeric_limits<long long>::min() / 2,
                                                  std::numeric_limits<long long>::max() / 2);
    std::uniform_int_distribution<long long> narrow(1, 1000);
    for (int k = 0; k < 5000; ++k) {
        const bool huge = k % 2 == 0;
        long long an = huge ? wide(gen) : narrow(gen) - 500;
        long long ad = huge ? std::max(1LL, std::llabs(wide(gen))) : narrow(gen);
        long long bn = huge ? wide(gen) : narrow(gen) - 500;
        long long bd = narrow(gen);
        Rational a(an, ad);
        Rational b(bn, bd);
        mpq_class qa{z(an), z(ad)};
        mpq_class qb{z(bn), z(bd)};
        qa.canonicalize();
        qb.canonicalize();
        ASSERT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
        ASSERT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
        ASSERT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
        if (bn != 0) ASSERT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
        ASSERT_EQ(a < b, qa < qb);
        ASSERT_EQ(a == b, qa == qb);
        // Results that fit inline must be stored inline.
        if (bn != 0) ASSERT_EQ((a * b) / b, a);
    }
}
