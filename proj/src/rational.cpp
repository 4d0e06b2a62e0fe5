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

#include "iqlin/rational.hpp"

#include <cctype>
#include <climits>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace iqlin {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kSmallMax = INT64_MAX;

bool fits_small(i128 v)
{
    return v >= -static_cast<i128>(kSmallMax) && v <= static_cast<i128>(kSmallMax);
}

std::uint64_t uabs(std::int64_t v)
{
    return v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

u128 uabs128(i128 v) { return v < 0 ? u128(0) - static_cast<u128>(v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b)
{
    while (b != 0) {
        if (a <= UINT64_MAX && b <= UINT64_MAX)
            return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from_i128(i128 v)
{
    u128 mag = uabs128(v);
    mpz_class out;
    std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
    mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
    if (v < 0)
        out = -out;
    return out;
}

bool mpz_fits_small(const mpz_class& z)
{
    return mpz_fits_slong_p(z.get_mpz_t()) && z != LONG_MIN;
}

}  // namespace

void Rational::assign_integer(long long value)
{
    if (value == LLONG_MIN) {
        *this = from_big(mpq_class(mpz_from_i128(value)));
        return;
    }
    num_ = value;
    den_ = 1;
    big_.reset();
}

Rational::Rational(long long num, long long den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    i128 n = num;
    i128 d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    u128 g = gcd128(uabs128(n), static_cast<u128>(d));
    *this = from_wide(n / static_cast<i128>(g), d / static_cast<i128>(g));
}

Rational::Rational(const mpq_class& value)
{
    mpq_class copy(value);
    copy.canonicalize();
    *this = from_big(std::move(copy));
}

Rational Rational::from_big(mpq_class value)
{
    Rational r;
    if (mpz_fits_small(value.get_num()) && mpz_fits_small(value.get_den())) {
        r.num_ = value.get_num().get_si();
        r.den_ = value.get_den().get_si();
        return r;
    }
    r.num_ = 0;
    r.den_ = 1;
    r.big_ = std::make_shared<const mpq_class>(std::move(value));
    return r;
}

// Expects den > 0 and gcd(num, den) == 1.
Rational Rational::from_wide(i128 num, i128 den)
{
    if (fits_small(num) && fits_small(den)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
    return from_big(std::move(q));
}

Rational Rational::parse(std::string_view text)
{
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    };
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.empty())
        return fail();

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto all_digits = [](std::string_view v) {
        if (v.empty())
            return false;
        for (char c : v)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };

    mpq_class value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view n = s.substr(0, slash);
        std::string_view d = s.substr(slash + 1);
        if (!all_digits(n) || !all_digits(d))
            return fail();
        mpz_class den(std::string(d), 10);
        if (den == 0)
            throw std::invalid_argument("rational literal '" + std::string(text) + "' has zero denominator");
        value = mpq_class(mpz_class(std::string(n), 10), den);
    } else {
        std::string_view mantissa = s;
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            mantissa = s.substr(0, e);
            std::string_view ex = s.substr(e + 1);
            bool eneg = false;
            if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
                eneg = ex.front() == '-';
                ex.remove_prefix(1);
            }
            if (!all_digits(ex) || ex.size() > 6)
                return fail();
            exponent = std::stol(std::string(ex));
            if (eneg)
                exponent = -exponent;
        }
        std::string digits;
        if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
            std::string_view ip = mantissa.substr(0, dot);
            std::string_view fp = mantissa.substr(dot + 1);
            if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
                return fail();
            digits = std::string(ip) + std::string(fp);
            exponent -= static_cast<long>(fp.size());
        } else {
            if (!all_digits(mantissa))
                return fail();
            digits = std::string(mantissa);
        }
        mpz_class mag(digits, 10);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
        if (exponent >= 0)
            value = mpq_class(mag * scale);
        else
            value = mpq_class(mag, scale);
    }
    value.canonicalize();
    if (negative)
        value = -value;
    return from_big(std::move(value));
}

std::string Rational::str() const
{
    if (big_)
        return big_->get_str();
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Rational::to_mpq() const
{
    if (big_)
        return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const
{
    if (big_)
        return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

int Rational::sign() const noexcept
{
    if (big_)
        return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const noexcept
{
    if (big_)
        return big_->get_den() == 1;
    return den_ == 1;
}

std::string Rational::numerator_str() const
{
    return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_str() const
{
    return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

Rational Rational::operator-() const
{
    if (big_)
        return from_big(-*big_);
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_)
        return Rational::from_big(a.to_mpq() + b.to_mpq());
    if (a.den_ == 1 && b.den_ == 1)
        return Rational::from_wide(i128(a.num_) + b.num_, 1);
    // Knuth 4.5.1: reduce by the denominator gcd before and after.
    std::int64_t g = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(a.den_), static_cast<std::uint64_t>(b.den_)));
    i128 t = i128(a.num_) * (b.den_ / g) + i128(b.num_) * (a.den_ / g);
    if (t == 0)
        return Rational();
    std::int64_t g2 = g == 1 ? 1 : static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(uabs128(t) % static_cast<u128>(g)), static_cast<std::uint64_t>(g)));
    return Rational::from_wide(t / g2, i128(a.den_ / g) * (b.den_ / g2));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_)
        return Rational::from_big(a.to_mpq() * b.to_mpq());
    if (a.num_ == 0 || b.num_ == 0)
        return Rational();
    std::int64_t g1 = static_cast<std::int64_t>(std::gcd(uabs(a.num_), static_cast<std::uint64_t>(b.den_)));
    std::int64_t g2 = static_cast<std::int64_t>(std::gcd(uabs(b.num_), static_cast<std::uint64_t>(a.den_)));
    return Rational::from_wide(i128(a.num_ / g1) * (b.num_ / g2), i128(a.den_ / g2) * (b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.is_zero())
        throw std::domain_error("rational division by zero");
    if (a.big_ || b.big_)
        return Rational::from_big(a.to_mpq() / b.to_mpq());
    Rational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
}

bool operator==(const Rational& a, const Rational& b) noexcept
{
    if (a.big_ || b.big_) {
        if (!a.big_ || !b.big_)
            return false;
        return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_) {
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    if (a.den_ == b.den_)
        return a.num_ <=> b.num_;
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less : lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace iqlin
