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

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace iqlin {

/// Exact rational number in lowest terms.
///
/// Values whose numerator and denominator fit in 64-bit words are stored
/// inline; anything larger spills into a shared, immutable GMP rational.
/// The representation is canonical (a value that fits inline is never held
/// in the GMP form), so equality can compare representations directly.
class Rational {
public:
    Rational() noexcept = default;

    template <typename Int>
        requires(std::is_integral_v<Int> && !std::is_same_v<Int, bool>)
    Rational(Int value)  // NOLINT(google-explicit-constructor)
    {
        assign_integer(static_cast<long long>(value));
    }

    /// Throws std::domain_error when den == 0.
    Rational(long long num, long long den);

    explicit Rational(const mpq_class& value);

    /// Accepts "7", "-3/2", "0.125", "-1.5e-3" and "+2". Decimal literals are
    /// converted exactly. Throws std::invalid_argument on malformed text.
    static Rational parse(std::string_view text);

    /// Canonical text: "n" for integers, "n/d" otherwise.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] double to_double() const;

    [[nodiscard]] int sign() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_integer() const noexcept;

    /// True when the value is held inline; num()/den() are then valid.
    [[nodiscard]] bool is_small() const noexcept { return !big_; }
    [[nodiscard]] std::int64_t small_num() const noexcept { return num_; }
    [[nodiscard]] std::int64_t small_den() const noexcept { return den_; }

    /// Numerator and denominator as decimal strings (always valid).
    [[nodiscard]] std::string numerator_str() const;
    [[nodiscard]] std::string denominator_str() const;

    Rational operator-() const;

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    /// Throws std::domain_error on division by zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) noexcept;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void assign_integer(long long value);
    static Rational from_big(mpq_class value);
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

[[nodiscard]] Rational abs(const Rational& r);
[[nodiscard]] inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
[[nodiscard]] inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace iqlin
