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

#include <bit>
#include <numeric>

#include "iqlin/charac.hpp"

namespace iqlin {

namespace {

using i128 = __int128;

int bit_length(std::uint64_t v) { return v == 0 ? 0 : 64 - std::countl_zero(v); }

i128 abs128(i128 v) { return v < 0 ? -v : v; }

}  // namespace

AbsFormChecker::AbsFormChecker(const GeneralizedIQSystem& gen)
    : rows_(gen.rows()), cols_(gen.cols()), kappa_(gen.kappa()), source_(gen)
{
    const std::size_t n = cols_;
    const std::size_t stride = 2 * n + 2;
    coef_.assign(rows_ * kappa_ * stride, 0);

    std::vector<mpq_class> values(kappa_ * stride);
    for (std::size_t i = 0; i < rows_ && !exact_only_; ++i) {
        for (std::size_t s = 0; s < kappa_; ++s) {
            const Block& blk = gen.block(s);
            mpq_class* v = values.data() + s * stride;
            for (std::size_t j = 0; j < n; ++j) {
                v[j] = (blk.a_forall(i, j).mid() + blk.a_exists(i, j).mid()).to_mpq();
                v[n + 1 + j] = (blk.a_exists(i, j).rad() - blk.a_forall(i, j).rad()).to_mpq();
            }
            v[n] = -(blk.b_forall[i].mid() + blk.b_exists[i].mid()).to_mpq();
            v[2 * n + 1] = (blk.b_exists[i].rad() - blk.b_forall[i].rad()).to_mpq();
        }
        // One positive scale per row keeps every inequality of the row intact.
        mpz_class scale = 1;
        for (const auto& v : values)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
        for (std::size_t k = 0; k < values.size(); ++k) {
            mpz_class c = values[k].get_num() * (scale / values[k].get_den());
            if (!mpz_fits_slong_p(c.get_mpz_t()) || c == LONG_MIN) {
                exact_only_ = true;
                break;
            }
            long cv = c.get_si();
            coef_[i * kappa_ * stride + k] = cv;
            coef_bits_ = std::max(coef_bits_, bit_length(cv < 0 ? 0 - static_cast<std::uint64_t>(cv) : cv));
        }
    }
}

MembershipVerdict AbsFormChecker::check(std::span<const Rational> x) const
{
    if (x.size() != cols_)
        throw DimensionError("point has " + std::to_string(x.size()) + " coordinates, system has " +
                             std::to_string(cols_) + " unknowns");
    if (exact_only_)
        return member_absform(source_, x);

    // Common denominator of x, then integer coordinates.
    std::int64_t denom = 1;
    for (const auto& v : x) {
        if (!v.is_small())
            return member_absform(source_, x);
        const std::int64_t d = v.small_den();
        if (d == 1 || d == denom)
            continue;
        const std::int64_t g = std::gcd(denom, d);
        const i128 l = i128(denom / g) * d;
        if (l > INT64_MAX)
            return member_absform(source_, x);
        denom = static_cast<std::int64_t>(l);
    }
    const std::size_t n = cols_;
    // Reused across calls; a fresh allocation per query shows up in the
    // cost of small systems.
    thread_local std::vector<std::int64_t> xs;
    thread_local std::vector<std::int64_t> xa;
    // Column n carries the right-hand side: x_n = |x_n| = denom.
    xs.resize(n + 1);
    xa.resize(n + 1);
    xs[n] = denom;
    xa[n] = denom;
    int x_bits = bit_length(static_cast<std::uint64_t>(denom));
    for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t d = x[j].small_den();
        const i128 v = i128(x[j].small_num()) * (d == denom ? 1 : denom / d);
        if (v > INT64_MAX || v < -INT64_MAX)
            return member_absform(source_, x);
        xs[j] = static_cast<std::int64_t>(v);
        xa[j] = xs[j] < 0 ? -xs[j] : xs[j];
        x_bits = std::max(x_bits, bit_length(static_cast<std::uint64_t>(xa[j])));
    }
    const int term_bits = bit_length(2 * kappa_ * (n + 1));
    if (coef_bits_ + x_bits + term_bits + 1 > 126)
        return member_absform(source_, x);

    const std::size_t stride = 2 * n + 2;
    std::size_t width_level = 0;  // 0 = no nested violation yet
    std::size_t width_row = 0;
    std::optional<std::size_t> bound_row;

    for (std::size_t i = 0; i < rows_; ++i) {
        const std::int64_t* c = coef_.data() + i * kappa_ * stride;
        i128 center = 0;
        i128 slack = 0;  // existential minus universal radius, summed over blocks
        for (std::size_t s = 0; s < kappa_; ++s, c += stride) {
            const std::int64_t* d = c + n + 1;
            i128 cs = 0;
            i128 rs = 0;
            for (std::size_t j = 0; j <= n; ++j) {
                cs += i128(c[j]) * xs[j];
                rs += i128(d[j]) * xa[j];
            }
            center += cs;
            slack += rs;
            const std::size_t level = s + 1;
            if (slack < 0 && level < kappa_ && (width_level == 0 || level < width_level)) {
                width_level = level;
                width_row = i;
            }
        }
        if (!bound_row && slack < abs128(center))
            bound_row = i;
    }
    if (width_level != 0)
        return MembershipVerdict::no({Condition::NestedWidth, width_row, width_level});
    if (bound_row)
        return MembershipVerdict::no({Condition::AbsBound, *bound_row, std::nullopt});
    return MembershipVerdict::yes();
}

}  // namespace iqlin
