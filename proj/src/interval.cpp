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

#include "iqlin/interval.hpp"

#include <ostream>

namespace iqlin {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_)
        throw std::invalid_argument("interval lower endpoint " + lo_.str() + " exceeds upper endpoint " + hi_.str());
}

Interval Interval::from_center_radius(const Rational& center, const Rational& radius)
{
    if (radius.sign() < 0)
        throw std::invalid_argument("negative interval radius " + radius.str());
    return Interval(center - radius, center + radius);
}

std::string Interval::str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << a.str(); }

Interval add(const Interval& a, const Interval& b) { return Interval(a.lo() + b.lo(), a.hi() + b.hi()); }

Interval neg(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval sub(const Interval& a, const Interval& b) { return Interval(a.lo() - b.hi(), a.hi() - b.lo()); }

Interval scale(const Rational& factor, const Interval& a)
{
    if (factor.sign() < 0)
        return Interval(factor * a.hi(), factor * a.lo());
    return Interval(factor * a.lo(), factor * a.hi());
}

bool subset(const Interval& a, const Interval& b) { return b.lo() <= a.lo() && a.hi() <= b.hi(); }

bool intersects(const Interval& a, const Interval& b) { return a.lo() <= b.hi() && b.lo() <= a.hi(); }

std::optional<Rational> exists_shift_witness(const Interval& a, const Interval& b, const Interval& c)
{
    if (!subset(a, add(b, c)) || b.wid() < a.wid())
        return std::nullopt;
    // [a.hi - b.hi, a.lo - b.lo] is a proper interval because wid(a) <= wid(b),
    // and it meets c because a is inside b + c.
    Interval shifts(a.hi() - b.hi(), a.lo() - b.lo());
    return min(shifts.hi(), c.hi());
}

bool IntervalVector::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

IntervalMatrix::IntervalMatrix(const std::vector<std::vector<Interval>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size())
{
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionError("ragged interval matrix rows");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

bool IntervalMatrix::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size())
{
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionError("ragged rational matrix rows");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

IntervalVector add(const IntervalVector& a, const IntervalVector& b)
{
    if (a.size() != b.size())
        throw DimensionError("interval vector lengths differ");
    IntervalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = add(a[i], b[i]);
    return out;
}

IntervalVector sub(const IntervalVector& a, const IntervalVector& b)
{
    if (a.size() != b.size())
        throw DimensionError("interval vector lengths differ");
    IntervalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = sub(a[i], b[i]);
    return out;
}

IntervalMatrix add(const IntervalMatrix& a, const IntervalMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("interval matrix shapes differ");
    IntervalMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = add(a(i, j), b(i, j));
    return out;
}

RationalMatrix mid(const IntervalMatrix& a)
{
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j).mid();
    return out;
}

RationalMatrix rad(const IntervalMatrix& a)
{
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j).rad();
    return out;
}

PointVector mid(const IntervalVector& a)
{
    PointVector out;
    out.reserve(a.size());
    for (const auto& e : a.entries())
        out.push_back(e.mid());
    return out;
}

PointVector rad(const IntervalVector& a)
{
    PointVector out;
    out.reserve(a.size());
    for (const auto& e : a.entries())
        out.push_back(e.rad());
    return out;
}

IntervalVector op_product(const IntervalMatrix& a, std::span<const Rational> x)
{
    if (a.cols() != x.size())
        throw DimensionError("matrix has " + std::to_string(a.cols()) + " columns but point has " +
                             std::to_string(x.size()) + " coordinates");
    IntervalVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational center;
        Rational spread;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Interval& e = a(i, j);
            if (e.is_zero() || x[j].is_zero())
                continue;
            center += e.mid() * x[j];
            spread += e.rad() * abs(x[j]);
        }
        out[i] = Interval(center - spread, center + spread);
    }
    return out;
}

PointVector abs_vec(std::span<const Rational> x)
{
    PointVector out;
    out.reserve(x.size());
    for (const auto& v : x)
        out.push_back(abs(v));
    return out;
}

PointVector pos_part(std::span<const Rational> x)
{
    PointVector out;
    out.reserve(x.size());
    for (const auto& v : x)
        out.push_back(v.sign() > 0 ? v : Rational());
    return out;
}

PointVector neg_part(std::span<const Rational> x)
{
    PointVector out;
    out.reserve(x.size());
    for (const auto& v : x)
        out.push_back(v.sign() < 0 ? -v : Rational());
    return out;
}

PointVector mul(const RationalMatrix& a, std::span<const Rational> x)
{
    if (a.cols() != x.size())
        throw DimensionError("matrix/vector shape mismatch");
    PointVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!x[j].is_zero())
                out[i] += a(i, j) * x[j];
    return out;
}

}  // namespace iqlin
