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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "iqlin/rational.hpp"

namespace iqlin {

/// Thrown when operand shapes do not agree.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Point in R^n with exact rational coordinates.
using PointVector = std::vector<Rational>;

/// Nonempty closed interval [lo, hi] with rational endpoints.
class Interval {
public:
    /// The degenerate interval [0, 0].
    Interval() = default;

    /// Throws std::invalid_argument when lo > hi; endpoints are never swapped.
    Interval(Rational lo, Rational hi);

    static Interval point(const Rational& value) { return Interval(value, value); }
    static Interval zero() { return Interval(); }

    /// Builds [center - radius, center + radius]; radius must be >= 0.
    static Interval from_center_radius(const Rational& center, const Rational& radius);

    [[nodiscard]] const Rational& lo() const noexcept { return lo_; }
    [[nodiscard]] const Rational& hi() const noexcept { return hi_; }

    [[nodiscard]] Rational mid() const { return (lo_ + hi_) / 2; }
    [[nodiscard]] Rational rad() const { return (hi_ - lo_) / 2; }
    [[nodiscard]] Rational wid() const { return hi_ - lo_; }

    [[nodiscard]] bool is_zero() const noexcept { return lo_.is_zero() && hi_.is_zero(); }
    [[nodiscard]] bool is_degenerate() const { return lo_ == hi_; }
    [[nodiscard]] bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }

    [[nodiscard]] std::string str() const;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Rational lo_;
    Rational hi_;
};

std::ostream& operator<<(std::ostream& os, const Interval& a);

[[nodiscard]] inline Rational mid(const Interval& a) { return a.mid(); }
[[nodiscard]] inline Rational rad(const Interval& a) { return a.rad(); }
[[nodiscard]] inline Rational wid(const Interval& a) { return a.wid(); }

[[nodiscard]] Interval add(const Interval& a, const Interval& b);
[[nodiscard]] Interval neg(const Interval& a);
[[nodiscard]] Interval sub(const Interval& a, const Interval& b);
[[nodiscard]] Interval scale(const Rational& factor, const Interval& a);

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator-(const Interval& a) { return neg(a); }

/// a is contained in b.
[[nodiscard]] bool subset(const Interval& a, const Interval& b);
[[nodiscard]] bool intersects(const Interval& a, const Interval& b);

/// Finds c0 in c with a contained in b + c0, if one exists.
///
/// Such a shift exists exactly when a is contained in b + c and a is no
/// wider than b; the returned witness is the largest point of
/// [a.hi - b.hi, a.lo - b.lo] intersected with c.
[[nodiscard]] std::optional<Rational> exists_shift_witness(const Interval& a, const Interval& b, const Interval& c);

/// Fixed-length vector of intervals.
class IntervalVector {
public:
    IntervalVector() = default;
    explicit IntervalVector(std::size_t size) : entries_(size) {}
    explicit IntervalVector(std::vector<Interval> entries) : entries_(std::move(entries)) {}

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] const Interval& operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] Interval& operator[](std::size_t i) { return entries_[i]; }
    [[nodiscard]] std::span<const Interval> entries() const noexcept { return entries_; }

    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const IntervalVector&, const IntervalVector&) = default;

private:
    std::vector<Interval> entries_;
};

/// Row-major m x n matrix of intervals.
class IntervalMatrix {
public:
    IntervalMatrix() = default;
    IntervalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    /// Throws DimensionError when the rows are ragged.
    explicit IntervalMatrix(const std::vector<std::vector<Interval>>& rows);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] const Interval& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    [[nodiscard]] Interval& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    [[nodiscard]] std::span<const Interval> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const IntervalMatrix&, const IntervalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Interval> entries_;
};

/// Row-major m x n matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    [[nodiscard]] Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

[[nodiscard]] IntervalVector add(const IntervalVector& a, const IntervalVector& b);
[[nodiscard]] IntervalVector sub(const IntervalVector& a, const IntervalVector& b);
[[nodiscard]] IntervalMatrix add(const IntervalMatrix& a, const IntervalMatrix& b);

/// Elementwise mid and rad.
[[nodiscard]] RationalMatrix mid(const IntervalMatrix& a);
[[nodiscard]] RationalMatrix rad(const IntervalMatrix& a);
[[nodiscard]] PointVector mid(const IntervalVector& a);
[[nodiscard]] PointVector rad(const IntervalVector& a);

/// Exact image {A x : A in a} of a point under an interval matrix, computed
/// in center-radius form as [mid(a) x - rad(a)|x|, mid(a) x + rad(a)|x|].
[[nodiscard]] IntervalVector op_product(const IntervalMatrix& a, std::span<const Rational> x);

[[nodiscard]] PointVector abs_vec(std::span<const Rational> x);
[[nodiscard]] PointVector pos_part(std::span<const Rational> x);
[[nodiscard]] PointVector neg_part(std::span<const Rational> x);

[[nodiscard]] PointVector mul(const RationalMatrix& a, std::span<const Rational> x);

}  // namespace iqlin
