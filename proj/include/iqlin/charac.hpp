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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iqlin/interval.hpp"
#include "iqlin/prefix.hpp"

namespace iqlin {

/// Which quantifier-free condition rejected a point.
enum class Condition : std::uint8_t {
    Inclusion,       ///< interval form: sum of universal residuals not inside existential range
    NestedWidth,     ///< nested-width condition at some level l < kappa (either form)
    AbsBound,        ///< absolute-value form of the final inclusion
    TwoSidedBound,   ///< two-sided (sandwich) form of the final inclusion
    SharyInclusion,  ///< single-block interval inclusion on an AE system
    RohnBound,       ///< single-block absolute-value inequality on an AE system
    AbsInequality,   ///< |Cx - c| <= D|x| + d
};

struct Violation {
    Condition condition;
    std::size_t row;                   ///< zero-based row
    std::optional<std::size_t> level;  ///< l (number of innermost blocks summed), NestedWidth only

    [[nodiscard]] std::string describe() const;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct MembershipVerdict {
    bool member = true;
    std::optional<Violation> violated;  ///< present iff !member

    static MembershipVerdict yes() { return {}; }
    static MembershipVerdict no(Violation v) { return {false, v}; }

    [[nodiscard]] std::string describe() const;
};

/// A x = b with a quantifier per entry; every universal quantifier precedes
/// every existential one.
struct AESystem {
    IntervalMatrix a;
    IntervalVector b;
    std::vector<Quantifier> alpha;  ///< row-major, same shape as a
    std::vector<Quantifier> beta;   ///< one per row

    AESystem(IntervalMatrix a, IntervalVector b, std::vector<Quantifier> alpha, std::vector<Quantifier> beta);

    [[nodiscard]] std::size_t rows() const noexcept { return a.rows(); }
    [[nodiscard]] std::size_t cols() const noexcept { return a.cols(); }
    [[nodiscard]] Quantifier alpha_at(std::size_t i, std::size_t j) const { return alpha[i * a.cols() + j]; }

    friend bool operator==(const AESystem&, const AESystem&) = default;
};

/// Four-argument single-block system (A' + A'') x = b' + b'' with A', b'
/// universal and A'', b'' existential; the pieces need not be disjoint.
struct SplitSystem {
    IntervalMatrix a_forall;
    IntervalMatrix a_exists;
    IntervalVector b_forall;
    IntervalVector b_exists;

    friend bool operator==(const SplitSystem&, const SplitSystem&) = default;
};

/// |Cx - c| <= D|x| + d.
struct AbsIneqSystem {
    RationalMatrix c_mat;
    RationalMatrix d_mat;
    PointVector c_vec;
    PointVector d_vec;

    friend bool operator==(const AbsIneqSystem&, const AbsIneqSystem&) = default;
};

/// Zero-substitution split of an AE system into its universal and
/// existential parts.
[[nodiscard]] SplitSystem split(const AESystem& ae);
[[nodiscard]] GeneralizedIQSystem as_generalized(const SplitSystem& s);
[[nodiscard]] GeneralizedIQSystem as_generalized(const AESystem& ae);
/// Throws DimensionError when kappa != 1.
[[nodiscard]] SplitSystem single_block(const GeneralizedIQSystem& gen);

// --- Multi-block characterizations -------------------------------------

/// Interval-arithmetic test: nested widths of the residual sums for
/// l = 1..kappa-1, then inclusion of the universal residual sum in the
/// existential range.
[[nodiscard]] MembershipVerdict member_intervalform(const GeneralizedIQSystem& gen, std::span<const Rational> x);

/// Center-radius test with an absolute value on the final condition.
/// Diagnostics: first violated nested-width level (ascending, rows ascending),
/// then first violated row of the final condition.
[[nodiscard]] MembershipVerdict member_absform(const GeneralizedIQSystem& gen, std::span<const Rational> x);

/// Same as member_absform but with the final condition written as a
/// two-sided sandwich instead of an absolute value.
[[nodiscard]] MembershipVerdict member_twosided(const GeneralizedIQSystem& gen, std::span<const Rational> x);

/// Margin of every inequality of the absolute-value form (right side minus
/// left side), nested levels first. All margins are >= 0 iff x is a member.
[[nodiscard]] PointVector absform_margins(const GeneralizedIQSystem& gen, std::span<const Rational> x);

/// member_absform compiled for repeated queries against one system.
///
/// Each row is rescaled once to integer centers and radii; queries then run
/// in 128-bit integer arithmetic when the magnitudes allow it and fall back
/// to exact rationals otherwise. Verdicts are identical to member_absform.
class AbsFormChecker {
public:
    explicit AbsFormChecker(const GeneralizedIQSystem& gen);

    [[nodiscard]] MembershipVerdict check(std::span<const Rational> x) const;

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t kappa() const noexcept { return kappa_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t kappa_;
    GeneralizedIQSystem source_;
    // Per row, per block: the summed centers and the radius differences
    // (existential minus universal) of A, then the same two for b.
    std::vector<std::int64_t> coef_;
    int coef_bits_ = 0;    // bit length bound over all scaled coefficients
    bool exact_only_ = false;  // some scaled coefficient does not fit in 64 bits
};

// --- Single-block characterizations ------------------------------------

[[nodiscard]] MembershipVerdict member_shary(const SplitSystem& s, std::span<const Rational> x);
[[nodiscard]] MembershipVerdict member_shary(const AESystem& ae, std::span<const Rational> x);
[[nodiscard]] MembershipVerdict member_rohn(const SplitSystem& s, std::span<const Rational> x);
[[nodiscard]] MembershipVerdict member_rohn(const AESystem& ae, std::span<const Rational> x);

[[nodiscard]] AESystem united_system(const IntervalMatrix& a, const IntervalVector& b);
[[nodiscard]] AESystem tolerable_system(const IntervalMatrix& a, const IntervalVector& b);
[[nodiscard]] AESystem controllable_system(const IntervalMatrix& a, const IntervalVector& b);

[[nodiscard]] MembershipVerdict member_united(const IntervalMatrix& a, const IntervalVector& b,
                                              std::span<const Rational> x);
[[nodiscard]] MembershipVerdict member_tolerable(const IntervalMatrix& a, const IntervalVector& b,
                                                 std::span<const Rational> x);
[[nodiscard]] MembershipVerdict member_controllable(const IntervalMatrix& a, const IntervalVector& b,
                                                    std::span<const Rational> x);

// --- Conversions --------------------------------------------------------

/// Direct evaluation of |Cx - c| <= D|x| + d, row by row.
[[nodiscard]] MembershipVerdict member_absineq(const AbsIneqSystem& sys, std::span<const Rational> x);

/// AE system whose solution set is {x : |Cx - c| <= D|x| + d}:
/// A = [C - |D|, C + |D|], b = [c - |d|, c + |d|], an entry is existential
/// when its D (or d) entry is >= 0 and universal otherwise.
[[nodiscard]] AESystem ae_from_abs_inequalities(const AbsIneqSystem& sys);

/// Absolute-value system equivalent to a four-argument single-block system:
/// C = mid A' + mid A'', D = rad A'' - rad A', c = mid b' + mid b'',
/// d = rad b'' - rad b'.
[[nodiscard]] AbsIneqSystem abs_inequalities_from_split(const SplitSystem& s);
[[nodiscard]] AESystem ae_from_split(const SplitSystem& s);

/// Absolute-value system with kappa*m rows equivalent to a generalized
/// system: block l < kappa contributes 0 <= D_l|x| + d_l with the nested
/// radius differences, block kappa carries the summed centers.
[[nodiscard]] AbsIneqSystem flatten_abs_inequalities(const GeneralizedIQSystem& gen);
/// The AE system (kappa*m rows) built from flatten_abs_inequalities.
[[nodiscard]] AESystem flatten_to_ae(const GeneralizedIQSystem& gen);

}  // namespace iqlin
