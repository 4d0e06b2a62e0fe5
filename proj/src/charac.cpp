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

#include "iqlin/charac.hpp"

namespace iqlin {

namespace {

void require_point(std::size_t cols, std::span<const Rational> x)
{
    if (x.size() != cols)
        throw DimensionError("point has " + std::to_string(x.size()) + " coordinates, system has " +
                             std::to_string(cols) + " unknowns");
}

// Per-row center and radius sums for one block piece: mid(A) x - mid(b) and
// rad(A)|x| + rad(b).
struct RowCenterRadius {
    Rational center;
    Rational radius;
};

RowCenterRadius row_residual(const IntervalMatrix& a, const IntervalVector& b, std::size_t i,
                             std::span<const Rational> x, std::span<const Rational> abs_x)
{
    RowCenterRadius out;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const Interval& e = a(i, j);
        if (e.is_zero() || x[j].is_zero())
            continue;
        out.center += e.mid() * x[j];
        out.radius += e.rad() * abs_x[j];
    }
    if (!b[i].is_zero()) {
        out.center -= b[i].mid();
        out.radius += b[i].rad();
    }
    return out;
}

// Accumulated sums of the center-radius form for one row.
struct RowSums {
    Rational center;                      // sum over all blocks of center residuals
    std::vector<Rational> forall_prefix;  // [l-1] = sum_{s<=l} forall radii
    std::vector<Rational> exists_prefix;  // [l-1] = sum_{s<=l} exists radii
};

RowSums row_sums(const GeneralizedIQSystem& gen, std::size_t i, std::span<const Rational> x,
                 std::span<const Rational> abs_x)
{
    RowSums out;
    Rational fa;
    Rational ex;
    for (const Block& blk : gen.blocks()) {
        auto f = row_residual(blk.a_forall, blk.b_forall, i, x, abs_x);
        auto e = row_residual(blk.a_exists, blk.b_exists, i, x, abs_x);
        out.center += f.center + e.center;
        fa += f.radius;
        ex += e.radius;
        out.forall_prefix.push_back(fa);
        out.exists_prefix.push_back(ex);
    }
    return out;
}

enum class FinalForm { Abs, TwoSided };

MembershipVerdict center_radius_verdict(const GeneralizedIQSystem& gen, std::span<const Rational> x, FinalForm form)
{
    require_point(gen.cols(), x);
    const PointVector abs_x = abs_vec(x);
    const std::size_t kappa = gen.kappa();
    std::vector<RowSums> sums;
    sums.reserve(gen.rows());
    for (std::size_t i = 0; i < gen.rows(); ++i)
        sums.push_back(row_sums(gen, i, x, abs_x));

    for (std::size_t l = 1; l < kappa; ++l)
        for (std::size_t i = 0; i < gen.rows(); ++i)
            if (sums[i].exists_prefix[l - 1] < sums[i].forall_prefix[l - 1])
                return MembershipVerdict::no({Condition::NestedWidth, i, l});

    for (std::size_t i = 0; i < gen.rows(); ++i) {
        const Rational& fa = sums[i].forall_prefix.back();
        const Rational& ex = sums[i].exists_prefix.back();
        const Rational& c = sums[i].center;
        if (form == FinalForm::Abs) {
            if (ex < abs(c) + fa)
                return MembershipVerdict::no({Condition::AbsBound, i, std::nullopt});
        } else {
            const Rational slack = ex - fa;
            if (c < -slack || slack < c)
                return MembershipVerdict::no({Condition::TwoSidedBound, i, std::nullopt});
        }
    }
    return MembershipVerdict::yes();
}

IntervalMatrix zero_where(const IntervalMatrix& a, std::span<const Quantifier> q, Quantifier drop)
{
    IntervalMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (q[i * a.cols() + j] != drop)
                out(i, j) = a(i, j);
    return out;
}

IntervalVector zero_where(const IntervalVector& b, std::span<const Quantifier> q, Quantifier drop)
{
    IntervalVector out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        if (q[i] != drop)
            out[i] = b[i];
    return out;
}

Quantifier sign_quantifier(const Rational& v) { return v.sign() >= 0 ? Quantifier::Exists : Quantifier::Forall; }

}  // namespace

std::string Violation::describe() const
{
    const std::string r = "row " + std::to_string(row + 1);
    switch (condition) {
    case Condition::Inclusion:
        return "inclusion violated at " + r;
    case Condition::NestedWidth:
        return "nested width violated at level " + std::to_string(level.value_or(0)) + ", " + r;
    case Condition::AbsBound:
        return "absolute bound violated at " + r;
    case Condition::TwoSidedBound:
        return "two-sided bound violated at " + r;
    case Condition::SharyInclusion:
        return "AE inclusion violated at " + r;
    case Condition::RohnBound:
        return "AE absolute bound violated at " + r;
    case Condition::AbsInequality:
        return "absolute-value inequality violated at " + r;
    }
    return "unknown violation";
}

std::string MembershipVerdict::describe() const
{
    if (member)
        return "member";
    return "not member (" + violated->describe() + ")";
}

AESystem::AESystem(IntervalMatrix a_, IntervalVector b_, std::vector<Quantifier> alpha_, std::vector<Quantifier> beta_)
    : a(std::move(a_)), b(std::move(b_)), alpha(std::move(alpha_)), beta(std::move(beta_))
{
    if (a.rows() != b.size() || alpha.size() != a.rows() * a.cols() || beta.size() != b.size())
        throw DimensionError("AE system shapes disagree");
}

SplitSystem split(const AESystem& ae)
{
    return {zero_where(ae.a, ae.alpha, Quantifier::Exists), zero_where(ae.a, ae.alpha, Quantifier::Forall),
            zero_where(ae.b, ae.beta, Quantifier::Exists), zero_where(ae.b, ae.beta, Quantifier::Forall)};
}

GeneralizedIQSystem as_generalized(const SplitSystem& s)
{
    if (s.a_forall.rows() != s.a_exists.rows() || s.a_forall.cols() != s.a_exists.cols())
        throw DimensionError("split system matrices differ in shape");
    return GeneralizedIQSystem(s.a_forall.rows(), s.a_forall.cols(),
                               {Block{s.a_forall, s.a_exists, s.b_forall, s.b_exists}});
}

GeneralizedIQSystem as_generalized(const AESystem& ae) { return as_generalized(split(ae)); }

SplitSystem single_block(const GeneralizedIQSystem& gen)
{
    if (gen.kappa() != 1)
        throw DimensionError("requires kappa = 1, system has kappa = " + std::to_string(gen.kappa()));
    const Block& b = gen.block(0);
    return {b.a_forall, b.a_exists, b.b_forall, b.b_exists};
}

MembershipVerdict member_intervalform(const GeneralizedIQSystem& gen, std::span<const Rational> x)
{
    require_point(gen.cols(), x);
    const std::size_t m = gen.rows();
    const std::size_t kappa = gen.kappa();

    // Block order 1..kappa, left to right.
    std::vector<IntervalVector> forall_res;
    std::vector<IntervalVector> exists_res;
    for (const Block& blk : gen.blocks()) {
        forall_res.push_back(sub(op_product(blk.a_forall, x), blk.b_forall));
        exists_res.push_back(sub(blk.b_exists, op_product(blk.a_exists, x)));
    }

    std::vector<Rational> forall_width(m);
    std::vector<Rational> exists_width(m);
    for (std::size_t l = 1; l < kappa; ++l) {
        for (std::size_t i = 0; i < m; ++i) {
            forall_width[i] += forall_res[l - 1][i].wid();
            exists_width[i] += exists_res[l - 1][i].wid();
        }
        for (std::size_t i = 0; i < m; ++i)
            if (exists_width[i] < forall_width[i])
                return MembershipVerdict::no({Condition::NestedWidth, i, l});
    }

    IntervalVector lhs(m);
    IntervalVector rhs(m);
    for (std::size_t s = 0; s < kappa; ++s) {
        lhs = add(lhs, forall_res[s]);
        rhs = add(rhs, exists_res[s]);
    }
    for (std::size_t i = 0; i < m; ++i)
        if (!subset(lhs[i], rhs[i]))
            return MembershipVerdict::no({Condition::Inclusion, i, std::nullopt});
    return MembershipVerdict::yes();
}

MembershipVerdict member_absform(const GeneralizedIQSystem& gen, std::span<const Rational> x)
{
    return center_radius_verdict(gen, x, FinalForm::Abs);
}

MembershipVerdict member_twosided(const GeneralizedIQSystem& gen, std::span<const Rational> x)
{
    return center_radius_verdict(gen, x, FinalForm::TwoSided);
}

PointVector absform_margins(const GeneralizedIQSystem& gen, std::span<const Rational> x)
{
    require_point(gen.cols(), x);
    const PointVector abs_x = abs_vec(x);
    PointVector out;
    std::vector<RowSums> sums;
    for (std::size_t i = 0; i < gen.rows(); ++i)
        sums.push_back(row_sums(gen, i, x, abs_x));
    for (std::size_t l = 1; l < gen.kappa(); ++l)
        for (const auto& s : sums)
            out.push_back(s.exists_prefix[l - 1] - s.forall_prefix[l - 1]);
    for (const auto& s : sums)
        out.push_back(s.exists_prefix.back() - s.forall_prefix.back() - abs(s.center));
    return out;
}

MembershipVerdict member_shary(const SplitSystem& s, std::span<const Rational> x)
{
    require_point(s.a_forall.cols(), x);
    const IntervalVector lhs = sub(op_product(s.a_forall, x), s.b_forall);
    const IntervalVector rhs = sub(s.b_exists, op_product(s.a_exists, x));
    if (lhs.size() != rhs.size())
        throw DimensionError("split system row counts differ");
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (!subset(lhs[i], rhs[i]))
            return MembershipVerdict::no({Condition::SharyInclusion, i, std::nullopt});
    return MembershipVerdict::yes();
}

MembershipVerdict member_shary(const AESystem& ae, std::span<const Rational> x) { return member_shary(split(ae), x); }

MembershipVerdict member_rohn(const SplitSystem& s, std::span<const Rational> x)
{
    require_point(s.a_forall.cols(), x);
    const PointVector abs_x = abs_vec(x);
    for (std::size_t i = 0; i < s.a_forall.rows(); ++i) {
        Rational center;
        Rational bound;
        for (std::size_t j = 0; j < x.size(); ++j) {
            center += (s.a_forall(i, j).mid() + s.a_exists(i, j).mid()) * x[j];
            bound += (s.a_exists(i, j).rad() - s.a_forall(i, j).rad()) * abs_x[j];
        }
        center -= s.b_forall[i].mid() + s.b_exists[i].mid();
        bound += s.b_exists[i].rad() - s.b_forall[i].rad();
        if (bound < abs(center))
            return MembershipVerdict::no({Condition::RohnBound, i, std::nullopt});
    }
    return MembershipVerdict::yes();
}

MembershipVerdict member_rohn(const AESystem& ae, std::span<const Rational> x) { return member_rohn(split(ae), x); }

AESystem united_system(const IntervalMatrix& a, const IntervalVector& b)
{
    return AESystem(a, b, std::vector(a.rows() * a.cols(), Quantifier::Exists),
                    std::vector(b.size(), Quantifier::Exists));
}

AESystem tolerable_system(const IntervalMatrix& a, const IntervalVector& b)
{
    return AESystem(a, b, std::vector(a.rows() * a.cols(), Quantifier::Forall),
                    std::vector(b.size(), Quantifier::Exists));
}

AESystem controllable_system(const IntervalMatrix& a, const IntervalVector& b)
{
    return AESystem(a, b, std::vector(a.rows() * a.cols(), Quantifier::Exists),
                    std::vector(b.size(), Quantifier::Forall));
}

MembershipVerdict member_united(const IntervalMatrix& a, const IntervalVector& b, std::span<const Rational> x)
{
    return member_rohn(united_system(a, b), x);
}

MembershipVerdict member_tolerable(const IntervalMatrix& a, const IntervalVector& b, std::span<const Rational> x)
{
    return member_rohn(tolerable_system(a, b), x);
}

MembershipVerdict member_controllable(const IntervalMatrix& a, const IntervalVector& b, std::span<const Rational> x)
{
    return member_rohn(controllable_system(a, b), x);
}

MembershipVerdict member_absineq(const AbsIneqSystem& sys, std::span<const Rational> x)
{
    require_point(sys.c_mat.cols(), x);
    const PointVector cx = mul(sys.c_mat, x);
    const PointVector dx = mul(sys.d_mat, abs_vec(x));
    for (std::size_t i = 0; i < cx.size(); ++i)
        if (dx[i] + sys.d_vec[i] < abs(cx[i] - sys.c_vec[i]))
            return MembershipVerdict::no({Condition::AbsInequality, i, std::nullopt});
    return MembershipVerdict::yes();
}

AESystem ae_from_abs_inequalities(const AbsIneqSystem& sys)
{
    const std::size_t m = sys.c_mat.rows();
    const std::size_t n = sys.c_mat.cols();
    if (sys.d_mat.rows() != m || sys.d_mat.cols() != n || sys.c_vec.size() != m || sys.d_vec.size() != m)
        throw DimensionError("absolute-value system shapes disagree");
    IntervalMatrix a(m, n);
    IntervalVector b(m);
    std::vector<Quantifier> alpha(m * n);
    std::vector<Quantifier> beta(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = Interval::from_center_radius(sys.c_mat(i, j), abs(sys.d_mat(i, j)));
            alpha[i * n + j] = sign_quantifier(sys.d_mat(i, j));
        }
        b[i] = Interval::from_center_radius(sys.c_vec[i], abs(sys.d_vec[i]));
        beta[i] = sign_quantifier(sys.d_vec[i]);
    }
    return AESystem(std::move(a), std::move(b), std::move(alpha), std::move(beta));
}

AbsIneqSystem abs_inequalities_from_split(const SplitSystem& s)
{
    const std::size_t m = s.a_forall.rows();
    const std::size_t n = s.a_forall.cols();
    if (s.a_exists.rows() != m || s.a_exists.cols() != n || s.b_forall.size() != m || s.b_exists.size() != m)
        throw DimensionError("split system shapes disagree");
    AbsIneqSystem out{RationalMatrix(m, n), RationalMatrix(m, n), PointVector(m), PointVector(m)};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.c_mat(i, j) = s.a_forall(i, j).mid() + s.a_exists(i, j).mid();
            out.d_mat(i, j) = s.a_exists(i, j).rad() - s.a_forall(i, j).rad();
        }
        out.c_vec[i] = s.b_forall[i].mid() + s.b_exists[i].mid();
        out.d_vec[i] = s.b_exists[i].rad() - s.b_forall[i].rad();
    }
    return out;
}

AESystem ae_from_split(const SplitSystem& s) { return ae_from_abs_inequalities(abs_inequalities_from_split(s)); }

AbsIneqSystem flatten_abs_inequalities(const GeneralizedIQSystem& gen)
{
    const std::size_t m = gen.rows();
    const std::size_t n = gen.cols();
    const std::size_t kappa = gen.kappa();
    AbsIneqSystem out{RationalMatrix(kappa * m, n), RationalMatrix(kappa * m, n), PointVector(kappa * m),
                      PointVector(kappa * m)};
    RationalMatrix d_run(m, n);
    PointVector dv_run(m);
    for (std::size_t l = 0; l < kappa; ++l) {
        const Block& blk = gen.block(l);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d_run(i, j) += blk.a_exists(i, j).rad() - blk.a_forall(i, j).rad();
                out.d_mat(l * m + i, j) = d_run(i, j);
            }
            dv_run[i] += blk.b_exists[i].rad() - blk.b_forall[i].rad();
            out.d_vec[l * m + i] = dv_run[i];
        }
    }
    const std::size_t last = (kappa - 1) * m;
    for (const Block& blk : gen.blocks())
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                out.c_mat(last + i, j) += blk.a_forall(i, j).mid() + blk.a_exists(i, j).mid();
            out.c_vec[last + i] += blk.b_forall[i].mid() + blk.b_exists[i].mid();
        }
    return out;
}

AESystem flatten_to_ae(const GeneralizedIQSystem& gen) { return ae_from_abs_inequalities(flatten_abs_inequalities(gen)); }

}  // namespace iqlin
