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

#include "iqlin/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace iqlin {

std::string to_string(OracleOutcome outcome)
{
    switch (outcome) {
    case OracleOutcome::MemberCertified: return "member";
    case OracleOutcome::NotMemberCertified: return "not-member";
    case OracleOutcome::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

void require_point(const GeneralizedIQSystem& gen, std::span<const Rational> x)
{
    if (x.size() != gen.cols()) {
        throw DimensionError("point has " + std::to_string(x.size()) + " coordinates, system has " +
                             std::to_string(gen.cols()) + " columns");
    }
}

// A parameter's contribution coef * value to the row residual; value ranges
// over `range`.
struct Term {
    Interval range;
    Rational coef;

    [[nodiscard]] Rational at(const Rational& value) const { return coef * value; }
    [[nodiscard]] Interval image() const
    {
        Rational a = coef * range.lo();
        Rational b = coef * range.hi();
        return a <= b ? Interval(a, b) : Interval(b, a);
    }
};

// Row i residual is sum_j A_ij x_j - b_i; collects the non-trivial terms of
// one piece pair.
std::vector<Term> row_terms(const IntervalMatrix& a, const IntervalVector& b, std::size_t i,
                            std::span<const Rational> x)
{
    std::vector<Term> terms;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!x[j].is_zero() && !a(i, j).is_zero()) terms.push_back({a(i, j), x[j]});
    }
    if (!b[i].is_zero()) terms.push_back({b[i], Rational(-1)});
    return terms;
}

Rational fixed_part(const std::vector<Term>& terms)
{
    Rational sum;
    for (const auto& t : terms) {
        if (t.range.is_degenerate()) sum += t.at(t.range.lo());
    }
    return sum;
}

Interval hull(const std::vector<Term>& terms)
{
    Interval sum;
    for (const auto& t : terms) sum = sum + t.image();
    return sum;
}

void charge(std::uint64_t& counter, std::uint64_t amount, std::uint64_t cap)
{
    if (amount > cap || counter > cap - amount) {
        throw OracleCapExceeded("oracle search exceeds the node cap of " + std::to_string(cap));
    }
    counter += amount;
}

// Distinct values of sum(coef * v) where each non-degenerate term takes one of
// `points` evenly spaced values of its range (2 points = vertices).
std::vector<Rational> enumerate_values(const std::vector<Term>& terms, std::size_t points, std::uint64_t& counter,
                                       std::uint64_t cap)
{
    std::set<Rational> values{fixed_part(terms)};
    for (const auto& t : terms) {
        if (t.range.is_degenerate()) continue;
        std::vector<Rational> choices;
        choices.reserve(points);
        for (std::size_t k = 0; k < points; ++k) {
            Rational v = t.range.lo() + t.range.wid() * Rational(static_cast<long long>(k)) /
                                            Rational(static_cast<long long>(points - 1));
            choices.push_back(t.at(v));
        }
        charge(counter, values.size() * choices.size(), cap);
        std::set<Rational> next;
        for (const auto& base : values) {
            for (const auto& c : choices) next.insert(base + c);
        }
        values = std::move(next);
    }
    return {values.begin(), values.end()};
}

struct RowGame {
    std::vector<std::vector<Rational>> forall_moves;  // per block, innermost first
    std::vector<Interval> exists_hull;                // exact reachable set per block
    std::vector<std::vector<Rational>> exists_grid;   // gridded moves per block (unused for block 0)
    std::vector<std::optional<Interval>> win;         // win[s]: accumulated values from which
                                                      // blocks s..0 can still be won; nullopt = empty
};

// win(-1) = {0}; win(s) = intersection over universal r of (win(s-1) - r - hull_s).
void propagate(RowGame& g, std::uint64_t& counter, std::uint64_t cap)
{
    std::optional<Interval> w = Interval::zero();
    g.win.assign(g.forall_moves.size(), std::nullopt);
    for (std::size_t s = 0; s < g.forall_moves.size(); ++s) {
        if (w) {
            const Interval& h = g.exists_hull[s];
            std::optional<Rational> lo;
            std::optional<Rational> hi;
            charge(counter, g.forall_moves[s].size(), cap);
            for (const auto& r : g.forall_moves[s]) {
                Rational l = w->lo() - r - h.hi();
                Rational u = w->hi() - r - h.lo();
                if (!lo || *lo < l) lo = l;
                if (!hi || u < *hi) hi = u;
            }
            w = *lo <= *hi ? std::optional<Interval>(Interval(*lo, *hi)) : std::nullopt;
        }
        g.win[s] = w;
    }
}

class GridSearch {
public:
    GridSearch(const RowGame& g, std::uint64_t& counter, std::uint64_t cap)
        : g_(g), counter_(counter), cap_(cap), memo_(g.forall_moves.size())
    {
    }

    // Can the existential player win blocks s..0 from accumulated value c?
    bool wins(std::size_t s, const Rational& c)
    {
        auto& memo = memo_[s];
        if (auto it = memo.find(c); it != memo.end()) return it->second;
        bool result = true;
        for (const auto& r : g_.forall_moves[s]) {
            Rational cr = c + r;
            bool answered = false;
            if (s == 0) {
                charge(counter_, 1, cap_);
                answered = g_.exists_hull[0].contains(-cr);
            } else {
                const auto& below = g_.win[s - 1];
                for (const auto& t : g_.exists_grid[s]) {
                    Rational next = cr + t;
                    if (!below || !below->contains(next)) continue;
                    if (wins(s - 1, next)) {
                        answered = true;
                        break;
                    }
                }
            }
            if (!answered) {
                result = false;
                break;
            }
        }
        memo.emplace(c, result);
        return result;
    }

private:
    const RowGame& g_;
    std::uint64_t& counter_;
    std::uint64_t cap_;
    std::vector<std::map<Rational, bool>> memo_;
};

}  // namespace

OracleVerdict vertex_oracle(const GeneralizedIQSystem& gen, std::span<const Rational> x,
                            std::size_t max_forall_params)
{
    if (gen.kappa() != 1) {
        throw DimensionError("vertex oracle requires kappa = 1, got " + std::to_string(gen.kappa()));
    }
    require_point(gen, x);
    const Block& blk = gen.block(0);
    const std::size_t m = gen.rows();

    // Existential range of each row residual.
    std::vector<Interval> reach(m);
    std::vector<Rational> base(m);
    struct Free {
        std::size_t row;
        Rational lo_value;
        Rational hi_value;
    };
    std::vector<Free> free;
    for (std::size_t i = 0; i < m; ++i) {
        reach[i] = hull(row_terms(blk.a_exists, blk.b_exists, i, x));
        for (const auto& t : row_terms(blk.a_forall, blk.b_forall, i, x)) {
            if (t.range.is_degenerate()) {
                base[i] += t.at(t.range.lo());
            } else {
                free.push_back({i, t.at(t.range.lo()), t.at(t.range.hi())});
            }
        }
    }
    std::size_t forall_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < gen.cols(); ++j) forall_count += blk.a_forall(i, j).is_degenerate() ? 0 : 1;
        forall_count += blk.b_forall[i].is_degenerate() ? 0 : 1;
    }
    if (forall_count > max_forall_params) {
        throw OracleCapExceeded("vertex oracle limited to " + std::to_string(max_forall_params) +
                                " universal parameters, system has " + std::to_string(forall_count));
    }

    // A universal parameter whose column has x_j = 0 was dropped from `free`;
    // it contributes nothing either way. Enumerate the remaining vertices.
    OracleVerdict verdict{OracleOutcome::MemberCertified, 0};
    const std::uint64_t combos = std::uint64_t{1} << free.size();
    std::vector<Rational> residual(m);
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
        residual = base;
        for (std::size_t k = 0; k < free.size(); ++k) {
            residual[free[k].row] += ((mask >> k) & 1U) != 0 ? free[k].hi_value : free[k].lo_value;
        }
        for (std::size_t i = 0; i < m; ++i) {
            ++verdict.evaluations;
            // residual + t = 0 for some t in reach
            if (!reach[i].contains(-residual[i])) {
                verdict.outcome = OracleOutcome::NotMemberCertified;
                return verdict;
            }
        }
    }
    return verdict;
}

OracleVerdict game_oracle(const GeneralizedIQSystem& gen, std::span<const Rational> x,
                          const GameOracleOptions& options)
{
    require_point(gen, x);
    if (options.grid < 2) throw std::invalid_argument("grid must have at least 2 points, got " +
                                                      std::to_string(options.grid));
    const std::size_t kappa = gen.kappa();
    std::uint64_t counter = 0;
    const std::uint64_t cap = options.node_cap;

    std::vector<RowGame> games(gen.rows());
    for (std::size_t i = 0; i < gen.rows(); ++i) {
        RowGame& g = games[i];
        for (std::size_t s = 0; s < kappa; ++s) {
            const Block& blk = gen.block(s);
            auto forall_terms = row_terms(blk.a_forall, blk.b_forall, i, x);
            auto exists_terms = row_terms(blk.a_exists, blk.b_exists, i, x);
            g.forall_moves.push_back(enumerate_values(forall_terms, 2, counter, cap));
            g.exists_hull.push_back(hull(exists_terms));
            g.exists_grid.push_back(s == 0 ? std::vector<Rational>{}
                                           : enumerate_values(exists_terms, options.grid, counter, cap));
        }
        propagate(g, counter, cap);
        const auto& top = g.win[kappa - 1];
        if (!top || !top->contains(Rational(0))) return {OracleOutcome::NotMemberCertified, counter};
    }

    for (const auto& g : games) {
        GridSearch search(g, counter, cap);
        if (!search.wins(kappa - 1, Rational(0))) return {OracleOutcome::Unknown, counter};
    }
    return {OracleOutcome::MemberCertified, counter};
}

// --- Random instances -------------------------------------------------------

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi)
{
    if (lo > hi) throw std::invalid_argument("empty range for uniform draw");
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(next());
    const std::uint64_t range = span + 1;
    // Rejection sampling on the top of the 64-bit range.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + v % range);
}

bool Rng::bernoulli(double p)
{
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

void InstanceSpec::validate() const
{
    if (rows == 0 || cols == 0) throw std::invalid_argument("instance dimensions must be positive");
    if (kappa == 0) throw std::invalid_argument("kappa must be at least 1");
    if (endpoint_bound < 1) throw std::invalid_argument("endpoint bound must be at least 1");
    if (denominator_bound < 1) throw std::invalid_argument("denominator bound must be at least 1");
    if (!(zero_prob >= 0.0 && zero_prob <= 1.0)) throw std::invalid_argument("zero probability must lie in [0, 1]");
}

Rational random_rational(Rng& rng, std::int64_t bound, std::int64_t denominator_bound)
{
    const std::int64_t den = rng.uniform(1, denominator_bound);
    return {rng.uniform(-bound * den, bound * den), den};
}

Interval random_interval(Rng& rng, const InstanceSpec& spec)
{
    if (rng.bernoulli(spec.zero_prob)) return Interval::zero();
    Rational lo = random_rational(rng, spec.endpoint_bound, spec.denominator_bound);
    const std::int64_t den = rng.uniform(1, spec.denominator_bound);
    Rational width(rng.uniform(0, spec.endpoint_bound * den), den);
    return {lo, lo + width};
}

PointVector random_point(Rng& rng, std::size_t n, std::int64_t bound, std::int64_t denominator_bound)
{
    PointVector x;
    x.reserve(n);
    for (std::size_t j = 0; j < n; ++j) x.push_back(random_rational(rng, bound, denominator_bound));
    return x;
}

namespace {

IntervalMatrix random_matrix(Rng& rng, const InstanceSpec& spec)
{
    IntervalMatrix a(spec.rows, spec.cols);
    for (std::size_t i = 0; i < spec.rows; ++i) {
        for (std::size_t j = 0; j < spec.cols; ++j) a(i, j) = random_interval(rng, spec);
    }
    return a;
}

IntervalVector random_vector(Rng& rng, const InstanceSpec& spec)
{
    IntervalVector b(spec.rows);
    for (std::size_t i = 0; i < spec.rows; ++i) b[i] = random_interval(rng, spec);
    return b;
}

}  // namespace

GeneralizedIQSystem random_instance(const InstanceSpec& spec)
{
    spec.validate();
    Rng rng(spec.seed);
    std::vector<Block> blocks;
    blocks.reserve(spec.kappa);
    for (std::size_t s = 0; s < spec.kappa; ++s) {
        Block blk;
        blk.a_forall = random_matrix(rng, spec);
        blk.a_exists = random_matrix(rng, spec);
        blk.b_forall = random_vector(rng, spec);
        blk.b_exists = random_vector(rng, spec);
        blocks.push_back(std::move(blk));
    }
    return {spec.rows, spec.cols, std::move(blocks)};
}

ClassicIQSystem random_classic_system(const InstanceSpec& spec)
{
    spec.validate();
    Rng rng(spec.seed);
    const std::size_t mu = spec.rows * (spec.cols + 1);
    const std::size_t kappa = spec.kappa;

    // Quantifier string, outermost first, with exactly kappa blocks.
    std::vector<Quantifier> qs;
    if (kappa == 1) {
        const auto foralls = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(mu)));
        qs.assign(foralls, Quantifier::Forall);
        qs.resize(mu, Quantifier::Exists);
    } else {
        if (mu < 2 * kappa - 2) {
            throw std::invalid_argument("a system with " + std::to_string(mu) + " parameters cannot have " +
                                        std::to_string(kappa) + " blocks");
        }
        // Outermost may be all-exists, innermost may be all-forall; the rest
        // alternate and need two slots each.
        std::vector<BlockShape> shapes(kappa, BlockShape::Alternating);
        std::vector<std::size_t> length(kappa, 2);
        std::size_t used = 2 * kappa;
        auto shrink = [&](std::size_t k, BlockShape shape) {
            shapes[k] = shape;
            length[k] = 1;
            --used;
        };
        if (rng.bernoulli(0.5)) shrink(0, BlockShape::AllExists);
        if (rng.bernoulli(0.5)) shrink(kappa - 1, BlockShape::AllForall);
        while (used > mu) {
            if (shapes[0] == BlockShape::Alternating) {
                shrink(0, BlockShape::AllExists);
            } else {
                shrink(kappa - 1, BlockShape::AllForall);
            }
        }
        for (; used < mu; ++used) ++length[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(kappa) - 1))];
        for (std::size_t k = 0; k < kappa; ++k) {
            std::size_t foralls = 0;
            switch (shapes[k]) {
            case BlockShape::AllExists: foralls = 0; break;
            case BlockShape::AllForall: foralls = length[k]; break;
            case BlockShape::Alternating:
                foralls = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(length[k]) - 1));
                break;
            }
            qs.insert(qs.end(), foralls, Quantifier::Forall);
            qs.insert(qs.end(), length[k] - foralls, Quantifier::Exists);
        }
    }

    std::vector<ParamRef> params;
    params.reserve(mu);
    for (std::size_t i = 0; i < spec.rows; ++i) {
        for (std::size_t j = 0; j < spec.cols; ++j) params.push_back(ParamRef::matrix(i, j));
        params.push_back(ParamRef::rhs(i));
    }
    for (std::size_t k = mu; k > 1; --k) {
        std::swap(params[k - 1], params[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(k) - 1))]);
    }
    std::vector<Binding> bindings;
    bindings.reserve(mu);
    for (std::size_t k = 0; k < mu; ++k) bindings.push_back({params[k], qs[k]});

    IntervalMatrix a = random_matrix(rng, spec);
    IntervalVector b = random_vector(rng, spec);
    return {std::move(a), std::move(b), QuantifierPrefix(spec.rows, spec.cols, std::move(bindings))};
}

}  // namespace iqlin
