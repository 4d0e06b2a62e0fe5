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

#include "iqlin/prefix.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace iqlin {

namespace {

std::size_t parse_index(std::string_view digits, std::string_view whole)
{
    if (digits.empty() || digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw PrefixError("malformed parameter '" + std::string(whole) + "'");
    std::size_t v = std::stoul(std::string(digits));
    if (v == 0)
        throw PrefixError("parameter indices are one-based: '" + std::string(whole) + "'");
    return v - 1;
}

}  // namespace

std::string ParamRef::str() const
{
    if (kind == Kind::Rhs)
        return "b[" + std::to_string(row + 1) + "]";
    return "a[" + std::to_string(row + 1) + "," + std::to_string(col + 1) + "]";
}

ParamRef ParamRef::parse(std::string_view text)
{
    if (text.size() < 4 || text[1] != '[' || text.back() != ']')
        throw PrefixError("malformed parameter '" + std::string(text) + "'");
    std::string_view inner = text.substr(2, text.size() - 3);
    if (text[0] == 'b') {
        return rhs(parse_index(inner, text));
    }
    if (text[0] == 'a') {
        auto comma = inner.find(',');
        if (comma == std::string_view::npos)
            throw PrefixError("matrix parameter needs two indices: '" + std::string(text) + "'");
        return matrix(parse_index(inner.substr(0, comma), text), parse_index(inner.substr(comma + 1), text));
    }
    throw PrefixError("unknown parameter kind in '" + std::string(text) + "'");
}

QuantifierPrefix::QuantifierPrefix(std::size_t rows, std::size_t cols, std::vector<Binding> outermost_first)
    : rows_(rows), cols_(cols), bindings_(std::move(outermost_first))
{
    if (rows == 0 || cols == 0)
        throw PrefixError("system dimensions must be positive");
    const std::size_t mu = rows * (cols + 1);
    std::vector<bool> seen(mu, false);
    for (const auto& b : bindings_) {
        const ParamRef& p = b.param;
        if (p.row >= rows || (p.kind == ParamRef::Kind::Matrix && p.col >= cols))
            throw PrefixError("parameter " + p.str() + " out of range for a " + std::to_string(rows) + "x" +
                              std::to_string(cols) + " system");
        std::size_t k = p.flat_index(cols);
        if (seen[k])
            throw PrefixError("duplicate parameter " + p.str());
        seen[k] = true;
    }
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j <= cols; ++j)
            if (!seen[i * (cols + 1) + j]) {
                ParamRef p = j == cols ? ParamRef::rhs(i) : ParamRef::matrix(i, j);
                throw PrefixError("parameter " + p.str() + " is unbound");
            }
}

QuantifierPrefix QuantifierPrefix::parse(std::string_view text, std::size_t rows, std::size_t cols)
{
    std::istringstream in{std::string(text)};
    std::vector<Binding> bindings;
    std::string qtok;
    while (in >> qtok) {
        Quantifier q;
        if (qtok == "A" || qtok == "∀")
            q = Quantifier::Forall;
        else if (qtok == "E" || qtok == "∃")
            q = Quantifier::Exists;
        else
            throw PrefixError("expected quantifier A or E, got '" + qtok + "'");
        std::string ptok;
        if (!(in >> ptok))
            throw PrefixError("quantifier '" + qtok + "' is missing its parameter");
        bindings.push_back({ParamRef::parse(ptok), q});
    }
    return QuantifierPrefix(rows, cols, std::move(bindings));
}

std::string QuantifierPrefix::str() const
{
    std::string out;
    for (const auto& b : bindings_) {
        if (!out.empty())
            out += ' ';
        out += quantifier_letter(b.quantifier);
        out += ' ';
        out += b.param.str();
    }
    return out;
}

std::vector<Quantifier> QuantifierPrefix::quantifiers() const
{
    std::vector<Quantifier> out;
    out.reserve(bindings_.size());
    for (const auto& b : bindings_)
        out.push_back(b.quantifier);
    return out;
}

std::size_t BlockBoundaries::block_of(std::size_t position) const
{
    const std::size_t mu = length();
    if (position >= mu)
        throw std::out_of_range("prefix position out of range");
    const std::size_t inner_pos = mu - position;  // one-based, innermost first
    auto it = std::lower_bound(cuts.begin() + 1, cuts.end(), inner_pos);
    return static_cast<std::size_t>(it - cuts.begin()) - 1;
}

BlockBoundaries decompose_ae_blocks(std::span<const Quantifier> q)
{
    // Scan outer to inner: an optional leading run of E forms the outermost
    // block, then every run of A followed by a run of E is one block, and a
    // trailing run of A forms the innermost block.
    std::vector<std::pair<std::size_t, BlockShape>> outer_first;
    std::size_t i = 0;
    const std::size_t mu = q.size();
    if (i < mu && q[i] == Quantifier::Exists) {
        std::size_t start = i;
        while (i < mu && q[i] == Quantifier::Exists)
            ++i;
        outer_first.emplace_back(i - start, BlockShape::AllExists);
    }
    while (i < mu) {
        std::size_t start = i;
        while (i < mu && q[i] == Quantifier::Forall)
            ++i;
        if (i == mu) {
            outer_first.emplace_back(i - start, BlockShape::AllForall);
            break;
        }
        while (i < mu && q[i] == Quantifier::Exists)
            ++i;
        outer_first.emplace_back(i - start, BlockShape::Alternating);
    }

    BlockBoundaries out;
    out.cuts.push_back(0);
    for (auto it = outer_first.rbegin(); it != outer_first.rend(); ++it) {
        out.cuts.push_back(out.cuts.back() + it->first);
        out.shapes.push_back(it->second);
    }
    return out;
}

BlockBoundaries decompose_ae_blocks(const QuantifierPrefix& prefix)
{
    auto q = prefix.quantifiers();
    return decompose_ae_blocks(q);
}

std::vector<std::string> block_patterns(std::span<const Quantifier> q, const BlockBoundaries& blocks)
{
    const std::size_t mu = q.size();
    std::vector<std::string> out(blocks.kappa());
    for (std::size_t s = 0; s < blocks.kappa(); ++s) {
        // innermost-first positions cuts[s]+1 .. cuts[s+1] map to outermost-first
        // indices mu - cuts[s+1] .. mu - cuts[s] - 1
        for (std::size_t p = mu - blocks.cuts[s + 1]; p < mu - blocks.cuts[s]; ++p)
            out[s] += quantifier_letter(q[p]);
    }
    return out;
}

ClassicIQSystem::ClassicIQSystem(IntervalMatrix a, IntervalVector b, QuantifierPrefix prefix)
    : a_(std::move(a)), b_(std::move(b)), prefix_(std::move(prefix))
{
    if (a_.rows() != b_.size())
        throw DimensionError("matrix has " + std::to_string(a_.rows()) + " rows but right-hand side has " +
                             std::to_string(b_.size()) + " entries");
    if (prefix_.rows() != a_.rows() || prefix_.cols() != a_.cols())
        throw PrefixError("prefix dimensions do not match the system");
}

Block Block::zero(std::size_t rows, std::size_t cols)
{
    return {IntervalMatrix(rows, cols), IntervalMatrix(rows, cols), IntervalVector(rows), IntervalVector(rows)};
}

GeneralizedIQSystem::GeneralizedIQSystem(std::size_t rows, std::size_t cols, std::vector<Block> innermost_first)
    : rows_(rows), cols_(cols), blocks_(std::move(innermost_first))
{
    if (blocks_.empty())
        throw DimensionError("a generalized system needs at least one block");
    if (rows == 0 || cols == 0)
        throw DimensionError("system dimensions must be positive");
    for (const auto& blk : blocks_) {
        for (const IntervalMatrix* m : {&blk.a_forall, &blk.a_exists})
            if (m->rows() != rows || m->cols() != cols)
                throw DimensionError("block matrix is not " + std::to_string(rows) + "x" + std::to_string(cols));
        for (const IntervalVector* v : {&blk.b_forall, &blk.b_exists})
            if (v->size() != rows)
                throw DimensionError("block vector length is not " + std::to_string(rows));
    }
}

IntervalMatrix GeneralizedIQSystem::summed_matrix() const
{
    IntervalMatrix sum(rows_, cols_);
    for (const auto& blk : blocks_)
        sum = add(add(sum, blk.a_forall), blk.a_exists);
    return sum;
}

IntervalVector GeneralizedIQSystem::summed_rhs() const
{
    IntervalVector sum(rows_);
    for (const auto& blk : blocks_)
        sum = add(add(sum, blk.b_forall), blk.b_exists);
    return sum;
}

GeneralizedIQSystem build_tuples(const ClassicIQSystem& system)
{
    const auto& prefix = system.prefix();
    const BlockBoundaries blocks = decompose_ae_blocks(prefix);
    std::vector<Block> out(blocks.kappa(), Block::zero(system.rows(), system.cols()));
    auto bindings = prefix.bindings();
    for (std::size_t p = 0; p < bindings.size(); ++p) {
        const Binding& b = bindings[p];
        Block& blk = out[blocks.block_of(p)];
        const bool forall = b.quantifier == Quantifier::Forall;
        if (b.param.kind == ParamRef::Kind::Matrix)
            (forall ? blk.a_forall : blk.a_exists)(b.param.row, b.param.col) = system.param(b.param);
        else
            (forall ? blk.b_forall : blk.b_exists)[b.param.row] = system.param(b.param);
    }
    return GeneralizedIQSystem(system.rows(), system.cols(), std::move(out));
}

std::string DisjointnessReport::describe() const
{
    switch (problem) {
    case Problem::None:
        return "ok";
    case Problem::Overlap:
        return "more than one nonzero piece at " + where->str();
    case Problem::SumMismatch:
        return "pieces do not sum to the system entry at " + where->str();
    }
    return "unknown";
}

DisjointnessReport validate_disjoint(const GeneralizedIQSystem& system, const IntervalMatrix& a, const IntervalVector& b)
{
    if (a.rows() != system.rows() || a.cols() != system.cols() || b.size() != system.rows())
        throw DimensionError("system shape does not match the tuples");

    auto check = [&](const ParamRef& p, auto&& piece_of, const Interval& target) -> DisjointnessReport {
        int nonzero = 0;
        Interval sum;
        for (const auto& blk : system.blocks()) {
            for (const Interval* piece : piece_of(blk)) {
                if (!piece->is_zero())
                    ++nonzero;
                sum = add(sum, *piece);
            }
        }
        if (nonzero > 1)
            return {DisjointnessReport::Problem::Overlap, p};
        if (sum != target)
            return {DisjointnessReport::Problem::SumMismatch, p};
        return {};
    };

    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            auto r = check(
                ParamRef::matrix(i, j),
                [&](const Block& blk) { return std::array{&blk.a_forall(i, j), &blk.a_exists(i, j)}; }, a(i, j));
            if (!r.ok())
                return r;
        }
    for (std::size_t i = 0; i < b.size(); ++i) {
        auto r = check(
            ParamRef::rhs(i), [&](const Block& blk) { return std::array{&blk.b_forall[i], &blk.b_exists[i]}; }, b[i]);
        if (!r.ok())
            return r;
    }
    return {};
}

QuantifierPrefix recompose_prefix(const GeneralizedIQSystem& system)
{
    const IntervalMatrix a = system.summed_matrix();
    const IntervalVector b = system.summed_rhs();
    if (auto report = validate_disjoint(system, a, b); !report.ok())
        throw PrefixError("tuples are not a disjoint split: " + report.describe());

    const std::size_t m = system.rows();
    const std::size_t n = system.cols();
    std::vector<Binding> bindings;
    std::vector<bool> placed(m * (n + 1), false);

    auto emit = [&](const Block& blk, Quantifier q) {
        const bool forall = q == Quantifier::Forall;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                if (!(forall ? blk.a_forall : blk.a_exists)(i, j).is_zero()) {
                    bindings.push_back({ParamRef::matrix(i, j), q});
                    placed[i * (n + 1) + j] = true;
                }
            if (!(forall ? blk.b_forall : blk.b_exists)[i].is_zero()) {
                bindings.push_back({ParamRef::rhs(i), q});
                placed[i * (n + 1) + n] = true;
            }
        }
    };
    for (std::size_t s = system.kappa(); s-- > 0;) {
        emit(system.block(s), Quantifier::Forall);
        emit(system.block(s), Quantifier::Exists);
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            if (!placed[i * (n + 1) + j])
                bindings.push_back({j == n ? ParamRef::rhs(i) : ParamRef::matrix(i, j), Quantifier::Exists});
    return QuantifierPrefix(m, n, std::move(bindings));
}

ClassicIQSystem recompose_system(const GeneralizedIQSystem& system)
{
    return ClassicIQSystem(system.summed_matrix(), system.summed_rhs(), recompose_prefix(system));
}

}  // namespace iqlin
