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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iqlin/interval.hpp"

namespace iqlin {

enum class Quantifier : std::uint8_t { Forall, Exists };

[[nodiscard]] constexpr char quantifier_letter(Quantifier q) { return q == Quantifier::Forall ? 'A' : 'E'; }

/// Malformed or inconsistent quantifier prefix.
class PrefixError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A parameter of the system: matrix entry a[row, col] or right-hand side b[row].
/// Indices are zero-based; text forms are one-based.
struct ParamRef {
    enum class Kind : std::uint8_t { Matrix, Rhs };

    Kind kind = Kind::Matrix;
    std::size_t row = 0;
    std::size_t col = 0;  ///< unused for Rhs

    static ParamRef matrix(std::size_t row, std::size_t col) { return {Kind::Matrix, row, col}; }
    static ParamRef rhs(std::size_t row) { return {Kind::Rhs, row, 0}; }

    /// "a[i,j]" or "b[i]", one-based.
    [[nodiscard]] std::string str() const;
    static ParamRef parse(std::string_view text);

    /// Position in the row-major tuple a11..a1n b1 a21 .. bm of an m x n system.
    [[nodiscard]] std::size_t flat_index(std::size_t n) const { return row * (n + 1) + (kind == Kind::Rhs ? n : col); }

    friend bool operator==(const ParamRef&, const ParamRef&) = default;
};

struct Binding {
    ParamRef param;
    Quantifier quantifier = Quantifier::Exists;

    friend bool operator==(const Binding&, const Binding&) = default;
};

/// Quantifier prefix binding every one of the m(n+1) parameters exactly once.
///
/// Bindings are stored OUTERMOST FIRST, which is the reading order of the
/// quantified formula. Block numbering (see BlockBoundaries) runs the other
/// way: block 1 is the innermost. Every conversion between the two lives in
/// prefix.cpp.
class QuantifierPrefix {
public:
    /// Throws PrefixError on duplicate, missing, or out-of-range parameters.
    QuantifierPrefix(std::size_t rows, std::size_t cols, std::vector<Binding> outermost_first);

    /// Whitespace-separated tokens "A a[2,1]" / "E b[3]", outermost first.
    /// Also accepts the symbols ∀ and ∃ as quantifier tokens.
    static QuantifierPrefix parse(std::string_view text, std::size_t rows, std::size_t cols);

    [[nodiscard]] std::string str() const;

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t size() const noexcept { return bindings_.size(); }
    [[nodiscard]] std::span<const Binding> bindings() const noexcept { return bindings_; }
    [[nodiscard]] std::vector<Quantifier> quantifiers() const;

    friend bool operator==(const QuantifierPrefix&, const QuantifierPrefix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Binding> bindings_;
};

enum class BlockShape : std::uint8_t {
    Alternating,  ///< forall...forall exists...exists with exactly one switch
    AllForall,    ///< only allowed for the innermost block
    AllExists,    ///< only allowed for the outermost block
};

/// The unique split of a prefix into AE-blocks.
///
/// Positions are counted innermost-first starting at 1, so cuts[0] == 0,
/// cuts[kappa] == mu, and block s (1-based) covers positions
/// cuts[s-1] + 1 .. cuts[s].
struct BlockBoundaries {
    std::vector<std::size_t> cuts;
    std::vector<BlockShape> shapes;  ///< shapes[s-1] describes block s

    [[nodiscard]] std::size_t kappa() const noexcept { return shapes.size(); }
    [[nodiscard]] std::size_t length() const noexcept { return cuts.empty() ? 0 : cuts.back(); }

    /// Zero-based block index (0 = innermost) of the binding at zero-based
    /// outermost-first position `position`.
    [[nodiscard]] std::size_t block_of(std::size_t position) const;

    friend bool operator==(const BlockBoundaries&, const BlockBoundaries&) = default;
};

[[nodiscard]] BlockBoundaries decompose_ae_blocks(std::span<const Quantifier> outermost_first);
[[nodiscard]] BlockBoundaries decompose_ae_blocks(const QuantifierPrefix& prefix);

/// Quantifier letters of each block, innermost block first, each block read
/// outer to inner (e.g. {"AA", "AE", "EE"}).
[[nodiscard]] std::vector<std::string> block_patterns(std::span<const Quantifier> outermost_first,
                                                      const BlockBoundaries& blocks);

/// Interval system A x = b together with a quantifier prefix over its entries.
class ClassicIQSystem {
public:
    /// Throws DimensionError / PrefixError when A, b and the prefix disagree.
    ClassicIQSystem(IntervalMatrix a, IntervalVector b, QuantifierPrefix prefix);

    [[nodiscard]] const IntervalMatrix& a() const noexcept { return a_; }
    [[nodiscard]] const IntervalVector& b() const noexcept { return b_; }
    [[nodiscard]] const QuantifierPrefix& prefix() const noexcept { return prefix_; }
    [[nodiscard]] std::size_t rows() const noexcept { return a_.rows(); }
    [[nodiscard]] std::size_t cols() const noexcept { return a_.cols(); }

    [[nodiscard]] const Interval& param(const ParamRef& p) const
    {
        return p.kind == ParamRef::Kind::Matrix ? a_(p.row, p.col) : b_[p.row];
    }

    friend bool operator==(const ClassicIQSystem&, const ClassicIQSystem&) = default;

private:
    IntervalMatrix a_;
    IntervalVector b_;
    QuantifierPrefix prefix_;
};

/// One AE-block of a generalized system: the universally and existentially
/// quantified parts of the matrix and right-hand side.
struct Block {
    IntervalMatrix a_forall;
    IntervalMatrix a_exists;
    IntervalVector b_forall;
    IntervalVector b_exists;

    static Block zero(std::size_t rows, std::size_t cols);

    friend bool operator==(const Block&, const Block&) = default;
};

/// Generalized interval-quantifier system: kappa blocks whose pieces need not
/// be disjoint. blocks()[0] is the INNERMOST block; the outermost block's
/// universal part is chosen first.
class GeneralizedIQSystem {
public:
    /// Throws DimensionError on inconsistent shapes or an empty block list.
    GeneralizedIQSystem(std::size_t rows, std::size_t cols, std::vector<Block> innermost_first);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t kappa() const noexcept { return blocks_.size(); }
    [[nodiscard]] std::span<const Block> blocks() const noexcept { return blocks_; }
    [[nodiscard]] const Block& block(std::size_t s) const { return blocks_.at(s); }

    /// Elementwise sum of all 2 kappa matrix pieces / vector pieces.
    [[nodiscard]] IntervalMatrix summed_matrix() const;
    [[nodiscard]] IntervalVector summed_rhs() const;

    friend bool operator==(const GeneralizedIQSystem&, const GeneralizedIQSystem&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Block> blocks_;
};

/// Places every parameter's interval in the slot selected by its block and
/// quantifier; all other slots hold [0, 0].
[[nodiscard]] GeneralizedIQSystem build_tuples(const ClassicIQSystem& system);

struct DisjointnessReport {
    enum class Problem : std::uint8_t { None, Overlap, SumMismatch };

    Problem problem = Problem::None;
    std::optional<ParamRef> where;

    [[nodiscard]] bool ok() const noexcept { return problem == Problem::None; }
    [[nodiscard]] std::string describe() const;
};

/// Checks that at every position at most one of the 2 kappa pieces is nonzero
/// and that the pieces sum to A and b. Reports the first offending position,
/// matrix entries row-major before right-hand side entries.
[[nodiscard]] DisjointnessReport validate_disjoint(const GeneralizedIQSystem& system, const IntervalMatrix& a,
                                                   const IntervalVector& b);

/// Rebuilds a prefix from disjoint tuples: blocks outermost first, universal
/// bindings before existential ones inside each block. Parameters that are
/// [0, 0] in every slot are bound existentially in the innermost block.
/// Throws PrefixError when the tuples overlap.
[[nodiscard]] QuantifierPrefix recompose_prefix(const GeneralizedIQSystem& system);
[[nodiscard]] ClassicIQSystem recompose_system(const GeneralizedIQSystem& system);

}  // namespace iqlin
