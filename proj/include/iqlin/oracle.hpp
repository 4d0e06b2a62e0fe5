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

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>

#include "iqlin/interval.hpp"
#include "iqlin/prefix.hpp"

namespace iqlin {

enum class OracleOutcome : std::uint8_t { MemberCertified, NotMemberCertified, Unknown };

[[nodiscard]] std::string to_string(OracleOutcome outcome);

struct OracleVerdict {
    OracleOutcome outcome = OracleOutcome::Unknown;
    std::uint64_t evaluations = 0;  ///< leaf equation checks performed
};

/// The search would exceed its configured budget.
class OracleCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Brute-force evaluation of a single-block system: every universal parameter
/// is tried at both endpoints and each resulting residual must fall inside the
/// per-row range of the existential side. Never returns Unknown.
///
/// Throws DimensionError when kappa != 1 and OracleCapExceeded when more than
/// `max_forall_params` universal parameters have positive width.
[[nodiscard]] OracleVerdict vertex_oracle(const GeneralizedIQSystem& gen, std::span<const Rational> x,
                                          std::size_t max_forall_params = 20);

struct GameOracleOptions {
    std::size_t grid = 5;                  ///< points per existential parameter, endpoints included
    std::uint64_t node_cap = 1'000'000;    ///< leaf evaluations (and enumerated moves) allowed
};

/// Evaluates the quantified formula as an alternating game, one equation at
/// a time (rows share no parameters, so the formula splits into a conjunction
/// of one-row games).
///
/// Universal moves range over the vertices of their box. Existential moves in
/// every block but the innermost range over a uniform grid; the innermost
/// existential move is exact (its reachable set is an interval whose ends are
/// vertex values).
///
///  * MemberCertified: the gridded game is won. Existential grid choices are
///    genuine moves, and the winning set of accumulated residuals after each
///    block is convex, so winning against every vertex wins against the box.
///  * NotMemberCertified: the game is lost even when every existential move
///    may pick any point of its reachable interval (win sets propagated as
///    intervals, universal moves still restricted to vertices).
///  * Unknown: neither.
///
/// Throws OracleCapExceeded when the search exceeds `node_cap`.
[[nodiscard]] OracleVerdict game_oracle(const GeneralizedIQSystem& gen, std::span<const Rational> x,
                                        const GameOracleOptions& options = {});

/// Deterministic pseudo-random source. Bounded draws are computed from the
/// raw engine output so sequences are identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool bernoulli(double p);

private:
    std::mt19937_64 engine_;
};

struct InstanceSpec {
    std::size_t rows = 1;
    std::size_t cols = 1;
    std::size_t kappa = 1;
    std::int64_t endpoint_bound = 4;     ///< |endpoint| <= bound (and width <= bound)
    std::int64_t denominator_bound = 2;  ///< denominators drawn from 1..bound
    double zero_prob = 0.0;              ///< probability that a slot is [0, 0]
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument for non-positive dimensions or bounds.
    void validate() const;
};

[[nodiscard]] Rational random_rational(Rng& rng, std::int64_t bound, std::int64_t denominator_bound);
[[nodiscard]] Interval random_interval(Rng& rng, const InstanceSpec& spec);
[[nodiscard]] PointVector random_point(Rng& rng, std::size_t n, std::int64_t bound, std::int64_t denominator_bound);

/// Generalized system with every slot of every block drawn independently.
[[nodiscard]] GeneralizedIQSystem random_instance(const InstanceSpec& spec);

/// Classic system whose random prefix decomposes into exactly spec.kappa
/// blocks. Throws std::invalid_argument when m(n+1) is too short for kappa.
[[nodiscard]] ClassicIQSystem random_classic_system(const InstanceSpec& spec);

}  // namespace iqlin
