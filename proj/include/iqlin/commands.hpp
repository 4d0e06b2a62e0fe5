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
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "iqlin/document.hpp"
#include "iqlin/oracle.hpp"

namespace iqlin {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitNotMember = 1,
    kExitUsage = 2,
    kExitCrossCheck = 3,
};

/// A command was given arguments it cannot act on (wrong method for the
/// system, n != 2 for a scan, ...). Maps to kExitUsage.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two computations that must agree did not. Maps to kExitCrossCheck.
class CrossCheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CheckOptions {
    std::string method = "abs";  ///< abs, interval, twosided, shary, rohn, oracle or all
    GameOracleOptions oracle;
};

/// Prints one line per point and returns the exit code: kExitOk when every
/// point is a member, kExitNotMember otherwise (an oracle "unknown" counts as
/// not member), kExitCrossCheck when method "all" sees a disagreement (a
/// report goes to `err`). Throws UsageError for inapplicable methods.
int run_check(const SystemDocument& doc, const std::vector<PointVector>& points, const CheckOptions& options,
              std::ostream& out, std::ostream& err);

struct MethodVerdict {
    std::string verdict;  ///< "member", "not member" or "unknown" (oracles only)
    std::string detail;   ///< violated condition, or the oracle's evaluation count
};

/// One membership method on one point: abs, interval, twosided, shary, rohn,
/// vertex, absineq or oracle. Throws UsageError when the method does not apply.
[[nodiscard]] MethodVerdict evaluate_method(const SystemDocument& doc, const PointVector& x,
                                            const std::string& method, const GameOracleOptions& oracle = {});

/// Block structure and tuples of a system.
void run_decompose(const SystemDocument& doc, std::ostream& out);

/// "ae-flatten": any system to the equivalent AE system (one AE block per
/// original block, stacked). "from-absineq": absolute-value system to AE.
/// "to-absineq": any system to the stacked absolute-value form.
/// Membership of the result is compared with the source on `spot_checks`
/// seeded random points; a mismatch throws CrossCheckFailure.
SystemDocument run_convert(const SystemDocument& doc, const std::string& target, std::uint64_t seed = 1,
                           std::size_t spot_checks = 10);

struct ScanOptions {
    Rational x1_lo = Rational(-5);
    Rational x1_hi = Rational(5);
    Rational x2_lo = Rational(-5);
    Rational x2_hi = Rational(5);
    std::size_t resolution = 100;
    std::string format = "csv";  ///< csv or svg
    std::size_t threads = 0;     ///< 0: IQLIN_THREADS or the hardware concurrency
};

/// Parses "x1lo,x1hi,x2lo,x2hi" into the bounds of `options`.
void parse_bounds(const std::string& text, ScanOptions& options);

/// Membership of the centers of a resolution x resolution grid of cells.
/// CSV lists "x1,x2,member" rows with x2 in the outer loop; SVG draws member
/// cells. Output does not depend on the thread count.
void run_scan2d(const SystemDocument& doc, const ScanOptions& options, std::ostream& out);

struct GenOptions {
    InstanceSpec spec;
    std::string form = "classic";  ///< classic or generalized
};

[[nodiscard]] SystemDocument run_gen(const GenOptions& options);

}  // namespace iqlin
