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

#include "iqlin/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>

namespace iqlin {

namespace {

std::string matrix_text(const IntervalMatrix& a)
{
    std::string out = "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i > 0) out += "; ";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j > 0) out += ' ';
            out += a(i, j).str();
        }
    }
    return out + "]";
}

std::string vector_text(const IntervalVector& b)
{
    std::string out = "[";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i > 0) out += "; ";
        out += b[i].str();
    }
    return out + "]";
}

void print_tuples(const GeneralizedIQSystem& gen, std::ostream& out)
{
    out << "tuples (block 1 is innermost):\n";
    for (std::size_t s = 0; s < gen.kappa(); ++s) {
        const Block& blk = gen.block(s);
        out << "  block " << s + 1 << ":\n";
        out << "    A_forall: " << matrix_text(blk.a_forall) << '\n';
        out << "    A_exists: " << matrix_text(blk.a_exists) << '\n';
        out << "    b_forall: " << vector_text(blk.b_forall) << '\n';
        out << "    b_exists: " << vector_text(blk.b_exists) << '\n';
    }
}

std::string_view shape_name(BlockShape shape)
{
    switch (shape) {
    case BlockShape::Alternating: return "alternating";
    case BlockShape::AllForall: return "all-forall";
    case BlockShape::AllExists: return "all-exists";
    }
    return "unknown";
}

struct MethodResult {
    std::string name;
    std::string verdict;  // "member", "not member" or "unknown"
    std::string detail;
};

std::string oracle_word(OracleOutcome o)
{
    switch (o) {
    case OracleOutcome::MemberCertified: return "member";
    case OracleOutcome::NotMemberCertified: return "not member";
    case OracleOutcome::Unknown: return "unknown";
    }
    return "unknown";
}

MethodResult from_verdict(std::string name, const MembershipVerdict& v)
{
    return {std::move(name), v.member ? "member" : "not member", v.member ? "" : v.violated->describe()};
}

bool single_block_method(const std::string& method) { return method == "shary" || method == "rohn"; }

MethodResult evaluate(const std::string& method, const SystemDocument& doc, const GeneralizedIQSystem& gen,
                      const PointVector& x, const CheckOptions& options)
{
    if (method == "abs") return from_verdict(method, member_absform(gen, x));
    if (method == "interval") return from_verdict(method, member_intervalform(gen, x));
    if (method == "twosided") return from_verdict(method, member_twosided(gen, x));
    if (method == "absineq") return from_verdict(method, member_absineq(std::get<AbsIneqSystem>(doc.system), x));
    if (single_block_method(method)) {
        if (const auto* ae = std::get_if<AESystem>(&doc.system)) {
            return from_verdict(method, method == "shary" ? member_shary(*ae, x) : member_rohn(*ae, x));
        }
        SplitSystem s = single_block(gen);
        return from_verdict(method, method == "shary" ? member_shary(s, x) : member_rohn(s, x));
    }
    if (method == "vertex") {
        auto v = vertex_oracle(gen, x);
        return {method, oracle_word(v.outcome), std::to_string(v.evaluations) + " evaluations"};
    }
    if (method == "oracle") {
        auto v = game_oracle(gen, x, options.oracle);
        return {method, oracle_word(v.outcome), std::to_string(v.evaluations) + " evaluations"};
    }
    throw UsageError("unknown method '" + method + "'");
}

}  // namespace

int run_check(const SystemDocument& doc, const std::vector<PointVector>& points, const CheckOptions& options,
              std::ostream& out, std::ostream& err)
{
    static const std::vector<std::string> known{"abs", "interval", "twosided", "shary", "rohn", "oracle", "all"};
    if (std::find(known.begin(), known.end(), options.method) == known.end()) {
        throw UsageError("unknown method '" + options.method + "' (expected abs, interval, twosided, shary, rohn, "
                         "oracle or all)");
    }
    const GeneralizedIQSystem gen = to_generalized(doc);
    if (single_block_method(options.method) && gen.kappa() != 1) {
        throw UsageError("method " + options.method + " requires kappa = 1, system has kappa = " +
                         std::to_string(gen.kappa()));
    }
    for (const auto& x : points) {
        if (x.size() != gen.cols()) {
            throw UsageError("point " + format_point(x) + " has " + std::to_string(x.size()) +
                             " coordinates, system has " + std::to_string(gen.cols()) + " unknowns");
        }
    }

    std::vector<std::string> methods;
    if (options.method == "all") {
        methods = {"abs", "interval", "twosided"};
        if (gen.kappa() == 1) {
            methods.insert(methods.end(), {"shary", "rohn", "vertex"});
        }
        if (doc.kind() == DocumentKind::AbsIneq) methods.emplace_back("absineq");
        methods.emplace_back("oracle");
    } else {
        methods = {options.method};
    }

    bool all_member = true;
    for (const auto& x : points) {
        std::vector<MethodResult> results;
        std::vector<std::string> skipped;
        for (const auto& m : methods) {
            try {
                results.push_back(evaluate(m, doc, gen, x, options));
            } catch (const OracleCapExceeded& e) {
                if (options.method != "all") throw;
                skipped.push_back(m + " (" + e.what() + ")");
            }
        }
        // Reference verdict: the first decided one.
        std::string verdict = "unknown";
        std::string detail;
        for (const auto& r : results) {
            if (r.verdict != "unknown") {
                verdict = r.verdict;
                detail = r.detail;
                break;
            }
        }
        std::vector<std::string> agreeing;
        std::vector<std::string> undecided;
        for (const auto& r : results) {
            if (r.verdict == "unknown") {
                undecided.push_back(r.name);
            } else if (r.verdict == verdict) {
                agreeing.push_back(r.name);
            } else {
                err << "cross-check failure at x = " << format_point(x) << '\n';
                for (const auto& q : results) {
                    err << "  " << q.name << ": " << q.verdict << (q.detail.empty() ? "" : " (" + q.detail + ")")
                        << '\n';
                }
                err << "system:\n" << emit_document(doc);
                return kExitCrossCheck;
            }
        }

        out << format_point(x) << ": " << verdict;
        if (options.method == "all") {
            out << " [";
            for (std::size_t k = 0; k < agreeing.size(); ++k) out << (k ? " " : "") << agreeing[k];
            out << ']';
            if (!detail.empty()) out << " (" << detail << ')';
            for (const auto& u : undecided) out << "; " << u << " undecided";
            for (const auto& s : skipped) out << "; skipped " << s;
        } else if (!detail.empty()) {
            out << " (" << detail << ')';
        }
        out << '\n';
        if (verdict != "member") all_member = false;
    }
    return all_member ? kExitOk : kExitNotMember;
}

MethodVerdict evaluate_method(const SystemDocument& doc, const PointVector& x, const std::string& method,
                              const GameOracleOptions& oracle)
{
    const GeneralizedIQSystem gen = to_generalized(doc);
    if (x.size() != gen.cols()) {
        throw UsageError("point " + format_point(x) + " has " + std::to_string(x.size()) +
                         " coordinates, system has " + std::to_string(gen.cols()) + " unknowns");
    }
    if ((single_block_method(method) || method == "vertex") && gen.kappa() != 1) {
        throw UsageError("method " + method + " requires kappa = 1, system has kappa = " +
                         std::to_string(gen.kappa()));
    }
    if (method == "absineq" && doc.kind() != DocumentKind::AbsIneq)
        throw UsageError("method absineq requires an absineq document");
    CheckOptions options;
    options.oracle = oracle;
    auto r = evaluate(method, doc, gen, x, options);
    return {std::move(r.verdict), std::move(r.detail)};
}

void run_decompose(const SystemDocument& doc, std::ostream& out)
{
    out << "kind: " << kind_name(doc.kind()) << '\n';
    out << "size: " << doc.rows() << " x " << doc.cols() << '\n';
    if (const auto* sys = std::get_if<ClassicIQSystem>(&doc.system)) {
        const auto quantifiers = sys->prefix().quantifiers();
        const BlockBoundaries blocks = decompose_ae_blocks(quantifiers);
        const auto patterns = block_patterns(quantifiers, blocks);
        out << "prefix: " << sys->prefix().str() << '\n';
        out << "kappa: " << blocks.kappa() << '\n';
        out << "shapes (innermost first): ";
        for (const auto& p : patterns) out << '[' << p << ']';
        out << '\n';
        std::vector<std::string> members(blocks.kappa());
        const auto bindings = sys->prefix().bindings();
        for (std::size_t pos = 0; pos < bindings.size(); ++pos) {
            auto& text = members[blocks.block_of(pos)];
            if (!text.empty()) text += ' ';
            text += std::string(1, quantifier_letter(bindings[pos].quantifier)) + ' ' + bindings[pos].param.str();
        }
        for (std::size_t s = 0; s < blocks.kappa(); ++s) {
            out << "block " << s + 1;
            if (blocks.kappa() > 1 && s == 0) out << " (innermost)";
            if (blocks.kappa() > 1 && s + 1 == blocks.kappa()) out << " (outermost)";
            out << ": " << shape_name(blocks.shapes[s]) << ": " << members[s] << '\n';
        }
        const GeneralizedIQSystem gen = build_tuples(*sys);
        print_tuples(gen, out);
        const auto report = validate_disjoint(gen, sys->a(), sys->b());
        out << "sums reproduce A,b: " << (report.ok() ? "ok" : report.describe()) << '\n';
        return;
    }
    const GeneralizedIQSystem gen = to_generalized(doc);
    out << "kappa: " << gen.kappa() << '\n';
    print_tuples(gen, out);
    const auto report = validate_disjoint(gen, gen.summed_matrix(), gen.summed_rhs());
    if (report.ok()) {
        out << "disjoint split: yes\n";
        out << "recomposed prefix: " << recompose_prefix(gen).str() << '\n';
    } else {
        out << "disjoint split: no (" << report.describe() << ")\n";
    }
}

SystemDocument run_convert(const SystemDocument& doc, const std::string& target, std::uint64_t seed,
                           std::size_t spot_checks)
{
    const GeneralizedIQSystem gen = to_generalized(doc);
    const auto* source_abs = std::get_if<AbsIneqSystem>(&doc.system);
    SystemDocument result{gen};
    if (target == "ae-flatten") {
        result.system = flatten_to_ae(gen);
    } else if (target == "from-absineq") {
        if (source_abs == nullptr) {
            throw UsageError("from-absineq needs an absineq document, got " + std::string(kind_name(doc.kind())));
        }
        result.system = ae_from_abs_inequalities(*source_abs);
    } else if (target == "to-absineq") {
        result.system = source_abs != nullptr ? *source_abs : flatten_abs_inequalities(gen);
    } else {
        throw UsageError("unknown conversion target '" + target + "' (expected ae-flatten, from-absineq or to-absineq)");
    }

    if (parse_document(emit_document(result)) != result) {
        throw CrossCheckFailure("converted document does not survive serialization");
    }
    auto source_member = [&](const PointVector& x) {
        return source_abs != nullptr ? member_absineq(*source_abs, x).member : member_absform(gen, x).member;
    };
    auto target_member = [&](const PointVector& x) {
        if (const auto* ae = std::get_if<AESystem>(&result.system)) return member_rohn(*ae, x).member;
        return member_absineq(std::get<AbsIneqSystem>(result.system), x).member;
    };
    Rng rng(seed);
    for (std::size_t k = 0; k < spot_checks; ++k) {
        PointVector x = k == 0 ? PointVector(gen.cols(), Rational(0)) : random_point(rng, gen.cols(), 4, 4);
        if (source_member(x) != target_member(x)) {
            throw CrossCheckFailure("converted system disagrees with the source at x = " + format_point(x));
        }
    }
    return result;
}

void parse_bounds(const std::string& text, ScanOptions& options)
{
    PointVector b;
    try {
        b = parse_inline_point(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bounds: ") + e.what());
    }
    if (b.size() != 4) throw UsageError("bounds must be x1lo,x1hi,x2lo,x2hi");
    if (!(b[0] < b[1]) || !(b[2] < b[3])) throw UsageError("bounds must satisfy x1lo < x1hi and x2lo < x2hi");
    options.x1_lo = b[0];
    options.x1_hi = b[1];
    options.x2_lo = b[2];
    options.x2_hi = b[3];
}

namespace {

std::size_t scan_threads(std::size_t requested)
{
    if (requested > 0) return requested;
    if (const char* env = std::getenv("IQLIN_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1) throw UsageError("IQLIN_THREADS must be a positive integer");
        return static_cast<std::size_t>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

Rational cell_center(const Rational& lo, const Rational& hi, std::size_t k, std::size_t res)
{
    return lo + (hi - lo) * Rational(static_cast<long long>(2 * k + 1), static_cast<long long>(2 * res));
}

}  // namespace

void run_scan2d(const SystemDocument& doc, const ScanOptions& options, std::ostream& out)
{
    if (doc.cols() != 2) throw UsageError("scan2d needs a system with 2 unknowns, got " + std::to_string(doc.cols()));
    if (options.resolution == 0) throw UsageError("resolution must be positive");
    if (options.format != "csv" && options.format != "svg") {
        throw UsageError("unknown scan format '" + options.format + "' (expected csv or svg)");
    }
    const std::size_t res = options.resolution;
    const AbsFormChecker checker(to_generalized(doc));
    std::vector<Rational> xs(res);
    std::vector<Rational> ys(res);
    for (std::size_t k = 0; k < res; ++k) {
        xs[k] = cell_center(options.x1_lo, options.x1_hi, k, res);
        ys[k] = cell_center(options.x2_lo, options.x2_hi, k, res);
    }

    std::vector<char> member(res * res, 0);
    const std::size_t threads = std::min(scan_threads(options.threads), res);
    auto work = [&](std::size_t first) {
        for (std::size_t r = first; r < res; r += threads) {
            for (std::size_t c = 0; c < res; ++c) {
                const PointVector x{xs[c], ys[r]};
                member[r * res + c] = checker.check(x).member ? 1 : 0;
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    if (options.format == "csv") {
        out << "x1,x2,member\n";
        for (std::size_t r = 0; r < res; ++r) {
            const std::string y = ys[r].str();
            for (std::size_t c = 0; c < res; ++c) {
                out << xs[c].str() << ',' << y << ',' << int(member[r * res + c]) << '\n';
            }
        }
        return;
    }

    const std::size_t px = std::max<std::size_t>(400, res);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << px << "\" viewBox=\"0 0 "
        << res << ' ' << res << "\" shape-rendering=\"crispEdges\">\n";
    out << "<title>x1 in [" << options.x1_lo << ", " << options.x1_hi << "], x2 in [" << options.x2_lo << ", "
        << options.x2_hi << "], " << res << "x" << res << " cell centers</title>\n";
    out << "<rect width=\"" << res << "\" height=\"" << res << "\" fill=\"#ffffff\"/>\n";
    out << "<g fill=\"#1f6fb2\">\n";
    for (std::size_t r = 0; r < res; ++r) {
        const std::size_t y = res - 1 - r;  // x2 grows upwards
        std::size_t c = 0;
        while (c < res) {
            if (member[r * res + c] == 0) {
                ++c;
                continue;
            }
            std::size_t end = c;
            while (end < res && member[r * res + end] != 0) ++end;
            out << "<rect x=\"" << c << "\" y=\"" << y << "\" width=\"" << end - c << "\" height=\"1\"/>\n";
            c = end;
        }
    }
    out << "</g>\n</svg>\n";
}

SystemDocument run_gen(const GenOptions& options)
{
    try {
        if (options.form == "classic") return {random_classic_system(options.spec)};
        if (options.form == "generalized") return {random_instance(options.spec)};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown form '" + options.form + "' (expected classic or generalized)");
}

}  // namespace iqlin
