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

// iqlin: membership tests for interval-quantifier linear systems.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iqlin/commands.hpp"

namespace {

using namespace iqlin;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes to `path`, or stdout when it is empty or "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn)
{
    if (path.empty() || path == "-") {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    fn(out);
    if (!out) throw UsageError("write to " + path + " failed");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact membership tests for interval systems of linear equations with quantified parameters"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "iqlin 0.1.0");

    std::string system_path;
    std::string output_path;

    // check
    auto* check = app.add_subcommand("check", "Test whether points belong to the solution set");
    std::string points_path;
    std::vector<std::string> inline_points;
    CheckOptions check_opts;
    check->add_option("system", system_path, "System document (JSON)")->required();
    check->add_option("--points", points_path, "JSON file with points");
    check->add_option("--point,-x", inline_points, "Point as comma-separated rationals, e.g. 1/2,3");
    check->add_option("--method", check_opts.method, "abs, interval, twosided, shary, rohn, oracle or all")
        ->capture_default_str();
    check->add_option("--grid", check_opts.oracle.grid, "Oracle grid points per existential parameter")
        ->capture_default_str();
    check->add_option("--node-cap", check_opts.oracle.node_cap, "Oracle search budget")->capture_default_str();

    // decompose
    auto* decompose = app.add_subcommand("decompose", "Print the block structure and tuples of a system");
    decompose->add_option("system", system_path, "System document (JSON)")->required();
    decompose->add_option("--output,-o", output_path, "Report file (default stdout)");

    // convert
    auto* convert = app.add_subcommand("convert", "Convert a system to an equivalent representation");
    std::string target;
    std::uint64_t convert_seed = 1;
    convert->add_option("system", system_path, "System document (JSON)")->required();
    convert->add_option("--to", target, "ae-flatten, from-absineq or to-absineq")->required();
    convert->add_option("--seed", convert_seed, "Seed of the spot-check points")->capture_default_str();
    convert->add_option("--output,-o", output_path, "Output document (default stdout)");

    // scan2d
    auto* scan = app.add_subcommand("scan2d", "Sample membership on a grid over a 2-D box");
    ScanOptions scan_opts;
    std::string bounds = "-5,5,-5,5";
    scan->add_option("system", system_path, "System document with two unknowns")->required();
    scan->add_option("--bounds", bounds, "x1lo,x1hi,x2lo,x2hi")->capture_default_str();
    scan->add_option("--resolution", scan_opts.resolution, "Cells per axis")->capture_default_str();
    scan->add_option("--format", scan_opts.format, "csv or svg")->capture_default_str();
    scan->add_option("--threads", scan_opts.threads, "Worker threads (0: IQLIN_THREADS or all cores)");
    scan->add_option("--output,-o", output_path, "Output file (default stdout)");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random system");
    GenOptions gen_opts;
    gen->add_option("--rows,-m", gen_opts.spec.rows, "Equations")->capture_default_str();
    gen->add_option("--cols,-n", gen_opts.spec.cols, "Unknowns")->capture_default_str();
    gen->add_option("--kappa,-k", gen_opts.spec.kappa, "Number of blocks")->capture_default_str();
    gen->add_option("--bound", gen_opts.spec.endpoint_bound, "Endpoint magnitude bound")->capture_default_str();
    gen->add_option("--den", gen_opts.spec.denominator_bound, "Denominator bound")->capture_default_str();
    gen->add_option("--zero-prob", gen_opts.spec.zero_prob, "Probability of a [0, 0] entry")->capture_default_str();
    gen->add_option("--seed", gen_opts.spec.seed, "Random seed")->capture_default_str();
    gen->add_option("--form", gen_opts.form, "classic or generalized")->capture_default_str();
    gen->add_option("--output,-o", output_path, "Output document (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*check) {
            const SystemDocument doc = load_document(system_path);
            std::vector<PointVector> points;
            if (!points_path.empty()) points = parse_points(read_file(points_path), doc.cols());
            for (const auto& p : inline_points) points.push_back(parse_inline_point(p));
            if (points.empty()) throw UsageError("no points given (use --points or --point)");
            return run_check(doc, points, check_opts, std::cout, std::cerr);
        }
        if (*decompose) {
            const SystemDocument doc = load_document(system_path);
            with_output(output_path, [&](std::ostream& out) { run_decompose(doc, out); });
            return kExitOk;
        }
        if (*convert) {
            const SystemDocument doc = load_document(system_path);
            const SystemDocument result = run_convert(doc, target, convert_seed);
            with_output(output_path, [&](std::ostream& out) { out << emit_document(result); });
            return kExitOk;
        }
        if (*scan) {
            parse_bounds(bounds, scan_opts);
            const SystemDocument doc = load_document(system_path);
            with_output(output_path, [&](std::ostream& out) { run_scan2d(doc, scan_opts, out); });
            return kExitOk;
        }
        if (*gen) {
            const SystemDocument doc = run_gen(gen_opts);
            with_output(output_path, [&](std::ostream& out) { out << emit_document(doc); });
            return kExitOk;
        }
    } catch (const CrossCheckFailure& e) {
        std::cerr << "iqlin: internal cross-check failed: " << e.what() << '\n';
        return kExitCrossCheck;
    } catch (const OracleCapExceeded& e) {
        std::cerr << "iqlin: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "iqlin: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "iqlin: " << e.what() << '\n';
        return kExitCrossCheck;
    }
    return kExitUsage;
}
