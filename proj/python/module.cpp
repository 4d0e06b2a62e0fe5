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

// Python bindings. Coordinates are exact: ints, fractions.Fraction or
// rational strings ("1/2", "0.25"); floats are rejected.

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "iqlin/commands.hpp"
#include "iqlin/document.hpp"

namespace py = pybind11;
using namespace iqlin;

namespace {

PointVector to_point(const py::sequence& coords)
{
    PointVector x;
    x.reserve(coords.size());
    for (const auto& c : coords) {
        if (py::isinstance<py::float_>(c))
            throw py::type_error("float coordinates are inexact; pass an int, Fraction or string");
        if (py::hasattr(c, "numerator") && py::hasattr(c, "denominator")) {
            const auto num = py::str(c.attr("numerator")).cast<std::string>();
            const auto den = py::str(c.attr("denominator")).cast<std::string>();
            x.push_back(Rational::parse(num + "/" + den));
        } else {
            x.push_back(Rational::parse(py::str(c).cast<std::string>()));
        }
    }
    return x;
}

std::size_t kappa_of(const SystemDocument& doc) { return to_generalized(doc).kappa(); }

}  // namespace

PYBIND11_MODULE(_iqlin, m)
{
    m.doc() = "Exact membership tests for interval linear systems with quantified parameters";

    py::register_exception<OracleCapExceeded>(m, "OracleCapExceeded", PyExc_RuntimeError);
    py::register_exception<CrossCheckFailure>(m, "CrossCheckFailure", PyExc_RuntimeError);

    py::class_<SystemDocument>(m, "System")
        .def_property_readonly("kind", [](const SystemDocument& d) { return std::string(kind_name(d.kind())); })
        .def_property_readonly("rows", &SystemDocument::rows)
        .def_property_readonly("cols", &SystemDocument::cols)
        .def_property_readonly("kappa", &kappa_of)
        .def("to_json", &emit_document)
        .def(
            "check",
            [](const SystemDocument& d, const py::sequence& x, const std::string& method, std::size_t grid,
               std::size_t node_cap) {
                const auto r = evaluate_method(d, to_point(x), method, {grid, node_cap});
                return py::make_tuple(r.verdict, r.detail);
            },
            py::arg("x"), py::arg("method") = "abs", py::arg("grid") = 5, py::arg("node_cap") = 1'000'000,
            "(verdict, detail) for one point; verdict is 'member', 'not member' or 'unknown'")
        .def(
            "contains",
            [](const SystemDocument& d, const py::sequence& x) {
                return evaluate_method(d, to_point(x), "abs").verdict == "member";
            },
            py::arg("x"))
        .def("__contains__",
             [](const SystemDocument& d, const py::sequence& x) {
                 return evaluate_method(d, to_point(x), "abs").verdict == "member";
             })
        .def("decompose",
             [](const SystemDocument& d) {
                 std::ostringstream out;
                 run_decompose(d, out);
                 return out.str();
             })
        .def(
            "convert",
            [](const SystemDocument& d, const std::string& target, std::uint64_t seed) {
                return run_convert(d, target, seed);
            },
            py::arg("target"), py::arg("seed") = 1)
        .def(
            "scan2d",
            [](const SystemDocument& d, const std::string& bounds, std::size_t resolution, const std::string& format,
               std::size_t threads) {
                ScanOptions opts;
                parse_bounds(bounds, opts);
                opts.resolution = resolution;
                opts.format = format;
                opts.threads = threads;
                std::ostringstream out;
                run_scan2d(d, opts, out);
                return out.str();
            },
            py::arg("bounds") = "-5,5,-5,5", py::arg("resolution") = 100, py::arg("format") = "csv",
            py::arg("threads") = 0)
        .def(py::self == py::self)
        .def("__repr__", [](const SystemDocument& d) {
            return "<iqlin.System " + std::string(kind_name(d.kind())) + " " + std::to_string(d.rows()) + "x" +
                   std::to_string(d.cols()) + ">";
        });

    m.def("parse", [](const std::string& text) { return parse_document(text); }, py::arg("text"));
    m.def("load", [](const std::string& path) { return load_document(path); }, py::arg("path"));
    m.def(
        "gen",
        [](std::size_t rows, std::size_t cols, std::size_t kappa, std::int64_t bound, std::int64_t den,
           double zero_prob, std::uint64_t seed, const std::string& form) {
            GenOptions g;
            g.spec = {rows, cols, kappa, bound, den, zero_prob, seed};
            g.form = form;
            return run_gen(g);
        },
        py::arg("rows") = 1, py::arg("cols") = 1, py::arg("kappa") = 1, py::arg("bound") = 4, py::arg("den") = 2,
        py::arg("zero_prob") = 0.0, py::arg("seed") = 1, py::arg("form") = "classic");
}
