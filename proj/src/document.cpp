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

#include "iqlin/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace iqlin {

using Json = nlohmann::ordered_json;

std::string_view kind_name(DocumentKind kind)
{
    switch (kind) {
    case DocumentKind::Classic: return "classic";
    case DocumentKind::Generalized: return "generalized";
    case DocumentKind::AE: return "ae";
    case DocumentKind::AbsIneq: return "absineq";
    }
    return "unknown";
}

std::size_t SystemDocument::rows() const
{
    return std::visit(
        [](const auto& s) -> std::size_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbsIneqSystem>) {
                return s.c_mat.rows();
            } else {
                return s.rows();
            }
        },
        system);
}

std::size_t SystemDocument::cols() const
{
    return std::visit(
        [](const auto& s) -> std::size_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbsIneqSystem>) {
                return s.c_mat.cols();
            } else {
                return s.cols();
            }
        },
        system);
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw DocumentError(where + ": " + what);
}

Rational read_rational(const Json& j, const std::string& where)
{
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(where, e.what());
        }
    }
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational::parse(std::to_string(j.get<std::uint64_t>()));
        return Rational(j.get<std::int64_t>());
    }
    if (j.is_number_float()) fail(where, "floating-point numbers are not accepted; write the value as a string");
    fail(where, "expected a rational string");
}

Interval read_interval(const Json& j, const std::string& where)
{
    if (!j.is_array() || j.size() != 2) fail(where, "an interval is a two-element array [lo, hi]");
    Rational lo = read_rational(j[0], where);
    Rational hi = read_rational(j[1], where);
    if (hi < lo) fail(where, "interval has lo > hi");
    return {lo, hi};
}

const Json& field(const Json& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end()) fail("document", std::string("missing field '") + key + "'");
    return *it;
}

template <typename T, typename Read>
std::vector<std::vector<T>> read_grid(const Json& j, const std::string& name, Read read)
{
    if (!j.is_array() || j.empty()) fail(name, "expected a nonempty array of rows");
    std::vector<std::vector<T>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& row = j[i];
        if (!row.is_array() || row.empty()) fail(name, "row " + std::to_string(i + 1) + " is not a nonempty array");
        if (!rows.empty() && row.size() != rows.front().size()) fail(name, "rows have different lengths");
        std::vector<T> out;
        for (std::size_t k = 0; k < row.size(); ++k) {
            out.push_back(read(row[k], name + "[" + std::to_string(i + 1) + "," + std::to_string(k + 1) + "]"));
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

template <typename T, typename Read>
std::vector<T> read_list(const Json& j, const std::string& name, Read read)
{
    if (!j.is_array() || j.empty()) fail(name, "expected a nonempty array");
    std::vector<T> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read(j[i], name + "[" + std::to_string(i + 1) + "]"));
    return out;
}

IntervalMatrix read_imatrix(const Json& j, const std::string& name)
{
    return IntervalMatrix(read_grid<Interval>(j, name, read_interval));
}

IntervalVector read_ivector(const Json& j, const std::string& name)
{
    return IntervalVector(read_list<Interval>(j, name, read_interval));
}

Quantifier read_quantifier(const Json& j, const std::string& where)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "A" || s == "∀") return Quantifier::Forall;
        if (s == "E" || s == "∃") return Quantifier::Exists;
    }
    fail(where, "expected quantifier \"A\" or \"E\"");
}

void require_shape(bool ok, const std::string& what)
{
    if (!ok) fail("document", what);
}

Json write_rational(const Rational& r) { return r.str(); }

Json write_interval(const Interval& a) { return Json::array({a.lo().str(), a.hi().str()}); }

Json write_imatrix(const IntervalMatrix& a)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (const auto& e : a.row(i)) row.push_back(write_interval(e));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json write_ivector(const IntervalVector& b)
{
    Json out = Json::array();
    for (const auto& e : b.entries()) out.push_back(write_interval(e));
    return out;
}

Json write_rmatrix(const RationalMatrix& a)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(write_rational(a(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json write_rvector(std::span<const Rational> v)
{
    Json out = Json::array();
    for (const auto& e : v) out.push_back(write_rational(e));
    return out;
}

std::string letter(Quantifier q) { return std::string(1, quantifier_letter(q)); }

SystemDocument read_classic(const Json& doc)
{
    IntervalMatrix a = read_imatrix(field(doc, "A"), "A");
    IntervalVector b = read_ivector(field(doc, "b"), "b");
    require_shape(a.rows() == b.size(), "A and b have different row counts");
    const Json& p = field(doc, "prefix");
    if (!p.is_string()) fail("prefix", "expected a string such as \"A a[1,1] E b[1]\"");
    auto prefix = QuantifierPrefix::parse(p.get<std::string>(), b.size(), a.cols());
    return {ClassicIQSystem(std::move(a), std::move(b), std::move(prefix))};
}

SystemDocument read_generalized(const Json& doc)
{
    const Json& blocks = field(doc, "blocks");
    if (!blocks.is_array() || blocks.empty()) fail("blocks", "expected a nonempty array of blocks");
    std::vector<Block> out;
    for (std::size_t s = 0; s < blocks.size(); ++s) {
        const Json& blk = blocks[s];
        const std::string tag = "blocks[" + std::to_string(s + 1) + "].";
        if (!blk.is_object()) fail(tag, "expected an object");
        out.push_back({read_imatrix(field(blk, "A_forall"), tag + "A_forall"),
                       read_imatrix(field(blk, "A_exists"), tag + "A_exists"),
                       read_ivector(field(blk, "b_forall"), tag + "b_forall"),
                       read_ivector(field(blk, "b_exists"), tag + "b_exists")});
    }
    if (auto k = doc.find("kappa"); k != doc.end()) {
        if (!k->is_number_integer() || k->get<std::int64_t>() != static_cast<std::int64_t>(out.size()))
            fail("kappa", "does not match the number of blocks");
    }
    const std::size_t m = out.front().a_forall.rows();
    const std::size_t n = out.front().a_forall.cols();
    try {
        return {GeneralizedIQSystem(m, n, std::move(out))};
    } catch (const DimensionError& e) {
        fail("blocks", e.what());
    }
}

SystemDocument read_ae(const Json& doc)
{
    IntervalMatrix a = read_imatrix(field(doc, "A"), "A");
    IntervalVector b = read_ivector(field(doc, "b"), "b");
    auto alpha_rows = read_grid<Quantifier>(field(doc, "alpha"), "alpha", read_quantifier);
    auto beta = read_list<Quantifier>(field(doc, "beta"), "beta", read_quantifier);
    require_shape(alpha_rows.size() == a.rows() && alpha_rows.front().size() == a.cols(), "alpha must match A");
    std::vector<Quantifier> alpha;
    for (const auto& row : alpha_rows) alpha.insert(alpha.end(), row.begin(), row.end());
    try {
        return {AESystem(std::move(a), std::move(b), std::move(alpha), std::move(beta))};
    } catch (const DimensionError& e) {
        fail("document", e.what());
    }
}

SystemDocument read_absineq(const Json& doc)
{
    auto c_mat = RationalMatrix(read_grid<Rational>(field(doc, "C"), "C", read_rational));
    auto d_mat = RationalMatrix(read_grid<Rational>(field(doc, "D"), "D", read_rational));
    auto c_vec = read_list<Rational>(field(doc, "c"), "c", read_rational);
    auto d_vec = read_list<Rational>(field(doc, "d"), "d", read_rational);
    require_shape(c_mat.rows() == d_mat.rows() && c_mat.cols() == d_mat.cols(), "C and D have different shapes");
    require_shape(c_vec.size() == c_mat.rows() && d_vec.size() == c_mat.rows(), "c and d must have one entry per row");
    return {AbsIneqSystem{std::move(c_mat), std::move(d_mat), std::move(c_vec), std::move(d_vec)}};
}

// Arrays nest at most three deep here (matrix of intervals). Matrices are
// printed one row per line; shallower arrays stay on one line.
std::size_t depth(const Json& j)
{
    if (!j.is_array()) return 0;
    std::size_t d = 0;
    for (const auto& e : j) d = std::max(d, depth(e));
    return d + 1;
}

void write_pretty(const Json& j, std::ostringstream& os, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        os << "{\n";
        std::size_t k = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++k) {
            os << pad << "  " << Json(it.key()).dump() << ": ";
            write_pretty(it.value(), os, indent + 2);
            os << (k + 1 < j.size() ? ",\n" : "\n");
        }
        os << pad << "}";
    } else if (j.is_array() && depth(j) >= 3) {
        os << "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            os << pad << "  ";
            write_pretty(j[k], os, indent + 2);
            os << (k + 1 < j.size() ? ",\n" : "\n");
        }
        os << pad << "]";
    } else if (j.is_array() && !j.empty() && j.front().is_object()) {
        os << "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            os << pad << "  ";
            write_pretty(j[k], os, indent + 2);
            os << (k + 1 < j.size() ? ",\n" : "\n");
        }
        os << pad << "]";
    } else {
        os << j.dump(-1, ' ', false);
    }
}

Json parse_json(std::string_view text, const char* what)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw DocumentError(std::string(what) + " is not valid JSON: " + e.what());
    }
}

}  // namespace

SystemDocument parse_document(std::string_view json_text)
{
    const Json doc = parse_json(json_text, "system document");
    if (!doc.is_object()) fail("document", "top level must be an object");
    if (auto f = doc.find("format"); f != doc.end() && (!f->is_string() || f->get<std::string>() != kDocumentFormat))
        fail("format", "expected \"" + std::string(kDocumentFormat) + "\"");
    const Json& version = field(doc, "version");
    if (!version.is_number_integer() || version.get<std::int64_t>() != kDocumentVersion)
        fail("version", "unsupported version (this build reads version " + std::to_string(kDocumentVersion) + ")");
    const Json& kind = field(doc, "kind");
    if (!kind.is_string()) fail("kind", "expected a string");
    const auto k = kind.get<std::string>();
    try {
        if (k == "classic") return read_classic(doc);
        if (k == "generalized") return read_generalized(doc);
        if (k == "ae") return read_ae(doc);
        if (k == "absineq") return read_absineq(doc);
    } catch (const PrefixError& e) {
        throw DocumentError(std::string("prefix: ") + e.what());
    } catch (const DimensionError& e) {
        throw DocumentError(std::string("document: ") + e.what());
    }
    fail("kind", "unknown kind '" + k + "' (expected classic, generalized, ae or absineq)");
}

SystemDocument load_document(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

std::string emit_document(const SystemDocument& doc)
{
    Json j;
    j["format"] = std::string(kDocumentFormat);
    j["version"] = kDocumentVersion;
    j["kind"] = std::string(kind_name(doc.kind()));
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ClassicIQSystem>) {
                j["A"] = write_imatrix(s.a());
                j["b"] = write_ivector(s.b());
                j["prefix"] = s.prefix().str();
            } else if constexpr (std::is_same_v<T, GeneralizedIQSystem>) {
                j["kappa"] = s.kappa();
                Json blocks = Json::array();
                for (const auto& blk : s.blocks()) {
                    Json o;
                    o["A_forall"] = write_imatrix(blk.a_forall);
                    o["A_exists"] = write_imatrix(blk.a_exists);
                    o["b_forall"] = write_ivector(blk.b_forall);
                    o["b_exists"] = write_ivector(blk.b_exists);
                    blocks.push_back(std::move(o));
                }
                j["blocks"] = std::move(blocks);
            } else if constexpr (std::is_same_v<T, AESystem>) {
                j["A"] = write_imatrix(s.a);
                j["b"] = write_ivector(s.b);
                Json alpha = Json::array();
                for (std::size_t i = 0; i < s.rows(); ++i) {
                    Json row = Json::array();
                    for (std::size_t c = 0; c < s.cols(); ++c) row.push_back(letter(s.alpha_at(i, c)));
                    alpha.push_back(std::move(row));
                }
                j["alpha"] = std::move(alpha);
                Json beta = Json::array();
                for (auto q : s.beta) beta.push_back(letter(q));
                j["beta"] = std::move(beta);
            } else {
                j["C"] = write_rmatrix(s.c_mat);
                j["D"] = write_rmatrix(s.d_mat);
                j["c"] = write_rvector(s.c_vec);
                j["d"] = write_rvector(s.d_vec);
            }
        },
        doc.system);
    std::ostringstream os;
    write_pretty(j, os, 0);
    os << '\n';
    return os.str();
}

GeneralizedIQSystem to_generalized(const SystemDocument& doc)
{
    return std::visit(
        [](const auto& s) -> GeneralizedIQSystem {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ClassicIQSystem>) {
                return build_tuples(s);
            } else if constexpr (std::is_same_v<T, GeneralizedIQSystem>) {
                return s;
            } else if constexpr (std::is_same_v<T, AESystem>) {
                return as_generalized(s);
            } else {
                return as_generalized(ae_from_abs_inequalities(s));
            }
        },
        doc.system);
}

std::vector<PointVector> parse_points(std::string_view json_text, std::size_t n)
{
    const Json doc = parse_json(json_text, "points file");
    const Json* list = &doc;
    if (doc.is_object()) list = &field(doc, "points");
    if (!list->is_array()) fail("points", "expected an array of points");
    std::vector<PointVector> out;
    for (std::size_t k = 0; k < list->size(); ++k) {
        const std::string where = "points[" + std::to_string(k + 1) + "]";
        const Json& p = (*list)[k];
        if (!p.is_array()) fail(where, "a point is an array of coordinates");
        if (p.size() != n)
            fail(where, "has " + std::to_string(p.size()) + " coordinates, system has " + std::to_string(n) + " unknowns");
        PointVector x;
        for (const auto& c : p) x.push_back(read_rational(c, where));
        out.push_back(std::move(x));
    }
    return out;
}

PointVector parse_inline_point(std::string_view text)
{
    PointVector x;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        x.push_back(Rational::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return x;
}

std::string format_point(std::span<const Rational> x)
{
    std::string out = "(";
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (j > 0) out += ", ";
        out += x[j].str();
    }
    return out + ")";
}

}  // namespace iqlin
