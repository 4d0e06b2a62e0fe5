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
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "iqlin/charac.hpp"
#include "iqlin/prefix.hpp"

namespace iqlin {

/// Malformed or unsupported JSON input.
class DocumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kDocumentVersion = 1;
inline constexpr std::string_view kDocumentFormat = "iqlin-system";

enum class DocumentKind : std::uint8_t { Classic, Generalized, AE, AbsIneq };

[[nodiscard]] std::string_view kind_name(DocumentKind kind);

/// A serialized system. See docs/system-document.md for the JSON layout.
struct SystemDocument {
    std::variant<ClassicIQSystem, GeneralizedIQSystem, AESystem, AbsIneqSystem> system;

    [[nodiscard]] DocumentKind kind() const { return static_cast<DocumentKind>(system.index()); }
    [[nodiscard]] std::size_t rows() const;
    [[nodiscard]] std::size_t cols() const;

    friend bool operator==(const SystemDocument&, const SystemDocument&) = default;
};

[[nodiscard]] SystemDocument parse_document(std::string_view json_text);
[[nodiscard]] SystemDocument load_document(const std::filesystem::path& path);
/// Pretty-printed JSON with a trailing newline; parse_document(emit_document(d)) == d.
[[nodiscard]] std::string emit_document(const SystemDocument& doc);

/// The generalized form used by the membership tests. Classic systems go
/// through the block decomposition, AE systems become a single block, and
/// absolute-value systems go through their AE construction.
[[nodiscard]] GeneralizedIQSystem to_generalized(const SystemDocument& doc);

/// {"points": [[...], ...]} or a bare array of points; coordinates are
/// rational strings or JSON integers. Every point must have `n` coordinates.
[[nodiscard]] std::vector<PointVector> parse_points(std::string_view json_text, std::size_t n);
/// "1/2,3,-0.25"
[[nodiscard]] PointVector parse_inline_point(std::string_view text);

[[nodiscard]] std::string format_point(std::span<const Rational> x);

}  // namespace iqlin
