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

#include <string_view>
#include <vector>

#include "iqlin/interval.hpp"
#include "iqlin/rational.hpp"

namespace iqlin::testing {

inline Rational q(std::string_view text) { return Rational::parse(text); }

inline Interval iv(std::string_view lo, std::string_view hi) { return {q(lo), q(hi)}; }
inline Interval iv(long long lo, long long hi) { return {Rational(lo), Rational(hi)}; }

inline PointVector pt(std::initializer_list<std::string_view> coords)
{
    PointVector x;
    for (auto c : coords) x.push_back(q(c));
    return x;
}

inline IntervalMatrix mat1(const Interval& a) { return IntervalMatrix({{a}}); }
inline IntervalVector vec1(const Interval& b) { return IntervalVector({b}); }

}  // namespace iqlin::testing
