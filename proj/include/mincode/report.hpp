/**************************************************************************
 * report.hpp
 *
 * Copyright 2026 The mincode Authors
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
 **************************************************************************/

#pragma once

// JSON renderings of the result types. Object keys are emitted sorted, so
// equal results always serialize to identical bytes.

#include "mincode/codes.hpp"
#include "mincode/search.hpp"
#include "mincode/sets.hpp"

#include "json.hpp"

namespace mincode {

using Json = nlohmann::json;

Json to_json(const Point& x);
Json to_json(const AffineHyperplane& h);
Json to_json(const PointSet& set);
Json to_json(const ConditionReport& r);
Json to_json(const Message& m);
Json to_json(const WeightProfile& p);
Json to_json(const AbReport& r);
Json to_json(const MinimalityReport& r);
Json to_json(const SearchResult& r);
Json to_json(const SearchCheckpoint& c);
SearchCheckpoint checkpoint_from_json(const Json& j);

/// Code parameters: length, dimension, linearity of f.
Json code_summary(const CodeCf& code);

/// Spectrum value distribution, Parseval sum, bentness (even n) and the
/// Walsh minimality criterion, or the reason it does not apply. q = 2 only.
Json walsh_summary(const PointSet& set);

} // namespace mincode
