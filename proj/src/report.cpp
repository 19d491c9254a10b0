/**************************************************************************
 * report.cpp
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

#include "mincode/report.hpp"

#include "mincode/error.hpp"

#include <map>

namespace mincode {

Json to_json(const Point& x) {
    Json out = Json::array();
    for (Element c : x.coords) out.push_back(static_cast<unsigned>(c));
    return out;
}

Json to_json(const AffineHyperplane& h) {
    return {{"normal", to_json(h.normal)}, {"alpha", static_cast<unsigned>(h.alpha)}};
}

Json to_json(const PointSet& set) {
    Json points = Json::array();
    for (const Point& x : set.points()) points.push_back(to_json(x));
    return {{"q", set.q()}, {"n", set.n()}, {"size", set.size()}, {"points", std::move(points)}};
}

namespace {

Json optional_hyperplane(const std::optional<AffineHyperplane>& h) {
    return h ? to_json(*h) : Json(nullptr);
}

} // namespace

Json to_json(const ConditionReport& r) {
    return {
        {"form", r.form == ConditionReport::Form::Affine ? "affine" : "binary"},
        {"affine_nondegenerate", {{"holds", r.affine_nondegenerate}, {"witness", optional_hyperplane(r.containing_hyperplane)}}},
        {"blocking", {{"holds", r.blocking}, {"witness", optional_hyperplane(r.missed_hyperplane)}}},
        {"size", {{"holds", r.size_ok}, {"size", r.size}, {"bound", r.bound}}},
        {"all_hold", r.all_hold()},
    };
}

Json to_json(const Message& m) {
    return {{"u", static_cast<unsigned>(m.u)}, {"v", to_json(m.v)}};
}

Json to_json(const WeightProfile& p) {
    // Keys are decimal weights; keep numeric order by emitting pairs.
    Json dist = Json::array();
    std::uint64_t total = 0;
    for (auto [weight, count] : p.distribution) {
        dist.push_back({weight, count});
        total += count;
    }
    return {{"w_min", p.w_min}, {"w_max", p.w_max}, {"distribution", std::move(dist)},
            {"total", total},   {"injective", p.injective}};
}

Json to_json(const AbReport& r) {
    return {{"holds", r.holds},
            {"w_min", r.w_min},
            {"w_max", r.w_max},
            {"w_max_times_q_minus_1", r.lhs},
            {"w_min_times_q", r.rhs}};
}

Json to_json(const MinimalityReport& r) {
    Json witness = nullptr;
    if (r.witness) witness = {{"container", to_json(r.witness->container)}, {"contained", to_json(r.witness->contained)}};
    return {{"is_minimal", r.is_minimal}, {"class_count", r.class_count}, {"witness", std::move(witness)}};
}

Json to_json(const SearchResult& r) {
    return {
        {"status", status_name(r.status)},
        {"min_size", r.min_size ? Json(*r.min_size) : Json(nullptr)},
        {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
        {"examined", r.examined},
        {"window", {r.first_size, r.last_size}},
    };
}

Json to_json(const SearchCheckpoint& c) {
    return {{"size", c.size}, {"next_first", c.next_first}, {"examined", c.examined}};
}

SearchCheckpoint checkpoint_from_json(const Json& j) {
    try {
        return {j.at("size").get<std::size_t>(), j.at("next_first").get<std::size_t>(),
                j.at("examined").get<std::uint64_t>()};
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad checkpoint: ") + e.what());
    }
}

Json code_summary(const CodeCf& code) {
    return {{"q", code.q()},
            {"n", code.n()},
            {"length", code.length()},
            {"dimension", code.dimension()},
            {"support_size", code.support_set().size()},
            {"f_is_linear", is_linear(code)}};
}

Json walsh_summary(const PointSet& set) {
    const auto spectrum = walsh_transform(set);
    std::map<long long, std::uint64_t> values;
    long long parseval = 0;
    for (long long w : spectrum) {
        ++values[w];
        parseval += w * w;
    }
    Json dist = Json::array();
    for (auto [value, count] : values) dist.push_back({value, count});

    Json out = {{"n", set.n()},
                {"values", std::move(dist)},
                {"parseval_sum", parseval},
                {"parseval_expected", 1LL << (2 * set.n())},
                {"is_bent", set.n() % 2 == 0 ? Json(is_bent(set)) : Json(nullptr)}};
    try {
        out["ding"] = {{"applicable", true}, {"minimal", ding_minimality(set)}, {"reason", nullptr}};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::HypothesisViolated) throw;
        out["ding"] = {{"applicable", false}, {"minimal", nullptr}, {"reason", e.what()}};
    }
    return out;
}

} // namespace mincode
