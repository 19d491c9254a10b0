/**************************************************************************
 * run.cpp
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

#include "mincode/run.hpp"

#include "mincode/error.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

namespace mincode {

namespace {

const std::set<std::string> kCommands = {"check-set", "build-code", "minimality",      "ab",
                                         "walsh",     "construct",  "search-min",      "search-blocking",
                                         "verify-theorem"};

[[noreturn]] void usage(const std::string& message) {
    throw Error(ErrorCode::UsageError, message);
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

template <class T>
void read_optional(const Json& j, const char* key, std::optional<T>& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

template <class T>
void read_value(const Json& j, const char* key, T& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

// Loads the input set and reconciles q, n with the config.
PointSet load_input(RunConfig& config) {
    if (config.input.empty()) usage(config.command + " needs an input set file (--in)");
    PointSet set = read_set_file(config.input, false);
    if (config.q && *config.q != set.q())
        usage("--q " + std::to_string(*config.q) + " disagrees with the set file (q = " + std::to_string(set.q()) + ")");
    if (config.n && *config.n != set.n())
        usage("--n " + std::to_string(*config.n) + " disagrees with the set file (n = " + std::to_string(set.n()) + ")");
    config.q = set.q();
    config.n = set.n();
    return set;
}

void require_qn(const RunConfig& config) {
    if (!config.q || !config.n) usage(config.command + " needs --q and --n");
}

Json verify_pipeline(const PointSet& set, unsigned workers, int& exit_status) {
    const ConditionReport conditions = check_conditions(set);
    const CodeCf code(set);
    const MinimalityReport minimality = is_minimal(code, workers);
    const AbReport ab = ab_condition_holds(code, workers);
    const bool pass = conditions.all_hold() && minimality.is_minimal && !ab.holds;
    // The implication fails only if the conditions hold and the conclusion does not.
    const bool consistent = !conditions.all_hold() || (minimality.is_minimal && !ab.holds);
    exit_status = pass ? 0 : 1;
    return {{"conditions", to_json(conditions)},
            {"code", code_summary(code)},
            {"minimality", to_json(minimality)},
            {"ab", to_json(ab)},
            {"theorem_consistent", consistent},
            {"pass", pass}};
}

SearchOptions search_options(const RunConfig& config) {
    SearchOptions options;
    options.workers = config.workers;
    if (!config.resume.empty()) {
        std::ifstream in(config.resume);
        if (!in) throw Error(ErrorCode::IoError, "cannot open checkpoint '" + config.resume + "'");
        Json j;
        try {
            in >> j;
        } catch (const Json::exception& e) {
            throw Error(ErrorCode::ParseError, std::string("bad checkpoint file: ") + e.what());
        }
        options.resume = checkpoint_from_json(j);
    }
    if (!config.checkpoint.empty()) {
        const std::string path = config.checkpoint;
        options.on_checkpoint = [path](const SearchCheckpoint& c) {
            std::ofstream out(path);
            if (!out) throw Error(ErrorCode::IoError, "cannot write checkpoint '" + path + "'");
            out << to_json(c).dump() << "\n";
        };
    }
    return options;
}

Json execute(RunConfig& config, int& exit_status) {
    const std::string& cmd = config.command;
    exit_status = 0;

    if (cmd == "check-set") {
        const PointSet set = load_input(config);
        const ConditionReport r = config.binary ? check_conditions_binary(set) : check_conditions(set);
        exit_status = r.all_hold() ? 0 : 1;
        return {{"conditions", to_json(r)}};
    }
    if (cmd == "build-code") {
        const PointSet set = load_input(config);
        const CodeCf code(set);
        return {{"code", code_summary(code)}, {"weights", to_json(weight_profile(code, config.workers))}};
    }
    if (cmd == "minimality") {
        const PointSet set = load_input(config);
        const CodeCf code(set);
        const MinimalityReport r = is_minimal(code, config.workers);
        exit_status = r.is_minimal ? 0 : 1;
        return {{"code", code_summary(code)}, {"minimality", to_json(r)}};
    }
    if (cmd == "ab") {
        const PointSet set = load_input(config);
        const CodeCf code(set);
        const AbReport r = ab_condition_holds(code, config.workers);
        exit_status = r.holds ? 0 : 1;
        return {{"code", code_summary(code)}, {"ab", to_json(r)}};
    }
    if (cmd == "walsh") {
        const PointSet set = load_input(config);
        Json summary = walsh_summary(set);
        const Json& ding = summary.at("ding");
        exit_status = ding.at("applicable").get<bool>() && ding.at("minimal").get<bool>() ? 0 : 1;
        return {{"walsh", std::move(summary)}};
    }
    if (cmd == "construct") {
        std::optional<PointSet> set;
        Json extra = Json::object();
        if (config.kind == "tight") {
            require_qn(config);
            const Space space(*config.q, *config.n);
            const Point anchor = config.anchor ? parse_point(space, *config.anchor) : least_tight_anchor(space);
            config.anchor = format_point(anchor, ',');
            set = construct_tight(space, anchor);
        } else if (config.kind == "spread") {
            if (!config.n || !config.s) usage("construct spread needs --n and --s");
            if (config.q && *config.q != 2) usage("construct spread is binary only");
            SpreadUnion u = construct_spread_union(*config.n, *config.s);
            extra["ab_window"] = u.ab_window;
            set = std::move(u.set);
        } else if (config.kind == "ball") {
            if (!config.n || !config.k) usage("construct ball needs --n and --k");
            if (config.q && *config.q != 2) usage("construct ball is binary only");
            set = construct_hamming_ball(*config.n, *config.k);
        } else {
            usage("construct needs a kind: tight, spread or ball");
        }
        config.q = set->q();
        config.n = set->n();
        if (!config.output.empty()) write_set_file(*set, config.output);
        extra["set"] = to_json(*set);
        return extra;
    }
    if (cmd == "search-min" || cmd == "search-blocking") {
        require_qn(config);
        const SearchOptions options = search_options(config);
        SearchResult r;
        if (cmd == "search-min") {
            r = min_theorem_set_search(*config.q, *config.n, options);
        } else {
            if (!config.size_cap) {
                std::size_t total = 1;
                for (unsigned i = 0; i < *config.n && total <= (1u << 16); ++i) total *= *config.q;
                config.size_cap = total;
            }
            r = min_blocking_search(*config.q, *config.n, *config.size_cap, options);
        }
        exit_status = r.status == SearchStatus::Found ? 0 : 1;
        if (r.witness && !config.output.empty()) write_set_file(*r.witness, config.output);
        Json out = {{"search", to_json(r)}};
        if (r.status == SearchStatus::CapReached)
            out["error"] = {{"code", "CapTooSmall"},
                            {"message", "CapTooSmall: no blocking set of size <= " + std::to_string(*config.size_cap)}};
        out["elapsed_seconds"] = r.elapsed_seconds;  // moved into "run" by the caller
        return out;
    }
    if (cmd == "verify-theorem") {
        if (!config.input.empty()) {
            const PointSet set = load_input(config);
            return verify_pipeline(set, config.workers, exit_status);
        }
        require_qn(config);
        TightnessReport t = verify_tightness(*config.q, *config.n);
        config.anchor = format_point(t.anchor, ',');
        Json out = verify_pipeline(t.set, config.workers, exit_status);
        out["construction"] = {{"anchor", to_json(t.anchor)}, {"set", to_json(t.set)}, {"tight", t.pass}};
        if (!t.pass) exit_status = 1;
        return out;
    }
    usage("unknown command '" + cmd + "'");
}

} // namespace

RunConfig config_from_json(const Json& j) {
    static const std::set<std::string> known = {"command", "q",     "n",      "kind",   "anchor",     "s",
                                                "k",       "size_cap", "binary", "input", "output",
                                                "checkpoint", "resume", "workers"};
    if (!j.is_object()) usage("config must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) usage("unknown config key '" + it.key() + "'");
    RunConfig c;
    try {
        read_value(j, "command", c.command);
        read_optional(j, "q", c.q);
        read_optional(j, "n", c.n);
        read_value(j, "kind", c.kind);
        read_optional(j, "anchor", c.anchor);
        read_optional(j, "s", c.s);
        read_optional(j, "k", c.k);
        read_optional(j, "size_cap", c.size_cap);
        read_value(j, "binary", c.binary);
        read_value(j, "input", c.input);
        read_value(j, "output", c.output);
        read_value(j, "checkpoint", c.checkpoint);
        read_value(j, "resume", c.resume);
        read_value(j, "workers", c.workers);
    } catch (const Json::exception& e) {
        usage(std::string("bad config value: ") + e.what());
    }
    return c;
}

Json config_to_json(const RunConfig& c) {
    Json j = {{"command", c.command}};
    if (c.q) j["q"] = *c.q;
    if (c.n) j["n"] = *c.n;
    if (!c.kind.empty()) j["kind"] = c.kind;
    if (c.anchor) j["anchor"] = *c.anchor;
    if (c.s) j["s"] = *c.s;
    if (c.k) j["k"] = *c.k;
    if (c.size_cap) j["size_cap"] = *c.size_cap;
    if (c.binary) j["binary"] = true;
    if (!c.input.empty()) j["input"] = c.input;
    if (!c.output.empty()) j["output"] = c.output;
    if (!c.checkpoint.empty()) j["checkpoint"] = c.checkpoint;
    if (!c.resume.empty()) j["resume"] = c.resume;
    return j;
}

RunOutcome run(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    RunConfig resolved = config;
    RunOutcome outcome;
    Json result;
    Json error = nullptr;
    try {
        if (!kCommands.count(config.command)) usage("unknown command '" + config.command + "'");
        if (config.workers < 1) usage("--workers must be at least 1");
        result = execute(resolved, outcome.exit_status);
    } catch (const Error& e) {
        const bool negative_verdict = e.code() == ErrorCode::Infeasible || e.code() == ErrorCode::CapTooSmall;
        outcome.exit_status = negative_verdict ? 1 : 2;
        error = {{"code", error_name(e.code())}, {"message", e.what()}};
    } catch (const std::exception& e) {
        outcome.exit_status = 2;
        error = {{"code", "InternalError"}, {"message", e.what()}};
    }

    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.is_object() && result.contains("elapsed_seconds")) {
        elapsed = result["elapsed_seconds"].get<double>();
        result.erase("elapsed_seconds");
    }
    if (result.is_object() && result.contains("error")) {
        error = result["error"];
        result.erase("error");
    }

    outcome.report = {
        {"schema", 1},
        {"command", config.command},
        {"config", config_to_json(resolved)},
        {"result", result.is_null() ? Json(nullptr) : result},
        {"error", error},
        {"exit_status", outcome.exit_status},
        {"run", {{"timestamp", utc_timestamp()}, {"workers", config.workers}, {"elapsed_seconds", elapsed}}},
    };
    return outcome;
}

std::string deterministic_dump(const Json& report) {
    Json copy = report;
    if (copy.is_object()) copy.erase("run");
    return copy.dump(2);
}

} // namespace mincode
