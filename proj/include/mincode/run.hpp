/**************************************************************************
 * run.hpp
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

#include "mincode/report.hpp"

#include <optional>
#include <string>

namespace mincode {

/// One command invocation. Mirrors the command line; see README for flags.
struct RunConfig {
    std::string command;  // check-set, build-code, minimality, ab, walsh,
                          // construct, search-min, search-blocking, verify-theorem
    std::optional<unsigned> q;
    std::optional<unsigned> n;
    std::string kind;                  // construct: tight | spread | ball
    std::optional<std::string> anchor; // construct tight: "1,1,0,0"
    std::optional<unsigned> s;         // construct spread
    std::optional<unsigned> k;         // construct ball
    std::optional<std::size_t> size_cap;
    bool binary = false;               // check-set: binary-form conditions
    std::string input;                 // set file
    std::string output;                // set file written by construct / searches
    std::string checkpoint;            // searches: checkpoint file to keep updated
    std::string resume;                // searches: checkpoint file to resume from
    unsigned workers = 1;
};

/// Throws Error(UsageError) on unknown keys or wrong types.
RunConfig config_from_json(const Json& j);
Json config_to_json(const RunConfig& config);

struct RunOutcome {
    int exit_status = 0;  // 0 pass/found, 1 fail/infeasible, 2 usage error
    Json report;          // schema 1; everything but "run" is deterministic
};

/// Executes one command. Never throws for bad input: errors become exit
/// status 2 and an "error" entry in the report.
RunOutcome run(const RunConfig& config);

/// The report without its "run" section (timestamp, workers, elapsed time),
/// serialized. Equal configs and inputs give equal strings.
std::string deterministic_dump(const Json& report);

} // namespace mincode
