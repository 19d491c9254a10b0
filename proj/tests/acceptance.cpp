/**************************************************************************
 * acceptance.cpp
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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "oracles.hpp"

#include "mincode/codes.hpp"
#include "mincode/error.hpp"
#include "mincode/run.hpp"
#include "mincode/search.hpp"
#include "mincode/sets.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace mincode;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0) o.expect(secs < limit_seconds, "runtime under " + std::to_string(limit_seconds) + " s");
    if (!o.pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f", secs);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "AC" << id << " " << title << ":" << o.detail.str() << " ("
              << timing << " s)" << std::endl;
}

Point pt(std::initializer_list<int> c) {
    Point p;
    for (int v : c) p.coords.push_back(static_cast<Element>(v));
    return p;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::string scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "mincode_acceptance";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

} // namespace

int main() {
    criterion(1, "tight set at q=3, n=4", 1.0, [](Outcome& o) {
        const Space space(3, 4);
        const PointSet s = construct_tight(space, pt({1, 1, 1, 1}));
        const ConditionReport r = check_conditions(s);
        o.detail << " |S| = " << s.size() << ", n(q-1)+1 = " << 4 * 2 + 1 << ", bound = " << r.bound
                 << ", conditions " << (r.all_hold() ? "hold" : "fail");
        o.expect(s.size() == 9, "|S| = 9");
        o.expect(s.size() == 4 * (3 - 1) + 1, "|S| = n(q-1)+1");
        o.expect(r.bound == 18, "bound q^{n-2}(q-1) = 18");
        o.expect(s.size() < r.bound, "|S| < bound");
        o.expect(r.affine_nondegenerate && r.blocking && r.size_ok, "all three conditions");
        o.expect(oracle::check_conditions(space, s.points()).all(), "enumeration oracle agrees");
    });

    criterion(2, "minimal code violating AB at q=3, n=4", 5.0, [](Outcome& o) {
        const CodeCf code(construct_tight(Space(3, 4), pt({1, 1, 1, 1})));
        const MinimalityReport m = is_minimal(code);
        const AbReport ab = ab_condition_holds(code);
        o.detail << " [" << code.length() << ", " << code.dimension() << "], minimal = " << m.is_minimal << " over "
                 << m.class_count << " classes, w_max*2 = " << ab.lhs << " >= w_min*3 = " << ab.rhs;
        o.expect(code.length() == 80 && code.dimension() == 5, "parameters [80, 5]");
        o.expect(m.is_minimal, "minimal");
        o.expect(m.class_count == (ipow(3, 5) - 1) / 2 && m.class_count == 121, "121 scalar classes");
        o.expect(!ab.holds, "AB violated");
        o.expect(ab.lhs == ab.w_max * 2 && ab.rhs == ab.w_min * 3 && ab.lhs >= ab.rhs, "exact products");
    });

    criterion(3, "spread union n=6, s=2", 5.0, [](Outcome& o) {
        const SpreadUnion u = construct_spread_union(6, 2);
        const CodeCf code(u.set);
        const MinimalityReport m = is_minimal(code);
        const AbReport ab = ab_condition_holds(code);
        const bool ding = ding_minimality(u.set);
        o.detail << " |S| = " << u.set.size() << ", [" << code.length() << ", " << code.dimension()
                 << "], minimal = " << m.is_minimal << ", AB holds = " << ab.holds << ", walsh criterion = " << ding;
        o.expect(u.set.size() == 14 && u.set.size() == 2 * (8 - 1), "|S| = s(2^{n/2}-1) = 14");
        o.expect(code.length() == 63 && code.dimension() == 7, "parameters [63, 7]");
        o.expect(m.is_minimal, "minimal by exhaustive comparison");
        o.expect(oracle::is_minimal(u.set), "minimal by raw-codeword oracle");
        o.expect(!ab.holds, "AB violated");
        o.expect(ding == m.is_minimal, "walsh criterion agrees");
    });

    criterion(4, "Hamming ball n=7, k=2", 30.0, [](Outcome& o) {
        const PointSet s = construct_hamming_ball(7, 2);
        const CodeCf code(s);
        const WeightProfile w = weight_profile(code);
        const MinimalityReport m = is_minimal(code);
        const AbReport ab = ab_condition(w, 2);
        const DingAbInequality ineq = ding_ab_inequality(7, 2);
        o.detail << " [" << code.length() << ", " << code.dimension() << "], w_min = " << w.w_min
                 << ", minimal = " << m.is_minimal << ", AB holds = " << ab.holds << ", " << ineq.lhs
                 << " <= " << ineq.rhs << " is " << ineq.holds << ", " << ineq.lhs << " <= " << ineq.strict_rhs
                 << " is " << ineq.strict_holds;
        o.expect(code.length() == 127 && code.dimension() == 8, "parameters [127, 8]");
        o.expect(w.w_min == 28 && w.w_min == binomial(7, 1) + binomial(7, 2), "w_min = 28");
        o.expect(m.is_minimal, "minimal");
        o.expect(!ab.holds, "AB violated");
        o.expect(ineq.lhs == 57 && ineq.rhs == 79 && ineq.holds, "57 <= 79");
        o.expect(ineq.strict_rhs == 64 && ineq.strict_holds, "57 <= 64");
    });

    criterion(5, "minimum affine blocking sets", 60.0, [](Outcome& o) {
        for (auto [q, n, expect] : {std::tuple{2u, 2u, 3u}, {2u, 3u, 4u}, {3u, 2u, 5u}, {4u, 2u, 7u}}) {
            const Space space(q, n);
            const SearchResult r = min_blocking_search(q, n, space.point_count());
            const std::size_t brute = oracle::min_blocking_size(space);
            o.detail << " (" << q << "," << n << ")->" << (r.min_size ? std::to_string(*r.min_size) : "none");
            const std::string tag = "(" + std::to_string(q) + "," + std::to_string(n) + ")";
            o.expect(r.status == SearchStatus::Found && r.min_size == expect, tag + " min size " + std::to_string(expect));
            o.expect(expect == n * (q - 1) + 1, tag + " equals n(q-1)+1");
            o.expect(brute == expect, tag + " bitmask oracle agrees");
            o.expect(r.witness && oracle::is_affine_blocking(space, r.witness->points()), tag + " witness blocks");
        }
    });

    criterion(6, "empty theorem windows", 0.0, [](Outcome& o) {
        for (auto [q, n] : {std::pair{2u, 4u}, {3u, 3u}}) {
            const SearchResult r = min_theorem_set_search(q, n);
            const std::uint64_t lo = n * (q - 1) + 1;
            const std::uint64_t hi = ipow(q, n - 2) * (q - 1) - 1;
            o.detail << " (" << q << "," << n << "): " << status_name(r.status) << ", window [" << lo << ", " << hi << "]";
            o.expect(r.status == SearchStatus::Infeasible, "infeasible");
            o.expect(lo > hi, "n(q-1)+1 > q^{n-2}(q-1)-1");
            o.expect(r.first_size == lo && r.last_size == hi, "reported window");
        }
    });

    criterion(7, "walsh criterion vs exhaustive minimality on F_2^4", 600.0, [](Outcome& o) {
        const Space space(2, 4);
        std::size_t candidates = 0, excluded = 0, agreements = 0, disagreements = 0, minimal = 0;
        for (std::uint64_t mask = 1; mask < (1u << 15); ++mask) {
            ++candidates;
            std::vector<PointIndex> idx;
            for (PointIndex i = 0; i < 15; ++i)
                if (mask >> i & 1) idx.push_back(i + 1);
            const PointSet s(space, idx, false);
            bool ding = false;
            try {
                ding = ding_minimality(s);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::HypothesisViolated) throw;
                ++excluded;
                continue;
            }
            const bool brute = is_minimal(CodeCf(s)).is_minimal;
            minimal += brute;
            (ding == brute ? agreements : disagreements)++;
        }
        o.detail << " candidates = " << candidates << ", hypothesis failures = " << excluded << ", compared = "
                 << agreements + disagreements << " (" << minimal << " minimal), disagreements = " << disagreements;
        o.expect(candidates == 32767, "2^15 - 1 candidates");
        o.expect(agreements + disagreements + excluded == candidates, "every candidate accounted for");
        o.expect(disagreements == 0, "zero disagreements");
    });

    criterion(8, "bent function x1x2 + x3x4", 0.0, [](Outcome& o) {
        const Space space(2, 4);
        std::vector<PointIndex> idx;
        for (PointIndex x = 1; x < 16; ++x)
            if (((x & 1) & (x >> 1 & 1)) ^ ((x >> 2 & 1) & (x >> 3 & 1))) idx.push_back(x);
        const PointSet s(space, idx, false);
        const auto w = walsh_transform(s);
        long long parseval = 0;
        bool flat = true;
        for (long long v : w) {
            parseval += v * v;
            flat = flat && std::llabs(v) == 4;
        }
        const bool ding = ding_minimality(s);
        const bool brute = is_minimal(CodeCf(s)).is_minimal;
        o.detail << " |W| = 4 everywhere: " << flat << ", parseval = " << parseval << ", walsh criterion = " << ding
                 << ", minimal = " << brute;
        o.expect(flat, "|W(x)| = 4");
        o.expect(w == oracle::walsh(s), "direct sums agree");
        o.expect(parseval == 256, "parseval 2^8");
        o.expect(is_bent(s), "is_bent");
        o.expect(ding, "walsh criterion true");
        o.expect(brute && oracle::is_minimal(s), "minimal");
    });

    criterion(9, "reports independent of worker count", 0.0, [](Outcome& o) {
        const std::string tight = scratch("tight.txt");
        const std::string spread = scratch("spread.txt");
        const std::string ball = scratch("ball.txt");
        const std::vector<Json> configs = {
            {{"command", "construct"}, {"kind", "tight"}, {"q", 3}, {"n", 4}, {"anchor", "1,1,1,1"}, {"output", tight}},
            {{"command", "check-set"}, {"input", tight}},
            {{"command", "verify-theorem"}, {"input", tight}},
            {{"command", "build-code"}, {"input", tight}},
            {{"command", "construct"}, {"kind", "spread"}, {"n", 6}, {"s", 2}, {"output", spread}},
            {{"command", "verify-theorem"}, {"input", spread}},
            {{"command", "walsh"}, {"input", spread}},
            {{"command", "construct"}, {"kind", "ball"}, {"n", 7}, {"k", 2}, {"output", ball}},
            {{"command", "verify-theorem"}, {"input", ball}},
            {{"command", "build-code"}, {"input", ball}},
        };
        std::size_t identical = 0;
        for (const Json& base : configs) {
            Json one = base, four = base;
            one["workers"] = 1;
            four["workers"] = 4;
            const RunOutcome a = run(config_from_json(one));
            const RunOutcome b = run(config_from_json(four));
            const bool same = deterministic_dump(a.report) == deterministic_dump(b.report);
            identical += same;
            o.expect(same, base["command"].get<std::string>() + " report identical");
            o.expect(a.exit_status == b.exit_status, "exit status identical");
            o.expect(a.report["error"].is_null(), base["command"].get<std::string>() + " ran cleanly");
        }
        o.detail << " " << identical << "/" << configs.size() << " reports byte-identical at workers 1 and 4";
    });

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
