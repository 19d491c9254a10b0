/**************************************************************************
 * mincode_cli.cpp
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

// Command-line front end. Talks to libmincode only through its C API.

#include "mincode/mincode.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using nlohmann::json;

namespace {

struct Options {
    std::optional<unsigned> q;
    std::optional<unsigned> n;
    std::string kind;
    std::string anchor;
    std::optional<unsigned> s;
    std::optional<unsigned> k;
    std::optional<std::size_t> cap;
    bool binary = false;
    std::string input;
    std::string output;
    std::string report;
    std::string checkpoint;
    std::string resume;
    unsigned workers = 1;
    bool print_json = false;
};

std::string hyperplane_text(const json& h) {
    if (h.is_null()) return "-";
    std::string v;
    for (const auto& c : h.at("normal")) v += (v.empty() ? "" : ",") + std::to_string(c.get<unsigned>());
    return "{x : (" + v + ").x = " + std::to_string(h.at("alpha").get<unsigned>()) + "}";
}

void print_conditions(const json& c) {
    std::cout << "  not in any " << (c["form"] == "binary" ? "hyperplane        " : "affine hyperplane ")
              << (c["affine_nondegenerate"]["holds"].get<bool>() ? "yes" : "no  (in " +
                  hyperplane_text(c["affine_nondegenerate"]["witness"]) + ")") << "\n";
    std::cout << "  meets every " << (c["form"] == "binary" ? "hyperplane        " : "affine hyperplane ")
              << (c["blocking"]["holds"].get<bool>() ? "yes" : "no  (misses " +
                  hyperplane_text(c["blocking"]["witness"]) + ")") << "\n";
    std::cout << "  |S| = " << c["size"]["size"] << " < " << c["size"]["bound"] << "              "
              << (c["size"]["holds"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "  all conditions hold: " << (c["all_hold"].get<bool>() ? "yes" : "no") << "\n";
}

void print_summary(const json& report) {
    const std::string cmd = report.value("command", "");
    const json& r = report["result"];
    if (r.is_null()) return;

    if (r.contains("conditions")) {
        std::cout << "conditions:\n";
        print_conditions(r["conditions"]);
    }
    if (r.contains("code")) {
        const json& c = r["code"];
        std::cout << "code: [" << c["length"] << ", " << c["dimension"] << "] over F_" << c["q"]
                  << ", |S| = " << c["support_size"] << (c["f_is_linear"].get<bool>() ? ", f linear" : "") << "\n";
    }
    if (r.contains("weights")) {
        const json& w = r["weights"];
        std::cout << "weights: w_min = " << w["w_min"] << ", w_max = " << w["w_max"] << "\n  distribution:";
        for (const auto& e : w["distribution"]) std::cout << " " << e[0] << ":" << e[1];
        std::cout << "\n";
        if (!w["injective"].get<bool>()) std::cout << "  note: (u,v) -> c(u,v) is not injective\n";
    }
    if (r.contains("minimality")) {
        const json& m = r["minimality"];
        std::cout << "minimal: " << (m["is_minimal"].get<bool>() ? "yes" : "no") << " (" << m["class_count"]
                  << " scalar classes)\n";
        if (!m["witness"].is_null())
            std::cout << "  witness: supp c" << m["witness"]["contained"].dump() << " inside supp c"
                      << m["witness"]["container"].dump() << "\n";
    }
    if (r.contains("ab")) {
        const json& a = r["ab"];
        std::cout << "Ashikhmin-Barg: w_max(q-1) = " << a["w_max_times_q_minus_1"] << (a["holds"].get<bool>() ? " < " : " >= ")
                  << a["w_min_times_q"] << " = w_min q -> " << (a["holds"].get<bool>() ? "holds" : "violated") << "\n";
    }
    if (r.contains("walsh")) {
        const json& w = r["walsh"];
        std::cout << "walsh spectrum:";
        for (const auto& e : w["values"]) std::cout << " " << e[0] << "x" << e[1];
        std::cout << "\n  parseval: " << w["parseval_sum"] << " (expected " << w["parseval_expected"] << ")\n";
        if (!w["is_bent"].is_null()) std::cout << "  bent: " << (w["is_bent"].get<bool>() ? "yes" : "no") << "\n";
        if (w["ding"]["applicable"].get<bool>())
            std::cout << "  walsh criterion: " << (w["ding"]["minimal"].get<bool>() ? "minimal" : "not minimal") << "\n";
        else
            std::cout << "  walsh criterion not applicable: " << w["ding"]["reason"].get<std::string>() << "\n";
    }
    if (r.contains("set") && cmd == "construct") {
        std::cout << "constructed " << r["set"]["size"] << " points in F_" << r["set"]["q"] << "^" << r["set"]["n"];
        if (r.contains("ab_window")) std::cout << (r["ab_window"].get<bool>() ? " (s in AB-violation window)" : "");
        std::cout << "\n";
    }
    if (r.contains("search")) {
        const json& s = r["search"];
        std::cout << "search: " << s["status"].get<std::string>() << ", window [" << s["window"][0] << ", "
                  << s["window"][1] << "], examined " << s["examined"] << "\n";
        if (!s["min_size"].is_null()) std::cout << "  minimum size: " << s["min_size"] << "\n";
    }
    if (r.contains("pass")) {
        std::cout << "verdict: " << (r["pass"].get<bool>() ? "PASS" : "FAIL")
                  << (r["theorem_consistent"].get<bool>() ? "" : " (conditions hold but conclusion fails)") << "\n";
    }
}

void add_common(CLI::App* sub, Options& o, bool needs_input) {
    if (needs_input)
        sub->add_option("--in", o.input, "Input set file")->required();
    sub->add_option("--q", o.q, "Field order");
    sub->add_option("--n", o.n, "Dimension");
    sub->add_option("--report", o.report, "Write the machine-readable report here");
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--json", o.print_json, "Print the report instead of the summary");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mincode: minimal codes from point sets over finite fields"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check-set", "Check the three geometric conditions on a set");
    add_common(check, o, true);
    check->add_flag("--binary", o.binary, "Use the q = 2 form (linear hyperplanes, bound 2^(n-2))");

    for (const char* name : {"build-code", "minimality", "ab", "walsh"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "build-code"   ? "Code parameters and weight distribution"
                                             : std::string(name) == "minimality" ? "Exhaustive minimality check"
                                             : std::string(name) == "ab"         ? "Ashikhmin-Barg condition"
                                                                                 : "Walsh-Hadamard summary (q = 2)");
        add_common(sub, o, true);
    }

    auto* construct = app.add_subcommand("construct", "Write a constructed set file");
    add_common(construct, o, false);
    construct->add_option("kind", o.kind, "tight | spread | ball")
        ->required()
        ->check(CLI::IsMember({"tight", "spread", "ball"}));
    construct->add_option("--anchor", o.anchor, "Anchor point for tight, comma separated");
    construct->add_option("--s", o.s, "Number of spread members");
    construct->add_option("--k", o.k, "Hamming ball radius");
    construct->add_option("--out", o.output, "Output set file");

    for (const char* name : {"search-min", "search-blocking"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "search-min"
                                                 ? "Smallest set passing all three conditions"
                                                 : "Smallest affine blocking set");
        add_common(sub, o, false);
        sub->add_option("--out", o.output, "Write the witness set here");
        sub->add_option("--checkpoint", o.checkpoint, "Keep a resumable checkpoint in this file");
        sub->add_option("--resume", o.resume, "Resume from a checkpoint file");
        if (std::string(name) == "search-blocking") sub->add_option("--cap", o.cap, "Largest size to try");
    }

    auto* verify = app.add_subcommand("verify-theorem", "Conditions, minimality and AB on one set");
    add_common(verify, o, false);
    verify->add_option("--in", o.input, "Input set file (default: tight construction for --q/--n)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    json config = {{"command", chosen->get_name()}, {"workers", o.workers}};
    if (o.q) config["q"] = *o.q;
    if (o.n) config["n"] = *o.n;
    if (!o.kind.empty()) config["kind"] = o.kind;
    if (!o.anchor.empty()) config["anchor"] = o.anchor;
    if (o.s) config["s"] = *o.s;
    if (o.k) config["k"] = *o.k;
    if (o.cap) config["size_cap"] = *o.cap;
    if (o.binary) config["binary"] = true;
    if (!o.input.empty()) config["input"] = o.input;
    if (!o.output.empty()) config["output"] = o.output;
    if (!o.checkpoint.empty()) config["checkpoint"] = o.checkpoint;
    if (!o.resume.empty()) config["resume"] = o.resume;

    char* text = nullptr;
    int exit_status = 2;
    if (mc_run(config.dump().c_str(), &text, &exit_status) != MC_OK) {
        std::cerr << "mincode: " << mc_last_error() << "\n";
        return 2;
    }
    const std::string report_text = text;
    mc_string_free(text);

    if (!o.report.empty()) {
        std::ofstream out(o.report);
        if (!out) {
            std::cerr << "mincode: cannot write report '" << o.report << "'\n";
            return 2;
        }
        out << report_text << "\n";
    }
    const json report = json::parse(report_text);
    if (o.print_json)
        std::cout << report_text << "\n";
    else
        print_summary(report);
    if (!report["error"].is_null()) std::cerr << "mincode: " << report["error"]["message"].get<std::string>() << "\n";
    return exit_status;
}
