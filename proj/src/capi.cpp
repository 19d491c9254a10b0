/**************************************************************************
 * capi.cpp
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

#include "mincode/mincode.h"

#include "mincode/codes.hpp"
#include "mincode/error.hpp"
#include "mincode/report.hpp"
#include "mincode/run.hpp"
#include "mincode/search.hpp"
#include "mincode/sets.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct mc_field {
    mincode::FieldPtr field;
};

struct mc_set {
    mincode::PointSet set;
};

struct mc_code {
    mincode::CodeCf code;
};

namespace {

using namespace mincode;

thread_local std::string g_last_error;

struct NullArgument {};

template <class T>
void require(const T* p) {
    if (p == nullptr) throw NullArgument{};
}

template <class Body>
mc_status guard(Body&& body) {
    try {
        body();
        g_last_error.clear();
        return MC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return static_cast<mc_status>(static_cast<int>(e.code()));
    } catch (const NullArgument&) {
        g_last_error = "required argument is NULL";
        return MC_ERR_NULL_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown exception";
        return MC_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const Json& j) {
    if (out) *out = dup_string(j.dump(2));
}

Point point_from(const Space& space, const unsigned* coords) {
    Point x;
    x.coords.resize(space.n());
    for (unsigned i = 0; i < space.n(); ++i) x.coords[i] = space.field().element(coords[i]);
    return x;
}

SearchOptions options_from(unsigned workers, const char* resume_json, mc_checkpoint_fn cb, void* user) {
    SearchOptions options;
    options.workers = workers;
    if (resume_json) {
        try {
            options.resume = checkpoint_from_json(Json::parse(resume_json));
        } catch (const Json::exception& e) {
            throw Error(ErrorCode::ParseError, std::string("bad checkpoint: ") + e.what());
        }
    }
    if (cb) {
        options.on_checkpoint = [cb, user](const SearchCheckpoint& c) {
            const std::string text = to_json(c).dump();
            cb(text.c_str(), user);
        };
    }
    return options;
}

int status_code(SearchStatus s) {
    switch (s) {
    case SearchStatus::Found: return 0;
    case SearchStatus::Infeasible: return 1;
    case SearchStatus::CapReached: return 2;
    }
    return 1;
}

Json search_report(const SearchResult& r) {
    Json j = to_json(r);
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

Element element_of(const Field& f, unsigned value) {
    return f.element(value);
}

} // namespace

extern "C" {

const char* mc_version(void) { return "1.0.0"; }

const char* mc_status_name(mc_status status) {
    switch (status) {
    case MC_OK: return "OK";
    case MC_ERR_NULL_ARGUMENT: return "NullArgument";
    case MC_ERR_INTERNAL: return "InternalError";
    default: break;
    }
    const auto code = static_cast<ErrorCode>(static_cast<int>(status));
    static thread_local std::string name;
    name = std::string(error_name(code));
    return name.c_str();
}

const char* mc_last_error(void) { return g_last_error.c_str(); }

void mc_string_free(char* s) { std::free(s); }

mc_status mc_field_new(unsigned q, mc_field** out) {
    return guard([&] {
        require(out);
        *out = new mc_field{field_new(q)};
    });
}

void mc_field_free(mc_field* field) { delete field; }

mc_status mc_field_info(const mc_field* field, unsigned* q, unsigned* p, unsigned* m) {
    return guard([&] {
        require(field);
        if (q) *q = field->field->order();
        if (p) *p = field->field->characteristic();
        if (m) *m = field->field->degree();
    });
}

mc_status mc_field_add(const mc_field* field, unsigned a, unsigned b, unsigned* out) {
    return guard([&] {
        require(field);
        require(out);
        const Field& f = *field->field;
        *out = f.add(element_of(f, a), element_of(f, b));
    });
}

mc_status mc_field_neg(const mc_field* field, unsigned a, unsigned* out) {
    return guard([&] {
        require(field);
        require(out);
        const Field& f = *field->field;
        *out = f.neg(element_of(f, a));
    });
}

mc_status mc_field_mul(const mc_field* field, unsigned a, unsigned b, unsigned* out) {
    return guard([&] {
        require(field);
        require(out);
        const Field& f = *field->field;
        *out = f.mul(element_of(f, a), element_of(f, b));
    });
}

mc_status mc_field_inv(const mc_field* field, unsigned a, unsigned* out) {
    return guard([&] {
        require(field);
        require(out);
        const Field& f = *field->field;
        *out = f.inv(element_of(f, a));
    });
}

mc_status mc_set_from_indices(unsigned q, unsigned n, const uint32_t* indices, size_t count, int allows_origin,
                              mc_set** out) {
    return guard([&] {
        require(out);
        if (count) require(indices);
        std::vector<PointIndex> idx(indices, indices + count);
        *out = new mc_set{PointSet(Space(q, n), std::move(idx), allows_origin != 0)};
    });
}

mc_status mc_set_parse(const char* text, int allows_origin, mc_set** out) {
    return guard([&] {
        require(text);
        require(out);
        *out = new mc_set{parse_set(text, allows_origin != 0)};
    });
}

mc_status mc_set_read_file(const char* path, int allows_origin, mc_set** out) {
    return guard([&] {
        require(path);
        require(out);
        *out = new mc_set{read_set_file(path, allows_origin != 0)};
    });
}

mc_status mc_set_write_file(const mc_set* set, const char* path) {
    return guard([&] {
        require(set);
        require(path);
        write_set_file(set->set, path);
    });
}

mc_status mc_set_format(const mc_set* set, char** text) {
    return guard([&] {
        require(set);
        require(text);
        *text = dup_string(format_set(set->set));
    });
}

void mc_set_free(mc_set* set) { delete set; }

mc_status mc_set_info(const mc_set* set, unsigned* q, unsigned* n, size_t* size) {
    return guard([&] {
        require(set);
        if (q) *q = set->set.q();
        if (n) *n = set->set.n();
        if (size) *size = set->set.size();
    });
}

mc_status mc_set_indices(const mc_set* set, uint32_t* indices, size_t capacity, size_t* count) {
    return guard([&] {
        require(set);
        const auto& idx = set->set.indices();
        if (count) *count = idx.size();
        if (indices)
            for (size_t i = 0; i < idx.size() && i < capacity; ++i) indices[i] = idx[i];
    });
}

mc_status mc_construct_tight(unsigned q, unsigned n, const unsigned* anchor, mc_set** out) {
    return guard([&] {
        require(out);
        const Space space(q, n);
        const Point a = anchor ? point_from(space, anchor) : least_tight_anchor(space);
        *out = new mc_set{construct_tight(space, a)};
    });
}

mc_status mc_construct_spread_union(unsigned n, unsigned s, int* ab_window, mc_set** out) {
    return guard([&] {
        require(out);
        SpreadUnion u = construct_spread_union(n, s);
        if (ab_window) *ab_window = u.ab_window ? 1 : 0;
        *out = new mc_set{std::move(u.set)};
    });
}

mc_status mc_construct_hamming_ball(unsigned n, unsigned k, mc_set** out) {
    return guard([&] {
        require(out);
        *out = new mc_set{construct_hamming_ball(n, k)};
    });
}

mc_status mc_check_conditions(const mc_set* set, int binary, int* all_hold, char** report_json) {
    return guard([&] {
        require(set);
        const ConditionReport r = binary ? check_conditions_binary(set->set) : check_conditions(set->set);
        if (all_hold) *all_hold = r.all_hold() ? 1 : 0;
        emit(report_json, to_json(r));
    });
}

mc_status mc_is_affine_blocking(const mc_set* set, int* blocking) {
    return guard([&] {
        require(set);
        require(blocking);
        *blocking = is_affine_blocking(set->set) ? 1 : 0;
    });
}

mc_status mc_code_new(const mc_set* set, mc_code** out) {
    return guard([&] {
        require(set);
        require(out);
        *out = new mc_code{CodeCf(set->set)};
    });
}

void mc_code_free(mc_code* code) { delete code; }

mc_status mc_code_params(const mc_code* code, size_t* length, size_t* dimension) {
    return guard([&] {
        require(code);
        if (length) *length = code->code.length();
        if (dimension) *dimension = code->code.dimension();
    });
}

mc_status mc_code_codeword(const mc_code* code, unsigned u, const unsigned* v, unsigned* entries, size_t* weight) {
    return guard([&] {
        require(code);
        require(v);
        const CodeCf& c = code->code;
        const Codeword w = c.codeword(element_of(c.field(), u), point_from(c.space(), v));
        if (entries)
            for (size_t j = 0; j < w.entries.size(); ++j) entries[j] = w.entries[j];
        if (weight) *weight = w.weight();
    });
}

mc_status mc_code_is_linear(const mc_code* code, int* linear) {
    return guard([&] {
        require(code);
        require(linear);
        *linear = is_linear(code->code) ? 1 : 0;
    });
}

mc_status mc_code_weight_profile(const mc_code* code, unsigned workers, char** report_json) {
    return guard([&] {
        require(code);
        require(report_json);
        emit(report_json, to_json(weight_profile(code->code, workers)));
    });
}

mc_status mc_code_ab(const mc_code* code, unsigned workers, int* holds, char** report_json) {
    return guard([&] {
        require(code);
        const AbReport r = ab_condition_holds(code->code, workers);
        if (holds) *holds = r.holds ? 1 : 0;
        emit(report_json, to_json(r));
    });
}

mc_status mc_code_minimality(const mc_code* code, unsigned workers, int* minimal, char** report_json) {
    return guard([&] {
        require(code);
        const MinimalityReport r = is_minimal(code->code, workers);
        if (minimal) *minimal = r.is_minimal ? 1 : 0;
        emit(report_json, to_json(r));
    });
}

mc_status mc_code_walsh(const mc_code* code, long long* spectrum, char** report_json) {
    return guard([&] {
        require(code);
        if (spectrum) {
            const auto w = walsh_transform(code->code);
            std::copy(w.begin(), w.end(), spectrum);
        }
        if (report_json) emit(report_json, walsh_summary(code->code.support_set()));
    });
}

mc_status mc_code_ding_minimality(const mc_code* code, int* minimal) {
    return guard([&] {
        require(code);
        require(minimal);
        *minimal = ding_minimality(code->code) ? 1 : 0;
    });
}

mc_status mc_set_is_bent(const mc_set* set, int* bent) {
    return guard([&] {
        require(set);
        require(bent);
        *bent = is_bent(set->set) ? 1 : 0;
    });
}

mc_status mc_ding_ab_inequality(unsigned n, unsigned k, int* holds, int* strict_holds, char** report_json) {
    return guard([&] {
        const DingAbInequality r = ding_ab_inequality(n, k);
        if (holds) *holds = r.holds ? 1 : 0;
        if (strict_holds) *strict_holds = r.strict_holds ? 1 : 0;
        emit(report_json, Json{{"lhs", r.lhs},
                               {"rhs", r.rhs},
                               {"strict_rhs", r.strict_rhs},
                               {"holds", r.holds},
                               {"strict_holds", r.strict_holds}});
    });
}

mc_status mc_search_min_blocking(unsigned q, unsigned n, size_t size_cap, unsigned workers, const char* resume_json,
                                 mc_checkpoint_fn on_checkpoint, void* user, int* status_out, char** report_json) {
    return guard([&] {
        const SearchResult r = min_blocking_search(q, n, size_cap, options_from(workers, resume_json, on_checkpoint, user));
        if (status_out) *status_out = status_code(r.status);
        emit(report_json, search_report(r));
    });
}

mc_status mc_search_min_theorem_set(unsigned q, unsigned n, unsigned workers, const char* resume_json,
                                    mc_checkpoint_fn on_checkpoint, void* user, int* status_out,
                                    char** report_json) {
    return guard([&] {
        const SearchResult r = min_theorem_set_search(q, n, options_from(workers, resume_json, on_checkpoint, user));
        if (status_out) *status_out = status_code(r.status);
        emit(report_json, search_report(r));
    });
}

mc_status mc_verify_tightness(unsigned q, unsigned n, int* pass, char** report_json) {
    return guard([&] {
        const TightnessReport t = verify_tightness(q, n);
        if (pass) *pass = t.pass ? 1 : 0;
        emit(report_json, Json{{"anchor", to_json(t.anchor)},
                               {"set", to_json(t.set)},
                               {"conditions", to_json(t.conditions)},
                               {"pass", t.pass}});
    });
}

mc_status mc_run(const char* config_json, char** report_json, int* exit_status) {
    return guard([&] {
        require(config_json);
        require(report_json);
        require(exit_status);
        RunOutcome outcome;
        try {
            outcome = run(config_from_json(Json::parse(config_json)));
        } catch (const Json::parse_error& e) {
            throw Error(ErrorCode::ParseError, std::string("config is not valid JSON: ") + e.what());
        }
        *exit_status = outcome.exit_status;
        *report_json = dup_string(outcome.report.dump(2));
    });
}

mc_status mc_report_deterministic(const char* report_json, char** out) {
    return guard([&] {
        require(report_json);
        require(out);
        Json j;
        try {
            j = Json::parse(report_json);
        } catch (const Json::parse_error& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
        *out = dup_string(deterministic_dump(j));
    });
}

} // extern "C"
