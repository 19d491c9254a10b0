/**************************************************************************
 * search.cpp
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

#include "mincode/search.hpp"

#include "mincode/error.hpp"
#include "parallel.hpp"

#include <chrono>
#include <stdexcept>

namespace mincode {

std::string_view status_name(SearchStatus status) noexcept {
    switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Infeasible: return "infeasible";
    case SearchStatus::CapReached: return "cap_reached";
    }
    return "unknown";
}

namespace {

constexpr std::size_t kMaxIncidenceTable = std::size_t{1} << 26;

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

// Depth-first enumeration of t-subsets of the candidate points in
// lexicographic order of positions, tracking how many chosen points lie on
// each affine hyperplane (direction d, value alpha) -> d * q + alpha.
class BlockingSearch {
public:
    struct Outcome {
        std::optional<std::vector<std::size_t>> witness;
        std::uint64_t examined = 0;
    };

    BlockingSearch(Space space, bool include_origin, bool require_spanning)
        : space_(std::move(space)), spanning_(require_spanning) {
        for (std::uint64_t i = include_origin ? 0 : 1; i < space_.point_count(); ++i) {
            candidates_.push_back(static_cast<PointIndex>(i));
            points_.push_back(space_.point(static_cast<PointIndex>(i)));
        }
        directions_ = enumerate_directions(space_);
        if (candidates_.size() * directions_.size() <= kMaxIncidenceTable) {
            table_.resize(candidates_.size() * directions_.size());
            for (std::size_t p = 0; p < candidates_.size(); ++p)
                for (std::size_t d = 0; d < directions_.size(); ++d)
                    table_[p * directions_.size() + d] = space_.dot(directions_[d], points_[p]);
        }
    }

    const Space& space() const noexcept { return space_; }
    std::size_t candidate_count() const noexcept { return candidates_.size(); }
    PointIndex candidate(std::size_t pos) const { return candidates_[pos]; }

    Outcome explore(std::size_t size, std::size_t first) const {
        State s(directions_.size(), space_.q());
        Outcome out;
        add(s, first);
        dfs(s, size, first + 1, out);
        return out;
    }

private:
    struct State {
        State(std::size_t dirs, unsigned q)
            : hits(dirs * q, 0), unblocked(dirs, q), histogram(q + 1, 0), unblocked_total(dirs * q) {
            histogram[q] = dirs;
        }
        std::vector<std::uint32_t> hits;
        std::vector<unsigned> unblocked;       // per direction
        std::vector<std::size_t> histogram;    // directions by unblocked count
        std::size_t unblocked_total;
        std::vector<std::size_t> chosen;
    };

    Element alpha(std::size_t pos, std::size_t d) const {
        if (!table_.empty()) return table_[pos * directions_.size() + d];
        return space_.dot(directions_[d], points_[pos]);
    }

    void add(State& s, std::size_t pos) const {
        const unsigned q = space_.q();
        for (std::size_t d = 0; d < directions_.size(); ++d) {
            if (s.hits[d * q + alpha(pos, d)]++ == 0) {
                --s.histogram[s.unblocked[d]];
                --s.unblocked[d];
                ++s.histogram[s.unblocked[d]];
                --s.unblocked_total;
            }
        }
        s.chosen.push_back(pos);
    }

    void remove(State& s, std::size_t pos) const {
        const unsigned q = space_.q();
        for (std::size_t d = 0; d < directions_.size(); ++d) {
            if (--s.hits[d * q + alpha(pos, d)] == 0) {
                --s.histogram[s.unblocked[d]];
                ++s.unblocked[d];
                ++s.histogram[s.unblocked[d]];
                ++s.unblocked_total;
            }
        }
        s.chosen.pop_back();
    }

    // Admissible: each further point blocks at most one hyperplane per
    // direction, so at most (#directions) hyperplanes overall.
    bool can_complete(const State& s, std::size_t remaining) const {
        if (s.unblocked_total > remaining * directions_.size()) return false;
        for (std::size_t k = space_.q(); k > remaining; --k)
            if (s.histogram[k] != 0) return false;
        return true;
    }

    bool accept(const State& s) const {
        if (!spanning_) return true;
        std::vector<Point> pts;
        pts.reserve(s.chosen.size());
        for (std::size_t pos : s.chosen) pts.push_back(points_[pos]);
        return !affine_cover(space_, pts);
    }

    bool dfs(State& s, std::size_t size, std::size_t start, Outcome& out) const {
        const std::size_t remaining = size - s.chosen.size();
        if (remaining == 0) {
            ++out.examined;
            if (s.unblocked_total == 0 && accept(s)) {
                out.witness = s.chosen;
                return true;
            }
            return false;
        }
        if (!can_complete(s, remaining)) return false;
        for (std::size_t pos = start; pos + remaining <= candidates_.size(); ++pos) {
            add(s, pos);
            if (dfs(s, size, pos + 1, out)) return true;
            remove(s, pos);
        }
        return false;
    }

    Space space_;
    bool spanning_;
    std::vector<PointIndex> candidates_;
    std::vector<Point> points_;
    std::vector<Point> directions_;
    std::vector<Element> table_;
};

SearchResult run_sizes(const BlockingSearch& engine, std::size_t lo, std::size_t hi, const SearchOptions& options,
                       SearchStatus exhausted_status) {
    const auto start_time = std::chrono::steady_clock::now();
    SearchResult result;
    result.first_size = lo;
    result.last_size = hi;
    result.status = exhausted_status;

    std::size_t size = lo;
    std::size_t first = 0;
    if (options.resume) {
        if (options.resume->size < lo || options.resume->size > hi + 1)
            throw Error(ErrorCode::ParameterOutOfRange, "checkpoint size outside the search window");
        size = options.resume->size;
        first = options.resume->next_first;
        result.examined = options.resume->examined;
    }

    const unsigned workers = std::max(1u, options.workers);
    const std::size_t n_cand = engine.candidate_count();
    for (; size <= hi; ++size, first = 0) {
        const std::size_t firsts = size <= n_cand ? n_cand - size + 1 : 0;
        while (first < firsts) {
            const std::size_t batch = std::min<std::size_t>(workers, firsts - first);
            std::vector<BlockingSearch::Outcome> outcomes(batch);
            detail::parallel_for(batch, workers, [&](std::size_t i) { outcomes[i] = engine.explore(size, first + i); });
            for (auto& o : outcomes) {
                result.examined += o.examined;
                if (o.witness) {
                    std::vector<PointIndex> idx;
                    for (std::size_t pos : *o.witness) idx.push_back(engine.candidate(pos));
                    result.status = SearchStatus::Found;
                    result.min_size = size;
                    result.witness = PointSet(engine.space(), std::move(idx), true);
                    result.elapsed_seconds =
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
                    return result;
                }
            }
            first += batch;
            if (options.on_checkpoint) options.on_checkpoint({size, first, result.examined});
        }
    }
    result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return result;
}

void require_desk_scale(const Space& space, std::uint64_t cap, const char* what) {
    if (space.point_count() > cap)
        throw Error(ErrorCode::ParameterOutOfRange, std::string(what) + ": q^n exceeds the desk-scale cap");
}

} // namespace

SearchResult min_blocking_search(unsigned q, unsigned n, std::size_t size_cap, const SearchOptions& options) {
    const Space space(q, n);
    require_desk_scale(space, std::uint64_t{1} << 16, "min_blocking_search");
    if (size_cap < 1) throw Error(ErrorCode::ParameterOutOfRange, "size cap must be at least 1");
    const std::size_t hi = std::min<std::size_t>(size_cap, space.point_count());
    const BlockingSearch engine(space, true, false);
    SearchResult r = run_sizes(engine, 1, hi, options, SearchStatus::CapReached);
    if (r.witness && !is_affine_blocking(*r.witness))
        throw std::logic_error("blocking search witness failed re-verification");
    return r;
}

SearchResult min_theorem_set_search(unsigned q, unsigned n, const SearchOptions& options) {
    const Space space(q, n);
    if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "the conditions need n >= 2");
    require_desk_scale(space, std::uint64_t{1} << 12, "min_theorem_set_search");
    const std::size_t lo = static_cast<std::size_t>(n) * (q - 1) + 1;
    const std::uint64_t cap = ipow(q, n - 2) * (q - 1);
    const std::size_t hi = cap == 0 ? 0 : static_cast<std::size_t>(cap - 1);

    if (lo > hi) {
        SearchResult empty;
        empty.status = SearchStatus::Infeasible;
        empty.first_size = lo;
        empty.last_size = hi;
        return empty;
    }
    const BlockingSearch engine(space, false, true);
    SearchResult r = run_sizes(engine, lo, hi, options, SearchStatus::Infeasible);
    if (r.witness) {
        PointSet w(space, r.witness->indices(), false);
        if (!check_conditions(w).all_hold())
            throw std::logic_error("theorem search witness failed re-verification");
        r.witness = std::move(w);
    }
    return r;
}

SearchResult min_blocking_search_unpruned(unsigned q, unsigned n, std::size_t size_cap) {
    const auto start_time = std::chrono::steady_clock::now();
    const Space space(q, n);
    require_desk_scale(space, std::uint64_t{1} << 16, "min_blocking_search_unpruned");
    const std::size_t total = static_cast<std::size_t>(space.point_count());
    SearchResult result;
    result.status = SearchStatus::CapReached;
    result.first_size = 1;
    result.last_size = std::min(size_cap, total);
    for (std::size_t t = 1; t <= result.last_size; ++t) {
        std::vector<PointIndex> combo(t);
        for (std::size_t i = 0; i < t; ++i) combo[i] = static_cast<PointIndex>(i);
        while (true) {
            ++result.examined;
            PointSet candidate(space, combo, true);
            if (is_affine_blocking(candidate)) {
                result.status = SearchStatus::Found;
                result.min_size = t;
                result.witness = std::move(candidate);
                result.elapsed_seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
                return result;
            }
            // Next combination in lexicographic order.
            std::size_t i = t;
            while (i > 0 && combo[i - 1] == total - t + i - 1) --i;
            if (i == 0) break;
            ++combo[i - 1];
            for (std::size_t j = i; j < t; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return result;
}

TightnessReport verify_tightness(unsigned q, unsigned n) {
    const Space space(q, n);
    if (n < 2) throw Error(ErrorCode::Infeasible, "the construction needs n >= 2");
    const std::uint64_t size = static_cast<std::uint64_t>(n) * (q - 1) + 1;
    const std::uint64_t cap = ipow(q, n - 2) * (q - 1);
    if (size >= cap)
        throw Error(ErrorCode::Infeasible, "n(q-1)+1 = " + std::to_string(size) + " is not below q^{n-2}(q-1) = " +
                                               std::to_string(cap));
    Point anchor = least_tight_anchor(space);
    PointSet set = construct_tight(space, anchor);
    ConditionReport conditions = check_conditions(set);
    const bool pass = set.size() == size && conditions.all_hold();
    return {std::move(anchor), std::move(set), std::move(conditions), pass};
}

} // namespace mincode
