/**************************************************************************
 * search.hpp
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

#include "mincode/sets.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace mincode {

enum class SearchStatus { Found, Infeasible, CapReached };

std::string_view status_name(SearchStatus status) noexcept;

struct SearchResult {
    SearchStatus status = SearchStatus::Infeasible;
    std::optional<std::size_t> min_size;
    std::optional<PointSet> witness;
    /// Complete candidate sets evaluated. Identical for any worker count.
    std::uint64_t examined = 0;
    /// Sizes searched, inclusive. Empty window when first > last.
    std::size_t first_size = 0;
    std::size_t last_size = 0;
    double elapsed_seconds = 0.0;
};

/// Resume point: every subset of size `size` whose least element precedes
/// candidate `next_first` has been examined, as have all smaller sizes.
struct SearchCheckpoint {
    std::size_t size = 0;
    std::size_t next_first = 0;
    std::uint64_t examined = 0;

    friend bool operator==(const SearchCheckpoint&, const SearchCheckpoint&) = default;
};

struct SearchOptions {
    unsigned workers = 1;
    std::optional<SearchCheckpoint> resume;
    /// Called after every completed batch of first elements.
    std::function<void(const SearchCheckpoint&)> on_checkpoint;
};

/// Smallest t <= size_cap such that some t-subset of F_q^n (origin allowed)
/// meets every affine hyperplane, by size-ascending lexicographic subset
/// enumeration with admissible pruning. The witness is the lexicographically
/// least such subset. Status CapReached when no size up to the cap works.
/// Requires q^n <= 2^16 and size_cap >= 1.
SearchResult min_blocking_search(unsigned q, unsigned n, std::size_t size_cap, const SearchOptions& options = {});

/// Smallest t with some t-subset of F_q^n \ {0} passing check_conditions,
/// searched over n(q-1)+1 <= t <= q^{n-2}(q-1) - 1. Infeasible when that
/// window is empty or exhausted. Requires n >= 2 and q^n <= 2^12.
SearchResult min_theorem_set_search(unsigned q, unsigned n, const SearchOptions& options = {});

/// Same enumeration without any pruning; for cross-checking at tiny sizes.
SearchResult min_blocking_search_unpruned(unsigned q, unsigned n, std::size_t size_cap);

struct TightnessReport {
    Point anchor;
    PointSet set;
    ConditionReport conditions;
    bool pass = false;
};

/// construct_tight with the least valid anchor, then check_conditions.
/// Throws Infeasible unless n(q-1)+1 < q^{n-2}(q-1).
TightnessReport verify_tightness(unsigned q, unsigned n);

} // namespace mincode
