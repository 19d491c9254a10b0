/**************************************************************************
 * support_mask.hpp
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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mincode {

/// Fixed-length bit mask over codeword coordinates.
class SupportMask {
public:
    SupportMask() = default;
    explicit SupportMask(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }

    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    // A subset of B iff (A AND NOT B) == 0.
    bool is_subset_of(const SupportMask& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    friend bool operator==(const SupportMask&, const SupportMask&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace mincode
