/**************************************************************************
 * sets.hpp
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

#include "mincode/geometry.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mincode {

/// A point set S of F_q^n, held as sorted, deduplicated canonical indices.
/// The indicator of S is the function f defining the code C_f.
///
/// With allows_origin == false the origin is rejected (OriginPresent); that
/// is the regime for code construction and the three-condition check. The
/// blocking-set search runs with allows_origin == true.
class PointSet {
public:
    PointSet(Space space, std::vector<PointIndex> indices, bool allows_origin);
    PointSet(Space space, std::span<const Point> points, bool allows_origin);

    const Space& space() const noexcept { return space_; }
    unsigned q() const noexcept { return space_.q(); }
    unsigned n() const noexcept { return space_.n(); }
    bool allows_origin() const noexcept { return allows_origin_; }

    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    const std::vector<PointIndex>& indices() const noexcept { return indices_; }
    std::vector<Point> points() const;

    bool contains(PointIndex index) const;
    bool contains(const Point& x) const { return contains(space_.index(x)); }

    friend bool operator==(const PointSet& a, const PointSet& b) noexcept {
        return a.space_ == b.space_ && a.indices_ == b.indices_;
    }

private:
    Space space_;
    std::vector<PointIndex> indices_;
    bool allows_origin_;
};

/// Outcome of the three geometric conditions on S. Every failed condition
/// carries a witness: the hyperplane containing S, the hyperplane S misses,
/// or the size/bound pair.
struct ConditionReport {
    enum class Form { Affine, Binary };

    Form form = Form::Affine;

    bool affine_nondegenerate = false;
    std::optional<AffineHyperplane> containing_hyperplane;

    bool blocking = false;
    std::optional<AffineHyperplane> missed_hyperplane;

    bool size_ok = false;
    std::uint64_t size = 0;
    std::uint64_t bound = 0;

    bool all_hold() const noexcept { return affine_nondegenerate && blocking && size_ok; }
};

/// Not contained in any affine hyperplane, meets every affine hyperplane,
/// and |S| < q^{n-2}(q-1). Throws EmptySet, OriginPresent, DimensionTooSmall.
ConditionReport check_conditions(const PointSet& set);

/// The binary form: linear hyperplanes only and |S| < 2^{n-2}. For q = 2
/// all_hold() agrees with check_conditions. Throws NotBinary, plus the
/// errors of check_conditions.
ConditionReport check_conditions_binary(const PointSet& set);

/// True iff S meets every affine hyperplane. The origin may be a member.
bool is_affine_blocking(const PointSet& set);

/// First affine hyperplane (enumeration order) disjoint from S.
std::optional<AffineHyperplane> first_missed_hyperplane(const PointSet& set);

/// {a + lambda e_i}: n(q-1)+1 points, none of them the origin.
/// Throws BadAnchor when a is a multiple of a standard basis vector.
PointSet construct_tight(const Space& space, const Point& anchor);

/// Least-index valid anchor for construct_tight, i.e. (1, 1, 0, ..., 0).
Point least_tight_anchor(const Space& space);

struct SpreadUnion {
    PointSet set;
    /// s <= 2^{n/2-2}.
    bool ab_window = false;
};

/// Union of the nonzero points of the first s members of the Desarguesian
/// spread of F_2^n = F_{2^m} x F_{2^m}, m = n/2: U_inf = {(0, y)} then
/// U_g = {(x, g x)} for g = 0, 1, 2, ... in element-encoding order.
/// Coordinates 0..m-1 hold the bits of x, m..n-1 those of y.
/// Requires n even, 6 <= n <= 16, 2 <= s < 2^{n/2}.
SpreadUnion construct_spread_union(unsigned n, unsigned s);

/// Nonzero vectors of F_2^n of Hamming weight <= k; n >= 7, 2 <= k <= (n-3)/2.
PointSet construct_hamming_ball(unsigned n, unsigned k);

/// Set file: "q n" on the first line, then one point per line as n
/// integers; '#' starts a comment. Duplicate points are rejected.
PointSet parse_set(const std::string& text, bool allows_origin);
PointSet read_set_file(const std::string& path, bool allows_origin);
std::string format_set(const PointSet& set);
void write_set_file(const PointSet& set, const std::string& path);

} // namespace mincode
