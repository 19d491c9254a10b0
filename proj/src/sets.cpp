/**************************************************************************
 * sets.cpp
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

#include "mincode/sets.hpp"

#include "mincode/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mincode {

PointSet::PointSet(Space space, std::vector<PointIndex> indices, bool allows_origin)
    : space_(std::move(space)), indices_(std::move(indices)), allows_origin_(allows_origin) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.back() >= space_.point_count())
        throw Error(ErrorCode::ParameterOutOfRange, "point index outside F_q^n");
    if (!allows_origin_ && !indices_.empty() && indices_.front() == 0)
        throw Error(ErrorCode::OriginPresent, "the origin is not allowed in this set");
}

namespace {

std::vector<PointIndex> to_indices(const Space& space, std::span<const Point> points) {
    std::vector<PointIndex> out;
    out.reserve(points.size());
    for (const Point& x : points) out.push_back(space.index(x));
    return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

void require_condition_preconditions(const PointSet& set) {
    if (set.empty()) throw Error(ErrorCode::EmptySet, "S must be nonempty");
    if (set.contains(PointIndex{0})) throw Error(ErrorCode::OriginPresent, "S must not contain the origin");
    if (set.n() < 2) throw Error(ErrorCode::DimensionTooSmall, "the conditions need n >= 2");
}

// First hyperplane missed by S, scanning directions in index order and, per
// direction, the values v . s actually attained.
std::optional<AffineHyperplane> scan_missed(const PointSet& set, bool linear_only) {
    const Space& space = set.space();
    const Field& field = space.field();
    const std::vector<Point> pts = set.points();
    std::vector<bool> hit(space.q());
    for (Point& v : enumerate_directions(space)) {
        std::fill(hit.begin(), hit.end(), false);
        for (const Point& s : pts) hit[dot(field, v, s)] = true;
        const unsigned last = linear_only ? 1 : space.q();
        for (unsigned alpha = 0; alpha < last; ++alpha)
            if (!hit[alpha]) return AffineHyperplane{std::move(v), static_cast<Element>(alpha)};
    }
    return std::nullopt;
}

} // namespace

PointSet::PointSet(Space space, std::span<const Point> points, bool allows_origin)
    : PointSet(space, to_indices(space, points), allows_origin) {}

std::vector<Point> PointSet::points() const {
    std::vector<Point> out;
    out.reserve(indices_.size());
    for (PointIndex i : indices_) out.push_back(space_.point(i));
    return out;
}

bool PointSet::contains(PointIndex index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

ConditionReport check_conditions(const PointSet& set) {
    require_condition_preconditions(set);
    const Space& space = set.space();
    ConditionReport report;
    report.form = ConditionReport::Form::Affine;

    const std::vector<Point> pts = set.points();
    report.containing_hyperplane = affine_cover(space, pts);
    report.affine_nondegenerate = !report.containing_hyperplane;

    report.missed_hyperplane = scan_missed(set, false);
    report.blocking = !report.missed_hyperplane;

    report.size = set.size();
    report.bound = ipow(space.q(), space.n() - 2) * (space.q() - 1);
    report.size_ok = report.size < report.bound;
    return report;
}

ConditionReport check_conditions_binary(const PointSet& set) {
    if (set.q() != 2) throw Error(ErrorCode::NotBinary, "the binary conditions need q = 2");
    require_condition_preconditions(set);
    const Space& space = set.space();
    ConditionReport report;
    report.form = ConditionReport::Form::Binary;

    const std::vector<Point> pts = set.points();
    report.containing_hyperplane = linear_cover(space, pts);
    report.affine_nondegenerate = !report.containing_hyperplane;

    report.missed_hyperplane = scan_missed(set, true);
    report.blocking = !report.missed_hyperplane;

    report.size = set.size();
    report.bound = ipow(2, space.n() - 2);
    report.size_ok = report.size < report.bound;
    return report;
}

std::optional<AffineHyperplane> first_missed_hyperplane(const PointSet& set) {
    return scan_missed(set, false);
}

bool is_affine_blocking(const PointSet& set) {
    return !scan_missed(set, false);
}

PointSet construct_tight(const Space& space, const Point& anchor) {
    space.validate(anchor);
    const auto nonzero = std::count_if(anchor.coords.begin(), anchor.coords.end(), [](Element c) { return c != 0; });
    if (nonzero < 2)
        throw Error(ErrorCode::BadAnchor, "anchor " + format_point(anchor, ',') + " is a multiple of a basis vector");
    if (space.n() < 2) throw Error(ErrorCode::DimensionTooSmall, "construction needs n >= 2");

    const Field& field = space.field();
    std::vector<PointIndex> indices;
    indices.reserve(space.n() * (space.q() - 1) + 1);
    for (unsigned i = 0; i < space.n(); ++i) {
        for (unsigned lambda = 0; lambda < space.q(); ++lambda) {
            Point x = anchor;
            x.coords[i] = field.add(x.coords[i], static_cast<Element>(lambda));
            indices.push_back(space.index(x));
        }
    }
    PointSet set(space, std::move(indices), false);
    if (set.size() != space.n() * (space.q() - 1) + 1)
        throw std::logic_error("construct_tight produced the wrong number of points");
    return set;
}

Point least_tight_anchor(const Space& space) {
    if (space.n() < 2) throw Error(ErrorCode::DimensionTooSmall, "construction needs n >= 2");
    Point a;
    a.coords.assign(space.n(), 0);
    a.coords[0] = 1;
    a.coords[1] = 1;
    return a;
}

SpreadUnion construct_spread_union(unsigned n, unsigned s) {
    if (n < 6 || n > 16 || n % 2 != 0)
        throw Error(ErrorCode::ParameterOutOfRange, "spread union needs even n with 6 <= n <= 16");
    const unsigned m = n / 2;
    const unsigned half = 1u << m;
    if (s < 2 || s >= half)
        throw Error(ErrorCode::ParameterOutOfRange,
                    "spread order s must satisfy 2 <= s <= 2^{n/2} - 1, got " + std::to_string(s));

    const FieldPtr big = field_new(half);
    const Space space(2, n);
    auto index_of = [&](unsigned x, unsigned y) { return static_cast<PointIndex>(x | (y << m)); };

    std::vector<PointIndex> indices;
    std::vector<bool> seen(space.point_count(), false);
    auto take = [&](PointIndex idx) {
        if (seen[idx]) throw std::logic_error("spread members intersect outside the origin");
        seen[idx] = true;
        indices.push_back(idx);
    };

    // U_inf, then U_gamma for gamma = 0, 1, ... in encoding order.
    for (unsigned y = 1; y < half; ++y) take(index_of(0, y));
    for (unsigned gamma = 0; gamma + 1 < s; ++gamma)
        for (unsigned x = 1; x < half; ++x)
            take(index_of(x, big->mul(static_cast<Element>(gamma), static_cast<Element>(x))));

    SpreadUnion out{PointSet(space, std::move(indices), false), false};
    out.ab_window = m >= 2 && s <= (1u << (m - 2));
    return out;
}

PointSet construct_hamming_ball(unsigned n, unsigned k) {
    if (n < 7 || n > 28) throw Error(ErrorCode::ParameterOutOfRange, "Hamming ball needs 7 <= n <= 28");
    if (k < 2 || k > (n - 3) / 2)
        throw Error(ErrorCode::ParameterOutOfRange,
                    "Hamming ball radius must satisfy 2 <= k <= floor((n-3)/2), got " + std::to_string(k));
    const Space space(2, n);
    std::vector<PointIndex> indices;
    for (std::uint64_t x = 1; x < space.point_count(); ++x)
        if (static_cast<unsigned>(__builtin_popcountll(x)) <= k) indices.push_back(static_cast<PointIndex>(x));
    return PointSet(space, std::move(indices), false);
}

PointSet parse_set(const std::string& text, bool allows_origin) {
    std::istringstream in(text);
    std::string line;
    std::optional<Space> space;
    std::vector<PointIndex> indices;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (!space) {
            std::istringstream header(line);
            long long q = 0, n = 0;
            std::string extra;
            if (!(header >> q >> n) || (header >> extra))
                throw Error(ErrorCode::ParseError, where + "expected header 'q n'");
            if (q < 2 || q > 65536 || n < 1 || n > 64)
                throw Error(ErrorCode::ParseError, where + "header values out of range");
            space.emplace(static_cast<unsigned>(q), static_cast<unsigned>(n));
            continue;
        }
        Point x;
        try {
            x = parse_point(*space, line);
        } catch (const Error& e) {
            throw Error(e.code() == ErrorCode::InvalidElement ? ErrorCode::InvalidElement : ErrorCode::ParseError,
                        where + e.what());
        }
        const PointIndex idx = space->index(x);
        if (idx == 0 && !allows_origin)
            throw Error(ErrorCode::OriginPresent, where + "the origin is not allowed in this set");
        indices.push_back(idx);
    }
    if (!space) throw Error(ErrorCode::ParseError, "missing header 'q n'");
    std::vector<PointIndex> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
        throw Error(ErrorCode::DuplicatePoint, "duplicate point " + format_point(space->point(*dup)));
    return PointSet(*space, std::move(indices), allows_origin);
}

PointSet read_set_file(const std::string& path, bool allows_origin) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open set file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_set(buf.str(), allows_origin);
}

std::string format_set(const PointSet& set) {
    std::string out = std::to_string(set.q()) + " " + std::to_string(set.n()) + "\n";
    for (PointIndex i : set.indices()) out += format_point(set.space().point(i)) + "\n";
    return out;
}

void write_set_file(const PointSet& set, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write set file '" + path + "'");
    out << format_set(set);
    if (!out) throw Error(ErrorCode::IoError, "failed writing set file '" + path + "'");
}

} // namespace mincode
