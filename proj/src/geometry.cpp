/**************************************************************************
 * geometry.cpp
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

#include "mincode/geometry.hpp"

#include "mincode/error.hpp"
#include "mincode/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace mincode {

namespace {

constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 28;

} // namespace

bool Point::is_zero() const noexcept {
    return std::all_of(coords.begin(), coords.end(), [](Element c) { return c == 0; });
}

Space::Space(FieldPtr field, unsigned n) : field_(std::move(field)), n_(n), count_(1) {
    if (n_ == 0) throw Error(ErrorCode::ParameterOutOfRange, "dimension n must be at least 1");
    for (unsigned i = 0; i < n_; ++i) {
        count_ *= field_->order();
        if (count_ > kMaxPoints)
            throw Error(ErrorCode::ParameterOutOfRange, "q^n exceeds 2^28 points");
    }
}

PointIndex Space::index(const Point& x) const {
    validate(x);
    std::uint64_t idx = 0;
    for (unsigned i = n_; i-- > 0;) idx = idx * q() + x.coords[i];
    return static_cast<PointIndex>(idx);
}

Point Space::point(PointIndex index) const {
    Point x;
    x.coords.resize(n_);
    for (unsigned i = 0; i < n_; ++i) {
        x.coords[i] = static_cast<Element>(index % q());
        index /= q();
    }
    return x;
}

void Space::validate(const Point& x) const {
    if (x.dimension() != n_)
        throw Error(ErrorCode::DimensionMismatch,
                    "point has " + std::to_string(x.dimension()) + " coordinates, expected " + std::to_string(n_));
    for (Element c : x.coords)
        if (!field_->contains(c))
            throw Error(ErrorCode::InvalidElement, std::to_string(c) + " is not an element of F_" + std::to_string(q()));
}

Element Space::dot(const Point& u, const Point& v) const {
    return mincode::dot(*field_, u, v);
}

Point Space::basis_vector(unsigned i) const {
    Point e;
    e.coords.assign(n_, 0);
    e.coords.at(i) = 1;
    return e;
}

Element dot(const Field& field, const Point& u, const Point& v) {
    if (u.dimension() != v.dimension())
        throw Error(ErrorCode::DimensionMismatch, "dot product of vectors with different lengths");
    Element sum = 0;
    for (std::size_t i = 0; i < u.dimension(); ++i) sum = field.add(sum, field.mul(u.coords[i], v.coords[i]));
    return sum;
}

AffineHyperplane canonical_hyperplane(const Field& field, Point v, Element alpha) {
    auto lead = std::find_if(v.coords.begin(), v.coords.end(), [](Element c) { return c != 0; });
    if (lead == v.coords.end()) throw Error(ErrorCode::ParameterOutOfRange, "hyperplane normal must be nonzero");
    const Element scale = field.inv(*lead);
    for (Element& c : v.coords) c = field.mul(c, scale);
    return {std::move(v), field.mul(alpha, scale)};
}

bool hyperplane_contains(const Field& field, const AffineHyperplane& h, const Point& x) {
    return dot(field, h.normal, x) == h.alpha;
}

std::vector<Point> enumerate_points(const Space& space, bool include_origin) {
    std::vector<Point> out;
    out.reserve(space.point_count());
    for (std::uint64_t i = include_origin ? 0 : 1; i < space.point_count(); ++i)
        out.push_back(space.point(static_cast<PointIndex>(i)));
    return out;
}

std::vector<Point> enumerate_directions(const Space& space) {
    std::vector<Point> out;
    out.reserve(space.direction_count());
    for (std::uint64_t i = 1; i < space.point_count(); ++i) {
        Point v = space.point(static_cast<PointIndex>(i));
        auto lead = std::find_if(v.coords.begin(), v.coords.end(), [](Element c) { return c != 0; });
        if (*lead == 1) out.push_back(std::move(v));
    }
    return out;
}

std::vector<AffineHyperplane> enumerate_affine_hyperplanes(const Space& space) {
    std::vector<AffineHyperplane> out;
    out.reserve(space.affine_hyperplane_count());
    for (Point& v : enumerate_directions(space))
        for (unsigned alpha = 0; alpha < space.q(); ++alpha) out.push_back({v, static_cast<Element>(alpha)});
    return out;
}

namespace {

// Least-index canonical v with v . r = 0 for every row, if any. Columns are
// stored most significant coordinate first so that, in the RREF of the
// solution space, the row with the least significant pivot spans the only
// projective class of least index.
std::optional<Point> least_normal(const Field& field, unsigned n, const Matrix& rows) {
    const auto basis = nullspace(field, rows);
    if (basis.empty()) return std::nullopt;
    Matrix normals(0, n);
    for (const auto& b : basis) normals.append_row(b);
    const Echelon e = row_reduce(field, normals);
    const std::size_t last = e.rank() - 1;
    Point v;
    v.coords.resize(n);
    for (unsigned i = 0; i < n; ++i) v.coords[i] = e.reduced(last, n - 1 - i);
    return canonical_hyperplane(field, std::move(v), 0).normal;
}

} // namespace

std::optional<AffineHyperplane> affine_cover(const Space& space, std::span<const Point> points) {
    if (points.empty()) throw Error(ErrorCode::EmptySet, "affine cover of an empty set");
    const Field& field = space.field();
    const unsigned n = space.n();
    for (const Point& s : points) space.validate(s);

    // v . s = alpha for all s  <=>  v . (s - s0) = 0 and alpha = v . s0.
    Matrix diffs(0, n);
    const Point& s0 = points.front();
    for (const Point& s : points.subspan(1)) {
        std::vector<Element> row(n);
        for (unsigned i = 0; i < n; ++i) row[n - 1 - i] = field.sub(s.coords[i], s0.coords[i]);
        diffs.append_row(row);
    }
    auto v = least_normal(field, n, diffs);
    if (!v) return std::nullopt;
    const Element alpha = dot(field, *v, s0);
    return AffineHyperplane{std::move(*v), alpha};
}

std::optional<AffineHyperplane> linear_cover(const Space& space, std::span<const Point> points) {
    const Field& field = space.field();
    const unsigned n = space.n();
    Matrix rows(0, n);
    for (const Point& s : points) {
        space.validate(s);
        std::vector<Element> row(n);
        for (unsigned i = 0; i < n; ++i) row[n - 1 - i] = s.coords[i];
        rows.append_row(row);
    }
    auto v = least_normal(field, n, rows);
    if (!v) return std::nullopt;
    return AffineHyperplane{std::move(*v), 0};
}

Point parse_point(const Space& space, const std::string& text) {
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream in(normalized);
    Point x;
    long long value = 0;
    while (in >> value) x.coords.push_back(space.field().element(value));
    if (!in.eof()) throw Error(ErrorCode::ParseError, "malformed point '" + text + "'");
    space.validate(x);
    return x;
}

std::string format_point(const Point& x, char separator) {
    std::string out;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (i) out += separator;
        out += std::to_string(x.coords[i]);
    }
    return out;
}

} // namespace mincode
