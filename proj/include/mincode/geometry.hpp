/**************************************************************************
 * geometry.hpp
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

#include "mincode/gf.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mincode {

using PointIndex = std::uint32_t;

/// A point of F_q^n as a list of element encodings.
struct Point {
    std::vector<Element> coords;

    std::size_t dimension() const noexcept { return coords.size(); }
    bool is_zero() const noexcept;

    friend bool operator==(const Point&, const Point&) = default;
};

/// {x : normal . x = alpha}. Always held in canonical form: the first
/// (lowest-index) nonzero coordinate of the normal is 1.
struct AffineHyperplane {
    Point normal;
    Element alpha = 0;

    bool is_linear() const noexcept { return alpha == 0; }

    friend bool operator==(const AffineHyperplane&, const AffineHyperplane&) = default;
};

/// The ambient space F_q^n with its canonical point indexing:
/// index(x) = sum x_i q^i, coordinate 0 least significant.
class Space {
public:
    Space(FieldPtr field, unsigned n);
    Space(unsigned q, unsigned n) : Space(field_new(q), n) {}

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    unsigned q() const noexcept { return field_->order(); }
    unsigned n() const noexcept { return n_; }

    /// q^n.
    std::uint64_t point_count() const noexcept { return count_; }
    /// (q^n - 1) / (q - 1): number of hyperplane directions, and also the
    /// number of affine hyperplanes through any one point.
    std::uint64_t direction_count() const noexcept { return (count_ - 1) / (q() - 1); }
    /// q (q^n - 1) / (q - 1).
    std::uint64_t affine_hyperplane_count() const noexcept { return q() * direction_count(); }

    PointIndex index(const Point& x) const;
    Point point(PointIndex index) const;
    /// Throws DimensionMismatch or InvalidElement.
    void validate(const Point& x) const;

    Element dot(const Point& u, const Point& v) const;
    Point basis_vector(unsigned i) const;

    friend bool operator==(const Space& a, const Space& b) noexcept {
        return a.q() == b.q() && a.n_ == b.n_;
    }

private:
    FieldPtr field_;
    unsigned n_;
    std::uint64_t count_;
};

/// Throws DimensionMismatch when the lengths differ.
Element dot(const Field& field, const Point& u, const Point& v);

/// Scales (v, alpha) so the first nonzero coordinate of v is 1. Throws
/// ParameterOutOfRange for v == 0.
AffineHyperplane canonical_hyperplane(const Field& field, Point v, Element alpha);

bool hyperplane_contains(const Field& field, const AffineHyperplane& h, const Point& x);

/// Points in increasing canonical index; starts at index 1 without the origin.
std::vector<Point> enumerate_points(const Space& space, bool include_origin);

/// Canonical normals in increasing point index.
std::vector<Point> enumerate_directions(const Space& space);

/// Every affine hyperplane once: directions by point index, then alpha ascending.
std::vector<AffineHyperplane> enumerate_affine_hyperplanes(const Space& space);

/// The first affine hyperplane (enumeration order) containing all of `points`,
/// or nullopt when their affine hull is all of F_q^n. Solved by elimination
/// on the homogeneous system v . s - alpha = 0. Throws EmptySet.
std::optional<AffineHyperplane> affine_cover(const Space& space, std::span<const Point> points);

/// The first linear hyperplane H(v) (alpha == 0) containing all of `points`,
/// or nullopt when they span F_q^n.
std::optional<AffineHyperplane> linear_cover(const Space& space, std::span<const Point> points);

/// Parses "a b c" or "a,b,c" into a point of the given space.
Point parse_point(const Space& space, const std::string& text);
std::string format_point(const Point& x, char separator = ' ');

} // namespace mincode
