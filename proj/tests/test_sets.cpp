/**************************************************************************
 * test_sets.cpp
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

#include "doctest.h"
#include "oracles.hpp"

#include "mincode/error.hpp"
#include "mincode/sets.hpp"

#include <cstdio>
#include <filesystem>
#include <random>

using namespace mincode;

namespace {

Point pt(std::initializer_list<int> c) {
    Point p;
    for (int v : c) p.coords.push_back(static_cast<Element>(v));
    return p;
}

ErrorCode error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::UsageError;  // sentinel: nothing thrown
}

PointSet from_mask(const Space& space, std::uint64_t mask, bool allows_origin) {
    std::vector<PointIndex> idx;
    for (PointIndex i = 0; i < space.point_count(); ++i)
        if (mask >> i & 1) idx.push_back(i);
    return PointSet(space, std::move(idx), allows_origin);
}

std::uint64_t hamming(PointIndex x) { return static_cast<std::uint64_t>(__builtin_popcount(x)); }

} // namespace

TEST_CASE("PointSet sorts, deduplicates and guards the origin") {
    const Space space(3, 2);
    const PointSet s(space, std::vector<PointIndex>{5, 1, 5, 3}, false);
    CHECK(s.indices() == std::vector<PointIndex>{1, 3, 5});
    CHECK(s.contains(pt({0, 1})));
    CHECK_FALSE(s.contains(pt({1, 1})));
    CHECK(error_of([&] { PointSet(space, std::vector<PointIndex>{0, 1}, false); }) == ErrorCode::OriginPresent);
    CHECK(PointSet(space, std::vector<PointIndex>{0, 1}, true).size() == 2);
}

TEST_CASE("tight construction at q=3, n=4 passes all three conditions") {
    const Space space(3, 4);
    const PointSet s = construct_tight(space, pt({1, 1, 1, 1}));
    CHECK(s.size() == 9);
    const ConditionReport r = check_conditions(s);
    CHECK(r.affine_nondegenerate);
    CHECK(r.blocking);
    CHECK(r.size_ok);
    CHECK(r.size == 9);
    CHECK(r.bound == 18);
    CHECK(r.all_hold());
    CHECK_FALSE(r.containing_hyperplane.has_value());
    CHECK_FALSE(r.missed_hyperplane.has_value());
    const auto o = oracle::check_conditions(space, s.points());
    CHECK(o.all());
}

TEST_CASE("a single point fails non-degeneracy and blocking with witnesses") {
    const Space space(2, 5);
    const PointSet s(space, std::vector<PointIndex>{1}, false);
    const ConditionReport r = check_conditions(s);
    CHECK_FALSE(r.affine_nondegenerate);
    REQUIRE(r.containing_hyperplane.has_value());
    CHECK(hyperplane_contains(space.field(), *r.containing_hyperplane, space.point(1)));
    CHECK_FALSE(r.blocking);
    REQUIRE(r.missed_hyperplane.has_value());
    CHECK_FALSE(hyperplane_contains(space.field(), *r.missed_hyperplane, space.point(1)));
    CHECK(r.size_ok);
}

TEST_CASE("q=2, n=4: a blocking spanning 5-set fails only the size bound") {
    const Space space(2, 4);
    const PointSet s = construct_tight(space, pt({1, 1, 0, 0}));
    REQUIRE(s.size() == 5);
    const ConditionReport r = check_conditions(s);
    CHECK(r.affine_nondegenerate);
    CHECK(r.blocking);
    CHECK_FALSE(r.size_ok);
    CHECK(r.bound == 4);
    // No subset of F_2^4 \ {0} passes all three.
    bool any = false;
    for (std::uint64_t mask = 2; mask < (1u << 16); mask += 2)
        any = any || check_conditions(from_mask(space, mask, false)).all_hold();
    CHECK_FALSE(any);
}

TEST_CASE("check_conditions errors") {
    CHECK(error_of([] { check_conditions(PointSet(Space(2, 3), std::vector<PointIndex>{}, false)); }) ==
          ErrorCode::EmptySet);
    CHECK(error_of([] { check_conditions(PointSet(Space(2, 3), std::vector<PointIndex>{0, 1}, true)); }) ==
          ErrorCode::OriginPresent);
    CHECK(error_of([] { check_conditions(PointSet(Space(3, 1), std::vector<PointIndex>{1}, false)); }) ==
          ErrorCode::DimensionTooSmall);
    CHECK(error_of([] { check_conditions_binary(PointSet(Space(3, 3), std::vector<PointIndex>{1}, false)); }) ==
          ErrorCode::NotBinary);
}

TEST_CASE("check_conditions matches the enumeration oracle on random sets") {
    std::mt19937 rng(11);
    for (unsigned q : {2u, 3u})
        for (unsigned n = 2; n <= 4; ++n) {
            const Space space(q, n);
            std::uniform_int_distribution<PointIndex> pick(1, static_cast<PointIndex>(space.point_count() - 1));
            for (int trial = 0; trial < 200; ++trial) {
                std::vector<PointIndex> idx;
                const std::size_t k = 1 + trial % (2 * n * q);
                for (std::size_t i = 0; i < k; ++i) idx.push_back(pick(rng));
                const PointSet s(space, idx, false);
                const auto r = check_conditions(s);
                const auto o = oracle::check_conditions(space, s.points());
                CHECK(r.affine_nondegenerate == o.nondegenerate);
                CHECK(r.blocking == o.blocking);
                CHECK(r.size_ok == o.size_ok);
                CHECK(r.blocking == is_affine_blocking(s));
                if (!r.blocking) {
                    // Witness is genuinely missed and is the first missed hyperplane.
                    REQUIRE(r.missed_hyperplane.has_value());
                    for (const Point& x : s.points())
                        CHECK_FALSE(hyperplane_contains(space.field(), *r.missed_hyperplane, x));
                    for (const auto& h : enumerate_affine_hyperplanes(space)) {
                        bool hit = false;
                        for (const Point& x : s.points()) hit = hit || hyperplane_contains(space.field(), h, x);
                        if (!hit) {
                            CHECK(h == *r.missed_hyperplane);
                            break;
                        }
                    }
                }
            }
        }
}

TEST_CASE("binary form agrees with the affine form for every subset of F_2^4 and random F_2^5, F_2^6 sets") {
    const Space s4(2, 4);
    std::size_t disagreements = 0;
    for (std::uint64_t mask = 2; mask < (1u << 16); mask += 2) {
        const PointSet s = from_mask(s4, mask, false);
        disagreements += check_conditions(s).all_hold() != check_conditions_binary(s).all_hold();
    }
    CHECK(disagreements == 0);

    std::mt19937 rng(5);
    std::size_t both_hold = 0;
    for (unsigned n : {5u, 6u}) {
        const Space space(2, n);
        std::uniform_int_distribution<PointIndex> pick(1, static_cast<PointIndex>(space.point_count() - 1));
        for (int trial = 0; trial < 3000; ++trial) {
            std::vector<PointIndex> idx;
            const std::size_t k = n + 1 + trial % (space.point_count() / 4);
            for (std::size_t i = 0; i < k; ++i) idx.push_back(pick(rng));
            const PointSet s(space, idx, false);
            const bool a = check_conditions(s).all_hold();
            CHECK(a == check_conditions_binary(s).all_hold());
            both_hold += a;
        }
    }
    MESSAGE("random sets passing all conditions: " << both_hold);
}

TEST_CASE("binary-form examples") {
    const auto spread = construct_spread_union(6, 2).set;
    const auto r1 = check_conditions_binary(spread);
    CHECK(r1.all_hold());
    CHECK(r1.size == 14);
    CHECK(r1.bound == 16);
    CHECK(r1.form == ConditionReport::Form::Binary);

    const auto ball = construct_hamming_ball(7, 2);
    const auto r2 = check_conditions_binary(ball);
    CHECK(r2.all_hold());
    CHECK(r2.size == 28);
    CHECK(r2.bound == 32);

    // H(v)* lies in the hyperplane H(v).
    const Space space(2, 4);
    const Point v = pt({1, 0, 1, 1});
    std::vector<PointIndex> idx;
    for (PointIndex i = 1; i < space.point_count(); ++i)
        if (space.dot(v, space.point(i)) == 0) idx.push_back(i);
    const auto r3 = check_conditions_binary(PointSet(space, idx, false));
    CHECK_FALSE(r3.affine_nondegenerate);
    REQUIRE(r3.containing_hyperplane.has_value());
    CHECK(r3.containing_hyperplane->alpha == 0);
}

TEST_CASE("construct_tight examples and errors") {
    CHECK(construct_tight(Space(2, 5), pt({1, 1, 0, 0, 0})).size() == 6);
    CHECK(error_of([] { construct_tight(Space(2, 3), pt({1, 0, 0})); }) == ErrorCode::BadAnchor);
    CHECK(error_of([] { construct_tight(Space(3, 3), pt({0, 2, 0})); }) == ErrorCode::BadAnchor);
    CHECK(error_of([] { construct_tight(Space(3, 3), pt({0, 0, 0})); }) == ErrorCode::BadAnchor);
    CHECK(least_tight_anchor(Space(3, 4)) == pt({1, 1, 0, 0}));
}

TEST_CASE("construct_tight matches its definition and passes whenever the window is open") {
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (unsigned n = 2; n <= 5; ++n) {
            const Space space(q, n);
            if (space.point_count() > 4096) continue;
            CAPTURE(q);
            CAPTURE(n);
            std::uint64_t bound = q - 1;
            for (unsigned i = 2; i < n; ++i) bound *= q;
            const std::uint64_t tight = n * (q - 1) + 1;
            for (PointIndex a = 1; a < space.point_count(); a += 1 + space.point_count() / 40) {
                const Point anchor = space.point(a);
                std::size_t nonzero = 0;
                for (auto c : anchor.coords) nonzero += c != 0;
                if (nonzero < 2) continue;
                const PointSet s = construct_tight(space, anchor);
                // {a + lambda e_i} built directly.
                std::vector<PointIndex> expect;
                for (unsigned i = 0; i < n; ++i)
                    for (unsigned lambda = 0; lambda < q; ++lambda) {
                        Point x = anchor;
                        x.coords[i] = space.field().add(x.coords[i], static_cast<Element>(lambda));
                        expect.push_back(space.index(x));
                    }
                CHECK(s == PointSet(space, expect, false));
                CHECK(s.size() == tight);
                if (tight < bound) {
                    CHECK(check_conditions(s).all_hold());
                    CHECK(oracle::check_conditions(space, s.points()).all());
                }
            }
        }
}

TEST_CASE("spread union matches a direct construction over F_{2^{n/2}}") {
    for (unsigned n : {6u, 8u}) {
        const unsigned h = n / 2;
        const unsigned m = 1u << h;
        const Field big(m);
        for (unsigned s = 2; s < m; ++s) {
            CAPTURE(n);
            CAPTURE(s);
            std::vector<std::vector<PointIndex>> subspaces;
            std::vector<PointIndex> inf;
            for (unsigned y = 1; y < m; ++y) inf.push_back(y << h);
            subspaces.push_back(inf);
            for (unsigned gamma = 0; subspaces.size() < s; ++gamma) {
                std::vector<PointIndex> u;
                for (unsigned x = 1; x < m; ++x)
                    u.push_back(x | oracle::poly_mul(gamma, x, 2, big.modulus()) << h);
                subspaces.push_back(u);
            }
            // Each member is a subspace (closed under xor) and members meet only at 0.
            for (std::size_t i = 0; i < subspaces.size(); ++i) {
                std::vector<bool> member(std::size_t{1} << n, false);
                for (auto x : subspaces[i]) member[x] = true;
                bool closed = true;
                for (auto a : subspaces[i])
                    for (auto b : subspaces[i]) closed = closed && (a == b || member[a ^ b]);
                CHECK(closed);
                for (std::size_t j = i + 1; j < subspaces.size(); ++j)
                    for (auto x : subspaces[j]) CHECK_FALSE(member[x]);
            }
            std::vector<PointIndex> all;
            for (const auto& u : subspaces) all.insert(all.end(), u.begin(), u.end());
            const auto built = construct_spread_union(n, s);
            CHECK(built.set == PointSet(Space(2, n), all, false));
            CHECK(built.set.size() == s * (m - 1));
            CHECK(built.ab_window == (s <= m / 4));
            CHECK_FALSE(linear_cover(Space(2, n), built.set.points()).has_value());
        }
    }
}

TEST_CASE("spread union examples and errors") {
    const auto a = construct_spread_union(6, 2);
    CHECK(a.set.size() == 14);
    CHECK(a.ab_window);
    const auto b = construct_spread_union(8, 4);
    CHECK(b.set.size() == 60);
    CHECK(b.ab_window);
    CHECK_FALSE(construct_spread_union(8, 5).ab_window);
    for (auto [n, s] : {std::pair{4u, 2u}, {5u, 2u}, {7u, 2u}, {6u, 1u}, {6u, 8u}, {6u, 9u}, {8u, 16u}})
        CHECK(error_of([&] { construct_spread_union(n, s); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("Hamming ball") {
    const auto b = construct_hamming_ball(7, 2);
    CHECK(b.size() == 28);
    for (auto x : b.indices()) CHECK(hamming(x) <= 2);
    CHECK(construct_hamming_ball(9, 3).size() == 9 + 36 + 84);
    std::size_t count = 0;
    for (PointIndex x = 1; x < (1u << 10); ++x) count += hamming(x) <= 3;
    CHECK(construct_hamming_ball(10, 3).size() == count);
    CHECK(error_of([] { construct_hamming_ball(7, 3); }) == ErrorCode::ParameterOutOfRange);
    CHECK(error_of([] { construct_hamming_ball(7, 1); }) == ErrorCode::ParameterOutOfRange);
    CHECK(error_of([] { construct_hamming_ball(6, 2); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("is_affine_blocking examples") {
    const Space space(2, 2);
    CHECK(is_affine_blocking(PointSet(space, std::vector<PointIndex>{0, 1, 2}, true)));
    const PointSet diag(space, std::vector<PointIndex>{0, 3}, true);
    CHECK_FALSE(is_affine_blocking(diag));
    REQUIRE(first_missed_hyperplane(diag).has_value());
    CHECK(*first_missed_hyperplane(diag) == AffineHyperplane{pt({1, 1}), 1});
}

TEST_CASE("sets no larger than n(q-1) never block; blocking agrees with the oracle") {
    std::mt19937 rng(3);
    for (unsigned q : {2u, 3u, 4u})
        for (unsigned n = 1; n <= 3; ++n) {
            const Space space(q, n);
            std::uniform_int_distribution<PointIndex> pick(0, static_cast<PointIndex>(space.point_count() - 1));
            for (int trial = 0; trial < 300; ++trial) {
                std::vector<PointIndex> idx;
                const std::size_t k = 1 + trial % (2 * n * (q - 1) + 2);
                for (std::size_t i = 0; i < k; ++i) idx.push_back(pick(rng));
                const PointSet s(space, idx, true);
                const bool blocking = is_affine_blocking(s);
                CHECK(blocking == oracle::is_affine_blocking(space, s.points()));
                if (s.size() <= n * (q - 1)) CHECK_FALSE(blocking);
            }
        }
}

TEST_CASE("set file format") {
    const PointSet s = parse_set("# a set\n3 2\n1 0\n0 1  # comment\n\n2 2\n", false);
    CHECK(s.q() == 3);
    CHECK(s.n() == 2);
    CHECK(s.indices() == std::vector<PointIndex>{1, 3, 8});
    CHECK(parse_set(format_set(s), false) == s);

    CHECK(error_of([] { parse_set("2 2\n1 0\n1 0\n", false); }) == ErrorCode::DuplicatePoint);
    CHECK(error_of([] { parse_set("2 2\n0 0\n", false); }) == ErrorCode::OriginPresent);
    CHECK(parse_set("2 2\n0 0\n", true).size() == 1);
    CHECK(error_of([] { parse_set("2 2\n1 0 1\n", false); }) == ErrorCode::ParseError);
    CHECK(error_of([] { parse_set("2 2\n1 2\n", false); }) == ErrorCode::InvalidElement);
    CHECK(error_of([] { parse_set("6 2\n1 0\n", false); }) == ErrorCode::NotPrimePower);
    CHECK(error_of([] { parse_set("", false); }) == ErrorCode::ParseError);
    CHECK(error_of([] { parse_set("2\n", false); }) == ErrorCode::ParseError);

    const auto path = (std::filesystem::temp_directory_path() / "mincode_sets_roundtrip.txt").string();
    write_set_file(construct_hamming_ball(7, 2), path);
    CHECK(read_set_file(path, false) == construct_hamming_ball(7, 2));
    std::remove(path.c_str());
    CHECK(error_of([] { read_set_file("/nonexistent/dir/x.txt", false); }) == ErrorCode::IoError);
}
