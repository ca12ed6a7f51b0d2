// Copyright 2026 The treehardy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <treehardy/tree.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <ranges>

namespace th = treehardy;

TEST(Geometry, RejectsZeroBranching) { EXPECT_THROW(th::TreeGeometry(0), th::InvalidGeometry); }

TEST(LevelSize, SmallValues) {
    EXPECT_EQ(th::level_size(th::TreeGeometry(3), 0), 1);
    EXPECT_EQ(th::level_size(th::TreeGeometry(3), 2), 12);
    EXPECT_EQ(th::level_size(th::TreeGeometry(1), 5), 2);
    EXPECT_EQ(th::level_size(th::TreeGeometry(2), 3), 12);
}

TEST(LevelSize, ExactBeyond64Bits) {
    // 3 * 2^99 written out in decimal
    const th::BigInt want("1901475900342344102245054808064");
    EXPECT_EQ(th::level_size(th::TreeGeometry(2), 100), want);
    EXPECT_FALSE(th::level_size_u64(th::TreeGeometry(2), 100).has_value());
    EXPECT_EQ(th::level_size_u64(th::TreeGeometry(2), 10).value(), 1536u);
}

TEST(LevelSize, Recurrence) {
    for (std::uint32_t q : {1u, 2u, 3u, 5u}) {
        const th::TreeGeometry geo(q);
        EXPECT_EQ(th::level_size(geo, 1), q + 1);
        for (unsigned n = 2; n <= 80; ++n) EXPECT_EQ(th::level_size(geo, n), q * th::level_size(geo, n - 1));
    }
}

TEST(LogLevelSize, Values) {
    EXPECT_EQ(th::log_level_size(th::TreeGeometry(3), 0), 0.0);
    EXPECT_NEAR(th::log_level_size(th::TreeGeometry(3), 2), std::log(12.0), 1e-15);
    const double got = th::log_level_size(th::TreeGeometry(2), 40);
    const double want = std::log(3.0) + 39 * std::log(2.0);
    EXPECT_LE(std::abs(got - want) / want, 1e-14);
}

TEST(LogLevelSize, MatchesExactInteger) {
    for (std::uint32_t q : {1u, 2u, 3u, 5u})
        for (unsigned n = 0; n < 60; ++n) {
            const th::TreeGeometry geo(q);
            const auto exact = th::level_size(geo, n);
            if (exact >= (th::BigInt(1) << 53)) break;
            const double x = exact.convert_to<double>();
            EXPECT_LE(std::abs(std::exp(th::log_level_size(geo, n)) - x) / x, 1e-12) << q << ' ' << n;
        }
}

TEST(Parent, Examples) {
    const th::TreeGeometry geo(3);
    EXPECT_EQ(th::parent(geo, {1, 3}), (th::VertexId{0, 0}));
    EXPECT_EQ(th::parent(geo, {2, 7}), (th::VertexId{1, 2}));
    EXPECT_THROW(th::parent(geo, {0, 0}), th::RootHasNoParent);
}

TEST(Vertex, Validation) {
    const th::TreeGeometry geo(3);
    EXPECT_THROW(th::parent(geo, {2, 12}), th::InvalidVertex);
    EXPECT_THROW(th::children(geo, {0, 1}), th::InvalidVertex);
    EXPECT_TRUE(th::contains(geo, {2, 11}));
    EXPECT_FALSE(th::contains(geo, {2, 12}));
}

TEST(Children, Examples) {
    const th::TreeGeometry g3(3);
    EXPECT_EQ(th::children(g3, th::kRoot),
              (std::vector<th::VertexId>{{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
    EXPECT_EQ(th::children(g3, {1, 2}), (std::vector<th::VertexId>{{2, 6}, {2, 7}, {2, 8}}));
    EXPECT_EQ(th::children(th::TreeGeometry(1), {4, 1}), (std::vector<th::VertexId>{{5, 1}}));
}

TEST(Children, ParentInvertsChildren) {
    for (std::uint32_t q : {1u, 2u, 3u, 5u}) {
        const th::TreeGeometry geo(q);
        for (unsigned n = 0; n < 12 && *th::level_size_u64(geo, n + 1) <= th::kDefaultCap; ++n) {
            std::uint64_t child_count = 0;
            for (const auto v : th::enumerate_level(geo, n)) {
                const auto kids = th::children(geo, v);
                child_count += kids.size();
                for (const auto& c : kids) EXPECT_EQ(th::parent(geo, c), v);
            }
            EXPECT_EQ(th::BigInt(child_count), th::level_size(geo, n + 1));
        }
    }
}

TEST(EnumerateLevel, CountsAndOrder) {
    EXPECT_EQ(std::ranges::distance(th::enumerate_level(th::TreeGeometry(3), 1)), 4);
    const auto level = th::enumerate_level(th::TreeGeometry(2), 3);
    std::uint64_t expected = 0;
    for (const auto v : level) {
        EXPECT_EQ(v.level, 3u);
        EXPECT_EQ(v.index, expected++);
    }
    EXPECT_EQ(expected, 12u);
}

TEST(EnumerateLevel, RefusesHugeLevels) {
    EXPECT_THROW(th::enumerate_level(th::TreeGeometry(3), 50), th::LevelTooLarge);
    EXPECT_THROW(th::enumerate_level(th::TreeGeometry(2), 5, 47), th::LevelTooLarge);
    EXPECT_NO_THROW(th::enumerate_level(th::TreeGeometry(2), 5, 48));
}

TEST(LeftmostPath, IsAPath) {
    EXPECT_EQ(th::leftmost_path_vertex(0), th::kRoot);
    EXPECT_EQ(th::leftmost_path_vertex(5), (th::VertexId{5, 0}));
    for (std::uint32_t q : {1u, 2u, 3u})
        for (unsigned n = 1; n < 40; ++n)
            EXPECT_EQ(th::parent(th::TreeGeometry(q), th::leftmost_path_vertex(n)), th::leftmost_path_vertex(n - 1));
}
