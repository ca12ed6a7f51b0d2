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

#include <treehardy/tail.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace th = treehardy;
using th::Tail;
using th::TailKind;

TEST(Tail, Factories) {
    EXPECT_EQ(Tail::unknown().kind, TailKind::Unknown);
    EXPECT_FALSE(Tail::unknown().bounded_above());
    EXPECT_EQ(Tail::vanishing().effective_limit(), 0.0);
    EXPECT_TRUE(Tail::bounded(2.0).bounded_above());
    EXPECT_FALSE(Tail::bounded(2.0).bounded_away_from_zero());
    const Tail c = Tail::constant(3.0, 4);
    EXPECT_EQ(c.from, 4u);
    EXPECT_EQ(c.upper, 3.0);
    EXPECT_EQ(c.lower, 3.0);
    EXPECT_TRUE(c.nonincreasing);
    const Tail z = Tail::zero_beyond(5);
    EXPECT_TRUE(z.eventually_zero());
    EXPECT_EQ(z.from, 6u);
    EXPECT_EQ(Tail::constant(1.0, 0).from, 1u);
}

TEST(Tail, ValidateRejectsContradictions) {
    EXPECT_THROW(Tail::bounded(1.0).with_lower(2.0).validate(), th::InconsistentTail);
    EXPECT_THROW(Tail::divergent().with_upper(1.0).validate(), th::InconsistentTail);
    EXPECT_THROW(Tail::vanishing().with_lower(0.5).validate(), th::InconsistentTail);
    EXPECT_THROW(Tail::bounded(-1.0).validate(), th::InconsistentTail);
    EXPECT_THROW(Tail::bounded(1.0).with_limit(2.0).validate(), th::InconsistentTail);
    EXPECT_NO_THROW(Tail::bounded(1.0).with_lower(1.0).validate());
}

TEST(Tail, CheckPrefix) {
    const std::vector<double> m{5.0, 1.0, 0.5, 0.25};
    EXPECT_FALSE(Tail::bounded(1.0).check_prefix(m));  // level 0 is not covered
    EXPECT_TRUE(Tail::bounded(0.9).check_prefix(m));
    EXPECT_TRUE(Tail::unknown().with_lower(0.3).check_prefix(m));
    EXPECT_FALSE(Tail::vanishing().decreasing().check_prefix(m));
    const std::vector<double> up{0.0, 1.0, 0.5, 0.75};
    EXPECT_TRUE(Tail::vanishing().decreasing().check_prefix(up));
}

TEST(Tail, VanishingHeuristicRejectsSteadyGrowth) {
    std::vector<double> m;
    for (int n = 0; n < 20; ++n) m.push_back(n);
    EXPECT_TRUE(Tail::vanishing().check_prefix(m));
    std::vector<double> bump(20, 0.1);
    bump[10] = 5.0;
    EXPECT_FALSE(Tail::vanishing().check_prefix(bump));
}

TEST(Tail, Combine) {
    const Tail a = th::combine_tails(1.0, Tail::constant(1.0), 1.0, Tail::zero_beyond(3));
    EXPECT_EQ(a.kind, TailKind::Bounded);
    EXPECT_EQ(a.upper, 1.0);
    EXPECT_EQ(a.from, 4u);
    const Tail b = th::combine_tails(2.0, Tail::bounded(1.0), 3.0, Tail::vanishing().with_upper(0.5));
    EXPECT_EQ(b.upper, 3.5);
    EXPECT_EQ(b.limit, std::nullopt);
    const Tail c = th::combine_tails(1.0, Tail::divergent(), 1.0, Tail::bounded(4.0));
    EXPECT_EQ(c.kind, TailKind::Divergent);
    const Tail d = th::combine_tails(1.0, Tail::vanishing(), 1.0, Tail::vanishing());
    EXPECT_EQ(d.kind, TailKind::Vanishing);
    const Tail e = th::combine_tails(1.0, Tail::divergent(), 1.0, Tail::divergent());
    EXPECT_EQ(e.kind, TailKind::Unknown);  // the divergences may cancel
    const Tail f = th::combine_tails(0.0, Tail::divergent(), 1.0, Tail::constant(2.0));
    EXPECT_EQ(f.upper, 2.0);
    EXPECT_EQ(f.lower, 2.0);
}

TEST(Tail, Multiply) {
    EXPECT_TRUE(th::multiply_tails(Tail::zero_beyond(2), Tail::divergent()).eventually_zero());
    const Tail v = th::multiply_tails(Tail::vanishing(), Tail::bounded(3.0));
    EXPECT_EQ(v.kind, TailKind::Vanishing);
    const Tail u = th::multiply_tails(Tail::vanishing(), Tail::unknown());
    EXPECT_NE(u.kind, TailKind::Vanishing);
    const Tail d = th::multiply_tails(Tail::divergent(), Tail::constant(0.5));
    EXPECT_EQ(d.kind, TailKind::Divergent);
    const Tail b = th::multiply_tails(Tail::constant(2.0), Tail::constant(3.0));
    EXPECT_EQ(b.upper, 6.0);
    EXPECT_EQ(b.lower, 6.0);
    EXPECT_EQ(b.limit, 6.0);
}

TEST(Tail, LevelPowerScaling) {
    const th::TreeGeometry g2(2);
    const Tail down = th::scale_by_level_power(Tail::constant(1.0), g2, -0.5);
    EXPECT_EQ(down.kind, TailKind::Vanishing);
    EXPECT_NEAR(*down.upper, std::pow(3.0, -0.5), 1e-15);
    EXPECT_TRUE(down.nonincreasing);
    const Tail up = th::scale_by_level_power(Tail::constant(1.0), g2, 0.5);
    EXPECT_EQ(up.kind, TailKind::Divergent);
    const Tail unknown_up = th::scale_by_level_power(Tail::bounded(1.0), g2, 0.5);
    EXPECT_EQ(unknown_up.kind, TailKind::Unknown);
    // on the 2-homogeneous tree every level n >= 1 has two vertices
    const Tail flat = th::scale_by_level_power(Tail::constant(1.0), th::TreeGeometry(1), -1.0);
    EXPECT_EQ(flat.kind, TailKind::Bounded);
    EXPECT_NEAR(*flat.upper, 0.5, 1e-15);
    EXPECT_NEAR(*flat.lower, 0.5, 1e-15);
}
