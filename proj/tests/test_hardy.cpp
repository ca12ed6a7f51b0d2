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

#include <treehardy/algebra.hpp>
#include <treehardy/hardy.hpp>
#include <treehardy/oracle.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace th = treehardy;
using th::Complex;
using th::Exponent;
using th::Extension;
using th::FunctionRep;
using th::Sequence;
using th::Tail;

namespace {

const Exponent kHalf = Exponent::finite(0.5);
const Exponent kOne = Exponent::finite(1.0);
const Exponent kTwo = Exponent::finite(2.0);
const Exponent kInfExp = Exponent::infinity();

FunctionRep inverse_levels(const th::TreeGeometry& geo) {
    return FunctionRep::radial(geo, Sequence::rule([](unsigned n) { return Complex(1.0 / (n + 1.0)); }),
                               Tail::vanishing().decreasing().with_upper(1.0));
}

FunctionRep random_finite(const th::TreeGeometry& geo, std::mt19937_64& rng, unsigned depth, int terms) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::map<th::VertexId, Complex> e;
    for (int k = 0; k < terms; ++k) {
        const unsigned n = rng() % (depth + 1);
        e[{n, rng() % *th::level_size_u64(geo, n)}] = {u(rng), u(rng)};
    }
    return FunctionRep::finite(geo, e);
}

}  // namespace

TEST(LevelMean, ConstantRadial) {
    const th::TreeGeometry geo(3);
    const auto one = FunctionRep::radial(geo, std::vector<Complex>{1.0}, Extension::Hold);
    for (const auto& p : {kHalf, kOne, kTwo, kInfExp})
        for (unsigned n : {0u, 1u, 7u, 150u}) EXPECT_EQ(th::level_mean(one, n, p), 1.0);
}

TEST(LevelMean, ScaledPointMassHasUnitMean) {
    for (std::uint32_t q : {1u, 2u, 3u})
        for (const auto& p : {kHalf, kOne, kTwo}) {
            const th::TreeGeometry geo(q);
            const th::VertexId v{4, 3 % *th::level_size_u64(geo, 4)};
            const auto f = th::normalized_point_mass(geo, v, p);
            EXPECT_NEAR(th::level_mean(f, 4, p), 1.0, 1e-12);
        }
}

TEST(LevelMean, IndicatorAtLevelTwo) {
    const th::TreeGeometry geo(3);
    const auto chi = FunctionRep::point_mass(geo, {2, 5});
    // one nonzero term out of 12
    EXPECT_NEAR(th::level_mean(chi, 2, kTwo), 1.0 / std::sqrt(12.0), 1e-15);
    EXPECT_NEAR(th::level_mean(chi, 2, kTwo), th::dense_oracle_mean(chi, 2, kTwo), 1e-12);
    EXPECT_EQ(th::level_mean(chi, 2, kInfExp), 1.0);
    EXPECT_EQ(th::level_mean(chi, 3, kTwo), 0.0);
}

TEST(LevelMean, Methods) {
    const th::TreeGeometry geo(2);
    const auto rule = FunctionRep::pointwise(geo, [](const th::VertexId&) { return Complex(2.0); });
    EXPECT_EQ(th::level_mean_detailed(rule, 3, kTwo).method, th::MeanMethod::Enumerated);
    EXPECT_NEAR(th::level_mean(rule, 3, kTwo), 2.0, 1e-14);
    EXPECT_EQ(th::level_mean_detailed(rule, 0, kTwo).method, th::MeanMethod::ClosedForm);
    EXPECT_THROW(th::level_mean(rule, 40, kTwo), th::LevelTooLarge);
    EXPECT_STREQ(th::to_string(th::MeanMethod::ClosedForm), "closed-form");
}

TEST(LevelMean, PathClosedFormSurvivesHugeLevels) {
    const th::TreeGeometry geo(3);
    const auto f = FunctionRep::path(geo, Sequence::constant(1.0), Tail::constant(1.0), 1.0);
    // |f(n,0)| = L(n) overflows nothing in the log domain; the mean is L(n)^(1 - 1/p)
    const double got = th::level_mean(f, 200, kTwo);
    EXPECT_NEAR(std::log(got), 0.5 * th::log_level_size(geo, 200), 1e-12 * std::log(got));
    EXPECT_EQ(th::level_mean(f, 200, kInfExp), std::exp(th::log_level_size(geo, 200)));
}

TEST(LevelMean, MonotoneInExponent) {
    std::mt19937_64 rng(1);
    const std::vector<Exponent> ps{Exponent::finite(0.25), kHalf, kOne, Exponent::finite(1.5), kTwo,
                                   Exponent::finite(5.0), kInfExp};
    for (int trial = 0; trial < 60; ++trial) {
        const th::TreeGeometry geo(1 + trial % 3);
        const auto f = trial % 2 ? random_finite(geo, rng, 6, 10)
                                 : FunctionRep::radial(geo, std::vector<Complex>{{1, 2}, 0.3, -4.0}, Extension::Cycle);
        for (unsigned n = 0; n <= 6; ++n)
            for (std::size_t i = 0; i + 1 < ps.size(); ++i)
                EXPECT_TRUE(th::numeric::leq(th::level_mean(f, n, ps[i]), th::level_mean(f, n, ps[i + 1]), 1e-12));
    }
}

TEST(Norm, SharpPointMassIsExactlyOne) {
    const th::TreeGeometry geo(3);
    const auto f = th::normalized_point_mass(geo, {2, 5}, kTwo);
    const auto nr = th::norm(f, kTwo, 0);
    EXPECT_NEAR(nr.value, 1.0, 1e-15);
    EXPECT_TRUE(nr.exact);
    EXPECT_EQ(nr.attained_level, 2u);
    EXPECT_EQ(nr.depth_examined, 2u);
}

TEST(Norm, InverseLevelsRadial) {
    const th::TreeGeometry geo(2);
    const auto f = inverse_levels(geo);
    const auto nr = th::norm(f, kHalf, 10);
    EXPECT_EQ(nr.value, 1.0);
    EXPECT_TRUE(nr.exact);
    EXPECT_EQ(nr.attained_level, 0u);
    for (unsigned n = 0; n <= 6; ++n)
        EXPECT_NEAR(th::dense_oracle_mean(f, n, kHalf), 1.0 / (n + 1.0), 1e-12);
}

TEST(Norm, RadialIndependentOfExponent) {
    const th::TreeGeometry geo(2);
    const auto f = FunctionRep::radial(geo, std::vector<Complex>{0.5, {0, 2}, 1.0}, Extension::Cycle);
    for (const auto& p : {kHalf, kOne, kTwo, kInfExp}) {
        const auto nr = th::norm(f, p, 5);
        EXPECT_EQ(nr.value, 2.0);
        EXPECT_TRUE(nr.exact);
    }
}

TEST(Norm, SupNotAttainedWithDeclaredLimit) {
    const th::TreeGeometry geo(2);
    const auto f = FunctionRep::radial(geo, Sequence::rule([](unsigned n) { return Complex(1.0 - 1.0 / (n + 1)); }),
                                       Tail::bounded(1.0).with_limit(1.0));
    const auto nr = th::norm(f, kTwo, 20);
    EXPECT_EQ(nr.value, 1.0);
    EXPECT_TRUE(nr.exact);
    EXPECT_FALSE(nr.attained_level.has_value());
}

TEST(Norm, UnknownTailIsPrefixBound) {
    const th::TreeGeometry geo(2);
    const auto f = FunctionRep::pointwise(geo, [](const th::VertexId& v) { return Complex(v.level); });
    const auto nr = th::norm(f, kTwo, 6);
    EXPECT_FALSE(nr.exact);
    EXPECT_NEAR(nr.value, 6.0, 1e-12);
    const auto g = FunctionRep::radial(geo, Sequence::rule([](unsigned n) { return Complex(n % 3); }), Tail::unknown());
    EXPECT_FALSE(th::norm(g, kTwo, 6).exact);
}

TEST(Norm, DivergentIsInfinite) {
    const th::TreeGeometry geo(2);
    const auto f = FunctionRep::radial(geo, std::vector<Complex>{0.0, 1.0}, Extension::Linear);
    const auto nr = th::norm(f, kOne, 10);
    EXPECT_TRUE(std::isinf(nr.value));
    EXPECT_TRUE(nr.exact);
}

TEST(Norm, Homogeneity) {
    std::mt19937_64 rng(9);
    const Complex alpha{2.0, -1.0};
    for (int trial = 0; trial < 40; ++trial) {
        const th::TreeGeometry geo(1 + trial % 3);
        const auto f = random_finite(geo, rng, 5, 7);
        const auto af = th::combine(alpha, f, 0.0, FunctionRep::zero(geo));
        for (const auto& p : {kHalf, kOne, kTwo, kInfExp}) {
            const double nf = th::norm(f, p, 5).value;
            EXPECT_NEAR(th::norm(af, p, 5).value, std::abs(alpha) * nf, 1e-12 * nf);
        }
    }
}

TEST(Norm, ZeroIffVanishes) {
    const th::TreeGeometry geo(2);
    EXPECT_EQ(th::norm(FunctionRep::zero(geo), kTwo, 4).value, 0.0);
    EXPECT_GT(th::norm(FunctionRep::point_mass(geo, {4, 11}, 1e-200), kTwo, 0).value, 0.0);
}

TEST(Norm, InconsistentDeclarationIsRejected) {
    const th::TreeGeometry geo(2);
    const auto growing = FunctionRep::radial(geo, Sequence::rule([](unsigned n) { return Complex(n); }), Tail::vanishing());
    EXPECT_THROW(th::norm(growing, kTwo, 20), th::InconsistentTail);
    const auto over = FunctionRep::radial(geo, Sequence::rule([](unsigned n) { return Complex(n); }), Tail::bounded(3.0));
    EXPECT_THROW(th::norm(over, kTwo, 6), th::InconsistentTail);
}

TEST(Truncate, NormGapIsTailSup) {
    const th::TreeGeometry geo(2);
    const auto f = inverse_levels(geo);
    for (unsigned n : {0u, 3u, 9u}) {
        const auto gap = th::combine(1.0, f, -1.0, th::truncate(f, n));
        for (unsigned k = 0; k <= 15; ++k)
            EXPECT_NEAR(th::level_mean(gap, k, kTwo), k <= n ? 0.0 : 1.0 / (k + 1.0), 1e-15);
        // sup over m > n of 1/(m+1)
        EXPECT_NEAR(th::norm(gap, kTwo, 20).value, 1.0 / (n + 2.0), 1e-15);
    }
}

TEST(Membership, ZeroEverywhere) {
    const th::TreeGeometry geo(2);
    for (const auto& p : {kHalf, kTwo, kInfExp})
        for (auto s : {th::Space::Tp, th::Space::Tp0})
            EXPECT_EQ(th::membership(FunctionRep::zero(geo), p, s, 4).verdict, th::Verdict::InSpace);
}

TEST(Membership, AbsoluteLevelIsOutside) {
    const th::TreeGeometry geo(3);
    const auto f = FunctionRep::radial(geo, std::vector<Complex>{0.0, 1.0}, Extension::Linear);
    for (const auto& p : {kHalf, kOne, kTwo}) {
        const auto m = th::membership(f, p, th::Space::Tp, 8);
        EXPECT_EQ(m.verdict, th::Verdict::NotInSpace);
        EXPECT_EQ(m.means.size(), 9u);
        EXPECT_EQ(m.means[8], 8.0);
    }
}

TEST(Membership, VanishingAndBoundedAway) {
    const th::TreeGeometry geo(2);
    EXPECT_EQ(th::membership(inverse_levels(geo), kTwo, th::Space::Tp0, 8).verdict, th::Verdict::InSpace);
    const auto one = FunctionRep::radial(geo, std::vector<Complex>{1.0}, Extension::Hold);
    EXPECT_EQ(th::membership(one, kTwo, th::Space::Tp, 8).verdict, th::Verdict::InSpace);
    EXPECT_EQ(th::membership(one, kTwo, th::Space::Tp0, 8).verdict, th::Verdict::NotInSpace);
    const auto rule = FunctionRep::pointwise(geo, [](const th::VertexId&) { return Complex(0.0); });
    EXPECT_EQ(th::membership(rule, kTwo, th::Space::Tp0, 4).verdict, th::Verdict::Inconclusive);
    const auto unknown = FunctionRep::radial(geo, Sequence::rule([](unsigned) { return Complex(1.0); }), Tail::unknown());
    EXPECT_EQ(th::membership(unknown, kTwo, th::Space::Tp, 4).verdict, th::Verdict::Inconclusive);
}

TEST(GrowthBound, SharpAndRoot) {
    const th::TreeGeometry geo(3);
    const th::VertexId v{5, 17};
    const auto f = th::normalized_point_mass(geo, v, kTwo);
    const auto gb = th::growth_bound(f, kTwo, v, 6);
    EXPECT_NEAR(gb.ratio, 1.0, 1e-12);
    EXPECT_TRUE(gb.exact);
    const auto g = FunctionRep::finite(geo, {{th::kRoot, 3.0}, {{1, 2}, 10.0}});
    const auto root = th::growth_bound(g, kOne, th::kRoot, 3);
    EXPECT_NEAR(root.bound, th::norm(g, kOne, 3).value, 1e-15);
}

TEST(GrowthBound, RandomRatiosAtMostOne) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const th::TreeGeometry geo(1 + trial % 3);
        const auto f = random_finite(geo, rng, 5, 6);
        const auto& entries = f.as<th::FiniteSupport>()->entries;
        auto it = entries.begin();
        std::advance(it, rng() % entries.size());
        for (const auto& p : {kHalf, kOne, kTwo}) {
            const auto gb = th::growth_bound(f, p, it->first, 5);
            EXPECT_LE(gb.ratio, 1.0 + 1e-12);
        }
    }
}

TEST(CompactSupDiff, Examples) {
    const th::TreeGeometry geo(2);
    const auto one = FunctionRep::radial(geo, std::vector<Complex>{1.0}, Extension::Hold);
    const auto t5 = th::truncate(one, 5);
    EXPECT_EQ(th::compact_sup_diff(one, t5, 3), 0.0);
    EXPECT_EQ(th::compact_sup_diff(one, t5, 6), 1.0);
    EXPECT_EQ(th::norm(th::combine(1.0, one, -1.0, t5), kTwo, 10).value, 1.0);
    EXPECT_EQ(th::compact_sup_diff(one, one, 8), 0.0);
}

TEST(CompactSupDiff, BoundedByNormGap) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const th::TreeGeometry geo(1 + trial % 3);
        const auto f = random_finite(geo, rng, 5, 6);
        const auto g = random_finite(geo, rng, 5, 6);
        for (const auto& p : {kHalf, kOne, kTwo})
            for (unsigned big_n = 0; big_n <= 5; ++big_n) {
                const double gap = th::norm(th::combine(1.0, f, -1.0, g), p, 5).value;
                EXPECT_TRUE(th::numeric::leq(th::compact_sup_diff(f, g, big_n),
                                             std::exp(p.reciprocal() * th::log_level_size(geo, big_n)) * gap, 1e-12));
            }
    }
}

TEST(Lipschitz, Examples) {
    const th::TreeGeometry geo(2);
    const auto abs_level = FunctionRep::radial(geo, std::vector<Complex>{0.0, 1.0}, Extension::Linear);
    EXPECT_EQ(th::lipschitz_seminorm(abs_level, 30), 1.0);
    const auto c = FunctionRep::radial(geo, std::vector<Complex>{4.0}, Extension::Hold);
    EXPECT_EQ(th::lipschitz_seminorm(c, 30), 0.0);
    EXPECT_EQ(th::weighted_lipschitz_seminorm(c, 30), 0.0);
    EXPECT_EQ(th::weighted_lipschitz_seminorm(abs_level, 7), 7.0);
}

TEST(Lipschitz, ClosedFormsMatchEnumeration) {
    std::mt19937_64 rng(8);
    for (std::uint32_t q : {1u, 2u, 3u}) {
        const th::TreeGeometry geo(q);
        const auto path = FunctionRep::path(geo, Sequence::table({0.0, 1.0, -2.0}, Extension::Cycle),
                                            Tail::bounded(2.0), 0.5);
        const auto fin = random_finite(geo, rng, 4, 8);
        for (const auto& f : {path, fin}) {
            const auto rule = FunctionRep::pointwise(geo, [f](const th::VertexId& v) { return f(v); });
            for (unsigned d = 1; d <= 6; ++d) {
                EXPECT_NEAR(th::lipschitz_seminorm(f, d), th::lipschitz_seminorm(rule, d), 1e-12);
                EXPECT_NEAR(th::weighted_lipschitz_seminorm(f, d), th::weighted_lipschitz_seminorm(rule, d), 1e-12);
            }
        }
    }
}

TEST(Holder, AllOnesSaturates) {
    const std::vector<Complex> ones(7, 1.0);
    const auto b = th::holder_vector_bounds(ones, 1.0, 2.0);
    EXPECT_NEAR(b.norm_r, 7.0, 1e-14);
    EXPECT_NEAR(b.upper, b.norm_r, 1e-12 * b.norm_r);
}

TEST(Holder, SpikeIsTightBelow) {
    const std::vector<Complex> spike{1.0, 0.0, 0.0, 0.0};
    const auto b = th::holder_vector_bounds(spike, 0.5, 3.0);
    EXPECT_EQ(b.norm_r, 1.0);
    EXPECT_EQ(b.norm_s, 1.0);
}

TEST(Holder, Errors) {
    const std::vector<Complex> x{1.0};
    EXPECT_THROW(th::holder_vector_bounds(x, 2.0, 1.0), th::InvalidExponents);
    EXPECT_THROW(th::holder_vector_bounds(x, 0.0, 1.0), th::InvalidExponents);
    EXPECT_THROW(th::holder_vector_bounds(x, 1.0, 1.0), th::InvalidExponents);
    EXPECT_THROW(th::holder_vector_bounds({}, 1.0, 2.0), th::InvalidArgument);
    EXPECT_NO_THROW(th::holder_vector_bounds(x, 1.0, INFINITY));
}

TEST(Holder, RandomChain) {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Complex> x(1 + rng() % 30);
        for (auto& z : x) z = {g(rng), g(rng)};
        const auto b = th::holder_vector_bounds(x, 1.0, 2.0);
        EXPECT_TRUE(th::numeric::leq(b.norm_s, b.norm_r, 1e-12));
        EXPECT_TRUE(th::numeric::leq(b.norm_r, b.upper, 1e-12));
    }
}

TEST(SeparatedFamily, DistinctRadialBitsAreAtDistanceOne) {
    const th::TreeGeometry geo(3);
    const auto a = FunctionRep::radial(geo, std::vector<Complex>{1.0, 0.0, 1.0}, Extension::Zero);
    const auto b = FunctionRep::radial(geo, std::vector<Complex>{1.0, 1.0, 1.0}, Extension::Zero);
    for (const auto& p : {kHalf, kTwo, kInfExp}) {
        EXPECT_EQ(th::norm(th::combine(1.0, a, -1.0, b), p, 4).value, 1.0);
        EXPECT_EQ(th::norm(th::combine(1.0, a, -1.0, a), p, 4).value, 0.0);
    }
}
