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

#pragma once

// Constructors for the named example functions, and a registry of runnable
// scenarios that check each example with the library's own operations.
// Wherever a construction needs an infinite path from the root it uses the
// leftmost path (n, 0).

#include <treehardy/algebra.hpp>
#include <treehardy/error.hpp>
#include <treehardy/exponent.hpp>
#include <treehardy/function.hpp>
#include <treehardy/hardy.hpp>
#include <treehardy/multiplication.hpp>
#include <treehardy/numeric.hpp>
#include <treehardy/oracle.hpp>
#include <treehardy/serialize.hpp>
#include <treehardy/tree.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace treehardy {

namespace detail {

inline void require_finite(const Exponent& p) {
    if (p.is_infinite()) throw InvalidExponent("this construction needs a finite exponent");
}

}  // namespace detail

// level_size(|v|)^(1/p) at v and 0 elsewhere.
inline FunctionRep sharp_growth(const TreeGeometry& geo, const Exponent& p, const VertexId& v) {
    detail::require_finite(p);
    check_vertex(geo, v);
    return normalized_point_mass(geo, v, p);
}

// level_size(n)^(1/p) at (n, 0) for n >= 1, zero elsewhere (root included).
inline FunctionRep proper_inclusion(const TreeGeometry& geo, const Exponent& p) {
    detail::require_finite(p);
    const auto kappa = Sequence::table({0.0, 1.0}, Extension::Hold);
    return FunctionRep::path(geo, kappa, kappa.inferred_tail(), p.reciprocal());
}

struct LipschitzExamples {
    FunctionRep f_abs;       // |v|
    FunctionRep g_path;      // proper_inclusion
    FunctionRep h_harmonic;  // H_|v| = 1 + 1/2 + ... + 1/|v|
    FunctionRep chi_path;    // indicator of the leftmost path, root included
};

inline double harmonic_number(unsigned n) {
    numeric::CompensatedSum s;
    for (unsigned k = 1; k <= n; ++k) s.add(1.0 / k);
    return s.value();
}

inline LipschitzExamples lipschitz_examples(const TreeGeometry& geo, const Exponent& p) {
    detail::require_finite(p);
    return {
        FunctionRep::radial(geo, std::vector<Complex>{0.0, 1.0}, Extension::Linear),
        proper_inclusion(geo, p),
        FunctionRep::radial(geo, Sequence::rule([](unsigned n) { return Complex(harmonic_number(n)); }),
                            Tail::divergent()),
        FunctionRep::path(geo, Sequence::constant(1.0), Tail::constant(1.0)),
    };
}

inline std::vector<FunctionRep> truncation_sequence(const FunctionRep& f, std::span<const unsigned> ns,
                                                    std::uint64_t cap = kDefaultCap) {
    std::vector<FunctionRep> out;
    out.reserve(ns.size());
    for (unsigned n : ns) out.push_back(truncate(f, n, cap));
    return out;
}

// `count` distinct radial functions with values in {0, 1} on levels
// 0..depth and zero beyond. Bits come from a seeded mt19937_64.
inline std::vector<FunctionRep> separated_family_sample(const TreeGeometry& geo, std::size_t count,
                                                        std::uint64_t seed, unsigned depth) {
    if (count < 2) throw InvalidArgument("a separated family needs at least two members");
    if (depth < 63 && count > (std::uint64_t{1} << (depth + 1)))
        throw InvalidArgument("more members requested than {0,1} patterns on levels 0..depth");
    std::mt19937_64 rng(seed);
    std::set<std::vector<bool>> seen;
    std::vector<FunctionRep> out;
    while (out.size() < count) {
        std::vector<bool> bits(depth + 1);
        std::uint64_t word = 0;
        for (unsigned n = 0; n <= depth; ++n) {
            if (n % 64 == 0) word = rng();
            bits[n] = (word >> (n % 64)) & 1u;
        }
        if (!seen.insert(bits).second) continue;
        std::vector<Complex> values(bits.begin(), bits.end());
        out.push_back(FunctionRep::radial(geo, std::move(values), Extension::Zero));
    }
    return out;
}

// Scenario plumbing.

enum class AssertionKind { Claim, Derived, Identity };

inline const char* to_string(AssertionKind k) noexcept {
    switch (k) {
        case AssertionKind::Claim: return "claim";
        case AssertionKind::Derived: return "derived";
        case AssertionKind::Identity: return "identity";
    }
    return "claim";
}

struct Assertion {
    std::string label;
    AssertionKind kind = AssertionKind::Claim;
    bool passed = false;
    double residual = 0.0;
};

inline constexpr double kScenarioTol = 1e-10;

struct ScenarioResult {
    std::string name;
    std::string description;
    json params = json::object();
    json reports = json::object();
    std::vector<Assertion> assertions;

    bool passed() const {
        return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
    }

    // Relative closeness; infinities must match exactly.
    void close(std::string label, AssertionKind kind, double got, double want, double tol = kScenarioTol) {
        const double r = (std::isinf(got) || std::isinf(want)) ? (got == want ? 0.0 : kInf)
                                                              : numeric::relative_error(got, want);
        assertions.push_back({std::move(label), kind, r <= tol, r});
    }

    // Largest residual over a batch of (got, want) pairs.
    void close_all(std::string label, AssertionKind kind, std::span<const std::pair<double, double>> pairs,
                   double tol = kScenarioTol) {
        double worst = 0.0;
        for (const auto& [got, want] : pairs) {
            const double r = (std::isinf(got) || std::isinf(want)) ? (got == want ? 0.0 : kInf)
                                                                  : numeric::relative_error(got, want);
            worst = std::max(worst, r);
        }
        assertions.push_back({std::move(label), kind, worst <= tol, worst});
    }

    void holds(std::string label, AssertionKind kind, bool ok) {
        assertions.push_back({std::move(label), kind, ok, ok ? 0.0 : 1.0});
    }
};

inline json to_json(const ScenarioResult& r) {
    json assertions = json::array();
    for (const auto& a : r.assertions)
        assertions.push_back(
            {{"label", a.label}, {"kind", to_string(a.kind)}, {"passed", a.passed}, {"residual", a.residual}});
    return {{"name", r.name},     {"description", r.description}, {"params", r.params},
            {"reports", r.reports}, {"assertions", assertions},    {"passed", r.passed()}};
}

struct Scenario {
    std::string name;
    std::string description;
    std::function<ScenarioResult()> run;
};

namespace scenarios {

using K = AssertionKind;

inline const std::vector<Exponent>& finite_exponents() {
    static const std::vector<Exponent> ps{Exponent::finite(0.5), Exponent::finite(1.0), Exponent::finite(2.0),
                                          Exponent::finite(4.0)};
    return ps;
}

inline double level_power(const TreeGeometry& geo, unsigned n, double e) {
    return std::exp(e * log_level_size(geo, n));
}

inline ScenarioResult sharp_growth_run() {
    ScenarioResult r;
    r.params = {{"q", {1, 2, 3}}, {"p", {0.5, 1.0, 2.0, 4.0}}, {"levels", {1, 2, 5, 30}}};
    for (std::uint32_t q = 1; q <= 3; ++q) {
        const TreeGeometry geo(q);
        for (const auto& p : finite_exponents()) {
            std::vector<std::pair<double, double>> norms, ratios, off_level;
            bool exact = true;
            for (unsigned level : {1u, 2u, 5u, 30u}) {
                const VertexId v{level, level == 2 && q == 3 ? 5u : 0u};
                const auto f = sharp_growth(geo, p, v);
                const auto nr = norm(f, p, 40);
                exact = exact && nr.exact;
                norms.emplace_back(nr.value, 1.0);
                ratios.emplace_back(growth_bound(f, p, v, 40).ratio, 1.0);
                for (unsigned n : {0u, level + 1, level + 7})
                    off_level.emplace_back(level_mean(f, n, p), 0.0);
                if (q == 3 && p.value() == 2.0 && level == 2) r.reports["norm_q3_p2_v2_5"] = to_json(nr);
            }
            const std::string tag = "q=" + std::to_string(q) + " p=" + p.to_string();
            r.close_all("norm is 1, " + tag, K::Claim, norms);
            r.holds("norm is exact, " + tag, K::Claim, exact);
            r.close_all("growth ratio at v is 1, " + tag, K::Claim, ratios, 1e-12);
            r.close_all("means vanish off |v|, " + tag, K::Identity, off_level, 0.0);
        }
    }
    return r;
}

inline ScenarioResult proper_inclusion_run() {
    ScenarioResult r;
    const Exponent p = Exponent::finite(2.0);
    r.params = {{"q", {2, 3}}, {"p", 2.0}, {"r", {0.5, 1.0}}, {"s", {4.0, "inf"}}, {"levels", "1..40"},
                {"path", "leftmost (n,0)"}};
    for (std::uint32_t q = 2; q <= 3; ++q) {
        const TreeGeometry geo(q);
        const auto f = proper_inclusion(geo, p);
        const std::string tag = "q=" + std::to_string(q);
        for (const Exponent rr : {Exponent::finite(0.5), Exponent::finite(1.0)}) {
            std::vector<std::pair<double, double>> pairs;
            for (unsigned n = 1; n <= 40; ++n)
                pairs.emplace_back(level_mean(f, n, rr), level_power(geo, n, p.reciprocal() - rr.reciprocal()));
            r.close_all("M_r(n) = L(n)^(1/p-1/r), r=" + rr.to_string() + " " + tag, K::Claim, pairs);
            r.holds("in T_{r,0}, r=" + rr.to_string() + " " + tag, K::Claim,
                    membership(f, rr, Space::Tp0, 40).verdict == Verdict::InSpace);
        }
        for (const Exponent s : {Exponent::finite(4.0), Exponent::infinity()}) {
            std::vector<std::pair<double, double>> pairs;
            for (unsigned n = 1; n <= 40; ++n)
                pairs.emplace_back(level_mean(f, n, s), level_power(geo, n, p.reciprocal() - s.reciprocal()));
            r.close_all("M_s(n) = L(n)^(1/p-1/s), s=" + s.to_string() + " " + tag, K::Claim, pairs);
            r.holds("not in T_s, s=" + s.to_string() + " " + tag, K::Claim,
                    membership(f, s, Space::Tp, 40).verdict == Verdict::NotInSpace);
        }
        const auto nr = norm(f, p, 40);
        r.close("||f||_p = 1, " + tag, K::Derived, nr.value, 1.0);
        r.holds("||f||_p is exact, " + tag, K::Derived, nr.exact);
        r.close("M_1(3) agrees with enumeration, " + tag, K::Derived, level_mean(f, 3, Exponent::finite(1.0)),
                dense_oracle_mean(f, 3, Exponent::finite(1.0)));
        if (q == 2) r.reports["norm_p2"] = to_json(nr);
    }
    return r;
}

inline ScenarioResult lipschitz_comparison_run() {
    ScenarioResult r;
    const TreeGeometry geo(2);
    const Exponent p = Exponent::finite(2.0);
    const unsigned depth = 40;
    r.params = {{"q", 2}, {"p", 2.0}, {"depth", depth}, {"path", "leftmost (n,0)"}};
    const auto ex = lipschitz_examples(geo, p);

    r.close("Lipschitz seminorm of |v| is 1", K::Claim, lipschitz_seminorm(ex.f_abs, depth), 1.0);
    r.holds("|v| is not in T_p", K::Claim, membership(ex.f_abs, p, Space::Tp, depth).verdict == Verdict::NotInSpace);

    r.holds("g is in T_p", K::Claim, membership(ex.g_path, p, Space::Tp, depth).verdict == Verdict::InSpace);
    // off-path children of (n-1, 0) jump by L(n-1)^(1/p), the largest increment up to level n
    r.close("Lipschitz increments of g reach L(depth-1)^(1/p)", K::Derived, lipschitz_seminorm(ex.g_path, depth),
            std::sqrt(3.0 * std::ldexp(1.0, static_cast<int>(depth) - 2)));
    r.holds("Lipschitz increments of g grow with depth", K::Claim,
            lipschitz_seminorm(ex.g_path, depth) > lipschitz_seminorm(ex.g_path, depth / 2));

    std::vector<std::pair<double, double>> weighted;
    for (unsigned d = 1; d <= depth; ++d) weighted.emplace_back(weighted_lipschitz_seminorm(ex.h_harmonic, d), 1.0);
    r.close_all("weighted Lipschitz seminorm of h is 1 at every depth", K::Derived, weighted);
    r.holds("h is not in T_p", K::Claim,
            membership(ex.h_harmonic, p, Space::Tp, depth).verdict == Verdict::NotInSpace);

    std::vector<std::pair<double, double>> chi_means;
    for (unsigned n = 0; n <= depth; ++n) chi_means.emplace_back(level_mean(ex.chi_path, n, p), level_power(geo, n, -0.5));
    r.close_all("M_p(n, chi_A) = L(n)^(-1/p)", K::Derived, chi_means);
    r.holds("chi_A is in T_p", K::Claim, membership(ex.chi_path, p, Space::Tp, depth).verdict == Verdict::InSpace);
    r.close("weighted increments of chi_A reach depth", K::Derived, weighted_lipschitz_seminorm(ex.chi_path, depth),
            static_cast<double>(depth));
    r.reports["norm_chi_A"] = to_json(norm(ex.chi_path, p, depth));
    return r;
}

inline ScenarioResult uniform_vs_norm_run() {
    ScenarioResult r;
    const TreeGeometry geo(2);
    const Exponent p = Exponent::finite(2.0);
    r.params = {{"q", 2}, {"p", 2.0}, {"n", "0..200"}, {"N", {0, 3, 10}}};
    const auto one = FunctionRep::radial(geo, std::vector<Complex>{1.0}, Extension::Hold);
    std::vector<unsigned> ns(201);
    std::iota(ns.begin(), ns.end(), 0u);
    const auto fs = truncation_sequence(one, ns);

    std::vector<std::pair<double, double>> gaps;
    bool exact = true;
    for (unsigned n = 0; n <= 200; ++n) {
        const auto nr = norm(combine(1.0, one, -1.0, fs[n]), p, 202);
        exact = exact && nr.exact;
        gaps.emplace_back(nr.value, 1.0);
        if (n == 5) r.reports["norm_gap_n5"] = to_json(nr);
    }
    r.close_all("||f - f_n||_p = 1 for n <= 200", K::Claim, gaps);
    r.holds("norm gaps are exact", K::Derived, exact);
    for (unsigned big_n : {0u, 3u, 10u}) {
        std::vector<std::pair<double, double>> diffs;
        for (unsigned n = big_n + 1; n <= 200; ++n) diffs.emplace_back(compact_sup_diff(one, fs[n], big_n), 0.0);
        r.close_all("sup over |v| <= " + std::to_string(big_n) + " of |f - f_n| is 0 for n > N", K::Claim, diffs,
                    0.0);
    }
    return r;
}

inline ScenarioResult non_completeness_run() {
    ScenarioResult r;
    const TreeGeometry geo(2);
    const Exponent p = Exponent::finite(2.0);
    r.params = {{"q", 2}, {"p", 2.0}, {"n", "1..60"}, {"N", 10}};
    const auto f = FunctionRep::radial(geo, std::vector<Complex>{0.0, 1.0}, Extension::Linear);
    std::vector<unsigned> ns(60);
    std::iota(ns.begin(), ns.end(), 1u);
    const auto fs = truncation_sequence(f, ns);

    bool all_in = true;
    std::vector<std::pair<double, double>> norms, pointwise;
    for (std::size_t k = 0; k < fs.size(); ++k) {
        all_in = all_in && membership(fs[k], p, Space::Tp, 70).verdict == Verdict::InSpace;
        norms.emplace_back(norm(fs[k], p, 70).value, static_cast<double>(ns[k]));
        pointwise.emplace_back(compact_sup_diff(f, fs[k], ns[k]), 0.0);
    }
    r.holds("every truncation f_n is in T_p", K::Claim, all_in);
    r.close_all("||f_n||_p = n", K::Derived, norms);
    r.close_all("f_n agrees with |v| on |v| <= n", K::Claim, pointwise, 0.0);
    std::vector<std::pair<double, double>> cauchy;
    for (std::size_t a = 10; a < fs.size(); ++a)
        for (std::size_t b = a + 1; b < fs.size(); b += 7) cauchy.emplace_back(compact_sup_diff(fs[a], fs[b], 10), 0.0);
    r.close_all("f_n and f_m agree on |v| <= 10 once n, m > 10", K::Claim, cauchy, 0.0);
    r.holds("the pointwise limit |v| is not in T_p", K::Claim,
            membership(f, p, Space::Tp, 70).verdict == Verdict::NotInSpace);
    return r;
}

inline ScenarioResult separated_family_run() {
    ScenarioResult r;
    const TreeGeometry geo(2);
    const Exponent p = Exponent::finite(2.0);
    const std::uint64_t seed = 20260101;
    r.params = {{"q", 2}, {"p", 2.0}, {"count", 16}, {"depth", 10}, {"seed", seed}};
    const auto fam = separated_family_sample(geo, 16, seed, 10);
    std::vector<std::pair<double, double>> dists;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
            const double d = norm(combine(1.0, fam[i], -1.0, fam[j]), p, 12).value;
            dists.emplace_back(d, 1.0);
            hits += d == 1.0;
        }
    r.close_all("distinct members are at distance 1", K::Claim, dists, 0.0);
    r.holds("120 pairs examined", K::Derived, dists.size() == 120);
    r.reports["pairs_at_distance_1"] = hits;
    r.reports["pairs"] = dists.size();
    r.close("a member is at distance 0 from itself", K::Identity, norm(combine(1.0, fam[0], -1.0, fam[0]), p, 12).value,
            0.0, 0.0);
    return r;
}

inline ScenarioResult density_run() {
    ScenarioResult r;
    const TreeGeometry geo(2);
    const Exponent p = Exponent::finite(2.0);
    const Exponent rr = Exponent::finite(1.0);
    r.params = {{"q", 2}, {"p", 2.0}, {"r", 1.0}, {"n", "1..30"}};
    const auto f = proper_inclusion(geo, p);  // in T_{r,0}
    std::vector<std::pair<double, double>> gaps;
    bool all_cc = true;
    bool exact = true;
    double previous = kInf;
    bool decreasing = true;
    for (unsigned n = 1; n <= 30; ++n) {
        const auto fn = truncate(f, n);
        all_cc = all_cc && fn.zero_beyond().has_value() && *fn.zero_beyond() <= n;
        const auto nr = norm(combine(1.0, f, -1.0, fn), rr, n + 4);
        exact = exact && nr.exact;
        gaps.emplace_back(nr.value, level_power(geo, n + 1, p.reciprocal() - rr.reciprocal()));
        decreasing = decreasing && nr.value < previous;
        previous = nr.value;
    }
    r.holds("each truncation has finite support", K::Claim, all_cc);
    r.close_all("||f - f_n||_r = sup_{m>n} M_r(m, f)", K::Claim, gaps);
    r.holds("norm gaps are exact", K::Derived, exact);
    r.holds("||f - f_n||_r decreases to 0", K::Claim, decreasing);
    return r;
}

inline std::vector<std::pair<std::string, FunctionRep>> oracle_functions(const TreeGeometry& geo) {
    std::mt19937_64 rng(7 + geo.q());
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::map<VertexId, Complex> entries;
    for (unsigned n = 0; n <= 6; ++n) {
        const auto size = *level_size_u64(geo, n);
        for (int k = 0; k < 3; ++k) entries[{n, rng() % size}] = {u(rng), u(rng)};
    }
    std::vector<std::vector<Complex>> levels;
    for (unsigned n = 0; n <= 6; ++n) {
        std::vector<Complex> row(*level_size_u64(geo, n));
        for (auto& z : row) z = {u(rng), u(rng)};
        levels.push_back(std::move(row));
    }
    return {
        {"finite", FunctionRep::finite(geo, std::move(entries))},
        {"radial", FunctionRep::radial(geo, std::vector<Complex>{{1, 1}, -2.0, 0.5, {0, 3}}, Extension::Cycle)},
        {"path", FunctionRep::path(geo, Sequence::table({0.5, {1, -1}, 2.0}, Extension::Linear), Tail::divergent(), 0.3)},
        {"pointwise", FunctionRep::pointwise(geo,
                                             [](const VertexId& v) {
                                                 return Complex(static_cast<double>(v.index % 5) - 1.5,
                                                                1.0 / (v.level + 1.0));
                                             })},
        {"dense", FunctionRep::dense(geo, std::move(levels))},
    };
}

inline ScenarioResult oracle_agreement_run() {
    ScenarioResult r;
    r.params = {{"q", {1, 2, 3}}, {"p", {0.5, 1.0, 2.0, "inf"}}, {"levels", "0..6"}};
    std::vector<Exponent> ps = finite_exponents();
    ps.back() = Exponent::infinity();
    std::map<std::string, std::vector<std::pair<double, double>>> by_kind;
    for (std::uint32_t q = 1; q <= 3; ++q) {
        const TreeGeometry geo(q);
        for (const auto& [kind, f] : oracle_functions(geo))
            for (const auto& p : ps)
                for (unsigned n = 0; n <= 6; ++n) by_kind[kind].emplace_back(level_mean(f, n, p), dense_oracle_mean(f, n, p));
    }
    for (const auto& [kind, pairs] : by_kind) r.close_all("level means agree with enumeration, " + kind, K::Derived, pairs);
    const TreeGeometry geo(3);
    r.close("M_p of chi_v at |v| = 2 is 12^(-1/p), p=2", K::Derived,
            dense_oracle_mean(FunctionRep::point_mass(geo, {2, 4}), 2, Exponent::finite(2.0)), std::pow(12.0, -0.5));
    return r;
}

inline FunctionRep random_finite(const TreeGeometry& geo, std::mt19937_64& rng, unsigned max_level, int terms) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::map<VertexId, Complex> entries;
    for (int k = 0; k < terms; ++k) {
        const unsigned n = static_cast<unsigned>(rng() % (max_level + 1));
        entries[{n, rng() % *level_size_u64(geo, n)}] = {u(rng), u(rng)};
    }
    return FunctionRep::finite(geo, std::move(entries));
}

inline std::vector<VertexId> support_of(const FunctionRep& f) {
    std::vector<VertexId> out;
    for (const auto& [v, z] : f.as<FiniteSupport>()->entries) out.push_back(v);
    return out;
}

inline ScenarioResult operator_norm_run() {
    ScenarioResult r;
    const Exponent p = Exponent::finite(2.0);
    r.params = {{"q", {1, 2, 3}}, {"p", 2.0}, {"symbols", 30}, {"seed", 11}};
    std::mt19937_64 rng(11);
    std::vector<std::pair<double, double>> equal;
    bool submult = true, eigen = true;
    for (int k = 0; k < 30; ++k) {
        const TreeGeometry geo(1 + k % 3);
        const Symbol s{random_finite(geo, rng, 5, 6)};
        const auto support = support_of(s.psi);
        const double op = operator_norm(s, p, 8).value;
        equal.emplace_back(delta_lower_bound(s, p, support), op);
        const auto f = random_finite(geo, rng, 5, 8);
        submult = submult && numeric::leq(norm(apply(s, f), p, 8).value, op * norm(f, p, 8).value, 1e-12);
        for (const auto& v : support) {
            const auto img = apply(s, FunctionRep::point_mass(geo, v));
            const auto* e = img.as<FiniteSupport>();
            eigen = eigen && e && e->entries.size() <= 1 && img(v) == s.psi(v);
        }
    }
    r.close_all("point-mass lower bound equals ||psi||_inf", K::Claim, equal, 1e-12);
    r.holds("||M_psi f||_p <= ||psi||_inf ||f||_p", K::Claim, submult);
    r.holds("M_psi chi_v = psi(v) chi_v", K::Claim, eigen);
    const TreeGeometry geo(2);
    const Symbol unbounded{FunctionRep::radial(geo, Sequence::rule([](unsigned n) { return Complex(n); }),
                                               Tail::divergent())};
    r.holds("psi(v) = |v| gives an unbounded operator", K::Claim,
            bounded_verdict(norm(unbounded.psi, Exponent::infinity(), 10)) == Decision::No);
    const Symbol chi{FunctionRep::point_mass(geo, {1, 0})};
    r.reports["chi_v"] = to_json(analyze(chi, p, 6));
    return r;
}

inline ScenarioResult spectrum_run() {
    ScenarioResult r;
    const TreeGeometry geo(2);
    const Exponent p = Exponent::finite(2.0);
    r.params = {{"q", 2}, {"p", 2.0}, {"lambda", 3.0}, {"depth", 6}};
    const Symbol chi{FunctionRep::point_mass(geo, {1, 0})};
    const auto sample = point_spectrum_sample(chi, 6);
    std::set<std::pair<double, double>> got;
    for (const auto& z : sample.values) got.emplace(z.real(), z.imag());
    r.holds("point spectrum of chi_v is {0, 1}", K::Claim,
            got == std::set<std::pair<double, double>>{{0.0, 0.0}, {1.0, 0.0}} && sample.complete);
    r.reports["spectrum_chi_v"] = to_json(sample);

    const auto cls = spectrum_classify(chi, 3.0, 6);
    r.holds("3 lies in the resolvent set", K::Claim, cls.kind == SpectrumKind::Resolvent);
    const Symbol inv = resolvent_symbol(chi, 3.0);
    r.close("resolvent norm is 1/dist = 1/2", K::Derived, operator_norm(inv, p, 6).value, 0.5);
    r.close("resolvent value at v0 is -1/2", K::Derived, inv.psi({1, 0}).real(), -0.5, 1e-12);
    r.close("resolvent value off v0 is -1/3", K::Derived, inv.psi({2, 3}).real(), -1.0 / 3.0, 1e-12);

    double worst = 0.0;
    const auto shifted = combine(1.0, chi.psi, -3.0, FunctionRep::radial(geo, std::vector<Complex>{1.0}, Extension::Hold));
    for (unsigned n = 0; n <= 4; ++n)
        for (const auto v : enumerate_level(geo, n)) {
            const auto w = FunctionRep::point_mass(geo, v);
            const auto back = apply(inv, apply(Symbol{shifted}, w));
            for (unsigned m = 0; m <= 4; ++m)
                for (const auto u : enumerate_level(geo, m)) worst = std::max(worst, std::abs(back(u) - w(u)));
        }
    r.close("resolvent composed with M_{psi - lambda} is the identity", K::Identity, worst, 0.0, 1e-12);

    const Symbol decay{FunctionRep::radial(geo, Sequence::rule([](unsigned n) { return Complex(1.0 / (n + 1.0)); }),
                                           Tail::vanishing().decreasing().with_upper(1.0))};
    bool refused = false;
    try {
        (void)resolvent_symbol(decay, 0.0);
    } catch (const NotInvertible&) {
        refused = true;
    }
    r.holds("0 is in the closure of the range of 1/(n+1)", K::Claim, refused);
    return r;
}

inline ScenarioResult compactness_run() {
    ScenarioResult r;
    const TreeGeometry geo(2);
    const Exponent p = Exponent::finite(2.0);
    r.params = {{"q", 2}, {"p", 2.0}, {"depth", 12}, {"seed", 5}};
    std::mt19937_64 rng(5);
    bool yes = true, finite_rank = true, zero_bound = true, nonincreasing = true;
    for (int k = 0; k < 20; ++k) {
        const Symbol s{random_finite(geo, rng, 4, 5)};
        const unsigned support = *s.psi.zero_beyond();
        yes = yes && compactness_verdict(s, 12).verdict == Decision::Yes;
        const auto img = apply(s, FunctionRep::radial(geo, std::vector<Complex>{2.0, {1, 1}}, Extension::Cycle));
        for (unsigned n = support + 1; n <= 7; ++n) finite_rank = finite_rank && level_mean(img, n, p) == 0.0;
        const auto ess = essential_norm_upper(s, 12);
        zero_bound = zero_bound && ess.bound == 0.0;
        nonincreasing = nonincreasing && std::is_sorted(ess.sequence.rbegin(), ess.sequence.rend());
    }
    r.holds("finitely supported symbols are compact", K::Claim, yes);
    r.holds("M_psi f vanishes beyond the support of psi", K::Claim, finite_rank);
    r.holds("essential norm bound is 0 for finite support", K::Claim, zero_bound);
    r.holds("essential norm bound sequence is nonincreasing", K::Derived, nonincreasing);

    const Symbol one{FunctionRep::radial(geo, std::vector<Complex>{1.0}, Extension::Hold)};
    r.holds("psi = 1 is not compact", K::Claim, compactness_verdict(one, 12).verdict == Decision::No);
    const auto ess_one = essential_norm_upper(one, 12);
    std::vector<std::pair<double, double>> ones;
    for (double b : ess_one.sequence) ones.emplace_back(b, 1.0);
    ones.emplace_back(ess_one.bound, 1.0);
    r.close_all("essential norm bound for psi = 1 is 1 at every n", K::Derived, ones, 0.0);

    const Symbol decay{FunctionRep::radial(geo, Sequence::rule([](unsigned n) { return Complex(1.0 / (n + 1.0)); }),
                                           Tail::vanishing().decreasing().with_upper(1.0))};
    r.holds("psi = 1/(|v|+1) is compact", K::Derived, compactness_verdict(decay, 12).verdict == Decision::Yes);

    std::vector<FunctionRep> masses;
    for (unsigned n = 0; n <= 20; ++n) masses.push_back(normalized_point_mass(geo, leftmost_path_vertex(n), p));
    const auto decay_seq = pointwise_null_sequence_check(decay, masses, p, 22);
    const auto one_seq = pointwise_null_sequence_check(one, masses, p, 22);
    std::vector<std::pair<double, double>> dpairs, opairs;
    for (unsigned n = 0; n <= 20; ++n) {
        dpairs.emplace_back(decay_seq[n], 1.0 / (n + 1.0));
        opairs.emplace_back(one_seq[n], 1.0);
    }
    r.close_all("||psi g_k||_p = |psi(v_k)| along the path", K::Derived, dpairs);
    r.close_all("psi = 1 leaves unit point masses at norm 1", K::Identity, opairs);
    r.reports["essential_psi_1"] = ess_one.sequence;
    return r;
}

inline ScenarioResult isometry_run() {
    ScenarioResult r;
    const TreeGeometry geo(2);
    r.params = {{"q", 2}, {"p", {0.5, 1.0, 2.0, "inf"}}, {"depth", 6}, {"seed", 3}};
    const Symbol uni{FunctionRep::radial(geo, Sequence::rule([](unsigned n) { return std::polar(1.0, double(n)); }),
                                         Tail::constant(1.0))};
    r.holds("unimodular radial symbol is an isometry", K::Claim, isometry_verdict(uni, 6).verdict == Decision::Yes);
    std::mt19937_64 rng(3);
    std::vector<std::pair<double, double>> kept;
    for (int k = 0; k < 10; ++k) {
        const auto f = random_finite(geo, rng, 5, 8);
        const auto img = apply(uni, f);
        for (const Exponent p : {Exponent::finite(0.5), Exponent::finite(1.0), Exponent::finite(2.0), Exponent::infinity()})
            for (unsigned n = 0; n <= 6; ++n) kept.emplace_back(level_mean(img, n, p), level_mean(f, n, p));
    }
    r.close_all("M_p(n, psi f) = M_p(n, f)", K::Claim, kept, 1e-12);

    const auto chi = isometry_verdict(Symbol{FunctionRep::point_mass(geo, {1, 0})}, 6);
    r.holds("chi_v is not an isometry", K::Identity, chi.verdict == Decision::No && chi.witness && *chi.witness != VertexId{1, 0});

    const VertexId v0{2, 3};
    const Exponent p = Exponent::finite(2.0);
    for (const double m : {1.5, 0.5}) {
        const Symbol bumped{FunctionRep::pointwise(geo, [v0, m](const VertexId& v) { return Complex(v == v0 ? m : 1.0); })};
        const auto verdict = isometry_verdict(bumped, 6);
        const std::string tag = "|psi(v0)| = " + std::to_string(m).substr(0, 3);
        r.holds(tag + " is not an isometry, witness v0", K::Claim,
                verdict.verdict == Decision::No && verdict.witness == v0);
        r.close(tag + " moves the unit point mass at v0 to norm |psi(v0)|", K::Claim,
                norm(apply(bumped, normalized_point_mass(geo, v0, p)), p, 2).value, m);
    }
    return r;
}

inline const std::vector<Scenario>& registry() {
    static const std::vector<Scenario> all{
        {"sharp-growth", "point masses scaled to norm 1 attain the point evaluation bound", sharp_growth_run},
        {"proper-inclusion", "a path function separating T_r, T_p and T_s for r < p < s", proper_inclusion_run},
        {"lipschitz-comparison", "Lipschitz and weighted Lipschitz spaces are not comparable with T_p",
         lipschitz_comparison_run},
        {"uniform-vs-norm", "truncations of f = 1 converge on compacts but not in norm", uniform_vs_norm_run},
        {"non-completeness", "truncations of |v| are Cauchy on compacts with limit outside T_p", non_completeness_run},
        {"separated-family", "distinct radial {0,1} functions are pairwise at distance 1", separated_family_run},
        {"density", "truncations of a T_{r,0} function converge to it in norm", density_run},
        {"oracle-agreement", "level means agree with brute-force enumeration", oracle_agreement_run},
        {"operator-norm", "||M_psi|| = ||psi||_inf from both sides", operator_norm_run},
        {"spectrum", "point spectrum, resolvent and closure of the range", spectrum_run},
        {"compactness", "compactness and essential norm bounds", compactness_run},
        {"isometry", "isometries are exactly the unimodular symbols", isometry_run},
    };
    return all;
}

}  // namespace scenarios

inline const std::vector<Scenario>& scenario_registry() { return scenarios::registry(); }

inline const Scenario* find_scenario(std::string_view name) {
    for (const auto& s : scenario_registry())
        if (s.name == name) return &s;
    return nullptr;
}

inline ScenarioResult run_scenario(const Scenario& s) {
    ScenarioResult r = s.run();
    r.name = s.name;
    r.description = s.description;
    r.params["path"] = "leftmost (n,0)";
    return r;
}

}  // namespace treehardy
