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

// Declared facts about a nonnegative sequence m_n (the level-wise magnitudes
// of an infinite representation) for all levels n >= from.
//
// A finite computation cannot observe a limit, so every statement about the
// infinitely many unexamined levels comes from here. The library never
// invents a fact: combinations and products only propagate what follows
// from the operands' tails.

#include <treehardy/error.hpp>
#include <treehardy/numeric.hpp>
#include <treehardy/tree.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>

namespace treehardy {

enum class TailKind { Vanishing, Bounded, Divergent, Unknown };

inline const char* to_string(TailKind kind) noexcept {
    switch (kind) {
        case TailKind::Vanishing: return "vanishing";
        case TailKind::Bounded: return "bounded";
        case TailKind::Divergent: return "divergent";
        case TailKind::Unknown: return "unknown";
    }
    return "unknown";
}

struct Tail {
    TailKind kind = TailKind::Unknown;
    unsigned from = 1;             // facts hold for n >= from (from >= 1)
    std::optional<double> upper;   // m_n <= upper
    std::optional<double> lower;   // m_n >= lower
    std::optional<double> limit;   // m_n -> limit
    bool nonincreasing = false;    // m_{n+1} <= m_n

    static Tail of(TailKind k) { Tail t; t.kind = k; return t; }

    static Tail unknown() { return {}; }
    static Tail divergent() { return of(TailKind::Divergent); }
    static Tail vanishing() { return of(TailKind::Vanishing).with_limit(0.0); }
    static Tail bounded(double bound) { return of(TailKind::Bounded).with_upper(bound); }

    // m_n == c for every n >= from.
    static Tail constant(double c, unsigned from = 1) {
        Tail t = of(c == 0.0 ? TailKind::Vanishing : TailKind::Bounded).with_upper(c).with_lower(c).with_limit(c);
        t.from = std::max(from, 1u);
        t.nonincreasing = true;
        return t;
    }

    // m_n == 0 for every n > level.
    static Tail zero_beyond(unsigned level) { return constant(0.0, level + 1); }

    Tail starting_at(unsigned n) const { Tail t = *this; t.from = std::max(n, 1u); return t; }
    Tail with_upper(double u) const { Tail t = *this; t.upper = u; return t; }
    Tail with_lower(double l) const { Tail t = *this; t.lower = l; return t; }
    Tail with_limit(double l) const { Tail t = *this; t.limit = l; return t; }
    Tail decreasing() const { Tail t = *this; t.nonincreasing = true; return t; }

    bool eventually_zero() const noexcept { return upper && *upper == 0.0; }

    // lim m_n when it is known.
    std::optional<double> effective_limit() const noexcept {
        if (eventually_zero() || kind == TailKind::Vanishing) return 0.0;
        return limit;
    }

    // The tail is known to be bounded, whether or not a bound is stated.
    bool bounded_above() const noexcept {
        return kind == TailKind::Vanishing || kind == TailKind::Bounded || upper.has_value() ||
               limit.has_value();
    }

    bool bounded_away_from_zero() const noexcept {
        return (lower && *lower > 0.0) || (limit && *limit > 0.0) || kind == TailKind::Divergent;
    }

    // Multiply every m_n by c >= 0.
    Tail scaled(double c) const {
        if (c == 0.0) return constant(0.0, from);
        Tail t = *this;
        if (t.upper) *t.upper *= c;
        if (t.lower) *t.lower *= c;
        if (t.limit) *t.limit *= c;
        return t;
    }

    // Throws InconsistentTail when the declaration contradicts itself.
    void validate() const {
        auto bad = [](const std::string& what) { throw InconsistentTail("tail declaration: " + what); };
        if (from < 1) bad("facts must start at level 1 or later");
        for (auto v : {upper, lower, limit})
            if (v && (!(*v >= 0.0) || std::isnan(*v))) bad("bounds must be nonnegative numbers");
        if (upper && lower && *lower > *upper) bad("lower bound exceeds upper bound");
        if (kind == TailKind::Divergent && (upper || limit)) bad("a divergent tail cannot be bounded");
        if (kind == TailKind::Vanishing && ((limit && *limit != 0.0) || (lower && *lower > 0.0)))
            bad("a vanishing tail must tend to zero");
        if (limit && upper && *limit > *upper) bad("limit exceeds upper bound");
        if (limit && lower && *limit < *lower) bad("limit below lower bound");
    }

    // Reports the first contradiction between the declaration and the
    // observed prefix m_0..m_depth, if any. This is a consistency check, not
    // a proof of the declaration.
    std::optional<std::string> check_prefix(std::span<const double> m, double rel_tol = 1e-12) const {
        for (std::size_t n = from; n < m.size(); ++n) {
            if (upper && !numeric::leq(m[n], *upper, rel_tol))
                return "level " + std::to_string(n) + " exceeds the declared upper bound";
            if (lower && !numeric::leq(*lower, m[n], rel_tol))
                return "level " + std::to_string(n) + " is below the declared lower bound";
            if (nonincreasing && n > from && !numeric::leq(m[n], m[n - 1], rel_tol))
                return "level " + std::to_string(n) + " breaks the declared monotone decrease";
        }
        // A vanishing declaration is rejected when the observed tail climbs
        // strictly over its last eight levels to a new maximum.
        constexpr std::size_t kWindow = 8;
        if (kind == TailKind::Vanishing && m.size() >= from + kWindow) {
            const std::size_t start = m.size() - kWindow;
            bool climbing = true;
            for (std::size_t n = start + 1; n < m.size(); ++n) climbing = climbing && m[n] > m[n - 1];
            const double top = *std::max_element(m.begin() + from, m.end() - 1);
            if (climbing && m.back() > top) return "declared vanishing but the observed means keep growing";
        }
        return std::nullopt;
    }
};

// Tail of |a x_n + b y_n| given tails of |x_n| and |y_n|, with abs_a = |a|,
// abs_b = |b|.
inline Tail combine_tails(double abs_a, const Tail& x, double abs_b, const Tail& y) {
    const bool x_gone = abs_a == 0.0 || x.eventually_zero();
    const bool y_gone = abs_b == 0.0 || y.eventually_zero();
    if (x_gone && y_gone) {
        const unsigned from = std::max(abs_a == 0.0 ? 1u : x.from, abs_b == 0.0 ? 1u : y.from);
        return Tail::constant(0.0, from);
    }
    if (x_gone) return y.scaled(abs_b).starting_at(std::max(abs_a == 0.0 ? 1u : x.from, y.from));
    if (y_gone) return x.scaled(abs_a).starting_at(std::max(abs_b == 0.0 ? 1u : y.from, x.from));

    Tail t;
    t.from = std::max(x.from, y.from);
    if (x.upper && y.upper) t.upper = abs_a * *x.upper + abs_b * *y.upper;
    double low = 0.0;
    if (x.lower && y.upper) low = std::max(low, abs_a * *x.lower - abs_b * *y.upper);
    if (y.lower && x.upper) low = std::max(low, abs_b * *y.lower - abs_a * *x.upper);
    if (low > 0.0) t.lower = low;
    const auto lx = x.effective_limit();
    const auto ly = y.effective_limit();
    if (lx && ly && *lx == 0.0) t.limit = abs_b * *ly;
    else if (lx && ly && *ly == 0.0) t.limit = abs_a * *lx;

    if (t.limit && *t.limit == 0.0) {
        t.kind = TailKind::Vanishing;
    } else if ((x.kind == TailKind::Divergent && y.bounded_above()) ||
               (y.kind == TailKind::Divergent && x.bounded_above())) {
        t.kind = TailKind::Divergent;
        t.upper.reset();
        t.limit.reset();
    } else if (x.bounded_above() && y.bounded_above()) {
        t.kind = TailKind::Bounded;
    }
    return t;
}

// Tail of x_n * y_n.
inline Tail multiply_tails(const Tail& x, const Tail& y) {
    if (x.eventually_zero() && y.eventually_zero()) return Tail::constant(0.0, std::min(x.from, y.from));
    if (x.eventually_zero()) return Tail::constant(0.0, x.from);
    if (y.eventually_zero()) return Tail::constant(0.0, y.from);

    Tail t;
    t.from = std::max(x.from, y.from);
    if (x.upper && y.upper) t.upper = *x.upper * *y.upper;
    if (x.lower && y.lower) t.lower = *x.lower * *y.lower;
    const auto lx = x.effective_limit();
    const auto ly = y.effective_limit();
    if (lx && ly) t.limit = *lx * *ly;
    else if (lx && *lx == 0.0 && y.bounded_above()) t.limit = 0.0;
    else if (ly && *ly == 0.0 && x.bounded_above()) t.limit = 0.0;
    t.nonincreasing = x.nonincreasing && y.nonincreasing;

    if (t.limit && *t.limit == 0.0) {
        t.kind = TailKind::Vanishing;
    } else if ((x.kind == TailKind::Divergent && y.bounded_away_from_zero()) ||
               (y.kind == TailKind::Divergent && x.bounded_away_from_zero())) {
        t.kind = TailKind::Divergent;
        t.upper.reset();
        t.limit.reset();
    } else if (x.bounded_above() && y.bounded_above()) {
        t.kind = TailKind::Bounded;
    }
    if (t.kind == TailKind::Divergent) t.nonincreasing = false;
    return t;
}

// Tail of m_n * level_size(n)^e for n >= 1.
inline Tail scale_by_level_power(const Tail& t, const TreeGeometry& geo, double e) {
    if (e == 0.0 || t.eventually_zero()) return t;
    if (geo.q() == 1) return t.scaled(std::exp(e * std::log(2.0)));  // every level n >= 1 has 2 vertices

    // q >= 2: level_size(n)^e is strictly monotone in n and tends to 0 or inf.
    const double edge = std::exp(e * log_level_size(geo, t.from));
    Tail out;
    out.from = t.from;
    if (e < 0.0) {
        if (t.upper) out.upper = *t.upper * edge;
        out.nonincreasing = t.nonincreasing;
        if (t.bounded_above()) {
            out.kind = TailKind::Vanishing;
            out.limit = 0.0;
        }
        return out;
    }
    if (t.lower) out.lower = *t.lower * edge;
    if (t.bounded_away_from_zero()) out.kind = TailKind::Divergent;
    return out;
}

}  // namespace treehardy
