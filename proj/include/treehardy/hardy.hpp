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

// Level means M_p(n, f), the norm sup_n M_p(n, f), and membership evidence
// for the spaces T_p (finite norm) and T_{p,0} (means tending to zero).

#include <treehardy/algebra.hpp>
#include <treehardy/exponent.hpp>
#include <treehardy/function.hpp>
#include <treehardy/numeric.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace treehardy {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class MeanMethod { ClosedForm, Enumerated };

inline const char* to_string(MeanMethod m) noexcept {
    return m == MeanMethod::ClosedForm ? "closed-form" : "enumerated";
}

struct LevelMean {
    double value = 0.0;
    MeanMethod method = MeanMethod::ClosedForm;
};

namespace detail {

inline double log_abs(Complex z) { return z == Complex{} ? numeric::kNegInf : std::log(std::abs(z)); }

// ln M_p(n) from the log-sum of p*ln|f(v)| over the level.
inline double finish_log_mean(double log_sum, double log_size, const Exponent& p) {
    if (log_sum == numeric::kNegInf) return numeric::kNegInf;
    return (log_sum - log_size) / p.value();
}

template <class Values>
double enumerated_mean(const Values& values, const TreeGeometry& geo, unsigned n, const Exponent& p) {
    if (p.is_infinite()) {
        double best = 0.0;
        for (const Complex& z : values) best = std::max(best, std::abs(z));
        return best;
    }
    numeric::LogSumExp acc;
    for (const Complex& z : values) acc.add(p.value() * log_abs(z));
    return std::exp(finish_log_mean(acc.value(), log_level_size(geo, n), p));
}

}  // namespace detail

inline LevelMean level_mean_detailed(const FunctionRep& f, unsigned n, const Exponent& p,
                                     std::uint64_t cap = kDefaultCap) {
    const auto& geo = f.geometry();
    if (n == 0) return {std::abs(f(kRoot)), MeanMethod::ClosedForm};

    if (const auto* r = f.as<Radial>()) return {std::abs(r->values(n)), MeanMethod::ClosedForm};

    if (const auto* path = f.as<PathSupported>()) {
        const Complex kappa = path->coefficients(n);
        if (kappa == Complex{}) return {0.0, MeanMethod::ClosedForm};
        const double exponent = path->growth - p.reciprocal();
        return {std::exp(std::log(std::abs(kappa)) + exponent * log_level_size(geo, n)), MeanMethod::ClosedForm};
    }

    if (const auto* fs = f.as<FiniteSupport>()) {
        const auto first = fs->entries.lower_bound(VertexId{n, 0});
        const auto last = fs->entries.lower_bound(VertexId{n + 1, 0});
        if (p.is_infinite()) {
            double best = 0.0;
            for (auto it = first; it != last; ++it) best = std::max(best, std::abs(it->second));
            return {best, MeanMethod::ClosedForm};
        }
        numeric::LogSumExp acc;
        for (auto it = first; it != last; ++it) acc.add(p.value() * detail::log_abs(it->second));
        return {std::exp(detail::finish_log_mean(acc.value(), log_level_size(geo, n), p)), MeanMethod::ClosedForm};
    }

    if (const auto* d = f.as<DenseTruncated>()) {
        if (n >= d->levels.size()) return {0.0, MeanMethod::ClosedForm};
        return {detail::enumerated_mean(d->levels[n], geo, n, p), MeanMethod::Enumerated};
    }

    const auto vertices = enumerate_level(geo, n, cap);
    return {detail::enumerated_mean(vertices | std::views::transform([&f](const VertexId& v) { return f(v); }), geo,
                                    n, p),
            MeanMethod::Enumerated};
}

inline double level_mean(const FunctionRep& f, unsigned n, const Exponent& p, std::uint64_t cap = kDefaultCap) {
    return level_mean_detailed(f, n, p, cap).value;
}

// Declared facts about n -> M_p(n, f) for n >= from.
inline Tail mean_tail(const FunctionRep& f, const Exponent& p) {
    if (const auto* r = f.as<Radial>()) return r->tail;
    if (const auto* path = f.as<PathSupported>())
        return scale_by_level_power(path->tail, f.geometry(), path->growth - p.reciprocal());
    if (const auto level = f.zero_beyond()) return Tail::zero_beyond(*level);
    return Tail::unknown();
}

// M_p(0..depth, f), checked against the declared tail.
inline std::vector<double> examine(const FunctionRep& f, const Exponent& p, unsigned depth,
                                   std::uint64_t cap = kDefaultCap) {
    std::vector<double> means(depth + 1);
    for (unsigned n = 0; n <= depth; ++n) means[n] = level_mean(f, n, p, cap);
    if (const auto problem = mean_tail(f, p).check_prefix(means)) throw InconsistentTail(*problem);
    return means;
}

struct NormReport {
    double value = 0.0;
    unsigned depth_examined = 0;
    bool exact = false;                     // value is the sup over all levels
    std::optional<unsigned> attained_level;
};

namespace detail {

// Decide whether the prefix maximum is the sup over every level, using the
// tail facts for the levels beyond the prefix.
inline NormReport resolve_sup(std::span<const double> means, const Tail& tail) {
    NormReport report;
    report.depth_examined = static_cast<unsigned>(means.size() - 1);
    const auto top = std::max_element(means.begin(), means.end());
    report.value = *top;
    report.attained_level = static_cast<unsigned>(top - means.begin());
    if (tail.kind == TailKind::Divergent) {
        report.value = kInf;
        report.exact = true;
        report.attained_level.reset();
        return report;
    }
    const unsigned depth = report.depth_examined;
    if (depth + 1 < tail.from) return report;  // levels between the prefix and the tail are unseen

    if (tail.eventually_zero() && depth + 1 >= tail.from) {
        report.exact = true;
    } else if (tail.nonincreasing && depth >= tail.from) {
        report.exact = true;
    } else if (tail.upper && *tail.upper <= report.value) {
        report.exact = true;
    } else if (tail.upper && tail.limit && *tail.limit >= *tail.upper) {
        // sup >= limsup = upper >= sup, and not attained beyond the prefix
        report.value = *tail.upper;
        report.exact = true;
        report.attained_level.reset();
    }
    return report;
}

}  // namespace detail

inline NormReport norm(const FunctionRep& f, const Exponent& p, unsigned depth, std::uint64_t cap = kDefaultCap) {
    if (f.as<FiniteSupport>() || f.as<DenseTruncated>()) {
        const unsigned full = std::max(depth, *f.zero_beyond());
        const auto means = examine(f, p, full, cap);
        NormReport report = detail::resolve_sup(means, Tail::zero_beyond(full));
        report.exact = true;
        return report;
    }
    const auto means = examine(f, p, depth, cap);
    return detail::resolve_sup(means, mean_tail(f, p));
}

// C * indicator of {v} with C chosen so that the norm is exactly 1.
inline FunctionRep normalized_point_mass(const TreeGeometry& geo, const VertexId& v, const Exponent& p) {
    const double c = std::exp(p.reciprocal() * log_level_size(geo, v.level));
    return FunctionRep::point_mass(geo, v, c);
}

// Bound on the point evaluation functional at v: level_size(|v|)^(1/p).
inline double point_evaluation_bound(const TreeGeometry& geo, const VertexId& v, const Exponent& p) {
    return std::exp(p.reciprocal() * log_level_size(geo, v.level));
}

enum class Space { Tp, Tp0 };
enum class Verdict { InSpace, NotInSpace, Inconclusive };

inline const char* to_string(Space s) noexcept { return s == Space::Tp ? "Tp" : "Tp0"; }
inline const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::InSpace: return "InSpace";
        case Verdict::NotInSpace: return "NotInSpace";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

struct MembershipVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::string evidence;
    std::vector<double> means;  // M_p(n, f), n = 0..depth
};

inline MembershipVerdict membership(const FunctionRep& f, const Exponent& p, Space space, unsigned depth,
                                    std::uint64_t cap = kDefaultCap) {
    MembershipVerdict out;
    out.means = examine(f, p, depth, cap);
    if (f.as<PointwiseRule>()) {
        out.evidence = "opaque rule: only the prefix of means is known";
        return out;
    }
    const Tail tail = mean_tail(f, p);
    if (tail.kind == TailKind::Divergent) {
        out.verdict = Verdict::NotInSpace;
        out.evidence = "means are unbounded";
        return out;
    }
    if (space == Space::Tp) {
        if (tail.bounded_above()) {
            out.verdict = Verdict::InSpace;
            out.evidence = tail.eventually_zero() ? "means vanish beyond a finite level" : "means are bounded";
        } else {
            out.evidence = "no bound on the means beyond the examined prefix";
        }
        return out;
    }
    const auto limit = tail.effective_limit();
    if (limit && *limit == 0.0) {
        out.verdict = Verdict::InSpace;
        out.evidence = tail.eventually_zero() ? "means vanish beyond a finite level" : "means tend to zero";
    } else if (tail.bounded_away_from_zero()) {
        out.verdict = Verdict::NotInSpace;
        out.evidence = "means stay bounded away from zero";
    } else {
        out.evidence = "the limit of the means is not determined";
    }
    return out;
}

struct GrowthBound {
    double bound = 0.0;  // level_size(|v|)^(1/p) * ||f||_p
    double value = 0.0;  // |f(v)|
    double ratio = 0.0;  // value / bound
    bool exact = false;  // the norm used was exact
};

inline GrowthBound growth_bound(const FunctionRep& f, const Exponent& p, const VertexId& v, unsigned depth,
                                std::uint64_t cap = kDefaultCap) {
    check_vertex(f.geometry(), v);
    const NormReport nr = norm(f, p, depth, cap);
    GrowthBound out;
    out.exact = nr.exact;
    const Complex fv = f(v);
    out.value = std::abs(fv);
    const double log_bound = p.reciprocal() * log_level_size(f.geometry(), v.level) +
                             (nr.value == 0.0 ? numeric::kNegInf : std::log(nr.value));
    out.bound = std::exp(log_bound);
    if (fv == Complex{}) out.ratio = 0.0;
    else out.ratio = std::exp(std::log(out.value) - log_bound);
    return out;
}

// sup over |v| <= max_level of |f(v) - g(v)|.
inline double compact_sup_diff(const FunctionRep& f, const FunctionRep& g, unsigned max_level,
                               std::uint64_t cap = kDefaultCap) {
    const FunctionRep diff = combine(1.0, f, -1.0, g, cap);
    double best = 0.0;
    for (unsigned n = 0; n <= max_level; ++n) best = std::max(best, level_mean(diff, n, Exponent::infinity(), cap));
    return best;
}

namespace detail {

// sup over 1 <= |v| <= depth of w(|v|) |f(v) - f(parent(v))|.
template <class Weight>
double increment_sup(const FunctionRep& f, unsigned depth, std::uint64_t cap, Weight weight) {
    const auto& geo = f.geometry();
    double best = 0.0;
    auto consider = [&](unsigned level, Complex child, Complex parent_value) {
        best = std::max(best, weight(level) * std::abs(child - parent_value));
    };

    if (const auto* r = f.as<Radial>()) {
        for (unsigned n = 1; n <= depth; ++n) consider(n, r->values(n), r->values(n - 1));
        return best;
    }
    if (f.as<PathSupported>()) {
        for (unsigned n = 1; n <= depth; ++n) {
            const Complex above = f(VertexId{n - 1, 0});
            consider(n, f(VertexId{n, 0}), above);
            // an off-path child of a path vertex exists at level 1 always, deeper when q >= 2
            if (n == 1 || geo.q() >= 2) consider(n, Complex{}, above);
        }
        return best;
    }
    if (const auto* fs = f.as<FiniteSupport>()) {
        const auto& e = fs->entries;
        for (const auto& [v, value] : e) {
            if (v.level >= 1 && v.level <= depth) consider(v.level, value, f(parent(geo, v)));
            if (v.level < depth) {
                const auto kids = children(geo, v);
                const auto first = e.lower_bound(kids.front());
                const auto last = e.upper_bound(kids.back());
                if (static_cast<std::size_t>(std::distance(first, last)) < kids.size())
                    consider(v.level + 1, Complex{}, value);
            }
        }
        return best;
    }
    for (unsigned n = 1; n <= depth; ++n)
        for (const auto& v : enumerate_level(geo, n, cap)) consider(n, f(v), f(parent(geo, v)));
    return best;
}

}  // namespace detail

inline double lipschitz_seminorm(const FunctionRep& f, unsigned depth, std::uint64_t cap = kDefaultCap) {
    return detail::increment_sup(f, depth, cap, [](unsigned) { return 1.0; });
}

inline double weighted_lipschitz_seminorm(const FunctionRep& f, unsigned depth, std::uint64_t cap = kDefaultCap) {
    return detail::increment_sup(f, depth, cap, [](unsigned level) { return static_cast<double>(level); });
}

struct HolderBounds {
    double norm_s = 0.0;
    double norm_r = 0.0;
    double upper = 0.0;  // N^(1/r - 1/s) * norm_s
};

namespace detail {

// (sum |x_i|^p)^(1/p), scaled by the largest modulus to stay in range.
inline double vector_norm(std::span<const Complex> x, const Exponent& p) {
    double big = 0.0;
    for (const auto& z : x) big = std::max(big, std::abs(z));
    if (p.is_infinite() || big == 0.0) return big;
    numeric::CompensatedSum sum;
    for (const auto& z : x) sum.add(std::pow(std::abs(z) / big, p.value()));
    return big * std::pow(sum.value(), 1.0 / p.value());
}

}  // namespace detail

// ||x||_s <= ||x||_r <= N^(1/r - 1/s) ||x||_s for 0 < r < s.
inline HolderBounds holder_vector_bounds(std::span<const Complex> x, double r, double s) {
    if (!(r > 0.0) || !(r < s)) throw InvalidExponents("need 0 < r < s");
    if (x.empty()) throw InvalidArgument("vector must be nonempty");
    const Exponent er = Exponent::finite(r);
    const Exponent es = std::isinf(s) ? Exponent::infinity() : Exponent::finite(s);
    HolderBounds out;
    out.norm_s = detail::vector_norm(x, es);
    out.norm_r = detail::vector_norm(x, er);
    const double n = static_cast<double>(x.size());
    out.upper = std::exp((er.reciprocal() - es.reciprocal()) * std::log(n)) * out.norm_s;
    return out;
}

}  // namespace treehardy
