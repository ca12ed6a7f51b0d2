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

// Multiplication operators M_psi f = psi * f on T_p and T_{p,0}.
//
// Every verdict is three-valued. Yes/No come only from facts the
// representation certifies (finite support, tables, declared tails); an
// opaque rule examined to a finite depth yields Inconclusive.

#include <treehardy/algebra.hpp>
#include <treehardy/hardy.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace treehardy {

struct Symbol {
    FunctionRep psi;
};

enum class Decision { Yes, No, Inconclusive };

inline const char* to_string(Decision d) noexcept {
    switch (d) {
        case Decision::Yes: return "Yes";
        case Decision::No: return "No";
        case Decision::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

inline FunctionRep apply(const Symbol& s, const FunctionRep& f) { return pointwise_product(s.psi, f); }

struct OperatorNorm {
    double value = 0.0;
    bool exact = false;
};

// ||M_psi|| = ||psi||_inf; the exponent does not enter.
inline OperatorNorm operator_norm(const Symbol& s, [[maybe_unused]] const Exponent& p, unsigned depth,
                                  std::uint64_t cap = kDefaultCap) {
    const NormReport sup = norm(s.psi, Exponent::infinity(), depth, cap);
    return {sup.value, sup.exact};
}

inline Decision bounded_verdict(const NormReport& sup) {
    if (!sup.exact) return Decision::Inconclusive;
    return std::isinf(sup.value) ? Decision::No : Decision::Yes;
}

// max over vs of ||M_psi g_v||_p, g_v the unit-norm point mass at v. Each
// term is |psi(v)|, so this is a certified lower bound for ||M_psi||.
inline double delta_lower_bound(const Symbol& s, const Exponent& p, std::span<const VertexId> vs,
                                std::uint64_t cap = kDefaultCap) {
    double best = 0.0;
    for (const auto& v : vs) {
        const FunctionRep image = apply(s, normalized_point_mass(s.psi.geometry(), v, p));
        best = std::max(best, norm(image, p, v.level, cap).value);
    }
    return best;
}

struct SpectrumSample {
    std::vector<Complex> values;
    std::vector<VertexId> witnesses;  // psi(witnesses[i]) == values[i]
    unsigned depth = 0;
    bool complete = false;            // values is the whole range of psi
    std::string closure_note;
};

namespace detail {

inline constexpr double kDedupTol = 1e-12;

inline void add_value(SpectrumSample& s, Complex z, const VertexId& witness) {
    for (const auto& w : s.values)
        if (std::abs(w - z) <= kDedupTol * std::max(1.0, std::abs(z))) return;
    s.values.push_back(z);
    s.witnesses.push_back(witness);
}

// Smallest vertex on levels <= depth that is not a key of `entries`.
inline std::optional<VertexId> first_gap(const TreeGeometry& geo, const std::map<VertexId, Complex>& entries,
                                         unsigned depth) {
    for (unsigned n = 0; n <= depth; ++n) {
        const auto first = entries.lower_bound(VertexId{n, 0});
        const auto last = entries.lower_bound(VertexId{n + 1, 0});
        std::uint64_t expect = 0;
        for (auto it = first; it != last; ++it, ++expect)
            if (it->first.index != expect) return VertexId{n, expect};
        const auto size = level_size_u64(geo, n);
        if (!size || expect < *size) return VertexId{n, expect};
    }
    return std::nullopt;
}

// A table-backed sequence takes only finitely many values, all of them
// within the first size entries (plus 0 for a zero extension).
inline bool table_range_complete(const Sequence& seq, unsigned depth) {
    const auto* t = seq.as_table();
    if (!t || t->extension == Extension::Linear) return false;
    return depth + 1 >= t->values.size();
}

}  // namespace detail

inline SpectrumSample point_spectrum_sample(const Symbol& s, unsigned depth, std::uint64_t cap = kDefaultCap) {
    const FunctionRep& f = s.psi;
    const auto& geo = f.geometry();
    SpectrumSample out;
    out.depth = depth;

    if (const auto* r = f.as<Radial>()) {
        for (unsigned n = 0; n <= depth; ++n) detail::add_value(out, r->values(n), {n, 0});
        const auto* t = r->values.as_table();
        if (detail::table_range_complete(r->values, depth)) {
            if (t->extension == Extension::Zero) {
                const auto level = static_cast<unsigned>(t->values.size());
                detail::add_value(out, Complex{}, {level, 0});
            }
            out.complete = true;
        }
    } else if (const auto* p = f.as<PathSupported>()) {
        for (unsigned n = 0; n <= depth; ++n) detail::add_value(out, f(VertexId{n, 0}), {n, 0});
        if (depth >= 1) detail::add_value(out, Complex{}, {1, 1});
        const auto* t = p->coefficients.as_table();
        if (depth >= 1 && detail::table_range_complete(p->coefficients, depth) &&
            (p->growth == 0.0 || t->extension == Extension::Zero)) {
            out.complete = true;
        }
    } else if (const auto* fs = f.as<FiniteSupport>()) {
        const unsigned deepest = *f.zero_beyond();
        for (const auto& [v, z] : fs->entries)
            if (v.level <= depth) detail::add_value(out, z, v);
        auto gap = detail::first_gap(geo, fs->entries, std::min(depth, deepest + 1));
        if (depth >= deepest) {
            out.complete = true;
            if (!gap) gap = VertexId{deepest + 1, 0};
        }
        if (gap) detail::add_value(out, Complex{}, *gap);
    } else if (const auto* d = f.as<DenseTruncated>()) {
        const auto stored = static_cast<unsigned>(d->levels.size());
        for (unsigned n = 0; n < stored && n <= depth; ++n)
            for (std::uint64_t i = 0; i < d->levels[n].size(); ++i) detail::add_value(out, d->levels[n][i], {n, i});
        if (depth + 1 >= stored) {
            out.complete = true;
            detail::add_value(out, Complex{}, {stored, 0});
        }
    } else {
        for (unsigned n = 0; n <= depth; ++n)
            for (const auto& v : enumerate_level(geo, n, cap)) detail::add_value(out, f(v), v);
    }

    if (out.complete)
        out.closure_note = "range is finite and fully sampled: point spectrum = spectrum = approximate point spectrum = values";
    else
        out.closure_note = "point spectrum contains values; spectrum and approximate point spectrum equal the closure of the full range";
    return out;
}

enum class SpectrumKind { PointSpectrum, InClosure, Resolvent, Inconclusive };

inline const char* to_string(SpectrumKind k) noexcept {
    switch (k) {
        case SpectrumKind::PointSpectrum: return "PointSpectrum";
        case SpectrumKind::InClosure: return "InClosure";
        case SpectrumKind::Resolvent: return "Resolvent";
        case SpectrumKind::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

struct SpectrumClass {
    SpectrumKind kind = SpectrumKind::Inconclusive;
    std::optional<VertexId> witness;                          // PointSpectrum
    double distance = std::numeric_limits<double>::quiet_NaN();  // Resolvent, InClosure
    double inverse_norm = std::numeric_limits<double>::quiet_NaN();
};

inline constexpr double kDefaultSpectralTol = 1e-9;
inline constexpr unsigned kDefaultSpectralDepth = 64;

inline SpectrumClass spectrum_classify(const Symbol& s, Complex lambda, unsigned depth,
                                       double tol = kDefaultSpectralTol, std::uint64_t cap = kDefaultCap) {
    const SpectrumSample sample = point_spectrum_sample(s, depth, cap);
    SpectrumClass out;

    double nearest = kInf;
    std::size_t nearest_at = 0;
    for (std::size_t i = 0; i < sample.values.size(); ++i) {
        const double d = std::abs(sample.values[i] - lambda);
        if (d < nearest) {
            nearest = d;
            nearest_at = i;
        }
    }
    if (nearest <= tol) {
        out.kind = SpectrumKind::PointSpectrum;
        out.witness = sample.witnesses[nearest_at];
        out.distance = nearest;
        return out;
    }

    // Values beyond the sample lie in the annulus lo <= |z| <= hi.
    double region_distance = kInf;
    if (!sample.complete) {
        const FunctionRep& f = s.psi;
        if (!f.as<Radial>() && !f.as<PathSupported>()) return out;
        const Tail tail = mean_tail(f, Exponent::infinity());
        if (depth + 1 < tail.from) return out;
        const double lo = tail.lower.value_or(0.0);
        double hi = tail.upper.value_or(kInf);
        if (tail.kind == TailKind::Divergent) hi = kInf;
        if (tail.nonincreasing && depth >= tail.from) hi = std::min(hi, level_mean(f, depth, Exponent::infinity(), cap));
        const double r = std::abs(lambda);
        region_distance = r < lo ? lo - r : (r > hi ? r - hi : 0.0);
        if (const auto lim = tail.effective_limit(); lim && *lim == 0.0) nearest = std::min(nearest, std::abs(lambda));
    }

    if (region_distance < nearest) return out;  // distance to the closure is not pinned down
    out.distance = nearest;
    if (nearest > tol) {
        out.kind = SpectrumKind::Resolvent;
        out.inverse_norm = 1.0 / nearest;
    } else {
        out.kind = SpectrumKind::InClosure;
    }
    return out;
}

// Symbol of (M_psi - lambda)^{-1} = M_{1/(psi - lambda)}.
inline Symbol resolvent_symbol(const Symbol& s, Complex lambda, double tol = kDefaultSpectralTol,
                               unsigned depth = kDefaultSpectralDepth, std::uint64_t cap = kDefaultCap) {
    const SpectrumClass cls = spectrum_classify(s, lambda, depth, tol, cap);
    switch (cls.kind) {
        case SpectrumKind::PointSpectrum: throw NotInvertible("lambda is an eigenvalue of M_psi");
        case SpectrumKind::InClosure: throw NotInvertible("lambda lies in the closure of the range of psi");
        case SpectrumKind::Inconclusive: throw NotInvertible("cannot certify that lambda is outside the spectrum");
        case SpectrumKind::Resolvent: break;
    }
    const FunctionRep& f = s.psi;
    const auto& geo = f.geometry();
    auto invert = [lambda](Complex z) { return 1.0 / (z - lambda); };

    if (const auto* r = f.as<Radial>()) {
        if (const auto* t = r->values.as_table(); t && t->extension != Extension::Linear) {
            std::vector<Complex> values;
            for (const auto& z : t->values) values.push_back(invert(z));
            auto ext = t->extension;
            if (ext == Extension::Zero) {
                values.push_back(invert(0.0));
                ext = Extension::Hold;
            }
            return {FunctionRep::radial(geo, std::move(values), ext)};
        }
        Tail tail = Tail::bounded(cls.inverse_norm);
        if (r->tail.eventually_zero()) tail = Tail::constant(1.0 / std::abs(lambda), r->tail.from);
        else if (const auto lim = r->tail.effective_limit(); lim && *lim == 0.0) tail.limit = 1.0 / std::abs(lambda);
        return {FunctionRep::radial(geo, Sequence::rule([values = r->values, invert](unsigned n) { return invert(values(n)); }),
                                    tail)};
    }
    return {FunctionRep::pointwise(geo, [f, invert](const VertexId& v) { return invert(f(v)); })};
}

struct CompactnessVerdict {
    Decision verdict = Decision::Inconclusive;
    std::vector<double> evidence;  // M_inf(n, psi), n = 0..depth
    std::string reason;
};

inline CompactnessVerdict compactness_verdict(const Symbol& s, unsigned depth, std::uint64_t cap = kDefaultCap) {
    CompactnessVerdict out;
    out.evidence = examine(s.psi, Exponent::infinity(), depth, cap);
    const FunctionRep& f = s.psi;
    if (f.as<FiniteSupport>() || f.as<DenseTruncated>()) {
        out.verdict = Decision::Yes;
        out.reason = "psi has finite support, so M_psi has finite rank";
        return out;
    }
    if (f.as<PointwiseRule>()) {
        out.reason = "opaque rule: decay of psi is not determined";
        return out;
    }
    const Tail tail = mean_tail(f, Exponent::infinity());
    if (const auto lim = tail.effective_limit(); lim && *lim == 0.0) {
        out.verdict = Decision::Yes;
        out.reason = "psi(v) -> 0 as |v| -> inf";
    } else if (tail.kind == TailKind::Divergent) {
        out.verdict = Decision::No;
        out.reason = "psi is unbounded";
    } else if (tail.bounded_away_from_zero()) {
        out.verdict = Decision::No;
        out.reason = "sup over each level stays bounded away from zero";
    } else {
        out.reason = "decay of psi is not determined";
    }
    return out;
}

struct EssentialNormBound {
    std::vector<double> sequence;  // b_n >= sup_{m >= n} M_inf(m, psi), nonincreasing
    double bound = kInf;           // certified upper bound on ||M_psi||_e
};

inline EssentialNormBound essential_norm_upper(const Symbol& s, unsigned depth, std::uint64_t cap = kDefaultCap) {
    const FunctionRep& f = s.psi;
    const Exponent sup = Exponent::infinity();
    const auto means = examine(f, sup, depth, cap);

    // beyond: bound on sup_{m > depth} M_inf(m, psi)
    double beyond = kInf;
    std::optional<double> limit;
    if (const auto zero = f.zero_beyond(); zero && (f.as<FiniteSupport>() || f.as<DenseTruncated>())) {
        beyond = 0.0;
        for (unsigned m = depth + 1; m <= *zero; ++m) beyond = std::max(beyond, level_mean(f, m, sup, cap));
        limit = 0.0;
    } else if (f.as<Radial>() || f.as<PathSupported>()) {
        const Tail tail = mean_tail(f, sup);
        limit = tail.effective_limit();
        if (tail.kind == TailKind::Divergent) {
            beyond = kInf;
        } else if (depth + 1 >= tail.from) {
            if (tail.eventually_zero()) beyond = 0.0;
            else if (tail.nonincreasing) beyond = level_mean(f, depth + 1, sup, cap);
            else if (tail.upper) beyond = *tail.upper;
        }
    }

    EssentialNormBound out;
    out.sequence.assign(depth + 1, 0.0);
    double running = beyond;
    for (unsigned n = depth + 1; n-- > 0;) {
        running = std::max(running, means[n]);
        out.sequence[n] = running;
    }
    out.bound = out.sequence.back();
    if (limit) out.bound = std::min(out.bound, *limit);
    return out;
}

struct IsometryVerdict {
    Decision verdict = Decision::Inconclusive;
    std::optional<VertexId> witness;  // a vertex with ||psi(v)| - 1| > tol
    double modulus = std::numeric_limits<double>::quiet_NaN();
    std::string reason;
};

inline IsometryVerdict isometry_verdict(const Symbol& s, unsigned depth, double tol = kDefaultSpectralTol,
                                        std::uint64_t cap = kDefaultCap) {
    const FunctionRep& f = s.psi;
    const auto& geo = f.geometry();
    IsometryVerdict out;
    auto deviates = [&](const VertexId& v) {
        const double m = std::abs(f(v));
        if (std::abs(m - 1.0) <= tol) return false;
        out.verdict = Decision::No;
        out.witness = v;
        out.modulus = m;
        out.reason = "|psi(v)| != 1 at the witness";
        return true;
    };

    if (const auto* fs = f.as<FiniteSupport>()) {
        for (const auto& [v, _] : fs->entries)
            if (v.level <= depth && deviates(v)) return out;
        const unsigned deepest = *f.zero_beyond();
        const auto gap = detail::first_gap(geo, fs->entries, deepest + 1);
        deviates(gap.value_or(VertexId{deepest + 1, 0}));
        return out;
    }
    if (const auto* d = f.as<DenseTruncated>()) {
        for (unsigned n = 0; n < d->levels.size() && n <= depth; ++n)
            for (std::uint64_t i = 0; i < d->levels[n].size(); ++i)
                if (deviates({n, i})) return out;
        deviates({static_cast<unsigned>(d->levels.size()), 0});
        return out;
    }
    if (f.as<PathSupported>()) {
        for (unsigned n = 0; n <= depth; ++n)
            if (deviates({n, 0})) return out;
        deviates({1, 1});
        return out;
    }
    if (const auto* r = f.as<Radial>()) {
        for (unsigned n = 0; n <= depth; ++n)
            if (deviates({n, 0})) return out;
        const Tail& tail = r->tail;
        if (depth + 1 < tail.from) {
            out.reason = "levels between the examined prefix and the declared tail are unseen";
            return out;
        }
        const unsigned next = std::max(depth + 1, tail.from);
        if ((tail.upper && *tail.upper < 1.0 - tol) || (tail.lower && *tail.lower > 1.0 + tol)) {
            deviates({next, 0});  // the bound is uniform, so any tail level is a witness
            return out;
        }
        if (tail.kind == TailKind::Divergent || (tail.limit && std::abs(*tail.limit - 1.0) > tol) ||
            tail.effective_limit() == 0.0) {
            out.verdict = Decision::No;
            out.reason = "|psi| leaves 1 along the tail at an unspecified level";
            return out;
        }
        if (tail.upper && tail.lower && std::abs(*tail.upper - 1.0) <= tol && std::abs(*tail.lower - 1.0) <= tol) {
            out.verdict = Decision::Yes;
            out.reason = "|psi| = 1 on the examined levels and on the declared tail";
            return out;
        }
        out.reason = "tail does not certify |psi| = 1";
        return out;
    }
    for (unsigned n = 0; n <= depth; ++n)
        for (const auto& v : enumerate_level(geo, n, cap))
            if (deviates(v)) return out;
    out.reason = "opaque rule: |psi| = 1 on the examined levels only";
    return out;
}

// ||psi f_k||_p for each f_k.
inline std::vector<double> pointwise_null_sequence_check(const Symbol& s, std::span<const FunctionRep> fs,
                                                         const Exponent& p, unsigned depth,
                                                         std::uint64_t cap = kDefaultCap) {
    std::vector<double> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(norm(apply(s, f), p, depth, cap).value);
    return out;
}

struct OperatorReport {
    NormReport sup_norm;
    OperatorNorm operator_norm;
    Decision bounded = Decision::Inconclusive;
    Decision compact = Decision::Inconclusive;
    EssentialNormBound essential;
    IsometryVerdict isometry;
    SpectrumSample spectrum;
};

inline OperatorReport analyze(const Symbol& s, const Exponent& p, unsigned depth, double tol = kDefaultSpectralTol,
                              std::uint64_t cap = kDefaultCap) {
    OperatorReport r;
    r.sup_norm = norm(s.psi, Exponent::infinity(), depth, cap);
    r.operator_norm = operator_norm(s, p, depth, cap);
    r.bounded = bounded_verdict(r.sup_norm);
    r.compact = compactness_verdict(s, depth, cap).verdict;
    if (r.bounded == Decision::No) r.compact = Decision::No;
    r.essential = essential_norm_upper(s, depth, cap);
    r.isometry = isometry_verdict(s, depth, tol, cap);
    r.spectrum = point_spectrum_sample(s, depth, cap);
    return r;
}

}  // namespace treehardy
