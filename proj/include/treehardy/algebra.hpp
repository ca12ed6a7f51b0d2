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

// Linear combinations, truncations and pointwise products that stay inside
// a structured representation whenever one exists, falling back to a
// PointwiseRule otherwise.

#include <treehardy/function.hpp>

#include <algorithm>
#include <cmath>

namespace treehardy {

namespace detail {

// Table extensions that are closed under the given operation, or nullopt
// when the result needs a generator.
inline std::optional<Extension> linear_extension(Extension a, Extension b) {
    auto rank = [](Extension e) { return e == Extension::Zero ? 0 : e == Extension::Hold ? 1 : 2; };
    if (a == Extension::Cycle || b == Extension::Cycle) return std::nullopt;
    const int r = std::max(rank(a), rank(b));
    return r == 0 ? Extension::Zero : r == 1 ? Extension::Hold : Extension::Linear;
}

inline std::optional<Extension> product_extension(Extension a, Extension b) {
    if (a == Extension::Zero || b == Extension::Zero) return Extension::Zero;
    if (a == Extension::Hold && b == Extension::Hold) return Extension::Hold;
    return std::nullopt;
}

// Table of op(x_n, y_n) long enough that the extension rule reproduces the
// sequence exactly, or a generator.
template <class Op>
Sequence zip_sequences(const Sequence& x, const Sequence& y, std::optional<Extension> ext, Op op) {
    const auto* tx = x.as_table();
    const auto* ty = y.as_table();
    if (tx && ty && ext) {
        // Past max(size)+1 both operands follow their extension; two extra
        // entries pin a linear continuation.
        const std::size_t size = std::max(tx->values.size(), ty->values.size()) + 2;
        std::vector<Complex> out(size);
        for (std::size_t n = 0; n < size; ++n) out[n] = op(x(static_cast<unsigned>(n)), y(static_cast<unsigned>(n)));
        return Sequence::table(std::move(out), *ext);
    }
    return Sequence::rule([x, y, op](unsigned n) { return op(x(n), y(n)); });
}

// Tables are fully known, so their own tail beats anything propagated.
inline Tail tail_for(const Sequence& s, const Tail& propagated) {
    return s.as_table() ? s.inferred_tail() : propagated;
}

inline Sequence truncate_sequence(const Sequence& x, unsigned n) {
    if (x.as_table()) {
        std::vector<Complex> out(n + 1);
        for (unsigned m = 0; m <= n; ++m) out[m] = x(m);
        return Sequence::table(std::move(out), Extension::Zero);
    }
    return Sequence::rule([x, n](unsigned m) { return m <= n ? x(m) : Complex{}; });
}

inline FunctionRep pointwise_fallback(const FunctionRep& f, const FunctionRep& g,
                                      std::function<Complex(Complex, Complex)> op) {
    return FunctionRep::pointwise(f.geometry(), [f, g, op](const VertexId& v) { return op(f(v), g(v)); });
}

inline bool dense_fits(const TreeGeometry& geo, unsigned depth, std::uint64_t cap) {
    const auto size = level_size_u64(geo, depth);
    return size && *size <= cap;
}

inline FunctionRep densify(const FunctionRep& f, unsigned depth, std::uint64_t cap) {
    std::vector<std::vector<Complex>> levels;
    levels.reserve(depth + 1);
    for (unsigned n = 0; n <= depth; ++n) {
        std::vector<Complex> row;
        for (const auto& v : enumerate_level(f.geometry(), n, cap)) row.push_back(f(v));
        levels.push_back(std::move(row));
    }
    return FunctionRep::dense(f.geometry(), std::move(levels));
}

}  // namespace detail

// f_n: equal to f on levels <= n and zero beyond.
inline FunctionRep truncate(const FunctionRep& f, unsigned n, std::uint64_t cap = kDefaultCap) {
    const auto& geo = f.geometry();
    if (const auto* fs = f.as<FiniteSupport>()) {
        std::map<VertexId, Complex> kept(fs->entries.begin(), fs->entries.lower_bound(VertexId{n + 1, 0}));
        return FunctionRep::finite(geo, std::move(kept));
    }
    if (const auto* r = f.as<Radial>())
        return FunctionRep::radial(geo, detail::truncate_sequence(r->values, n), Tail::zero_beyond(n));
    if (const auto* p = f.as<PathSupported>())
        return FunctionRep::path(geo, detail::truncate_sequence(p->coefficients, n), Tail::zero_beyond(n), p->growth);
    if (const auto* d = f.as<DenseTruncated>()) {
        auto levels = d->levels;
        if (levels.size() > n + 1) levels.resize(n + 1);
        return FunctionRep::dense(geo, std::move(levels));
    }
    return detail::densify(f, n, cap);
}

// a*f + b*g.
inline FunctionRep combine(Complex a, const FunctionRep& f, Complex b, const FunctionRep& g,
                           std::uint64_t cap = kDefaultCap) {
    if (!(f.geometry() == g.geometry())) throw GeometryMismatch();
    const auto& geo = f.geometry();
    auto lin = [a, b](Complex x, Complex y) { return a * x + b * y; };

    const auto* ff = f.as<FiniteSupport>();
    const auto* gf = g.as<FiniteSupport>();
    if (ff && gf) {
        std::map<VertexId, Complex> out;
        for (const auto& [v, x] : ff->entries) out[v] += a * x;
        for (const auto& [v, y] : gf->entries) out[v] += b * y;
        std::erase_if(out, [](const auto& kv) { return kv.second == Complex{}; });
        return FunctionRep::finite(geo, std::move(out));
    }

    const auto* fr = f.as<Radial>();
    const auto* gr = g.as<Radial>();
    if (fr && gr) {
        std::optional<Extension> ext;
        if (fr->values.as_table() && gr->values.as_table())
            ext = detail::linear_extension(fr->values.as_table()->extension, gr->values.as_table()->extension);
        auto seq = detail::zip_sequences(fr->values, gr->values, ext, lin);
        auto tail = detail::tail_for(seq, combine_tails(std::abs(a), fr->tail, std::abs(b), gr->tail));
        return FunctionRep::radial(geo, std::move(seq), tail);
    }

    const auto* fp = f.as<PathSupported>();
    const auto* gp = g.as<PathSupported>();
    if (fp && gp) {
        if (fp->growth == gp->growth) {
            std::optional<Extension> ext;
            if (fp->coefficients.as_table() && gp->coefficients.as_table())
                ext = detail::linear_extension(fp->coefficients.as_table()->extension,
                                               gp->coefficients.as_table()->extension);
            auto seq = detail::zip_sequences(fp->coefficients, gp->coefficients, ext, lin);
            auto tail = detail::tail_for(seq, combine_tails(std::abs(a), fp->tail, std::abs(b), gp->tail));
            return FunctionRep::path(geo, std::move(seq), tail, fp->growth);
        }
        const double growth = std::max(fp->growth, gp->growth);
        auto rule = [geo, growth, fx = fp->coefficients, gx = gp->coefficients, da = fp->growth - growth,
                     db = gp->growth - growth, a, b](unsigned n) {
            const double log_size = log_level_size(geo, n);
            return a * fx(n) * std::exp(da * log_size) + b * gx(n) * std::exp(db * log_size);
        };
        return FunctionRep::path(geo, Sequence::rule(rule), Tail::unknown(), growth);
    }

    const bool f_local = ff || f.as<DenseTruncated>();
    const bool g_local = gf || g.as<DenseTruncated>();
    if (f_local && g_local) {
        const unsigned depth = std::max(*f.zero_beyond(), *g.zero_beyond());
        if (detail::dense_fits(geo, depth, cap)) {
            auto levels = detail::densify(f, depth, cap).as<DenseTruncated>()->levels;
            for (unsigned n = 0; n <= depth; ++n)
                for (const auto v : enumerate_level(geo, n, cap)) levels[n][v.index] = lin(levels[n][v.index], g(v));
            return FunctionRep::dense(geo, std::move(levels));
        }
    }
    return detail::pointwise_fallback(f, g, lin);
}

// (f*g)(v) = f(v) g(v).
inline FunctionRep pointwise_product(const FunctionRep& f, const FunctionRep& g) {
    if (!(f.geometry() == g.geometry())) throw GeometryMismatch();
    const auto& geo = f.geometry();
    auto mul = [](Complex x, Complex y) { return x * y; };

    auto restrict_to = [&](const FiniteSupport& fs, const FunctionRep& other, bool other_first) {
        std::map<VertexId, Complex> out;
        for (const auto& [v, x] : fs.entries) {
            const Complex y = other(v);
            const Complex z = other_first ? y * x : x * y;
            if (z != Complex{}) out.emplace(v, z);
        }
        return FunctionRep::finite(geo, std::move(out));
    };
    if (const auto* fs = f.as<FiniteSupport>()) return restrict_to(*fs, g, false);
    if (const auto* gs = g.as<FiniteSupport>()) return restrict_to(*gs, f, true);

    auto scale_dense = [&](const DenseTruncated& d, const FunctionRep& other, bool other_first) {
        auto levels = d.levels;
        for (unsigned n = 0; n < levels.size(); ++n)
            for (std::uint64_t i = 0; i < levels[n].size(); ++i) {
                const Complex y = other(VertexId{n, i});
                levels[n][i] = other_first ? y * levels[n][i] : levels[n][i] * y;
            }
        return FunctionRep::dense(geo, std::move(levels));
    };
    if (const auto* fd = f.as<DenseTruncated>()) return scale_dense(*fd, g, false);
    if (const auto* gd = g.as<DenseTruncated>()) return scale_dense(*gd, f, true);

    const auto* fr = f.as<Radial>();
    const auto* gr = g.as<Radial>();
    const auto* fp = f.as<PathSupported>();
    const auto* gp = g.as<PathSupported>();
    auto table_ext = [](const Sequence& x, const Sequence& y) -> std::optional<Extension> {
        if (!x.as_table() || !y.as_table()) return std::nullopt;
        return detail::product_extension(x.as_table()->extension, y.as_table()->extension);
    };
    auto zip = [&](const Sequence& x, const Sequence& y, const Tail& tx, const Tail& ty) {
        auto seq = detail::zip_sequences(x, y, table_ext(x, y), mul);
        auto tail = detail::tail_for(seq, multiply_tails(tx, ty));
        return std::pair{std::move(seq), tail};
    };
    if (fr && gr) {
        auto [seq, tail] = zip(fr->values, gr->values, fr->tail, gr->tail);
        return FunctionRep::radial(geo, std::move(seq), tail);
    }
    if (fr && gp) {
        auto [seq, tail] = zip(fr->values, gp->coefficients, fr->tail, gp->tail);
        return FunctionRep::path(geo, std::move(seq), tail, gp->growth);
    }
    if (fp && gr) {
        auto [seq, tail] = zip(fp->coefficients, gr->values, fp->tail, gr->tail);
        return FunctionRep::path(geo, std::move(seq), tail, fp->growth);
    }
    if (fp && gp) {
        auto [seq, tail] = zip(fp->coefficients, gp->coefficients, fp->tail, gp->tail);
        return FunctionRep::path(geo, std::move(seq), tail, fp->growth + gp->growth);
    }
    return detail::pointwise_fallback(f, g, mul);
}

}  // namespace treehardy
