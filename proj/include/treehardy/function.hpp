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

// Complex-valued functions on the tree, in one of five representations:
//
//   FiniteSupport   explicit vertex -> value map, zero elsewhere
//   Radial          value depends only on the level
//   PathSupported   values on the leftmost path (n, 0), zero elsewhere
//   PointwiseRule   opaque rule; means only by enumeration
//   DenseTruncated  every vertex of levels 0..d stored, zero below
//
// Radial and PathSupported carry a Tail describing their magnitudes beyond
// any examined prefix. A FunctionRep is immutable once built.

#include <treehardy/error.hpp>
#include <treehardy/tail.hpp>
#include <treehardy/tree.hpp>

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace treehardy {

using Complex = std::complex<double>;

// How a stored table continues past its last entry.
enum class Extension {
    Zero,    // 0 forever
    Hold,    // repeat the last entry
    Cycle,   // a_n = values[n mod size]
    Linear,  // continue the last difference
};

inline const char* to_string(Extension e) noexcept {
    switch (e) {
        case Extension::Zero: return "zero";
        case Extension::Hold: return "hold";
        case Extension::Cycle: return "cycle";
        case Extension::Linear: return "linear";
    }
    return "zero";
}

// A complex sequence n -> a_n, either a table with an extension rule or an
// arbitrary generator. Cheap to copy.
class Sequence {
public:
    struct Table {
        std::vector<Complex> values;
        Extension extension = Extension::Zero;
    };
    using Rule = std::function<Complex(unsigned)>;

    Sequence() : Sequence(table({}, Extension::Zero)) {}

    static Sequence table(std::vector<Complex> values, Extension extension) {
        if (values.empty()) extension = Extension::Zero;
        if (extension == Extension::Linear && values.size() < 2) extension = Extension::Hold;
        return Sequence(std::make_shared<const Impl>(Impl{Table{std::move(values), extension}, {}}));
    }

    static Sequence rule(Rule r) {
        return Sequence(std::make_shared<const Impl>(Impl{std::nullopt, std::move(r)}));
    }

    static Sequence constant(Complex c) { return table({c}, Extension::Hold); }

    Complex operator()(unsigned n) const {
        if (!impl_->table) return impl_->rule(n);
        const auto& [values, ext] = *impl_->table;
        if (n < values.size()) return values[n];
        switch (ext) {
            case Extension::Zero: return 0.0;
            case Extension::Hold: return values.back();
            case Extension::Cycle: return values[n % values.size()];
            case Extension::Linear: {
                const auto size = values.size();
                const Complex step = values[size - 1] - values[size - 2];
                return values[size - 1] + static_cast<double>(n - (size - 1)) * step;
            }
        }
        return 0.0;
    }

    const Table* as_table() const noexcept { return impl_->table ? &*impl_->table : nullptr; }

    // Magnitude facts for n >= 1 that follow from a table's extension rule.
    // Generators yield Tail::unknown().
    Tail inferred_tail() const {
        const Table* t = as_table();
        if (!t) return Tail::unknown();
        const auto& v = t->values;
        switch (t->extension) {
            case Extension::Zero:
                return Tail::zero_beyond(v.empty() ? 0u : static_cast<unsigned>(v.size() - 1));
            case Extension::Hold:
                return Tail::constant(std::abs(v.back()), static_cast<unsigned>(v.size() - 1));
            case Extension::Cycle: {
                double lo = std::abs(v.front()), hi = lo;
                for (const auto& z : v) {
                    lo = std::min(lo, std::abs(z));
                    hi = std::max(hi, std::abs(z));
                }
                if (lo == hi) return Tail::constant(hi);
                Tail out = Tail::bounded(hi).with_lower(lo);
                return out;
            }
            case Extension::Linear: {
                const Complex step = v[v.size() - 1] - v[v.size() - 2];
                if (step == Complex{}) return Tail::constant(std::abs(v.back()), static_cast<unsigned>(v.size() - 1));
                return Tail::divergent();
            }
        }
        return Tail::unknown();
    }

private:
    struct Impl {
        std::optional<Table> table;
        Rule rule;
    };
    explicit Sequence(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

struct FiniteSupport {
    std::map<VertexId, Complex> entries;
};

struct Radial {
    Sequence values;
    Tail tail;  // of |a_n|
};

// Value at (n, 0) is kappa_n * level_size(n)^growth. Keeping the level-size
// power separate lets means be evaluated in the log domain for any n.
struct PathSupported {
    Sequence coefficients;  // kappa_n
    double growth = 0.0;
    Tail tail;              // of |kappa_n|
};

struct PointwiseRule {
    std::shared_ptr<const std::function<Complex(const VertexId&)>> rule;
};

struct DenseTruncated {
    std::vector<std::vector<Complex>> levels;
};

enum class RepKind { FiniteSupport, Radial, PathSupported, PointwiseRule, DenseTruncated };

inline const char* to_string(RepKind k) noexcept {
    switch (k) {
        case RepKind::FiniteSupport: return "finite";
        case RepKind::Radial: return "radial";
        case RepKind::PathSupported: return "path";
        case RepKind::PointwiseRule: return "pointwise";
        case RepKind::DenseTruncated: return "dense";
    }
    return "finite";
}

class FunctionRep {
public:
    using Variant = std::variant<FiniteSupport, Radial, PathSupported, PointwiseRule, DenseTruncated>;

    FunctionRep(TreeGeometry geo, Variant rep) : geo_(geo), rep_(std::move(rep)) { validate(); }

    static FunctionRep zero(TreeGeometry geo) { return {geo, FiniteSupport{}}; }

    static FunctionRep finite(TreeGeometry geo, std::map<VertexId, Complex> entries) {
        return {geo, FiniteSupport{std::move(entries)}};
    }

    // c * indicator of {v}.
    static FunctionRep point_mass(TreeGeometry geo, VertexId v, Complex c = 1.0) {
        return finite(geo, {{v, c}});
    }

    static FunctionRep radial(TreeGeometry geo, Sequence values, Tail tail) {
        return {geo, Radial{std::move(values), tail}};
    }

    // Table-backed radial function whose tail is read off the extension rule.
    static FunctionRep radial(TreeGeometry geo, std::vector<Complex> values, Extension ext) {
        auto seq = Sequence::table(std::move(values), ext);
        auto tail = seq.inferred_tail();
        return radial(geo, std::move(seq), tail);
    }

    static FunctionRep path(TreeGeometry geo, Sequence coefficients, Tail tail, double growth = 0.0) {
        return {geo, PathSupported{std::move(coefficients), growth, tail}};
    }

    static FunctionRep pointwise(TreeGeometry geo, std::function<Complex(const VertexId&)> rule) {
        return {geo, PointwiseRule{std::make_shared<const std::function<Complex(const VertexId&)>>(std::move(rule))}};
    }

    static FunctionRep dense(TreeGeometry geo, std::vector<std::vector<Complex>> levels) {
        return {geo, DenseTruncated{std::move(levels)}};
    }

    const TreeGeometry& geometry() const noexcept { return geo_; }
    const Variant& rep() const noexcept { return rep_; }
    RepKind kind() const noexcept { return static_cast<RepKind>(rep_.index()); }

    template <class T>
    const T* as() const noexcept { return std::get_if<T>(&rep_); }

    Complex operator()(const VertexId& v) const {
        check_vertex(geo_, v);
        return std::visit([&](const auto& r) { return value_at(r, v); }, rep_);
    }

    // A level beyond which every value is zero, when one is known.
    std::optional<unsigned> zero_beyond() const {
        if (const auto* f = as<FiniteSupport>())
            return f->entries.empty() ? 0u : f->entries.rbegin()->first.level;
        if (const auto* d = as<DenseTruncated>())
            return d->levels.empty() ? 0u : static_cast<unsigned>(d->levels.size() - 1);
        if (const auto* r = as<Radial>(); r && r->tail.eventually_zero()) return r->tail.from - 1;
        if (const auto* p = as<PathSupported>(); p && p->tail.eventually_zero()) return p->tail.from - 1;
        return std::nullopt;
    }

private:
    Complex value_at(const FiniteSupport& f, const VertexId& v) const {
        const auto it = f.entries.find(v);
        return it == f.entries.end() ? Complex{} : it->second;
    }
    Complex value_at(const Radial& r, const VertexId& v) const { return r.values(v.level); }
    Complex value_at(const PathSupported& p, const VertexId& v) const {
        if (!on_leftmost_path(v)) return {};
        const Complex kappa = p.coefficients(v.level);
        if (p.growth == 0.0 || kappa == Complex{}) return kappa;
        return kappa * std::exp(p.growth * log_level_size(geo_, v.level));
    }
    Complex value_at(const PointwiseRule& r, const VertexId& v) const { return (*r.rule)(v); }
    Complex value_at(const DenseTruncated& d, const VertexId& v) const {
        if (v.level >= d.levels.size()) return {};
        return d.levels[v.level][v.index];
    }

    void validate() const {
        if (const auto* f = as<FiniteSupport>()) {
            for (const auto& [v, _] : f->entries) check_vertex(geo_, v);
        } else if (const auto* r = as<Radial>()) {
            r->tail.validate();
        } else if (const auto* p = as<PathSupported>()) {
            p->tail.validate();
            if (!std::isfinite(p->growth)) throw InvalidArgument("path growth exponent must be finite");
        } else if (const auto* w = as<PointwiseRule>()) {
            if (!w->rule || !*w->rule) throw InvalidArgument("pointwise rule is empty");
        } else if (const auto* d = as<DenseTruncated>()) {
            for (unsigned n = 0; n < d->levels.size(); ++n) {
                const auto size = level_size_u64(geo_, n);
                if (!size || d->levels[n].size() != *size)
                    throw InvalidArgument("dense level " + std::to_string(n) + " must hold exactly level_size(" +
                                          std::to_string(n) + ") values");
            }
        }
    }

    TreeGeometry geo_;
    Variant rep_;
};

inline Complex evaluate(const FunctionRep& f, const VertexId& v) { return f(v); }

}  // namespace treehardy
