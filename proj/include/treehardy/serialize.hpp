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

// JSON documents for functions and reports, plus a deterministic writer:
// keys sorted, 2-space indent, doubles printed with 17 significant digits,
// non-finite doubles as the strings "inf", "-inf", "nan".

#include <treehardy/function.hpp>
#include <treehardy/hardy.hpp>
#include <treehardy/multiplication.hpp>

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

namespace treehardy {

using json = nlohmann::json;

inline constexpr unsigned kDefaultSerializeDepth = 64;

namespace detail {

inline void write_number(std::ostream& os, double x) {
    if (std::isnan(x)) { os << "\"nan\""; return; }
    if (std::isinf(x)) { os << (x > 0 ? "\"inf\"" : "\"-inf\""); return; }
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    os.write(buf, ptr - buf);
}

inline void write_value(std::ostream& os, const json& j, int indent, int level) {
    const std::string pad(static_cast<std::size_t>(indent * (level + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent * level), ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) { os << "{}"; return; }
            os << "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) os << ",\n";
                first = false;
                os << pad << json(key).dump() << ": ";
                write_value(os, value, indent, level + 1);
            }
            os << '\n' << close_pad << '}';
            return;
        }
        case json::value_t::array: {
            if (j.empty()) { os << "[]"; return; }
            // arrays of scalars stay on one line
            const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
            os << (flat ? "[" : "[\n");
            bool first = true;
            for (const auto& e : j) {
                if (!first) os << (flat ? ", " : ",\n");
                first = false;
                if (!flat) os << pad;
                write_value(os, e, indent, level + 1);
            }
            if (!flat) os << '\n' << close_pad;
            os << ']';
            return;
        }
        case json::value_t::number_float: write_number(os, j.get<double>()); return;
        default: os << j.dump(); return;
    }
}

inline json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw ParseError("expected a number or a [re, im] pair");
}

inline json vertex_json(const VertexId& v) { return json::array({v.level, v.index}); }

inline Extension extension_from(const std::string& s) {
    if (s == "zero") return Extension::Zero;
    if (s == "hold") return Extension::Hold;
    if (s == "cycle") return Extension::Cycle;
    if (s == "linear") return Extension::Linear;
    throw ParseError("unknown extension '" + s + "'");
}

inline TailKind tail_kind_from(const std::string& s) {
    if (s == "vanishing") return TailKind::Vanishing;
    if (s == "bounded") return TailKind::Bounded;
    if (s == "divergent") return TailKind::Divergent;
    if (s == "unknown") return TailKind::Unknown;
    throw ParseError("unknown tail class '" + s + "'");
}

inline void put_tail(json& j, const Tail& t) {
    j["tail"] = to_string(t.kind);
    j["tail_from"] = t.from;
    if (t.upper) j["bound"] = *t.upper;
    if (t.lower) j["lower"] = *t.lower;
    if (t.limit) j["limit"] = *t.limit;
    if (t.nonincreasing) j["nonincreasing"] = true;
}

inline Tail get_tail(const json& j) {
    Tail t;
    t.kind = tail_kind_from(j.at("tail").get<std::string>());
    if (j.contains("tail_from")) t.from = std::max(1u, j["tail_from"].get<unsigned>());
    if (j.contains("bound")) t.upper = j["bound"].get<double>();
    if (j.contains("lower")) t.lower = j["lower"].get<double>();
    if (j.contains("limit")) t.limit = j["limit"].get<double>();
    if (t.kind == TailKind::Vanishing) t.limit = 0.0;
    t.nonincreasing = j.value("nonincreasing", false);
    return t;
}

inline void put_sequence(json& j, const Sequence& seq, unsigned depth) {
    json values = json::array();
    if (const auto* t = seq.as_table()) {
        for (const auto& z : t->values) values.push_back(complex_json(z));
        j["extend"] = to_string(t->extension);
    } else {
        for (unsigned n = 0; n <= depth; ++n) values.push_back(complex_json(seq(n)));
        j["extend"] = "hold";
    }
    j["values"] = std::move(values);
}

inline Sequence get_sequence(const json& j) {
    std::vector<Complex> values;
    for (const auto& e : j.at("values")) values.push_back(complex_from(e));
    const auto ext = extension_from(j.value("extend", std::string("hold")));
    return Sequence::table(std::move(values), ext);
}

}  // namespace detail

inline void write_json(std::ostream& os, const json& j, int indent = 2) {
    detail::write_value(os, j, indent, 0);
    os << '\n';
}

inline std::string dump_json(const json& j) {
    std::ostringstream os;
    write_json(os, j);
    return os.str();
}

// Rule-backed radial and path sequences are written as their first
// depth+1 values with a "hold" extension, so the document reproduces the
// function on levels <= depth. Pointwise rules cannot be written.
inline json to_json(const FunctionRep& f, unsigned depth = kDefaultSerializeDepth) {
    json j;
    j["q"] = f.geometry().q();
    j["kind"] = to_string(f.kind());
    if (const auto* fs = f.as<FiniteSupport>()) {
        json entries = json::array();
        for (const auto& [v, z] : fs->entries) entries.push_back(json::array({v.level, v.index, z.real(), z.imag()}));
        j["entries"] = std::move(entries);
    } else if (const auto* r = f.as<Radial>()) {
        detail::put_sequence(j, r->values, depth);
        detail::put_tail(j, r->tail);
    } else if (const auto* p = f.as<PathSupported>()) {
        detail::put_sequence(j, p->coefficients, depth);
        j["growth"] = p->growth;
        detail::put_tail(j, p->tail);
    } else if (const auto* d = f.as<DenseTruncated>()) {
        json levels = json::array();
        for (const auto& row : d->levels) {
            json out = json::array();
            for (const auto& z : row) out.push_back(detail::complex_json(z));
            levels.push_back(std::move(out));
        }
        j["levels"] = std::move(levels);
    } else {
        throw InvalidArgument("pointwise rules have no JSON form");
    }
    return j;
}

// `default_q` is used when the document has no "q" field.
inline FunctionRep function_from_json(const json& j, std::optional<std::uint32_t> default_q = std::nullopt) {
    try {
        if (!j.is_object()) throw ParseError("function document must be a JSON object");
        std::uint32_t q = 0;
        if (j.contains("q")) q = j["q"].get<std::uint32_t>();
        else if (default_q) q = *default_q;
        else throw ParseError("function document needs \"q\"");
        const TreeGeometry geo(q);
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "finite") {
            std::map<VertexId, Complex> entries;
            for (const auto& e : j.at("entries")) {
                if (!e.is_array() || (e.size() != 3 && e.size() != 4)) throw ParseError("entry must be [level, index, re, im]");
                const VertexId v{e[0].get<unsigned>(), e[1].get<std::uint64_t>()};
                entries[v] = {e[2].get<double>(), e.size() == 4 ? e[3].get<double>() : 0.0};
            }
            return FunctionRep::finite(geo, std::move(entries));
        }
        if (kind == "radial" || kind == "path") {
            auto seq = detail::get_sequence(j);
            const Tail tail = j.contains("tail") ? detail::get_tail(j) : seq.inferred_tail();
            if (kind == "radial") return FunctionRep::radial(geo, std::move(seq), tail);
            return FunctionRep::path(geo, std::move(seq), tail, j.value("growth", 0.0));
        }
        if (kind == "dense") {
            std::vector<std::vector<Complex>> levels;
            for (const auto& row : j.at("levels")) {
                std::vector<Complex> out;
                for (const auto& z : row) out.push_back(detail::complex_from(z));
                levels.push_back(std::move(out));
            }
            return FunctionRep::dense(geo, std::move(levels));
        }
        throw ParseError("unknown function kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed function document: ") + e.what());
    } catch (const InvalidVertex& e) {
        throw ParseError(e.what());
    } catch (const InvalidGeometry& e) {
        throw ParseError(e.what());
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    } catch (const InconsistentTail& e) {
        throw ParseError(e.what());
    }
}

inline json to_json(const NormReport& r) {
    json j;
    j["value"] = r.value;
    j["exact"] = r.exact;
    j["depth_examined"] = r.depth_examined;
    j["attained_level"] = r.attained_level ? json(*r.attained_level) : json(nullptr);
    return j;
}

inline json to_json(const MembershipVerdict& m) {
    return {{"verdict", to_string(m.verdict)}, {"evidence", m.evidence}, {"means", m.means}};
}

inline json to_json(const SpectrumSample& s) {
    json values = json::array();
    json witnesses = json::array();
    for (const auto& z : s.values) values.push_back(detail::complex_json(z));
    for (const auto& v : s.witnesses) witnesses.push_back(detail::vertex_json(v));
    return {{"values", values},   {"witnesses", witnesses},        {"depth", s.depth},
            {"complete", s.complete}, {"closure_note", s.closure_note}};
}

inline json to_json(const OperatorReport& r) {
    json j;
    j["sup_norm"] = to_json(r.sup_norm);
    j["operator_norm"] = {{"value", r.operator_norm.value}, {"exact", r.operator_norm.exact}};
    j["bounded"] = to_string(r.bounded);
    j["compact"] = to_string(r.compact);
    j["essential_norm_upper"] = r.essential.sequence;
    j["essential_norm_bound"] = r.essential.bound;
    j["isometry"] = to_string(r.isometry.verdict);
    j["isometry_witness"] = r.isometry.witness ? detail::vertex_json(*r.isometry.witness) : json(nullptr);
    j["spectrum"] = to_json(r.spectrum);
    j["basis"] = {
        {"operator_norm", "||M_psi|| = ||psi||_inf"},
        {"bounded", "M_psi is bounded iff psi is a bounded function"},
        {"spectrum", "point spectrum = psi(T); spectrum = approximate point spectrum = closure of psi(T)"},
        {"compact", "M_psi is compact iff psi(v) -> 0 as |v| -> inf"},
        {"essential_norm_upper", "||M_psi||_e <= limsup_n M_inf(n, psi)"},
        {"isometry", "M_psi is an isometry iff |psi(v)| = 1 for all v"},
    };
    return j;
}

}  // namespace treehardy
