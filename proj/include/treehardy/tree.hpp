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

// Addressing and exact combinatorics on the (q+1)-homogeneous rooted tree.
//
// The tree is never materialized. A vertex is the pair (level, index); the
// root's children occupy (1, 0..q) and a vertex (n, i) with n >= 1 owns the
// contiguous block (n+1, i*q .. i*q+q-1).

#include <treehardy/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ranges>
#include <vector>

namespace treehardy {

using BigInt = boost::multiprecision::cpp_int;

// Dense enumeration of a level is refused above this many vertices.
inline constexpr std::uint64_t kDefaultCap = 10'000'000;

class TreeGeometry {
public:
    explicit TreeGeometry(std::uint32_t q) : q_(q) {
        if (q < 1) throw InvalidGeometry("branching parameter q must be at least 1");
    }

    std::uint32_t q() const noexcept { return q_; }

    friend bool operator==(const TreeGeometry&, const TreeGeometry&) = default;

private:
    std::uint32_t q_;
};

struct VertexId {
    unsigned level = 0;
    std::uint64_t index = 0;

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

inline constexpr VertexId kRoot{0, 0};

inline BigInt level_size(const TreeGeometry& geo, unsigned n) {
    if (n == 0) return 1;
    BigInt size = geo.q() + 1;
    size *= boost::multiprecision::pow(BigInt(geo.q()), n - 1);
    return size;
}

// level_size(n) when it fits in 64 bits.
inline std::optional<std::uint64_t> level_size_u64(const TreeGeometry& geo, unsigned n) {
    if (n == 0) return 1;
    std::uint64_t size = geo.q() + 1ULL;
    const std::uint64_t q = geo.q();
    for (unsigned k = 1; k < n; ++k) {
        if (size > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
        size *= q;
    }
    return size;
}

inline double log_level_size(const TreeGeometry& geo, unsigned n) {
    if (n == 0) return 0.0;
    const double q = geo.q();
    return std::log(q + 1.0) + static_cast<double>(n - 1) * std::log(q);
}

inline bool contains(const TreeGeometry& geo, const VertexId& v) {
    if (v.level == 0) return v.index == 0;
    if (auto size = level_size_u64(geo, v.level)) return v.index < *size;
    return true;  // level wider than 2^64 holds every 64-bit index
}

inline void check_vertex(const TreeGeometry& geo, const VertexId& v) {
    if (!contains(geo, v)) {
        throw InvalidVertex("vertex (" + std::to_string(v.level) + ", " + std::to_string(v.index) +
                            ") is not on the tree with q = " + std::to_string(geo.q()));
    }
}

inline VertexId parent(const TreeGeometry& geo, const VertexId& v) {
    check_vertex(geo, v);
    if (v.level == 0) throw RootHasNoParent();
    if (v.level == 1) return kRoot;
    return {v.level - 1, v.index / geo.q()};
}

inline std::vector<VertexId> children(const TreeGeometry& geo, const VertexId& v) {
    check_vertex(geo, v);
    std::vector<VertexId> out;
    if (v.level == 0) {
        out.reserve(geo.q() + 1);
        for (std::uint64_t j = 0; j <= geo.q(); ++j) out.push_back({1, j});
        return out;
    }
    out.reserve(geo.q());
    for (std::uint64_t j = 0; j < geo.q(); ++j) out.push_back({v.level + 1, v.index * geo.q() + j});
    return out;
}

// Vertices (n, 0), (n, 1), ... in index order. Throws LevelTooLarge when the
// level holds more than `cap` vertices.
inline auto enumerate_level(const TreeGeometry& geo, unsigned n, std::uint64_t cap = kDefaultCap) {
    const auto size = level_size_u64(geo, n);
    if (!size || *size > cap) throw LevelTooLarge(n, cap);
    return std::views::iota(std::uint64_t{0}, *size) |
           std::views::transform([n](std::uint64_t i) { return VertexId{n, i}; });
}

// The fixed infinite path o, (1,0), (2,0), ... used wherever a construction
// needs "some" path from the root.
constexpr VertexId leftmost_path_vertex(unsigned n) noexcept { return {n, 0}; }

inline bool on_leftmost_path(const VertexId& v) noexcept { return v.index == 0; }

}  // namespace treehardy
