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

#include <treehardy/error.hpp>

#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

namespace treehardy {

// p in (0, inf]. Values in (0, 1) are allowed; the level means are then
// quasi-norms rather than norms.
class Exponent {
public:
    static Exponent finite(double p) {
        if (!(p > 0.0) || !std::isfinite(p))
            throw InvalidExponent("exponent must be a positive finite number or inf");
        return Exponent(p);
    }

    static Exponent infinity() noexcept { return Exponent(std::numeric_limits<double>::infinity()); }

    // Accepts "inf", "infinity" or a positive decimal.
    static Exponent parse(std::string_view text) {
        if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
        double p = 0.0;
        const auto* first = text.data();
        const auto* last = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(first, last, p);
        if (ec != std::errc() || ptr != last) throw InvalidExponent("cannot parse exponent '" + std::string(text) + "'");
        return finite(p);
    }

    bool is_infinite() const noexcept { return std::isinf(p_); }
    bool is_finite() const noexcept { return !is_infinite(); }

    // p itself; +inf for the sup exponent.
    double value() const noexcept { return p_; }

    // 1/p, with 1/inf = 0.
    double reciprocal() const noexcept { return is_infinite() ? 0.0 : 1.0 / p_; }

    std::string to_string() const {
        if (is_infinite()) return "inf";
        char buf[32];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p_);
        return std::string(buf, ptr);
    }

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;

private:
    explicit Exponent(double p) noexcept : p_(p) {}
    double p_;
};

}  // namespace treehardy
