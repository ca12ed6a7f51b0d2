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

// Brute-force level mean by direct summation over the level. Shares no code
// path with level_mean: it evaluates every vertex and divides by the number
// of vertices it visited.

#include <treehardy/exponent.hpp>
#include <treehardy/function.hpp>
#include <treehardy/numeric.hpp>
#include <treehardy/tree.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

namespace treehardy {

inline double dense_oracle_mean(const FunctionRep& f, unsigned n, const Exponent& p,
                                std::uint64_t cap = kDefaultCap) {
    std::vector<double> moduli;
    for (const auto v : enumerate_level(f.geometry(), n, cap)) moduli.push_back(std::abs(evaluate(f, v)));
    const double count = static_cast<double>(moduli.size());

    if (p.is_infinite()) {
        double best = 0.0;
        for (double m : moduli) best = std::max(best, m);
        return best;
    }

    const double e = p.value();
    numeric::CompensatedSum sum;
    bool linear_ok = true;
    for (double m : moduli) {
        const double t = std::pow(m, e);
        if (!std::isfinite(t) || (m > 0.0 && t == 0.0)) { linear_ok = false; break; }
        sum.add(t);
    }
    if (linear_ok && std::isfinite(sum.value())) return std::pow(sum.value() / count, 1.0 / e);

    numeric::LogSumExp lse;
    for (double m : moduli)
        if (m > 0.0) lse.add(e * std::log(m));
    if (lse.value() == numeric::kNegInf) return 0.0;
    return std::exp((lse.value() - std::log(count)) / e);
}

}  // namespace treehardy
