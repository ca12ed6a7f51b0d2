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

#include <algorithm>
#include <cmath>
#include <limits>

namespace treehardy::numeric {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Streaming log(sum(exp(x_i))). Terms equal to -inf (zero in the linear
// domain) are accepted and contribute nothing.
class LogSumExp {
public:
    void add(double x) {
        if (x == kNegInf) return;
        if (x <= max_) {
            sum_ += std::exp(x - max_);
        } else {
            sum_ = sum_ * std::exp(max_ - x) + 1.0;
            max_ = x;
        }
    }

    double value() const { return max_ == kNegInf ? kNegInf : max_ + std::log(sum_); }

private:
    double max_ = kNegInf;
    double sum_ = 0.0;
};

// Neumaier's variant of compensated summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double relative_error(double got, double want) {
    if (got == want) return 0.0;
    const double scale = std::max(std::abs(got), std::abs(want));
    return std::abs(got - want) / scale;
}

inline bool close(double got, double want, double rel_tol) {
    if (std::isinf(got) || std::isinf(want)) return got == want;
    return relative_error(got, want) <= rel_tol;
}

// a <= b allowing a relative slack of `rel_tol` on b.
inline bool leq(double a, double b, double rel_tol) { return a <= b + rel_tol * std::abs(b); }

}  // namespace treehardy::numeric
