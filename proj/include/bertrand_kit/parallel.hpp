// Copyright 2026 The bertrand-kit Authors
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

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bertrand_kit/error.hpp"

namespace bk {

/// Worker count from BERTRAND_KIT_THREADS (integer >= 1), else the
/// hardware concurrency.
int thread_count();

/// Calls fn(i) for i in [0, n) on up to thread_count() threads. Results
/// must be written to per-index slots so output never depends on
/// scheduling. The exception of the lowest failing index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// A run of consecutive grid points where evaluation failed.
struct MaskedInterval {
    double lo = 0.0;
    double hi = 0.0;
    int points = 0;
    std::string reason;
};

/// Merges failed grid points (non-empty reason) into runs. A run ends
/// where the reason changes.
std::vector<MaskedInterval> masked_intervals(const std::vector<double>& grid,
                                             const std::vector<std::string>& reasons);

/// Grid evaluation where library errors at a point become masks instead
/// of aborting the sweep.
template <class R>
struct Sweep {
    std::vector<std::optional<R>> values;
    std::vector<std::string> reasons;

    std::size_t masked_count() const
    {
        std::size_t k = 0;
        for (const auto& r : reasons) k += r.empty() ? 0 : 1;
        return k;
    }
    double masked_fraction() const
    {
        return reasons.empty() ? 0.0 : static_cast<double>(masked_count()) / static_cast<double>(reasons.size());
    }
};

template <class R, class F>
Sweep<R> sweep(std::size_t n, F&& fn)
{
    Sweep<R> out;
    out.values.resize(n);
    out.reasons.resize(n);
    parallel_for(n, [&](std::size_t i) {
        try {
            out.values[i] = fn(i);
        } catch (const Error& e) {
            out.reasons[i] = error_kind_name(e.kind());
        }
    });
    return out;
}

} // namespace bk
