// SPDX-License-Identifier: Apache-2.0
//
// lcxsim - leaky-coaxial pinching-antenna downlink simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <iosfwd>
#include <vector>

namespace lcx {

/// Per-iteration optimizer diagnostics shared by the static and dynamic
/// solvers. `objective` is the true quantity being maximized (sum rate for
/// the static solver, normalized SNR for the dynamic one); `surrogate` is
/// the minorizer value at the accepted point.
struct OptimizerTrace {
    struct Entry {
        int iteration = 0;
        double objective = 0.0;
        double surrogate = 0.0;
        double max_qos_violation = 0.0;
        double step = 0.0;  // accepted fraction of the candidate move
    };
    std::vector<Entry> entries;

    void record(int iteration, double objective, double surrogate, double violation, double step) {
        entries.push_back({iteration, objective, surrogate, violation, step});
    }
};

/// CSV dump: "iteration,objective,surrogate,max_violation" plus the step
/// column, one row per recorded iteration.
void write_trace_csv(const OptimizerTrace& trace, std::ostream& out);

}  // namespace lcx
