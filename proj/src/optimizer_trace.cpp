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

#include "lcx/optimizer_trace.hpp"

#include <cstdio>
#include <ostream>

namespace lcx {

void write_trace_csv(const OptimizerTrace& trace, std::ostream& out) {
    out << "iteration,objective,surrogate,max_violation,step\n";
    char buf[160];
    for (const auto& entry : trace.entries) {
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g\n", entry.iteration,
                      entry.objective, entry.surrogate, entry.max_qos_violation, entry.step);
        out << buf;
    }
}

}  // namespace lcx
