// Copyright 2026 The twozero Authors
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

#include <cstdint>

#include "twozero/codes.hpp"
#include "twozero/serialize.hpp"

namespace twozero {

struct VerifyOptions {
    std::uint64_t work_cap = kDefaultEnumerationCap;
    int jobs = 0;
    // Full formula-vs-direct sweep up to this field size, random sampling above.
    std::int64_t full_sweep_max_r = 512;
    std::int64_t sample_count = 10000;
    std::uint64_t sample_seed = 20260809;
    // Test hook: when >= 0, perturbs one constant of the predicted weight
    // table by 1 before comparing, which must make verification fail.
    int corrupt_table1 = -1;
};

struct VerifyOutcome {
    Json report;
    bool all_pass = false;
};

/// Runs the full closed-form-versus-exhaustive check battery for one
/// parameter set.  Out-of-hypothesis parameters throw std::invalid_argument.
VerifyOutcome run_verify(const CodeParams& params, const VerifyOptions& opts);

}  // namespace twozero
