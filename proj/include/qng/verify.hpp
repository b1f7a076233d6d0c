// Copyright 2026 The qngmetric Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * End-to-end self check: cross-algorithm equivalence, finite differences,
 * gauge invariance and exact operation counts on seeded inputs.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qng {

struct VerifyConfig {
    std::uint64_t seed = 2021;
    bool quick = false;
    /// Overrides every floating-point tolerance when set.
    std::optional<double> tolerance;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const noexcept;
};

[[nodiscard]] VerifyReport run_verify(const VerifyConfig &config);

void write_verify_report(std::ostream &out, const VerifyReport &report);

} // namespace qng
