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
 * Seedable random source with a stable, documented output sequence.
 *
 * Built on std::mt19937_64, whose sequence is fixed by the standard. The
 * standard distributions are implementation-defined, so the conversions to
 * reals and bounded integers are written out here:
 *   uniform()  = (x >> 11) * 2^-53            in [0, 1)
 *   below(n)   = x % n
 */
#pragma once

#include <cstdint>
#include <random>

namespace qng {

class StableRng {
  public:
    explicit StableRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t below(std::uint64_t n) { return next() % n; }

  private:
    std::mt19937_64 engine_;
};

} // namespace qng
