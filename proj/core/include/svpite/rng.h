// Copyright 2026 The svpite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SVPITE_RNG_H
#define SVPITE_RNG_H

#include <cstdint>
#include <random>

namespace svpite {

/// Mixes a 64-bit value with the SplitMix64 finalizer.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seedable generator used everywhere randomness is needed.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are not, so the uniform and normal
/// draws are implemented here to keep result files identical across
/// platforms and standard libraries.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(splitmix64(seed)) {
    }

    /// Independent stream for (seed, index), e.g. one per shot.
    static Rng stream(uint64_t seed, uint64_t index) {
        return Rng(splitmix64(seed) ^ splitmix64(index + 0xD1B54A32D192ED03ULL));
    }

    uint64_t next_u64() {
        return engine_();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal deviate (Box-Muller, one value per call).
    double normal();

   private:
    std::mt19937_64 engine_;
};

}  // namespace svpite

#endif
