// Copyright 2026 The realhaar Authors
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

#ifndef REALHAAR_RNG_H
#define REALHAAR_RNG_H

#include <cstdint>
#include <random>

namespace realhaar {

/// SplitMix64 finaliser; used to derive independent per-stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// The library's named generator: mt19937_64 seeded through SplitMix64.
///
/// Stream `s` of master seed `m` is seeded with splitmix64(splitmix64(m) ^ splitmix64(s + 1)), so
/// distinct streams are decorrelated and any stream can be reproduced on its own. Normal variates come
/// from std::normal_distribution, which makes output bit-identical on a fixed standard library build.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {
    }

    static Rng for_stream(std::uint64_t master_seed, std::uint64_t stream) {
        Rng r(0);
        r.engine_.seed(splitmix64(splitmix64(master_seed) ^ splitmix64(stream + 1)));
        return r;
    }

    double normal() {
        return normal_(engine_);
    }

    double uniform() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
    }

    bool bit() {
        return (engine_() >> 63) != 0;
    }

    std::mt19937_64 &engine() {
        return engine_;
    }

   private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace realhaar

#endif
