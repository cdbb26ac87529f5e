/*
   Copyright 2026 The secantlab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SECANTLAB_RNG_HPP
#define SECANTLAB_RNG_HPP

#include <cstdint>
#include <random>

#include "secantlab/rational.hpp"

namespace secantlab {

/// Deterministic seeded generator. mt19937_64 is fully specified by the
/// standard, and the bounded draw below avoids std::uniform_int_distribution,
/// whose output is implementation-defined; the same seed therefore yields
/// the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform integer in [lo, hi], inclusive, by rejection.
    long uniform_int(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("Rng: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return lo + static_cast<long>(x % span);
    }

    /// Small integer coefficient in [-20, 20], the default instance range.
    Rat coefficient() { return Rat(uniform_int(-20, 20)); }

    Rat nonzero_coefficient() {
        for (;;) {
            Rat c = coefficient();
            if (!c.is_zero()) return c;
        }
    }

    /// Fork a stream for a labelled sub-task, keeping streams independent of
    /// consumption order.
    Rng fork(std::uint64_t label) {
        std::uint64_t mixed = next_u64() ^ (label * 0x9E3779B97F4A7C15ULL);
        return Rng(mixed);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace secantlab

#endif
