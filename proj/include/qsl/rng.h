// Copyright 2026 The QSL Simulator Authors
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

#ifndef _QSL_RNG_H
#define _QSL_RNG_H

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace qsl {

/// Stafford's "mix13" finalizer (the SplitMix64 output function).
constexpr uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based random stream.
///
/// The output at position i is a pure function of (seed, stream, i), so any
/// (seed, stream) pair replays exactly and distinct stream ids can be handed
/// to independent trials without coordination. Satisfies
/// UniformRandomBitGenerator, so it works with <random> distributions.
///
/// A stream can also be a constant source (all-zero or all-one bits). This
/// is used to check that a procedure's result does not depend on its random
/// draws.
class RngStream {
   public:
    using result_type = uint64_t;

    enum class Mode : uint8_t { random, all_zero, all_one };

    explicit RngStream(uint64_t seed, uint64_t stream = 0)
        : seed_(seed), stream_(stream), key_lo_(mix64(seed ^ 0x6A09E667F3BCC909ULL)),
          key_hi_(mix64(stream + 0x9E3779B97F4A7C15ULL) ^ mix64(seed + 0xBB67AE8584CAA73BULL)) {
    }

    static RngStream constant(bool bit) {
        RngStream r(0, 0);
        r.mode_ = bit ? Mode::all_one : Mode::all_zero;
        return r;
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() {
        switch (mode_) {
            case Mode::all_zero:
                return 0;
            case Mode::all_one:
                return ~uint64_t{0};
            case Mode::random:
                break;
        }
        uint64_t c = counter_++;
        return mix64(mix64(c ^ key_lo_) + key_hi_);
    }

    bool next_bit() {
        if (bits_left_ == 0) {
            bit_buffer_ = (*this)();
            bits_left_ = 64;
        }
        bool b = bit_buffer_ & 1;
        bit_buffer_ >>= 1;
        bits_left_--;
        return b;
    }

    /// Uniform integer in [0, bound). A constant stream returns 0 or bound-1.
    uint64_t below(uint64_t bound) {
        if (bound == 0) {
            throw std::invalid_argument("RngStream::below: bound must be positive");
        }
        if (mode_ != Mode::random) {
            return mode_ == Mode::all_zero ? 0 : bound - 1;
        }
        // Rejection sampling on the top of the range keeps the result unbiased.
        uint64_t limit = max() - (max() % bound + 1) % bound;
        while (true) {
            uint64_t v = (*this)();
            if (v <= limit) {
                return v % bound;
            }
        }
    }

    uint64_t seed() const {
        return seed_;
    }
    uint64_t stream() const {
        return stream_;
    }
    Mode mode() const {
        return mode_;
    }
    /// Number of 64-bit words drawn so far.
    uint64_t position() const {
        return counter_;
    }

   private:
    uint64_t seed_;
    uint64_t stream_;
    uint64_t key_lo_;
    uint64_t key_hi_;
    uint64_t counter_ = 0;
    uint64_t bit_buffer_ = 0;
    unsigned bits_left_ = 0;
    Mode mode_ = Mode::random;
};

}  // namespace qsl

#endif
