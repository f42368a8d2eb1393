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

#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "qsl/rng.h"

using namespace qsl;

TEST(rng, same_seed_and_stream_replays) {
    RngStream a(42, 7), b(42, 7);
    for (int k = 0; k < 1000; k++) {
        ASSERT_EQ(a(), b());
    }
}

TEST(rng, streams_differ) {
    RngStream a(42, 0), b(42, 1), c(43, 0);
    int equal_ab = 0, equal_ac = 0;
    for (int k = 0; k < 1000; k++) {
        auto x = a();
        equal_ab += x == b();
        equal_ac += x == c();
    }
    EXPECT_EQ(equal_ab, 0);
    EXPECT_EQ(equal_ac, 0);
}

TEST(rng, streams_are_uncorrelated) {
    // Bitwise agreement between neighbouring streams should look like a fair coin.
    const int words = 20000;
    for (uint64_t s = 0; s < 8; s++) {
        RngStream a(1, s), b(1, s + 1);
        uint64_t agree = 0;
        for (int k = 0; k < words; k++) {
            agree += std::popcount(~(a() ^ b()));
        }
        double n = 64.0 * words;
        double z = (double(agree) - n / 2) / std::sqrt(n / 4);
        EXPECT_LT(std::abs(z), 5.0);
    }
}

TEST(rng, bits_are_balanced) {
    RngStream r(3, 3);
    const int n = 100000;
    int ones = 0;
    for (int k = 0; k < n; k++) {
        ones += r.next_bit();
    }
    EXPECT_LT(std::abs(ones - n / 2.0), 5 * std::sqrt(n / 4.0));
}

TEST(rng, below_is_uniform_and_in_range) {
    RngStream r(9);
    std::vector<int> counts(7, 0);
    const int n = 70000;
    for (int k = 0; k < n; k++) {
        auto v = r.below(7);
        ASSERT_LT(v, 7u);
        counts[v]++;
    }
    for (int c : counts) {
        EXPECT_LT(std::abs(c - n / 7.0), 5 * std::sqrt(n / 7.0));
    }
    EXPECT_THROW(r.below(0), std::invalid_argument);
}

TEST(rng, constant_streams) {
    auto zero = RngStream::constant(false);
    auto one = RngStream::constant(true);
    for (int k = 0; k < 100; k++) {
        EXPECT_FALSE(zero.next_bit());
        EXPECT_TRUE(one.next_bit());
    }
    EXPECT_EQ(zero.below(10), 0u);
    EXPECT_EQ(one.below(10), 9u);
}

TEST(rng, works_with_std_distributions) {
    RngStream r(5);
    std::uniform_real_distribution<double> d(0, 1);
    double v = d(r);
    EXPECT_GE(v, 0);
    EXPECT_LT(v, 1);
}
