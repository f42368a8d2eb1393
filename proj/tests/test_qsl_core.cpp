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

#include <cmath>
#include <functional>

#include "gtest/gtest.h"
#include "qsl/qsl_register.h"

using namespace qsl;

namespace {

/// Register of width n whose planes are the low and high halves of `state`.
QslRegister from_state(size_t n, uint64_t state) {
    uint64_t mask = (uint64_t{1} << n) - 1;
    return QslRegister::prepare_full(BitVec::from_uint(n, state & mask), BitVec::from_uint(n, (state >> n) & mask));
}

uint64_t to_state(const QslRegister &r) {
    return r.z_plane().to_uint() | (r.x_plane().to_uint() << r.size());
}

QslRegister bits(std::initializer_list<QslBit> list) {
    BitVec z(list.size()), x(list.size());
    size_t k = 0;
    for (auto b : list) {
        z.set(k, b.z);
        x.set(k, b.x);
        k++;
    }
    return QslRegister::prepare_full(z, x);
}

void for_all_states(size_t n, const std::function<void(uint64_t)> &f) {
    for (uint64_t s = 0; s < (uint64_t{1} << (2 * n)); s++) {
        f(s);
    }
}

/// Within 3 sigma of a fair coin over `trials`.
void expect_fair(int ones, int trials) {
    double sigma = std::sqrt(trials / 4.0);
    EXPECT_LT(std::abs(ones - trials / 2.0), 3 * sigma) << ones << " ones in " << trials;
}

}  // namespace

TEST(qsl_core, prepare_z) {
    RngStream rng(1);
    auto r = QslRegister::prepare_z(BitVec::from_string("011"), rng);  // tuple (1,1,0)
    EXPECT_EQ(r.size(), 3u);
    EXPECT_TRUE(r.bit(0).z);
    EXPECT_TRUE(r.bit(1).z);
    EXPECT_FALSE(r.bit(2).z);

    RngStream a(5, 9), b(5, 9);
    auto ra = QslRegister::prepare_z(BitVec(200), a);
    auto rb = QslRegister::prepare_z(BitVec(200), b);
    EXPECT_EQ(ra.x_plane(), rb.x_plane());
}

TEST(qsl_core, prepare_z_single_bit_reads_back) {
    for (uint64_t seed = 0; seed < 50; seed++) {
        RngStream rng(seed);
        auto r = QslRegister::prepare_z(BitVec(1), rng);
        EXPECT_FALSE(r.bit(0).z);
        EXPECT_FALSE(r.measure_z({0}, rng)[0]);
    }
}

TEST(qsl_core, prepare_full) {
    auto r = QslRegister::prepare_full(BitVec::from_string("0"), BitVec::from_string("1"));
    EXPECT_EQ(r.bit(0), (QslBit{false, true}));
    auto r2 = QslRegister::prepare_full(BitVec::from_string("01"), BitVec::from_string("00"));
    EXPECT_EQ(r2.bit(0), (QslBit{true, false}));
    EXPECT_EQ(r2.bit(1), (QslBit{false, false}));
    EXPECT_EQ(r2.z_plane().str(), "01");
    EXPECT_EQ(r2.x_plane().str(), "00");
    EXPECT_THROW(QslRegister::prepare_full(BitVec(2), BitVec(3)), std::invalid_argument);
}

TEST(qsl_core, single_bit_gates) {
    auto r = bits({{false, true}});
    r.apply_h(0);
    EXPECT_EQ(r.bit(0), (QslBit{true, false}));

    r = bits({{false, true}});
    r.apply_x(0);
    EXPECT_EQ(r.bit(0), (QslBit{true, true}));

    r = bits({{true, false}});
    r.apply_h(0);
    r.apply_z(0);
    r.apply_h(0);
    EXPECT_EQ(r.bit(0), (QslBit{false, false}));

    EXPECT_THROW(r.apply_x(1), std::out_of_range);
    EXPECT_THROW(r.apply_h(3), std::out_of_range);
}

TEST(qsl_core, single_bit_identities_exhaustive) {
    for_all_states(1, [](uint64_t s) {
        auto base = from_state(1, s);
        auto r = base;
        r.apply_x(0);
        r.apply_x(0);
        EXPECT_EQ(r, base);
        r.apply_z(0);
        r.apply_z(0);
        EXPECT_EQ(r, base);
        r.apply_h(0);
        r.apply_h(0);
        EXPECT_EQ(r, base);
        auto hzh = base;
        hzh.apply_h(0);
        hzh.apply_z(0);
        hzh.apply_h(0);
        auto x = base;
        x.apply_x(0);
        EXPECT_EQ(hzh, x);
    });
}

TEST(qsl_core, cnot_examples) {
    auto r = bits({{true, false}, {false, true}});
    r.apply_cnot(0, 1);
    EXPECT_EQ(r.bit(0), (QslBit{true, true}));
    EXPECT_EQ(r.bit(1), (QslBit{true, true}));

    auto zero = bits({{false, false}, {false, false}});
    auto copy = zero;
    zero.apply_cnot(0, 1);
    EXPECT_EQ(zero, copy);

    EXPECT_THROW(r.apply_cnot(0, 0), std::invalid_argument);
    EXPECT_THROW(r.apply_cnot(0, 2), std::out_of_range);
}

TEST(qsl_core, hadamard_sandwich_reverses_cnot_on_all_16_states) {
    for_all_states(2, [](uint64_t s) {
        auto lhs = from_state(2, s);
        lhs.apply_h(0);
        lhs.apply_h(1);
        lhs.apply_cnot(0, 1);
        lhs.apply_h(0);
        lhs.apply_h(1);
        auto rhs = from_state(2, s);
        rhs.apply_cnot(1, 0);
        EXPECT_EQ(lhs, rhs) << "state " << s;
    });
}

TEST(qsl_core, toffoli_examples) {
    for (int p = 0; p < 8; p++) {
        bool p1 = p & 1, p2 = p & 2, p3 = p & 4;
        auto r = bits({{true, p1}, {true, p2}, {false, p3}});
        r.apply_toffoli(0, 1, 2);
        EXPECT_EQ(r.bit(0), (QslBit{true, p1}));
        EXPECT_EQ(r.bit(1), (QslBit{true, p2}));
        EXPECT_EQ(r.bit(2), (QslBit{true, p3}));

        auto u = bits({{true, p1}, {false, p2}, {false, p3}});
        auto copy = u;
        u.apply_toffoli(0, 1, 2);
        EXPECT_EQ(u, copy);
    }
    auto r = bits({{true, false}, {true, false}, {false, false}});
    EXPECT_THROW(r.apply_toffoli(0, 0, 2), std::invalid_argument);
    EXPECT_THROW(r.apply_toffoli(0, 1, 3), std::out_of_range);
}

TEST(qsl_core, toffoli_is_classical_on_z_and_identity_on_phase_exhaustive) {
    for_all_states(3, [](uint64_t s) {
        auto r = from_state(3, s);
        auto before = r;
        r.apply_toffoli(0, 1, 2);
        EXPECT_EQ(r.x_plane(), before.x_plane());
        uint64_t z = before.z_plane().to_uint();
        uint64_t expected = z ^ (((z & 1) && (z & 2)) ? 4 : 0);
        EXPECT_EQ(r.z_plane().to_uint(), expected);
    });
}

TEST(qsl_core, perm_examples) {
    RngStream rng(1);
    auto r = QslRegister::prepare_z(BitVec::from_string("1011"), rng);
    auto copy = r;
    r.apply_perm(PermSpec::identity(4));
    EXPECT_EQ(r, copy);

    // Swap the values 01 and 10 on two wires; phases (a, b) stay put.
    PermSpec swap(PermTable{2, {0, 2, 1, 3}});
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            auto q = bits({{false, bool(a)}, {true, bool(b)}});
            q.apply_perm(swap);
            EXPECT_EQ(q.bit(0), (QslBit{true, bool(a)}));
            EXPECT_EQ(q.bit(1), (QslBit{false, bool(b)}));
        }
    }
    EXPECT_THROW(r.apply_perm(PermSpec::identity(3), 2), std::out_of_range);
}

TEST(qsl_core, perm_then_inverse_is_identity_exhaustive) {
    RngStream rng(17);
    for (size_t n = 1; n <= 4; n++) {
        for (int trial = 0; trial < 5; trial++) {
            std::vector<PermSpec> specs{PermSpec::random(n, rng), PermSpec::random(n, rng, 10.0, 0)};
            for (const auto &p : specs) {
                auto inv = p.inverse();
                for_all_states(n, [&](uint64_t s) {
                    auto r = from_state(n, s);
                    r.apply_perm(p);
                    EXPECT_EQ(r.x_plane(), from_state(n, s).x_plane());
                    r.apply_perm(inv);
                    EXPECT_EQ(to_state(r), s);
                });
            }
        }
    }
}

TEST(qsl_core, perm_on_offset_wires) {
    RngStream rng(2);
    PermSpec p = PermSpec::random(3, rng);
    for (uint64_t v = 0; v < 8; v++) {
        auto r = QslRegister::prepare_z(BitVec::from_uint(6, v << 2), rng);
        auto phases = r.x_plane();
        r.apply_perm(p, 2);
        EXPECT_EQ(r.z_plane().to_uint(), p.apply(v) << 2);
        EXPECT_EQ(r.x_plane(), phases);
    }
}

TEST(qsl_core, measure_z) {
    for (uint64_t k = 0; k < 2; k++) {
        for (uint64_t seed = 0; seed < 20; seed++) {
            RngStream rng(seed);
            auto r = QslRegister::prepare_z(BitVec::from_uint(1, k), rng);
            EXPECT_EQ(r.measure_z({0}, rng)[0], bool(k));
        }
    }

    // The phase bit after a computational readout is a fresh coin.
    const int trials = 10000;
    int ones = 0;
    for (int t = 0; t < trials; t++) {
        RngStream rng(1234, t);
        auto r = QslRegister::prepare_full(BitVec::from_string("1"), BitVec::from_string("0"));
        EXPECT_TRUE(r.measure_z({0}, rng)[0]);
        ones += r.bit(0).x;
    }
    expect_fair(ones, trials);

    // |0> then H reads out a fair coin.
    ones = 0;
    for (int t = 0; t < trials; t++) {
        RngStream rng(99, t);
        auto r = QslRegister::prepare_z(BitVec(1), rng);
        r.apply_h(0);
        ones += r.measure_z({0}, rng)[0];
    }
    expect_fair(ones, trials);
}

TEST(qsl_core, measure_x) {
    RngStream rng(3);
    auto r = QslRegister::prepare_full(BitVec::from_string("0"), BitVec::from_string("1"));
    EXPECT_TRUE(r.measure_x({0}, rng)[0]);

    const int trials = 10000;
    int ones = 0;
    for (int t = 0; t < trials; t++) {
        RngStream trng(77, t);
        auto q = QslRegister::prepare_full(BitVec::from_string("0"), BitVec::from_string("1"));
        q.measure_x({0}, trng);
        ones += q.measure_z({0}, trng)[0];
    }
    expect_fair(ones, trials);
}

TEST(qsl_core, measure_x_after_h_matches_measure_z) {
    // For each of the 4 single-bit states both readouts are deterministic
    // and equal, and both leave the other plane freshly drawn from the same
    // stream position.
    for_all_states(1, [](uint64_t s) {
        RngStream ra(8, s), rb(8, s);
        auto a = from_state(1, s);
        auto b = from_state(1, s);
        a.apply_h(0);
        auto out_a = a.measure_x({0}, ra);
        auto out_b = b.measure_z({0}, rb);
        EXPECT_EQ(out_a, out_b);
        EXPECT_EQ(a.bit(0).z, b.bit(0).x);
    });
}

TEST(qsl_core, measurement_leaves_other_bits_alone) {
    RngStream rng(4);
    auto r = QslRegister::prepare_z(BitVec::from_string("10110"), rng);
    auto before = r;
    std::vector<size_t> idx{1, 3};
    auto out = r.measure_z(idx, rng);
    EXPECT_EQ(out.str(), "01");  // bit 1 is 1, bit 3 is 0
    for (size_t q : {0, 2, 4}) {
        EXPECT_EQ(r.bit(q), before.bit(q));
    }
    EXPECT_EQ(r.z_plane(), before.z_plane());
    EXPECT_THROW(r.measure_z({1, 1}, rng), std::invalid_argument);
    EXPECT_THROW(r.measure_x({5}, rng), std::out_of_range);
}

TEST(qsl_core, measure_z_is_idempotent) {
    RngStream rng(6);
    for (int t = 0; t < 200; t++) {
        auto r = QslRegister::prepare_full(BitVec::random(8, rng), BitVec::random(8, rng));
        std::vector<size_t> idx{0, 3, 7};
        EXPECT_EQ(r.measure_z(idx, rng), r.measure_z(idx, rng));
    }
}

TEST(qsl_core, phase_of_computational_preparation_carries_no_information) {
    // Prepare |k>, read the phase bit: over 10,000 seeded trials the result
    // is a fair coin for both k, and agrees with k about half the time.
    const int trials = 10000;
    for (int k = 0; k < 2; k++) {
        int ones = 0;
        for (int t = 0; t < trials; t++) {
            RngStream rng(2024 + k, t);
            auto r = QslRegister::prepare_z(BitVec::from_uint(1, k), rng);
            ones += r.measure_x({0}, rng)[0];
        }
        expect_fair(ones, trials);
    }
    int agree = 0;
    for (int t = 0; t < trials; t++) {
        RngStream rng(31, t);
        bool k = rng.next_bit();
        auto r = QslRegister::prepare_z(BitVec::from_uint(1, k), rng);
        agree += r.measure_x({0}, rng)[0] == k;
    }
    expect_fair(agree, trials);
}

TEST(qsl_core, circuits) {
    RngStream rng(10);
    auto r = QslRegister::prepare_z(BitVec::from_string("101"), rng);
    auto before = r;
    r.apply_circuit(Circuit(3));
    EXPECT_EQ(r, before);

    Circuit hh(3);
    hh.append(GateH{0}).append(GateH{0});
    r.apply_circuit(hh);
    EXPECT_EQ(r, before);

    EXPECT_THROW(r.apply_circuit(Circuit(4)), std::invalid_argument);
    EXPECT_THROW(Circuit(2).append(GateCnot{1, 1}), std::invalid_argument);
    EXPECT_THROW(Circuit(2).append(GateToffoli{0, 1, 2}), std::out_of_range);
    EXPECT_THROW(Circuit(2).append(GatePerm{PermSpec::identity(2), 1}), std::out_of_range);
}

namespace {

Circuit random_circuit(size_t width, size_t length, RngStream &rng) {
    Circuit c(width);
    while (c.size() < length) {
        size_t a = rng.below(width), b = rng.below(width), t = rng.below(width);
        switch (rng.below(6)) {
            case 0:
                c.append(GateX{a});
                break;
            case 1:
                c.append(GateZ{a});
                break;
            case 2:
                c.append(GateH{a});
                break;
            case 3:
                if (a != b) {
                    c.append(GateCnot{a, b});
                }
                break;
            case 4:
                if (a != b && b != t && a != t) {
                    c.append(GateToffoli{a, b, t});
                }
                break;
            case 5: {
                size_t m = 1 + rng.below(width);
                size_t first = rng.below(width - m + 1);
                c.append(GatePerm{PermSpec::random(m, rng, 3.0, rng.next_bit() ? 12 : 0), first});
                break;
            }
        }
    }
    return c;
}

}  // namespace

TEST(qsl_core, circuit_then_reverse_is_identity_exhaustive) {
    RngStream rng(12);
    for (size_t width = 1; width <= 3; width++) {
        for (int trial = 0; trial < 20; trial++) {
            auto c = random_circuit(width, 12, rng);
            auto rev = c.reversed();
            for_all_states(width, [&](uint64_t s) {
                auto r = from_state(width, s);
                r.apply_circuit(c);
                r.apply_circuit(rev);
                ASSERT_EQ(to_state(r), s);
            });
        }
    }
}

TEST(qsl_core, gates_preserve_length_and_trajectories_are_deterministic) {
    auto run = [](uint64_t seed) {
        RngStream rng(seed, 0);
        RngStream circ_rng(seed, 1);
        auto r = QslRegister::prepare_z(BitVec::random(20, rng), rng);
        std::vector<BitVec> trace;
        for (int round = 0; round < 10; round++) {
            r.apply_circuit(random_circuit(20, 30, circ_rng));
            EXPECT_EQ(r.size(), 20u);
            std::vector<size_t> idx{size_t(round), size_t(round + 5)};
            trace.push_back(r.measure_z(idx, rng));
            trace.push_back(r.z_plane());
            trace.push_back(r.x_plane());
        }
        return trace;
    };
    EXPECT_EQ(run(5), run(5));
    EXPECT_NE(run(5), run(6));
}

TEST(qsl_core, toffoli_and_perm_leave_phase_plane_at_large_width) {
    RngStream rng(13);
    const size_t n = 1000;
    auto r = QslRegister::prepare_full(BitVec::random(n, rng), BitVec::random(n, rng));
    auto phases = r.x_plane();
    for (int k = 0; k < 2000; k++) {
        size_t a = rng.below(n), b = rng.below(n), t = rng.below(n);
        if (a != b && b != t && a != t) {
            r.apply_toffoli(a, b, t);
        }
    }
    r.apply_perm(PermSpec::random(n, rng, 2.0));
    r.apply_perm(PermSpec::random(16, rng, 2.0), 500);
    EXPECT_EQ(r.x_plane(), phases);
}

TEST(qsl_core, cross_register_cnot_matches_single_register) {
    for_all_states(2, [](uint64_t s) {
        auto joint = from_state(2, s);
        joint.apply_cnot(0, 1);
        auto a = QslRegister::prepare_full(BitVec::from_uint(1, s & 1), BitVec::from_uint(1, (s >> 2) & 1));
        auto b = QslRegister::prepare_full(BitVec::from_uint(1, (s >> 1) & 1), BitVec::from_uint(1, (s >> 3) & 1));
        apply_cnot(a, 0, b, 0);
        EXPECT_EQ(joint.bit(0), a.bit(0));
        EXPECT_EQ(joint.bit(1), b.bit(0));
    });

    RngStream rng(1);
    auto c = QslRegister::prepare_full(BitVec::random(70, rng), BitVec::random(70, rng));
    auto t = QslRegister::prepare_full(BitVec::random(70, rng), BitVec::random(70, rng));
    auto c2 = c, t2 = t;
    apply_cnot_bitwise(c, t);
    for (size_t k = 0; k < 70; k++) {
        apply_cnot(c2, k, t2, k);
    }
    EXPECT_EQ(c, c2);
    EXPECT_EQ(t, t2);
    EXPECT_THROW(apply_cnot_bitwise(c, c), std::invalid_argument);
    QslRegister small(3);
    EXPECT_THROW(apply_cnot_bitwise(c, small), std::invalid_argument);
}
