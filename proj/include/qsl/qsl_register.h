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

#ifndef _QSL_QSL_REGISTER_H
#define _QSL_QSL_REGISTER_H

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsl/bit_vec.h"
#include "qsl/circuit.h"
#include "qsl/perm_spec.h"
#include "qsl/rng.h"

namespace qsl {

/// One QSL bit: a computational bit and a phase bit.
struct QslBit {
    bool z = false;
    bool x = false;
    bool operator==(const QslBit &) const = default;
};

/// A register of QSL bits stored as two packed planes.
///
/// Index 0 is the least significant position. The computational plane holds
/// every b_z and the phase plane every b_x.
///
/// Gate semantics:
///   X       flips b_z.
///   Z       flips b_x.
///   H       swaps b_z and b_x.
///   CNOT    target.b_z ^= control.b_z and control.b_x ^= target.b_x.
///   Toffoli target.b_z ^= c1.b_z & c2.b_z; the phase plane is untouched.
///   PERM    permutes the computational plane; the phase plane is untouched.
///
/// Measuring one plane returns its bits and then redraws the conjugate
/// plane's bits at the measured positions.
class QslRegister {
   public:
    QslRegister() = default;
    explicit QslRegister(size_t num_bits) : z_(num_bits), x_(num_bits) {
    }

    /// Computational preparation: b_z = values, b_x uniform.
    static QslRegister prepare_z(const BitVec &values, RngStream &rng) {
        QslRegister r;
        r.z_ = values;
        r.x_ = BitVec::random(values.size(), rng);
        return r;
    }

    static QslRegister prepare_full(BitVec z_values, BitVec x_values) {
        if (z_values.size() != x_values.size()) {
            throw std::invalid_argument("prepare_full: computational and phase planes differ in length");
        }
        QslRegister r;
        r.z_ = std::move(z_values);
        r.x_ = std::move(x_values);
        return r;
    }

    size_t size() const {
        return z_.size();
    }

    QslBit bit(size_t index) const {
        check(index);
        return {z_[index], x_[index]};
    }

    const BitVec &z_plane() const {
        return z_;
    }
    const BitVec &x_plane() const {
        return x_;
    }

    void apply_x(size_t q) {
        check(q);
        z_.xor_bit(q, true);
    }

    void apply_z(size_t q) {
        check(q);
        x_.xor_bit(q, true);
    }

    void apply_h(size_t q) {
        check(q);
        bool z = z_[q];
        bool x = x_[q];
        z_.xor_bit(q, z != x);
        x_.xor_bit(q, z != x);
    }

    /// H on every bit: the two planes trade places.
    void apply_h_all() {
        std::swap(z_, x_);
    }

    void apply_cnot(size_t control, size_t target) {
        check_distinct(control, target);
        z_.xor_bit(target, z_[control]);
        x_.xor_bit(control, x_[target]);
    }

    void apply_toffoli(size_t control1, size_t control2, size_t target) {
        check_distinct(control1, control2, target);
        z_.xor_bit(target, z_[control1] && z_[control2]);
    }

    void apply_perm(const PermSpec &spec, size_t first = 0) {
        if (first + spec.width() > size()) {
            throw std::out_of_range("apply_perm: wire range exceeds register size");
        }
        spec.apply(z_, first);
    }

    void apply_perm(const PermKernel &kernel) {
        if (kernel.width() > size()) {
            throw std::out_of_range("apply_perm: wire range exceeds register size");
        }
        kernel.apply(z_);
    }

    void apply(const GateOp &op) {
        std::visit(
            [&](const auto &g) {
                using G = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<G, GateX>) {
                    apply_x(g.target);
                } else if constexpr (std::is_same_v<G, GateZ>) {
                    apply_z(g.target);
                } else if constexpr (std::is_same_v<G, GateH>) {
                    apply_h(g.target);
                } else if constexpr (std::is_same_v<G, GateCnot>) {
                    apply_cnot(g.control, g.target);
                } else if constexpr (std::is_same_v<G, GateToffoli>) {
                    apply_toffoli(g.control1, g.control2, g.target);
                } else {
                    apply_perm(g.spec, g.first);
                }
            },
            op);
    }

    void apply_circuit(const Circuit &circuit) {
        if (circuit.width() != size()) {
            throw std::invalid_argument(
                "apply_circuit: circuit width " + std::to_string(circuit.width()) + " does not match register size " +
                std::to_string(size()));
        }
        for (const auto &op : circuit.ops()) {
            apply(op);
        }
    }

    BitVec measure_z(std::span<const size_t> indices, RngStream &rng) {
        return measure(z_, x_, indices, rng);
    }

    BitVec measure_x(std::span<const size_t> indices, RngStream &rng) {
        return measure(x_, z_, indices, rng);
    }

    BitVec measure_z(std::initializer_list<size_t> indices, RngStream &rng) {
        return measure_z(std::span<const size_t>(indices.begin(), indices.size()), rng);
    }

    BitVec measure_x(std::initializer_list<size_t> indices, RngStream &rng) {
        return measure_x(std::span<const size_t>(indices.begin(), indices.size()), rng);
    }

    /// Measures every computational bit; the whole phase plane is redrawn.
    BitVec measure_all_z(RngStream &rng) {
        BitVec out = z_;
        x_.fill_random(rng);
        return out;
    }

    BitVec measure_all_x(RngStream &rng) {
        BitVec out = x_;
        z_.fill_random(rng);
        return out;
    }

    bool operator==(const QslRegister &) const = default;

   private:
    friend void apply_cnot(QslRegister &, size_t, QslRegister &, size_t);
    friend void apply_cnot_bitwise(QslRegister &, QslRegister &);

    void check(size_t q) const {
        if (q >= size()) {
            throw std::out_of_range(
                "QSL bit index " + std::to_string(q) + " out of range for register of size " + std::to_string(size()));
        }
    }

    template <typename... Ts>
    void check_distinct(Ts... qs) const {
        (check(qs), ...);
        size_t arr[] = {qs...};
        std::sort(std::begin(arr), std::end(arr));
        if (std::adjacent_find(std::begin(arr), std::end(arr)) != std::end(arr)) {
            throw std::invalid_argument("gate wires must be distinct");
        }
    }

    BitVec measure(const BitVec &read, BitVec &disturbed, std::span<const size_t> indices, RngStream &rng) {
        std::vector<size_t> sorted(indices.begin(), indices.end());
        for (auto q : sorted) {
            check(q);
        }
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("measure: duplicate index in one measurement");
        }
        BitVec out(indices.size());
        for (size_t k = 0; k < indices.size(); k++) {
            out.set(k, read[indices[k]]);
        }
        for (auto q : indices) {
            disturbed.set(q, rng.next_bit());
        }
        return out;
    }

    BitVec z_;
    BitVec x_;
};

/// QSL CNOT between bits of two different registers.
inline void apply_cnot(QslRegister &control_reg, size_t control, QslRegister &target_reg, size_t target) {
    if (&control_reg == &target_reg) {
        control_reg.apply_cnot(control, target);
        return;
    }
    control_reg.check(control);
    target_reg.check(target);
    target_reg.z_.xor_bit(target, control_reg.z_[control]);
    control_reg.x_.xor_bit(control, target_reg.x_[target]);
}

/// CNOT from bit k of controls to bit k of targets, for every k.
inline void apply_cnot_bitwise(QslRegister &controls, QslRegister &targets) {
    if (&controls == &targets) {
        throw std::invalid_argument("apply_cnot_bitwise: registers must differ");
    }
    if (controls.size() != targets.size()) {
        throw std::invalid_argument("apply_cnot_bitwise: register sizes differ");
    }
    targets.z_ ^= controls.z_;
    controls.x_ ^= targets.x_;
}

}  // namespace qsl

#endif
