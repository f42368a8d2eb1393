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

#ifndef _QSL_REFERENCE_SIM_H
#define _QSL_REFERENCE_SIM_H

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "qsl/bit_matrix.h"
#include "qsl/circuit.h"
#include "qsl/oracle.h"

namespace qsl {

/// Dense statevector over at most MAX_QUBITS qubits. Qubit q is bit q of
/// the basis index. Only a brute-force cross-check, never a fast path.
class StateVector {
   public:
    static constexpr size_t MAX_QUBITS = 14;
    using Amp = std::complex<double>;

    explicit StateVector(size_t num_qubits, uint64_t basis_index = 0) : num_qubits_(num_qubits) {
        if (num_qubits > MAX_QUBITS) {
            throw std::invalid_argument(
                "StateVector: " + std::to_string(num_qubits) + " qubits exceeds the cap of " +
                std::to_string(MAX_QUBITS));
        }
        amps_.assign(size_t{1} << num_qubits, Amp{0, 0});
        amps_.at(basis_index) = 1;
    }

    size_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const Amp> amplitudes() const {
        return amps_;
    }

    double norm_squared() const {
        double t = 0;
        for (const auto &a : amps_) {
            t += std::norm(a);
        }
        return t;
    }

    void apply(const GateOp &op) {
        validate_op(op, num_qubits_);
        std::visit(
            [&](const auto &g) {
                using G = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<G, GateX>) {
                    controlled_x(0, g.target);
                } else if constexpr (std::is_same_v<G, GateZ>) {
                    uint64_t m = uint64_t{1} << g.target;
                    for (size_t i = 0; i < amps_.size(); i++) {
                        if (i & m) {
                            amps_[i] = -amps_[i];
                        }
                    }
                } else if constexpr (std::is_same_v<G, GateH>) {
                    hadamard(g.target);
                } else if constexpr (std::is_same_v<G, GateCnot>) {
                    controlled_x(uint64_t{1} << g.control, g.target);
                } else if constexpr (std::is_same_v<G, GateToffoli>) {
                    controlled_x((uint64_t{1} << g.control1) | (uint64_t{1} << g.control2), g.target);
                } else {
                    permute(g.spec, g.first);
                }
            },
            op);
    }

    void apply(const Circuit &c) {
        if (c.width() != num_qubits_) {
            throw std::invalid_argument("StateVector::apply: circuit width mismatch");
        }
        for (const auto &op : c.ops()) {
            apply(op);
        }
    }

    /// Outcome probabilities for measuring qubits [first, first + count).
    std::vector<double> marginal(size_t first, size_t count) const {
        if (first + count > num_qubits_) {
            throw std::out_of_range("StateVector::marginal: qubit range out of bounds");
        }
        std::vector<double> p(size_t{1} << count, 0.0);
        uint64_t mask = (uint64_t{1} << count) - 1;
        for (size_t i = 0; i < amps_.size(); i++) {
            p[(i >> first) & mask] += std::norm(amps_[i]);
        }
        return p;
    }

   private:
    void controlled_x(uint64_t control_mask, size_t target) {
        uint64_t t = uint64_t{1} << target;
        for (size_t i = 0; i < amps_.size(); i++) {
            if (!(i & t) && (i & control_mask) == control_mask) {
                std::swap(amps_[i], amps_[i | t]);
            }
        }
    }

    void hadamard(size_t target) {
        const double r = 1.0 / std::sqrt(2.0);
        uint64_t t = uint64_t{1} << target;
        for (size_t i = 0; i < amps_.size(); i++) {
            if (!(i & t)) {
                Amp a = amps_[i];
                Amp b = amps_[i | t];
                amps_[i] = (a + b) * r;
                amps_[i | t] = (a - b) * r;
            }
        }
    }

    void permute(const PermSpec &spec, size_t first) {
        if (std::holds_alternative<PermTable>(spec.form())) {
            // sum_x |pi(x)><x| on the selected wires.
            size_t m = spec.width();
            uint64_t mask = ((uint64_t{1} << m) - 1) << first;
            std::vector<Amp> out(amps_.size());
            for (size_t i = 0; i < amps_.size(); i++) {
                uint64_t local = (i & mask) >> first;
                uint64_t j = (i & ~mask) | (spec.apply(local) << first);
                out[j] = amps_[i];
            }
            amps_ = std::move(out);
            return;
        }
        spec.for_each_gate([&](const RevGate &g) {
            switch (g.kind) {
                case RevGateKind::x:
                    controlled_x(0, first + g.target);
                    break;
                case RevGateKind::cnot:
                    controlled_x(uint64_t{1} << (first + g.control1), first + g.target);
                    break;
                case RevGateKind::toffoli:
                    controlled_x(
                        (uint64_t{1} << (first + g.control1)) | (uint64_t{1} << (first + g.control2)),
                        first + g.target);
                    break;
            }
        });
    }

    size_t num_qubits_;
    std::vector<Amp> amps_;
};

/// Exact outcome probabilities over `bits`-bit outcomes, indexed by the
/// outcome's integer value.
struct Distribution {
    size_t bits = 0;
    std::vector<double> probs;

    double at(const BitVec &outcome) const {
        return probs.at(outcome.to_uint());
    }
};

constexpr size_t DJ_REFERENCE_MAX_N = 10;
constexpr size_t SIMON_REFERENCE_MAX_N = 6;

/// Query-register outcome distribution of the quantum DJ circuit.
inline Distribution dj_quantum_distribution(const DjOracleSpec &spec) {
    spec.validate();
    size_t n = spec.n;
    if (n > DJ_REFERENCE_MAX_N) {
        throw std::invalid_argument("dj_quantum_distribution: n exceeds " + std::to_string(DJ_REFERENCE_MAX_N));
    }
    StateVector sv(n + 1, uint64_t{1} << n);
    for (size_t q = 0; q <= n; q++) {
        sv.apply(GateH{q});
    }
    sv.apply(dj_oracle_circuit(spec));
    for (size_t q = 0; q < n; q++) {
        sv.apply(GateH{q});
    }
    return {n, sv.marginal(0, n)};
}

enum class SimonReferenceRoute : uint8_t {
    /// Full oracle circuit with its ancilla: 3n qubits.
    gate_level,
    /// Oracle as the basis permutation |x>|z> -> |x>|z ^ f(x)>: 2n qubits.
    function_table,
    /// gate_level when 3n fits under the qubit cap, else function_table.
    automatic,
};

/// f(x) = perm(f'(x)) computed directly from the oracle description, without any QSL
/// machinery. For n <= 20.
inline uint64_t simon_function_value(const SimonOracleSpec &spec, uint64_t x) {
    auto basis = orthogonal_complement_basis(spec.secret);
    BitVec xv = BitVec::from_uint(spec.n, x);
    uint64_t fp = 0;
    for (size_t k = 0; k < basis.num_rows(); k++) {
        fp |= uint64_t{dot(xv, basis.row(k))} << k;
    }
    return spec.perm.apply(fp);
}

/// Query-register outcome distribution of the quantum sampling circuit.
inline Distribution simon_quantum_distribution(
    const SimonOracleSpec &spec, SimonReferenceRoute route = SimonReferenceRoute::automatic) {
    spec.validate();
    size_t n = spec.n;
    if (n > SIMON_REFERENCE_MAX_N) {
        throw std::invalid_argument(
            "simon_quantum_distribution: n exceeds " + std::to_string(SIMON_REFERENCE_MAX_N));
    }
    if (route == SimonReferenceRoute::automatic) {
        route = 3 * n <= StateVector::MAX_QUBITS ? SimonReferenceRoute::gate_level
                                                 : SimonReferenceRoute::function_table;
    }
    if (route == SimonReferenceRoute::gate_level) {
        StateVector sv(3 * n);
        for (size_t q = 0; q < n; q++) {
            sv.apply(GateH{q});
        }
        sv.apply(simon_oracle_circuit(spec));
        for (size_t q = 0; q < n; q++) {
            sv.apply(GateH{q});
        }
        return {n, sv.marginal(0, n)};
    }
    // Query wires 0..n-1, answer wires n..2n-1.
    PermTable uf{2 * n, std::vector<uint32_t>(size_t{1} << (2 * n))};
    uint64_t mask = (uint64_t{1} << n) - 1;
    for (uint64_t i = 0; i < uf.mapping.size(); i++) {
        uint64_t x = i & mask;
        uint64_t z = i >> n;
        uf.mapping[i] = static_cast<uint32_t>(x | ((z ^ simon_function_value(spec, x)) << n));
    }
    StateVector sv(2 * n);
    for (size_t q = 0; q < n; q++) {
        sv.apply(GateH{q});
    }
    sv.apply(GatePerm{PermSpec(std::move(uf)), 0});
    for (size_t q = 0; q < n; q++) {
        sv.apply(GateH{q});
    }
    return {n, sv.marginal(0, n)};
}

struct DistributionComparison {
    /// Total-variation distance between the exact and empirical distributions.
    double tvd;
    /// Chi-square goodness-of-fit p-value over the exact support. Zero when
    /// any sample fell outside that support.
    double chi2_p;
    bool support_ok;
};

/// Probabilities below this are treated as exactly zero.
constexpr double SUPPORT_EPSILON = 1e-12;

inline DistributionComparison compare_distributions(const Distribution &p, std::span<const uint64_t> counts) {
    if (counts.size() != p.probs.size()) {
        throw std::invalid_argument("compare_distributions: outcome spaces differ");
    }
    uint64_t total = std::accumulate(counts.begin(), counts.end(), uint64_t{0});
    if (total == 0) {
        throw std::invalid_argument("compare_distributions: empty sample set");
    }
    double tvd = 0;
    double chi2 = 0;
    size_t support = 0;
    bool support_ok = true;
    for (size_t i = 0; i < counts.size(); i++) {
        double q = double(counts[i]) / double(total);
        tvd += std::abs(p.probs[i] - q);
        if (p.probs[i] > SUPPORT_EPSILON) {
            support++;
            double expected = p.probs[i] * double(total);
            double d = double(counts[i]) - expected;
            chi2 += d * d / expected;
        } else if (counts[i] != 0) {
            support_ok = false;
        }
    }
    tvd /= 2;
    double pval;
    if (!support_ok) {
        pval = 0;
    } else if (support <= 1) {
        pval = 1;
    } else {
        boost::math::chi_squared_distribution<double> dist(double(support - 1));
        pval = boost::math::cdf(boost::math::complement(dist, chi2));
    }
    return {tvd, pval, support_ok};
}

}  // namespace qsl

#endif
