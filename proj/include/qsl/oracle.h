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

#ifndef _QSL_ORACLE_H
#define _QSL_ORACLE_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsl/bit_matrix.h"
#include "qsl/bit_vec.h"
#include "qsl/circuit.h"
#include "qsl/perm_spec.h"
#include "qsl/qsl_register.h"
#include "qsl/rng.h"

namespace qsl {

enum class DjKind : uint8_t { constant_zero, constant_one, balanced };

inline const char *dj_kind_name(DjKind k) {
    switch (k) {
        case DjKind::constant_zero:
            return "constant0";
        case DjKind::constant_one:
            return "constant1";
        case DjKind::balanced:
            return "balanced";
    }
    return "?";
}

/// f(x) = msb(perm(x)) for balanced, a constant otherwise.
struct DjOracleSpec {
    size_t n = 0;
    DjKind kind = DjKind::constant_zero;
    /// Only meaningful for balanced; ignored otherwise.
    PermSpec perm;

    bool is_constant() const {
        return kind != DjKind::balanced;
    }

    void validate() const {
        if (n == 0) {
            throw std::invalid_argument("DjOracleSpec: n must be at least 1");
        }
        if (kind == DjKind::balanced && perm.width() != n) {
            throw std::invalid_argument(
                "DjOracleSpec: permutation width " + std::to_string(perm.width()) + " does not match n=" +
                std::to_string(n));
        }
    }
};

/// f(x) = perm(f'(x)) with f'_k(x) = x . v^k over the canonical basis v of
/// the complement of the secret.
struct SimonOracleSpec {
    size_t n = 0;
    BitVec secret;
    PermSpec perm;

    void validate() const {
        if (n == 0) {
            throw std::invalid_argument("SimonOracleSpec: n must be at least 1");
        }
        if (secret.size() != n) {
            throw std::invalid_argument("SimonOracleSpec: secret length does not match n");
        }
        if (perm.width() != n) {
            throw std::invalid_argument("SimonOracleSpec: permutation width does not match n");
        }
    }
};

namespace detail {


inline void check_width(size_t got, size_t n, const char *what) {
    if (got != n) {
        throw std::invalid_argument(
            std::string(what) + " register has " + std::to_string(got) + " bits, oracle expects " +
            std::to_string(n));
    }
}

}  // namespace detail

struct OracleInspector;

/// Deutsch-Jozsa oracle acting on an n-bit query register and a 1-bit target.
///
/// apply runs perm on the query's computational plane, then a CNOT from
/// query bit n-1 to the target (balanced), an X on the target (constant
/// one) or nothing (constant zero), then the inverse perm.
class DjOracle {
   public:
    explicit DjOracle(const DjOracleSpec &spec) : n_(spec.n), kind_(spec.kind) {
        spec.validate();
        if (kind_ == DjKind::balanced) {
            forward_ = PermKernel(spec.perm);
            backward_ = forward_.inverse();
        }
    }

    size_t num_inputs() const {
        return n_;
    }

    uint64_t query_count() const {
        return queries_;
    }

    void apply(QslRegister &query, QslRegister &target) {
        detail::check_width(query.size(), n_, "query");
        detail::check_width(target.size(), 1, "target");
        queries_++;
        switch (kind_) {
            case DjKind::constant_zero:
                break;
            case DjKind::constant_one:
                target.apply_x(0);
                break;
            case DjKind::balanced:
                query.apply_perm(forward_);
                apply_cnot(query, n_ - 1, target, 0);
                query.apply_perm(backward_);
                break;
        }
    }

    /// One ordinary function evaluation: |x>|0> in, answer bit read out.
    bool classical_query(const BitVec &x, RngStream &rng) {
        detail::check_width(x.size(), n_, "query");
        auto query = QslRegister::prepare_z(x, rng);
        auto target = QslRegister::prepare_z(BitVec(1), rng);
        apply(query, target);
        return target.measure_z({0}, rng)[0];
    }

   private:
    size_t n_;
    DjKind kind_;
    PermKernel forward_;
    PermKernel backward_;
    uint64_t queries_ = 0;
};

/// Simon oracle acting on n-bit query and answer registers, with an
/// internal n-bit ancilla.
///
/// apply runs U_s (a CNOT from query bit j to ancilla bit k for every
/// v^k_j = 1), perm on the ancilla, bitwise CNOTs ancilla -> answer, the
/// inverse perm, and U_s again. The ancilla's computational plane returns
/// to zero after every call; its phase plane is drawn once at construction
/// and never leaks into the query phases.
class SimonOracle {
   public:
    SimonOracle(const SimonOracleSpec &spec, RngStream &rng) : n_(spec.n) {
        spec.validate();
        forward_ = PermKernel(spec.perm);
        backward_ = forward_.inverse();
        auto basis = orthogonal_complement_basis(spec.secret);
        for (size_t k = 0; k < basis.num_rows(); k++) {
            const auto &v = basis.row(k);
            for (size_t j = 0; j < n_; j++) {
                if (v[j]) {
                    us_cnots_.emplace_back(j, k);
                }
            }
        }
        ancilla_ = QslRegister::prepare_z(BitVec(n_), rng);
    }

    size_t num_inputs() const {
        return n_;
    }

    uint64_t query_count() const {
        return queries_;
    }

    void apply(QslRegister &query, QslRegister &answer) {
        detail::check_width(query.size(), n_, "query");
        detail::check_width(answer.size(), n_, "answer");
        queries_++;
        for (auto [j, k] : us_cnots_) {
            apply_cnot(query, j, ancilla_, k);
        }
        ancilla_.apply_perm(forward_);
        apply_cnot_bitwise(ancilla_, answer);
        ancilla_.apply_perm(backward_);
        for (auto it = us_cnots_.rbegin(); it != us_cnots_.rend(); ++it) {
            apply_cnot(query, it->first, ancilla_, it->second);
        }
    }

    BitVec classical_query(const BitVec &x, RngStream &rng) {
        detail::check_width(x.size(), n_, "query");
        auto query = QslRegister::prepare_z(x, rng);
        auto answer = QslRegister::prepare_z(BitVec(n_), rng);
        apply(query, answer);
        return answer.measure_all_z(rng);
    }

   private:
    friend struct OracleInspector;

    size_t n_;
    PermKernel forward_;
    PermKernel backward_;
    std::vector<std::pair<size_t, size_t>> us_cnots_;
    QslRegister ancilla_;
    uint64_t queries_ = 0;
};

/// Read access to oracle internals for tests and diagnostics. Solvers never
/// use this.
struct OracleInspector {
    static const QslRegister &ancilla(const SimonOracle &o) {
        return o.ancilla_;
    }
    static size_t us_cnot_count(const SimonOracle &o) {
        return o.us_cnots_.size();
    }
};

/// Gate-level description of the DJ oracle on n+1 wires (query 0..n-1,
/// target n).
inline Circuit dj_oracle_circuit(const DjOracleSpec &spec) {
    spec.validate();
    size_t n = spec.n;
    Circuit c(n + 1);
    if (spec.kind == DjKind::constant_one) {
        c.append(GateX{n});
    } else if (spec.kind == DjKind::balanced) {
        c.append(GatePerm{spec.perm, 0});
        c.append(GateCnot{n - 1, n});
        c.append(GatePerm{spec.perm.inverse(), 0});
    }
    return c;
}

/// Gate-level description of the Simon oracle on 3n wires (query 0..n-1,
/// answer n..2n-1, ancilla 2n..3n-1).
inline Circuit simon_oracle_circuit(const SimonOracleSpec &spec) {
    spec.validate();
    size_t n = spec.n;
    Circuit us(3 * n);
    auto basis = orthogonal_complement_basis(spec.secret);
    for (size_t k = 0; k < basis.num_rows(); k++) {
        for (size_t j = 0; j < n; j++) {
            if (basis.row(k)[j]) {
                us.append(GateCnot{j, 2 * n + k});
            }
        }
    }
    Circuit c(3 * n);
    c.append(us);
    c.append(GatePerm{spec.perm, 2 * n});
    for (size_t k = 0; k < n; k++) {
        c.append(GateCnot{2 * n + k, n + k});
    }
    c.append(GatePerm{spec.perm.inverse(), 2 * n});
    c.append(us.reversed());
    return c;
}

/// Constant vs balanced with equal probability; the constant value is a
/// fair coin. A fixed kind may be requested instead.
inline DjOracleSpec random_dj_spec(
    size_t n, RngStream &rng, std::optional<DjKind> kind = std::nullopt, double depth_factor = 10.0) {
    if (n == 0) {
        throw std::invalid_argument("random_dj_spec: n must be at least 1");
    }
    DjOracleSpec spec;
    spec.n = n;
    if (kind) {
        spec.kind = *kind;
    } else if (rng.next_bit()) {
        spec.kind = DjKind::balanced;
    } else {
        spec.kind = rng.next_bit() ? DjKind::constant_one : DjKind::constant_zero;
    }
    spec.perm = spec.kind == DjKind::balanced ? PermSpec::random(n, rng, depth_factor) : PermSpec::identity(0);
    return spec;
}

enum class SecretPolicy : uint8_t {
    /// Uniform over nonzero secrets (two-to-one functions).
    nonzero,
    /// s = 0 (one-to-one functions).
    zero,
    /// Fair coin between the two above.
    either,
};

inline SimonOracleSpec random_simon_spec(
    size_t n, RngStream &rng, SecretPolicy policy = SecretPolicy::nonzero, double depth_factor = 10.0) {
    if (n == 0) {
        throw std::invalid_argument("random_simon_spec: n must be at least 1");
    }
    if (policy == SecretPolicy::either) {
        policy = rng.next_bit() ? SecretPolicy::nonzero : SecretPolicy::zero;
    }
    SimonOracleSpec spec;
    spec.n = n;
    spec.secret = BitVec(n);
    if (policy == SecretPolicy::nonzero) {
        do {
            spec.secret.fill_random(rng);
        } while (spec.secret.is_zero());
    }
    spec.perm = PermSpec::random(n, rng, depth_factor);
    return spec;
}

}  // namespace qsl

#endif
