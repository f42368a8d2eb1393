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

#ifndef _QSL_ALGORITHMS_H
#define _QSL_ALGORITHMS_H

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "qsl/bit_matrix.h"
#include "qsl/bit_vec.h"
#include "qsl/qsl_register.h"
#include "qsl/rng.h"

namespace qsl {

// Solvers see an oracle only through these operations.

template <typename O>
concept DjQueryOracle = requires(O &o, QslRegister &r, const BitVec &x, RngStream &rng) {
    o.apply(r, r);
    { o.classical_query(x, rng) } -> std::same_as<bool>;
    { o.query_count() } -> std::convertible_to<uint64_t>;
};

template <typename O>
concept SimonQueryOracle = requires(O &o, QslRegister &r, const BitVec &x, RngStream &rng) {
    o.apply(r, r);
    { o.classical_query(x, rng) } -> std::same_as<BitVec>;
    { o.query_count() } -> std::convertible_to<uint64_t>;
};

enum class DjVerdict : uint8_t { constant, balanced };

inline const char *dj_verdict_name(DjVerdict v) {
    return v == DjVerdict::constant ? "constant" : "balanced";
}

struct DjResult {
    DjVerdict verdict;
    uint64_t queries;
    /// QSL solver: the measured query register. Classical solvers: the xor
    /// of two inputs with different outputs, or zero when none was found.
    /// Either way the verdict is constant exactly when this is zero.
    BitVec raw_measurement;
};

struct SimonResult {
    /// Zero encodes a one-to-one function.
    BitVec secret;
    uint64_t iterations;
    uint64_t queries;
    BitMatrix y_rows;
};

struct IterationLimitExceeded : std::runtime_error {
    IterationLimitExceeded(uint64_t iterations, size_t rank)
        : std::runtime_error(
              "Simon sampling stalled at rank " + std::to_string(rank) + " after " + std::to_string(iterations) +
              " iterations"),
          iterations(iterations),
          rank(rank) {
    }
    uint64_t iterations;
    size_t rank;
};

/// Query register |0...0>, target |1>, H everywhere, one oracle call, H on
/// the query, computational readout.
template <DjQueryOracle O>
DjResult deutsch_jozsa(O &oracle, size_t n, RngStream &rng) {
    uint64_t before = oracle.query_count();
    auto query = QslRegister::prepare_z(BitVec(n), rng);
    auto target = QslRegister::prepare_z(BitVec::from_uint(1, 1), rng);
    query.apply_h_all();
    target.apply_h_all();
    oracle.apply(query, target);
    query.apply_h_all();
    BitVec m = query.measure_all_z(rng);
    DjVerdict v = m.is_zero() ? DjVerdict::constant : DjVerdict::balanced;
    return {v, oracle.query_count() - before, std::move(m)};
}

/// One run of the sampling circuit: returns a y with y . s = 0.
template <SimonQueryOracle O>
BitVec simon_subroutine(O &oracle, size_t n, RngStream &rng) {
    auto query = QslRegister::prepare_z(BitVec(n), rng);
    auto answer = QslRegister::prepare_z(BitVec(n), rng);
    query.apply_h_all();
    oracle.apply(query, answer);
    query.apply_h_all();
    return query.measure_all_z(rng);
}

/// Sampling circuit with the answer register prepared as H|w>.
template <SimonQueryOracle O>
BitVec simon_subroutine_with_answer(O &oracle, const BitVec &w, RngStream &rng) {
    size_t n = w.size();
    auto query = QslRegister::prepare_z(BitVec(n), rng);
    auto answer = QslRegister::prepare_z(w, rng);
    query.apply_h_all();
    answer.apply_h_all();
    oracle.apply(query, answer);
    query.apply_h_all();
    return query.measure_all_z(rng);
}

/// Candidate secret from collected rows, checked with f(0) vs f(s*).
///
/// When the rows have full rank s* is e_0, so the check still costs exactly
/// two queries. Returns zero for a one-to-one function.
template <SimonQueryOracle O>
BitVec resolve_secret(O &oracle, const BitMatrix &rows, RngStream &rng) {
    size_t n = rows.width();
    auto sol = solve_secret(rows);
    BitVec candidate;
    switch (sol.status) {
        case SecretSolution::Status::unique:
            candidate = sol.secret;
            break;
        case SecretSolution::Status::trivial_only:
            candidate = BitVec::unit(n, 0);
            break;
        case SecretSolution::Status::underdetermined:
            throw std::logic_error(
                "resolve_secret: rows have rank " + std::to_string(sol.rank) + ", need at least " +
                std::to_string(n - 1));
    }
    BitVec f0 = oracle.classical_query(BitVec(n), rng);
    BitVec fs = oracle.classical_query(candidate, rng);
    return f0 == fs ? candidate : BitVec(n);
}

inline uint64_t default_max_iters(size_t n) {
    return 4 * (uint64_t(n) + 1);
}

/// Repeats the sampling circuit until the rows reach rank n-1. The number
/// of runs is rows.num_rows(). Throws IterationLimitExceeded past max_iters.
template <SimonQueryOracle O>
BitMatrix collect_probabilistic_rows(O &oracle, size_t n, RngStream &rng, uint64_t max_iters) {
    if (max_iters < n) {
        throw std::invalid_argument("simon_probabilistic: max_iters must be at least n");
    }
    BitMatrix rows(n);
    EchelonBasis span(n);
    while (span.rank() + 1 < n) {
        if (rows.num_rows() == max_iters) {
            throw IterationLimitExceeded(max_iters, span.rank());
        }
        BitVec y = simon_subroutine(oracle, n, rng);
        span.insert(y);
        rows.add_row(std::move(y));
    }
    return rows;
}

/// Sampling until rank n-1, then solve and verify with two more queries.
template <SimonQueryOracle O>
SimonResult simon_probabilistic(O &oracle, size_t n, RngStream &rng, uint64_t max_iters) {
    uint64_t before = oracle.query_count();
    BitMatrix rows = collect_probabilistic_rows(oracle, n, rng, max_iters);
    uint64_t iters = rows.num_rows();
    BitVec s = resolve_secret(oracle, rows, rng);
    return {std::move(s), iters, oracle.query_count() - before, std::move(rows)};
}

template <SimonQueryOracle O>
SimonResult simon_probabilistic(O &oracle, size_t n, RngStream &rng) {
    return simon_probabilistic(oracle, n, rng, default_max_iters(n));
}

/// Rows y_k for answer preparations w = e_0 .. e_{n-1}.
template <SimonQueryOracle O>
BitMatrix collect_deterministic_rows(O &oracle, size_t n, RngStream &rng) {
    BitMatrix rows(n);
    for (size_t k = 0; k < n; k++) {
        rows.add_row(simon_subroutine_with_answer(oracle, BitVec::unit(n, k), rng));
    }
    return rows;
}

/// n sampling runs with w over the standard basis, then the two-query check.
template <SimonQueryOracle O>
SimonResult simon_deterministic(O &oracle, size_t n, RngStream &rng) {
    uint64_t before = oracle.query_count();
    BitMatrix rows = collect_deterministic_rows(oracle, n, rng);
    BitVec s = resolve_secret(oracle, rows, rng);
    return {std::move(s), n, oracle.query_count() - before, std::move(rows)};
}

constexpr size_t CLASSICAL_DJ_MAX_N = 24;

/// Queries x = 0, 1, ... until two outputs differ or 2^(n-1)+1 inputs agree.
template <DjQueryOracle O>
DjResult classical_dj_deterministic(O &oracle, size_t n, RngStream &rng) {
    if (n == 0 || n > CLASSICAL_DJ_MAX_N) {
        throw std::invalid_argument(
            "classical_dj_deterministic: n must be in [1, " + std::to_string(CLASSICAL_DJ_MAX_N) + "]");
    }
    uint64_t before = oracle.query_count();
    uint64_t budget = (uint64_t{1} << (n - 1)) + 1;
    bool first = oracle.classical_query(BitVec(n), rng);
    for (uint64_t x = 1; x < budget; x++) {
        BitVec input = BitVec::from_uint(n, x);
        if (oracle.classical_query(input, rng) != first) {
            return {DjVerdict::balanced, oracle.query_count() - before, std::move(input)};
        }
    }
    return {DjVerdict::constant, oracle.query_count() - before, BitVec(n)};
}

/// k uniformly random inputs (repeats allowed). Constant iff all outputs
/// agree; a balanced function is misjudged with probability 2^(1-k).
template <DjQueryOracle O>
DjResult classical_dj_randomized(O &oracle, size_t n, size_t k, RngStream &rng) {
    if (k < 2) {
        throw std::invalid_argument("classical_dj_randomized: k must be at least 2");
    }
    uint64_t before = oracle.query_count();
    BitVec x0 = BitVec::random(n, rng);
    bool first = oracle.classical_query(x0, rng);
    BitVec witness(n);
    for (size_t q = 1; q < k; q++) {
        BitVec x = BitVec::random(n, rng);
        bool out = oracle.classical_query(x, rng);
        if (out != first && witness.is_zero()) {
            witness = x ^ x0;
        }
    }
    DjVerdict v = witness.is_zero() ? DjVerdict::constant : DjVerdict::balanced;
    return {v, oracle.query_count() - before, std::move(witness)};
}

}  // namespace qsl

#endif
