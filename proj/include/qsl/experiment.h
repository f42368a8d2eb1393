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

#ifndef _QSL_EXPERIMENT_H
#define _QSL_EXPERIMENT_H

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "qsl/algorithms.h"
#include "qsl/oracle.h"
#include "qsl/reference_sim.h"
#include "qsl/spec_json.h"

namespace qsl {

enum class Algorithm : uint8_t {
    dj,
    classical_dj_deterministic,
    classical_dj_randomized,
    simon_deterministic,
    simon_probabilistic,
};

inline const char *algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::dj:
            return "dj";
        case Algorithm::classical_dj_deterministic:
            return "dj-classical-det";
        case Algorithm::classical_dj_randomized:
            return "dj-classical-rand";
        case Algorithm::simon_deterministic:
            return "simon-det";
        case Algorithm::simon_probabilistic:
            return "simon-prob";
    }
    return "?";
}

inline Algorithm algorithm_from_name(const std::string &name) {
    for (auto a : {Algorithm::dj, Algorithm::classical_dj_deterministic, Algorithm::classical_dj_randomized,
                   Algorithm::simon_deterministic, Algorithm::simon_probabilistic}) {
        if (name == algorithm_name(a)) {
            return a;
        }
    }
    throw SpecParseError("unknown algorithm '" + name + "'");
}

inline bool is_dj(Algorithm a) {
    return a == Algorithm::dj || a == Algorithm::classical_dj_deterministic ||
           a == Algorithm::classical_dj_randomized;
}

/// Per-trial stream ids derived from the trial index. The oracle spec, the
/// oracle's internal randomness and the solver each get their own stream.
struct TrialStreams {
    static uint64_t spec(uint64_t trial) {
        return 3 * trial;
    }
    static uint64_t oracle(uint64_t trial) {
        return 3 * trial + 1;
    }
    static uint64_t solver(uint64_t trial) {
        return 3 * trial + 2;
    }
};

struct TrialConfig {
    Algorithm algorithm = Algorithm::dj;
    size_t n = 1;
    uint64_t seed = 0;
    /// DJ only; unset draws constant/balanced at random.
    std::optional<DjKind> dj_kind;
    /// Simon only.
    SecretPolicy secret_policy = SecretPolicy::either;
    double depth_factor = 10.0;
    /// Randomized classical DJ query count.
    size_t classical_k = 10;
    /// Probabilistic Simon; 0 selects default_max_iters(n).
    uint64_t max_iters = 0;
};

struct ExperimentRecord {
    static constexpr int SCHEMA_VERSION = 1;

    Algorithm algorithm = Algorithm::dj;
    size_t n = 0;
    uint64_t seed = 0;
    uint64_t trial = 0;
    nlohmann::json oracle_spec;
    /// "constant"/"balanced" for DJ, "one-to-one"/"two-to-one" for Simon.
    std::string verdict;
    /// Recovered secret (Simon), empty for DJ.
    std::string secret;
    uint64_t queries = 0;
    uint64_t iterations = 0;
    double wall_time_ms = 0;
    std::optional<bool> correct;
    /// "ok" or "iteration_limit".
    std::string status = "ok";
    size_t classical_k = 0;
    uint64_t max_iters = 0;

    nlohmann::json to_json() const {
        nlohmann::json j{
            {"schema", SCHEMA_VERSION},
            {"algorithm", algorithm_name(algorithm)},
            {"n", n},
            {"seed", seed},
            {"trial", trial},
            {"oracle_spec", oracle_spec},
            {"verdict", verdict},
            {"secret", secret},
            {"queries", queries},
            {"iterations", iterations},
            {"wall_time_ms", wall_time_ms},
            {"status", status},
        };
        j["correct"] = correct ? nlohmann::json(*correct) : nlohmann::json(nullptr);
        if (algorithm == Algorithm::classical_dj_randomized) {
            j["k"] = classical_k;
        }
        if (algorithm == Algorithm::simon_probabilistic) {
            j["max_iters"] = max_iters;
        }
        return j;
    }

    static ExperimentRecord from_json(const nlohmann::json &j) {
        try {
            if (j.at("schema").get<int>() != SCHEMA_VERSION) {
                throw SpecParseError("unsupported record schema " + j.at("schema").dump());
            }
            ExperimentRecord r;
            r.algorithm = algorithm_from_name(j.at("algorithm").get<std::string>());
            r.n = j.at("n").get<size_t>();
            r.seed = j.at("seed").get<uint64_t>();
            r.trial = j.at("trial").get<uint64_t>();
            r.oracle_spec = j.at("oracle_spec");
            r.verdict = j.at("verdict").get<std::string>();
            r.secret = j.at("secret").get<std::string>();
            r.queries = j.at("queries").get<uint64_t>();
            r.iterations = j.at("iterations").get<uint64_t>();
            r.wall_time_ms = j.at("wall_time_ms").get<double>();
            r.status = j.at("status").get<std::string>();
            if (!j.at("correct").is_null()) {
                r.correct = j.at("correct").get<bool>();
            }
            r.classical_k = j.value("k", size_t{0});
            r.max_iters = j.value("max_iters", uint64_t{0});
            return r;
        } catch (const nlohmann::json::exception &e) {
            throw SpecParseError(std::string("malformed record: ") + e.what());
        }
    }

    static std::string csv_header() {
        return "schema,algorithm,n,seed,trial,verdict,secret,queries,iterations,wall_time_ms,correct,status";
    }

    std::string csv_row() const {
        std::ostringstream out;
        out << SCHEMA_VERSION << ',' << algorithm_name(algorithm) << ',' << n << ',' << seed << ',' << trial << ','
            << verdict << ',' << secret << ',' << queries << ',' << iterations << ',' << wall_time_ms << ','
            << (correct ? (*correct ? "true" : "false") : "") << ',' << status;
        return out.str();
    }
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline void run_dj_solver(ExperimentRecord &rec, const DjOracleSpec &spec, uint64_t trial) {
    RngStream rng(rec.seed, TrialStreams::solver(trial));
    auto t0 = std::chrono::steady_clock::now();
    DjOracle oracle(spec);
    DjResult result;
    switch (rec.algorithm) {
        case Algorithm::dj:
            result = deutsch_jozsa(oracle, spec.n, rng);
            break;
        case Algorithm::classical_dj_deterministic:
            result = classical_dj_deterministic(oracle, spec.n, rng);
            break;
        case Algorithm::classical_dj_randomized:
            result = classical_dj_randomized(oracle, spec.n, rec.classical_k, rng);
            break;
        default:
            throw std::logic_error("run_dj_solver: not a DJ algorithm");
    }
    rec.wall_time_ms = ms_since(t0);
    rec.verdict = dj_verdict_name(result.verdict);
    rec.queries = result.queries;
    rec.iterations = result.queries;
    rec.correct = (result.verdict == DjVerdict::constant) == spec.is_constant();
}

inline void run_simon_solver(ExperimentRecord &rec, const SimonOracleSpec &spec, uint64_t trial) {
    RngStream oracle_rng(rec.seed, TrialStreams::oracle(trial));
    RngStream rng(rec.seed, TrialStreams::solver(trial));
    auto t0 = std::chrono::steady_clock::now();
    SimonOracle oracle(spec, oracle_rng);
    try {
        SimonResult result = rec.algorithm == Algorithm::simon_deterministic
                                 ? simon_deterministic(oracle, spec.n, rng)
                                 : simon_probabilistic(oracle, spec.n, rng, rec.max_iters);
        rec.wall_time_ms = ms_since(t0);
        rec.verdict = result.secret.is_zero() ? "one-to-one" : "two-to-one";
        rec.secret = result.secret.str();
        rec.queries = result.queries;
        rec.iterations = result.iterations;
        rec.correct = result.secret == spec.secret;
    } catch (const IterationLimitExceeded &e) {
        rec.wall_time_ms = ms_since(t0);
        rec.status = "iteration_limit";
        rec.verdict = "undecided";
        rec.queries = oracle.query_count();
        rec.iterations = e.iterations;
        rec.correct = false;
    }
}

}  // namespace detail

/// Generates the trial's oracle from (seed, trial), runs the solver and
/// scores it against the generating spec. The solver only sees the oracle.
inline ExperimentRecord run_trial(const TrialConfig &cfg, uint64_t trial) {
    ExperimentRecord rec;
    rec.algorithm = cfg.algorithm;
    rec.n = cfg.n;
    rec.seed = cfg.seed;
    rec.trial = trial;
    RngStream spec_rng(cfg.seed, TrialStreams::spec(trial));
    if (is_dj(cfg.algorithm)) {
        rec.classical_k = cfg.algorithm == Algorithm::classical_dj_randomized ? cfg.classical_k : 0;
        auto spec = random_dj_spec(cfg.n, spec_rng, cfg.dj_kind, cfg.depth_factor);
        rec.oracle_spec = to_json(spec);
        detail::run_dj_solver(rec, spec, trial);
    } else {
        rec.max_iters = cfg.algorithm == Algorithm::simon_probabilistic
                            ? (cfg.max_iters ? cfg.max_iters : default_max_iters(cfg.n))
                            : 0;
        auto spec = random_simon_spec(cfg.n, spec_rng, cfg.secret_policy, cfg.depth_factor);
        rec.oracle_spec = to_json(spec);
        detail::run_simon_solver(rec, spec, trial);
    }
    return rec;
}

/// Re-runs a record from its stored (algorithm, seed, trial, oracle_spec).
inline ExperimentRecord replay(const ExperimentRecord &original) {
    ExperimentRecord rec;
    rec.algorithm = original.algorithm;
    rec.n = original.n;
    rec.seed = original.seed;
    rec.trial = original.trial;
    rec.oracle_spec = original.oracle_spec;
    rec.classical_k = original.classical_k;
    rec.max_iters = original.max_iters;
    if (is_dj(rec.algorithm)) {
        auto spec = dj_spec_from_json(rec.oracle_spec);
        if (spec.n != rec.n) {
            throw SpecParseError("record n does not match its oracle spec");
        }
        detail::run_dj_solver(rec, spec, rec.trial);
    } else {
        auto spec = simon_spec_from_json(rec.oracle_spec);
        if (spec.n != rec.n) {
            throw SpecParseError("record n does not match its oracle spec");
        }
        detail::run_simon_solver(rec, spec, rec.trial);
    }
    return rec;
}

/// True when the replay reproduced the outcome fields exactly.
inline bool same_outcome(const ExperimentRecord &a, const ExperimentRecord &b) {
    return a.verdict == b.verdict && a.secret == b.secret && a.queries == b.queries &&
           a.iterations == b.iterations && a.status == b.status;
}

/// Runs `count` callables job(i) on up to `threads` workers and returns the
/// results in index order.
template <typename Job>
auto run_indexed(uint64_t count, size_t threads, Job job) -> std::vector<decltype(job(uint64_t{}))> {
    std::vector<decltype(job(uint64_t{}))> out(count);
    threads = std::max<size_t>(1, std::min<uint64_t>(threads, count));
    if (threads == 1) {
        for (uint64_t i = 0; i < count; i++) {
            out[i] = job(i);
        }
        return out;
    }
    std::atomic<uint64_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back([&] {
                while (!failed.load()) {
                    uint64_t i = next.fetch_add(1);
                    if (i >= count) {
                        return;
                    }
                    try {
                        out[i] = job(i);
                    } catch (...) {
                        if (!failed.exchange(true)) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

inline std::vector<ExperimentRecord> run_trials(const TrialConfig &cfg, uint64_t trials, size_t threads = 1) {
    return run_indexed(trials, threads, [&](uint64_t i) { return run_trial(cfg, i); });
}

}  // namespace qsl

#endif
