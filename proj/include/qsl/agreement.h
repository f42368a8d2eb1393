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

#ifndef _QSL_AGREEMENT_H
#define _QSL_AGREEMENT_H

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qsl/algorithms.h"
#include "qsl/oracle.h"
#include "qsl/reference_sim.h"

namespace qsl {

struct AgreementThresholds {
    double max_tvd = 0.02;
    /// Family-wise chi-square significance; split evenly across cases.
    double alpha = 1e-3;
};

struct SimonAgreement {
    size_t n = 0;
    std::string secret;
    std::string perm_label;
    uint64_t samples = 0;
    DistributionComparison comparison{};
    /// Exact support {y : y.s = 0} equals the set of observed outcomes.
    bool support_equal = false;
    bool passed = false;
};

struct DjAgreement {
    size_t n = 0;
    std::string kind;
    std::string perm_label;
    /// Quantum probability of the all-zero outcome.
    double quantum_p_zero = 0;
    std::string qsl_verdict;
    bool passed = false;
};

struct AgreementReport {
    std::vector<SimonAgreement> simon;
    std::vector<DjAgreement> dj;

    bool passed() const {
        for (const auto &c : simon) {
            if (!c.passed) {
                return false;
            }
        }
        for (const auto &c : dj) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }
};

/// Samples the QSL sampling circuit and compares the y histogram with the
/// exact statevector distribution.
inline SimonAgreement check_simon_agreement(
    const SimonOracleSpec &spec, uint64_t samples, RngStream &rng, double max_tvd, double alpha) {
    SimonAgreement out;
    out.n = spec.n;
    out.secret = spec.secret.str();
    out.samples = samples;
    Distribution exact = simon_quantum_distribution(spec);
    SimonOracle oracle(spec, rng);
    std::vector<uint64_t> counts(exact.probs.size(), 0);
    for (uint64_t k = 0; k < samples; k++) {
        counts[simon_subroutine(oracle, spec.n, rng).to_uint()]++;
    }
    out.comparison = compare_distributions(exact, counts);
    out.support_equal = true;
    for (uint64_t y = 0; y < counts.size(); y++) {
        bool orthogonal = !dot(BitVec::from_uint(spec.n, y), spec.secret);
        bool in_exact = exact.probs[y] > SUPPORT_EPSILON;
        if (orthogonal != in_exact || orthogonal != (counts[y] > 0)) {
            out.support_equal = false;
        }
    }
    out.passed = out.support_equal && out.comparison.tvd < max_tvd && out.comparison.chi2_p >= alpha;
    return out;
}

/// Both DJ procedures are deterministic: the quantum all-zero probability
/// must be exactly 0 or 1 and the QSL verdict must match it.
inline DjAgreement check_dj_agreement(const DjOracleSpec &spec, RngStream &rng) {
    DjAgreement out;
    out.n = spec.n;
    out.kind = dj_kind_name(spec.kind);
    out.quantum_p_zero = dj_quantum_distribution(spec).probs[0];
    DjOracle oracle(spec);
    auto r = deutsch_jozsa(oracle, spec.n, rng);
    out.qsl_verdict = dj_verdict_name(r.verdict);
    bool quantum_constant = std::abs(out.quantum_p_zero - 1) < 1e-9;
    bool quantum_balanced = std::abs(out.quantum_p_zero) < 1e-9;
    out.passed = (quantum_constant && r.verdict == DjVerdict::constant) ||
                 (quantum_balanced && r.verdict == DjVerdict::balanced);
    return out;
}

/// Every nonzero secret for Simon n in [2, max_n] and every DJ kind for n in
/// [1, max_n], each with the identity permutation and `random_perms` random
/// table permutations.
inline AgreementReport run_agreement_suite(
    size_t max_n, uint64_t samples, uint64_t seed, size_t random_perms = 5, AgreementThresholds th = {}) {
    if (max_n > SIMON_REFERENCE_MAX_N) {
        throw std::invalid_argument("run_agreement_suite: max_n exceeds " + std::to_string(SIMON_REFERENCE_MAX_N));
    }
    AgreementReport report;
    size_t simon_cases = 0;
    for (size_t n = 2; n <= max_n; n++) {
        simon_cases += ((size_t{1} << n) - 1) * (1 + random_perms);
    }
    double per_case_alpha = simon_cases ? th.alpha / double(simon_cases) : th.alpha;

    RngStream rng(seed, 0);
    for (size_t n = 2; n <= max_n; n++) {
        for (uint64_t s = 1; s < (uint64_t{1} << n); s++) {
            for (size_t p = 0; p <= random_perms; p++) {
                SimonOracleSpec spec{n, BitVec::from_uint(n, s), PermSpec::identity(n)};
                std::string label = "identity";
                if (p > 0) {
                    spec.perm = PermSpec::random(n, rng);
                    label = "random#" + std::to_string(p);
                }
                auto c = check_simon_agreement(spec, samples, rng, th.max_tvd, per_case_alpha);
                c.perm_label = label;
                report.simon.push_back(std::move(c));
            }
        }
    }
    for (size_t n = 1; n <= max_n; n++) {
        for (auto kind : {DjKind::constant_zero, DjKind::constant_one}) {
            auto c = check_dj_agreement({n, kind, PermSpec::identity(0)}, rng);
            c.perm_label = "none";
            report.dj.push_back(std::move(c));
        }
        for (size_t p = 0; p <= random_perms; p++) {
            DjOracleSpec spec{n, DjKind::balanced, p == 0 ? PermSpec::identity(n) : PermSpec::random(n, rng)};
            auto c = check_dj_agreement(spec, rng);
            c.perm_label = p == 0 ? "identity" : "random#" + std::to_string(p);
            report.dj.push_back(std::move(c));
        }
    }
    return report;
}

}  // namespace qsl

#endif
