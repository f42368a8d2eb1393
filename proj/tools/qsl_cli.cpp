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

// Batch experiment runner.
//
//   qsl dj     --n N [--trials T] [--seed S] [--kind K] [--method M] ...
//   qsl simon  --n N [--mode det|prob] ...
//   qsl verify [--max-n N] [--samples S] [--seed S] [--spec-file F]
//   qsl bench  [--algorithm A] [--n-list 1000,10000] [--reps R] ...
//   qsl replay --in records.jsonl
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "qsl/qsl.h"

namespace {

constexpr int EXIT_USAGE = 1;
constexpr int EXIT_VERIFY = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

size_t thread_count() {
    size_t hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("QSL_THREADS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) {
                return std::min<size_t>(size_t(v), hw * 4);
            }
        } catch (const std::exception &) {
        }
        throw UsageError(std::string("QSL_THREADS must be a positive integer, got '") + env + "'");
    }
    return hw;
}

/// stdout, or the --out file when one was given.
class Output {
   public:
    explicit Output(const std::string &path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw UsageError("cannot open output file '" + path + "'");
            }
        }
    }
    std::ostream &stream() {
        return file_ ? *file_ : std::cout;
    }

   private:
    std::unique_ptr<std::ofstream> file_;
};

struct RunOptions {
    size_t n = 0;
    uint64_t trials = 1;
    uint64_t seed = 0;
    std::string format = "jsonl";
    double depth_factor = 10.0;
    std::string out;
};

void add_run_options(CLI::App *cmd, RunOptions &o) {
    cmd->add_option("--trials", o.trials, "Number of trials")->check(CLI::Range(uint64_t{1}, uint64_t{1} << 40));
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--format", o.format, "Record format")->check(CLI::IsMember({"jsonl", "csv"}));
    cmd->add_option("--perm-depth-factor", o.depth_factor, "Random circuit gates per n*log2(n+1)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", o.out, "Write records to this file instead of stdout");
}

int emit_records(const RunOptions &o, const std::vector<qsl::ExperimentRecord> &records) {
    Output out(o.out);
    auto &os = out.stream();
    if (o.format == "csv") {
        os << qsl::ExperimentRecord::csv_header() << '\n';
    }
    bool all_correct = true;
    for (const auto &r : records) {
        if (o.format == "csv") {
            os << r.csv_row() << '\n';
        } else {
            os << r.to_json().dump() << '\n';
        }
        // The randomized baseline has a known error rate; its misses are data.
        if (r.algorithm != qsl::Algorithm::classical_dj_randomized) {
            all_correct = all_correct && r.correct.value_or(true);
        }
    }
    os.flush();
    if (!all_correct) {
        std::cerr << "error: at least one trial produced an incorrect result\n";
        return EXIT_VERIFY;
    }
    return 0;
}

int cmd_dj(const RunOptions &o, const std::string &kind, const std::string &method, size_t k) {
    qsl::TrialConfig cfg;
    cfg.n = o.n;
    cfg.seed = o.seed;
    cfg.depth_factor = o.depth_factor;
    cfg.classical_k = k;
    if (kind == "constant0") {
        cfg.dj_kind = qsl::DjKind::constant_zero;
    } else if (kind == "constant1") {
        cfg.dj_kind = qsl::DjKind::constant_one;
    } else if (kind == "balanced") {
        cfg.dj_kind = qsl::DjKind::balanced;
    }
    if (method == "qsl") {
        cfg.algorithm = qsl::Algorithm::dj;
    } else if (method == "classical-det") {
        cfg.algorithm = qsl::Algorithm::classical_dj_deterministic;
        if (o.n > qsl::CLASSICAL_DJ_MAX_N) {
            throw UsageError("--method classical-det supports n <= " + std::to_string(qsl::CLASSICAL_DJ_MAX_N));
        }
    } else {
        cfg.algorithm = qsl::Algorithm::classical_dj_randomized;
    }
    return emit_records(o, qsl::run_trials(cfg, o.trials, thread_count()));
}

int cmd_simon(const RunOptions &o, const std::string &mode, const std::string &kind, uint64_t max_iters) {
    qsl::TrialConfig cfg;
    cfg.n = o.n;
    cfg.seed = o.seed;
    cfg.depth_factor = o.depth_factor;
    cfg.algorithm = mode == "det" ? qsl::Algorithm::simon_deterministic : qsl::Algorithm::simon_probabilistic;
    cfg.secret_policy = kind == "zero"      ? qsl::SecretPolicy::zero
                        : kind == "nonzero" ? qsl::SecretPolicy::nonzero
                                            : qsl::SecretPolicy::either;
    cfg.max_iters = max_iters;
    if (max_iters != 0 && max_iters < o.n) {
        throw UsageError("--max-iters must be at least n");
    }
    return emit_records(o, qsl::run_trials(cfg, o.trials, thread_count()));
}

/// Oracle specs from a file: JSON-lines of specs or records, or a single
/// JSON value (object or array).
std::vector<nlohmann::json> read_specs(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open spec file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::vector<nlohmann::json> docs;
    auto whole = nlohmann::json::parse(text, nullptr, false);
    if (!whole.is_discarded()) {
        if (whole.is_array()) {
            docs.assign(whole.begin(), whole.end());
        } else {
            docs.push_back(whole);
        }
    } else {
        std::istringstream lines(text);
        std::string line;
        size_t lineno = 0;
        while (std::getline(lines, line)) {
            lineno++;
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            auto j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded()) {
                throw qsl::SpecParseError(path + ":" + std::to_string(lineno) + ": invalid JSON");
            }
            docs.push_back(std::move(j));
        }
    }
    std::vector<nlohmann::json> specs;
    for (auto &d : docs) {
        if (!d.is_object()) {
            throw qsl::SpecParseError(path + ": expected JSON objects");
        }
        specs.push_back(d.contains("oracle_spec") ? d["oracle_spec"] : d);
    }
    if (specs.empty()) {
        throw qsl::SpecParseError(path + ": no oracle specs found");
    }
    return specs;
}

int cmd_verify(size_t max_n, uint64_t samples, uint64_t seed, size_t perms, double max_tvd, double alpha,
               const std::string &spec_file) {
    qsl::AgreementReport report;
    if (spec_file.empty()) {
        report = qsl::run_agreement_suite(max_n, samples, seed, perms, {max_tvd, alpha});
    } else {
        auto specs = read_specs(spec_file);
        qsl::RngStream rng(seed, 0);
        double per_case_alpha = alpha / double(specs.size());
        for (const auto &j : specs) {
            auto type = j.value("type", std::string());
            if (type == "dj") {
                auto spec = qsl::dj_spec_from_json(j);
                if (spec.n > qsl::DJ_REFERENCE_MAX_N) {
                    throw UsageError("DJ spec n exceeds the reference cap of " +
                                     std::to_string(qsl::DJ_REFERENCE_MAX_N));
                }
                auto c = qsl::check_dj_agreement(spec, rng);
                c.perm_label = "file";
                report.dj.push_back(c);
            } else if (type == "simon") {
                auto spec = qsl::simon_spec_from_json(j);
                if (spec.n > qsl::SIMON_REFERENCE_MAX_N) {
                    throw UsageError("Simon spec n exceeds the reference cap of " +
                                     std::to_string(qsl::SIMON_REFERENCE_MAX_N));
                }
                auto c = qsl::check_simon_agreement(spec, samples, rng, max_tvd, per_case_alpha);
                c.perm_label = "file";
                report.simon.push_back(c);
            } else {
                throw qsl::SpecParseError("spec has unknown type '" + type + "'");
            }
        }
    }
    size_t failures = 0;
    for (const auto &c : report.simon) {
        if (!c.passed) {
            failures++;
            std::cerr << "FAIL simon n=" << c.n << " s=" << c.secret << " perm=" << c.perm_label
                      << " tvd=" << c.comparison.tvd << " chi2_p=" << c.comparison.chi2_p
                      << " support_equal=" << c.support_equal << '\n';
        }
    }
    for (const auto &c : report.dj) {
        if (!c.passed) {
            failures++;
            std::cerr << "FAIL dj n=" << c.n << " kind=" << c.kind << " perm=" << c.perm_label
                      << " quantum_p_zero=" << c.quantum_p_zero << " qsl_verdict=" << c.qsl_verdict << '\n';
        }
    }
    double worst_tvd = 0;
    for (const auto &c : report.simon) {
        worst_tvd = std::max(worst_tvd, c.comparison.tvd);
    }
    std::cout << "simon cases: " << report.simon.size() << ", dj cases: " << report.dj.size()
              << ", worst tvd: " << worst_tvd << ", failures: " << failures << '\n';
    return failures ? EXIT_VERIFY : 0;
}

std::vector<size_t> parse_n_list(const std::string &text) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            long long v = std::stoll(item, &pos);
            if (pos != item.size() || v < 1) {
                throw std::invalid_argument(item);
            }
            out.push_back(size_t(v));
        } catch (const std::exception &) {
            throw UsageError("--n-list expects comma-separated positive integers, got '" + text + "'");
        }
    }
    if (out.empty()) {
        throw UsageError("--n-list is empty");
    }
    return out;
}

int cmd_bench(const std::string &algorithm, const std::string &n_list, uint64_t reps, uint64_t seed,
              double depth_factor, double budget_s, const std::string &out_path) {
    using clock = std::chrono::steady_clock;
    auto ns = parse_n_list(n_list);
    if (algorithm != "dj") {
        for (auto n : ns) {
            if (n < 2) {
                throw UsageError("Simon benchmarks need n >= 2");
            }
        }
    }
    Output out(out_path);
    auto &os = out.stream();
    os << "algorithm,n,rep,build_ms,run_ms,solve_ms,total_ms,queries,correct\n";
    bool over_budget = false;
    bool all_correct = true;
    for (auto n : ns) {
        for (uint64_t rep = 0; rep < reps; rep++) {
            qsl::RngStream spec_rng(seed, qsl::TrialStreams::spec(rep));
            qsl::RngStream oracle_rng(seed, qsl::TrialStreams::oracle(rep));
            qsl::RngStream rng(seed, qsl::TrialStreams::solver(rep));
            double build_ms, run_ms, solve_ms;
            uint64_t queries;
            bool correct;
            auto t0 = clock::now();
            if (algorithm == "dj") {
                auto spec = qsl::random_dj_spec(n, spec_rng, qsl::DjKind::balanced, depth_factor);
                qsl::DjOracle oracle(spec);
                auto t1 = clock::now();
                auto r = qsl::deutsch_jozsa(oracle, n, rng);
                auto t2 = clock::now();
                correct = (r.verdict == qsl::DjVerdict::constant) == spec.is_constant();
                auto t3 = clock::now();
                build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                run_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
                solve_ms = std::chrono::duration<double, std::milli>(t3 - t2).count();
                queries = r.queries;
            } else {
                auto spec = qsl::random_simon_spec(n, spec_rng, qsl::SecretPolicy::nonzero, depth_factor);
                qsl::SimonOracle oracle(spec, oracle_rng);
                auto t1 = clock::now();
                auto rows = algorithm == "simon-det"
                                ? qsl::collect_deterministic_rows(oracle, n, rng)
                                : qsl::collect_probabilistic_rows(oracle, n, rng, qsl::default_max_iters(n));
                auto t2 = clock::now();
                auto s = qsl::resolve_secret(oracle, rows, rng);
                auto t3 = clock::now();
                correct = s == spec.secret;
                build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                run_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
                solve_ms = std::chrono::duration<double, std::milli>(t3 - t2).count();
                queries = oracle.query_count();
            }
            double total = build_ms + run_ms + solve_ms;
            over_budget = over_budget || total > budget_s * 1000.0;
            all_correct = all_correct && correct;
            os << algorithm << ',' << n << ',' << rep << ',' << std::fixed << std::setprecision(3) << build_ms
               << ',' << run_ms << ',' << solve_ms << ',' << total << std::defaultfloat << ',' << queries << ','
               << (correct ? "true" : "false") << '\n';
        }
    }
    os.flush();
    if (over_budget) {
        std::cerr << "error: a run exceeded the time budget of " << budget_s << " s\n";
    }
    if (!all_correct) {
        std::cerr << "error: a run produced an incorrect result\n";
    }
    return over_budget || !all_correct ? EXIT_VERIFY : 0;
}

int cmd_replay(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open record file '" + path + "'");
    }
    std::string line;
    size_t lineno = 0;
    size_t mismatches = 0;
    size_t count = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            throw qsl::SpecParseError(path + ":" + std::to_string(lineno) + ": invalid JSON");
        }
        auto original = qsl::ExperimentRecord::from_json(j);
        auto again = qsl::replay(original);
        count++;
        if (!qsl::same_outcome(original, again)) {
            mismatches++;
            std::cerr << "MISMATCH line " << lineno << ": recorded " << original.verdict << "/" << original.secret
                      << "/" << original.queries << ", replayed " << again.verdict << "/" << again.secret << "/"
                      << again.queries << '\n';
        }
    }
    std::cout << "replayed " << count << " records, " << mismatches << " mismatches\n";
    return mismatches ? EXIT_VERIFY : 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum Simulation Logic experiment runner"};
    app.require_subcommand(1);

    RunOptions dj_opts;
    std::string dj_kind;
    std::string dj_method = "qsl";
    size_t dj_k = 10;
    auto *dj = app.add_subcommand("dj", "Deutsch-Jozsa trials");
    dj->add_option("--n", dj_opts.n, "Query register width")->required()->check(CLI::Range(size_t{1}, size_t{1} << 26));
    add_run_options(dj, dj_opts);
    dj->add_option("--kind", dj_kind, "Fix the oracle kind (default: random per trial)")
        ->check(CLI::IsMember({"constant0", "constant1", "balanced"}));
    dj->add_option("--method", dj_method, "Solver")->check(CLI::IsMember({"qsl", "classical-det", "classical-rand"}));
    dj->add_option("--k", dj_k, "Queries for classical-rand")->check(CLI::Range(size_t{2}, size_t{1} << 30));

    RunOptions simon_opts;
    std::string simon_mode = "det";
    std::string simon_kind = "either";
    uint64_t max_iters = 0;
    auto *simon = app.add_subcommand("simon", "Simon trials");
    simon->add_option("--n", simon_opts.n, "Register width")->required()->check(CLI::Range(size_t{2}, size_t{1} << 20));
    add_run_options(simon, simon_opts);
    simon->add_option("--mode", simon_mode, "det (basis sweep) or prob (random sampling)")
        ->check(CLI::IsMember({"det", "prob"}));
    simon->add_option("--kind", simon_kind, "Secret: zero, nonzero or either (fair coin)")
        ->check(CLI::IsMember({"zero", "nonzero", "either"}));
    simon->add_option("--max-iters", max_iters, "Sampling cap for prob mode (default 4(n+1))");

    size_t max_n = 4;
    uint64_t samples = 50000;
    uint64_t verify_seed = 0;
    size_t perms = 5;
    double max_tvd = 0.02;
    double alpha = 1e-3;
    std::string spec_file;
    auto *verify = app.add_subcommand("verify", "QSL vs statevector agreement suite");
    verify->add_option("--max-n", max_n, "Largest width checked")->check(CLI::Range(size_t{1}, qsl::SIMON_REFERENCE_MAX_N));
    verify->add_option("--samples", samples, "Samples per Simon case")->check(CLI::Range(uint64_t{1}, uint64_t{1} << 32));
    verify->add_option("--seed", verify_seed, "Seed");
    verify->add_option("--perms", perms, "Random permutations per secret");
    verify->add_option("--max-tvd", max_tvd, "Total-variation threshold");
    verify->add_option("--alpha", alpha, "Family-wise chi-square significance");
    verify->add_option("--spec-file", spec_file, "Check these oracle specs instead of the built-in sweep");

    std::string bench_alg = "dj";
    std::string n_list = "1000,10000,100000";
    uint64_t reps = 1;
    uint64_t bench_seed = 0;
    double bench_depth = 10.0;
    double budget_s = 30.0;
    std::string bench_out;
    auto *bench = app.add_subcommand("bench", "Timing per phase, as CSV");
    bench->add_option("--algorithm", bench_alg, "Workload")->check(CLI::IsMember({"dj", "simon-det", "simon-prob"}));
    bench->add_option("--n-list", n_list, "Comma-separated widths");
    bench->add_option("--reps", reps, "Repetitions per width");
    bench->add_option("--seed", bench_seed, "Seed");
    bench->add_option("--perm-depth-factor", bench_depth, "Random circuit gates per n*log2(n+1)")
        ->check(CLI::NonNegativeNumber);
    bench->add_option("--budget-s", budget_s, "Per-run time budget in seconds")->check(CLI::PositiveNumber);
    bench->add_option("--out", bench_out, "Write CSV to this file instead of stdout");

    std::string replay_in;
    auto *replay = app.add_subcommand("replay", "Re-run JSON-lines records and compare outcomes");
    replay->add_option("--in", replay_in, "Record file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return EXIT_USAGE;
    }

    try {
        if (*dj) {
            return cmd_dj(dj_opts, dj_kind, dj_method, dj_k);
        }
        if (*simon) {
            return cmd_simon(simon_opts, simon_mode, simon_kind, max_iters);
        }
        if (*verify) {
            return cmd_verify(max_n, samples, verify_seed, perms, max_tvd, alpha, spec_file);
        }
        if (*bench) {
            return cmd_bench(bench_alg, n_list, reps, bench_seed, bench_depth, budget_s, bench_out);
        }
        if (*replay) {
            return cmd_replay(replay_in);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_USAGE;
    } catch (const qsl::SpecParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}
