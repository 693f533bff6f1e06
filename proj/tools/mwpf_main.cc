// Copyright 2026 The MWPF Authors
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


// mwpf: decode, brute-force, verify, generate and benchmark parity-factor
// problems stored as JSON files.

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "mwpf/decoder.h"
#include "mwpf/errors.h"
#include "mwpf/gf2.h"
#include "mwpf/io.h"
#include "mwpf/sampler.h"

namespace {

using namespace mwpf;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kSolve = 3, kVerify = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
}

std::optional<size_t> parse_c(const std::string &text) {
    if (text == "inf" || text == "infinity") {
        return std::nullopt;
    }
    size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos == 0 || pos != text.size()) {
        throw UsageError("--c expects a non-negative integer or 'inf', got '" + text + "'");
    }
    return (size_t)v;
}

std::string c_label(const std::optional<size_t> &c) {
    return c ? std::to_string(*c) : "inf";
}

std::vector<FinderKind> parse_finders(const std::vector<std::string> &names) {
    std::vector<FinderKind> out;
    for (const auto &n : names) {
        try {
            out.push_back(parse_finder_kind(n));
        } catch (const std::invalid_argument &ex) {
            throw UsageError(ex.what());
        }
    }
    return out;
}

Weight parse_rate(const std::string &text) {
    Weight p;
    try {
        p = Weight::parse(text);
    } catch (const std::invalid_argument &ex) {
        throw UsageError(std::string("--p: ") + ex.what());
    }
    if (p.is_negative() || p > Weight(1)) {
        throw UsageError("--p must lie in [0, 1]");
    }
    return p;
}

struct SyndromeArgs {
    std::string list;
    std::string file;

    void attach(CLI::App *cmd) {
        auto *a = cmd->add_option("--syndrome", list, "Defect vertices, e.g. v3,v5");
        auto *b = cmd->add_option("--syndrome-file", file, "File holding a defect list");
        a->excludes(b);
    }

    Syndrome resolve(const Problem &problem) const {
        Syndrome s;
        if (!list.empty()) {
            s = parse_syndrome_list(list);
        } else if (!file.empty()) {
            s = parse_syndrome_list(read_file(file));
        } else if (problem.syndrome) {
            s = *problem.syndrome;
        } else {
            throw UsageError("no syndrome: pass --syndrome, --syndrome-file or embed one in the problem");
        }
        try {
            validate_syndrome(problem.graph, s);
        } catch (const std::invalid_argument &ex) {
            throw ParseError(std::string("syndrome: ") + ex.what());
        }
        return s;
    }
};

size_t default_threads() {
    if (const char *env = std::getenv("MWPF_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) {
                return (size_t)v;
            }
        } catch (const std::exception &) {
        }
        throw UsageError("MWPF_THREADS must be a positive integer");
    }
    return std::max<size_t>(1, std::thread::hardware_concurrency());
}

struct ShotResult {
    double seconds = 0;
    bool certified = false;
    Weight gap;
    std::optional<bool> optimal;
};

int run_bench(const Problem &problem, const Weight &p, size_t shots, uint64_t seed,
              const std::vector<std::optional<size_t>> &cs, const std::vector<FinderKind> &finders, size_t oracle_cap,
              size_t threads) {
    const auto &g = problem.graph;
    std::vector<Shot> samples = sample_syndromes(g, p, shots, seed);

    // Oracle weights are shared across all c values.
    std::vector<std::optional<Weight>> oracle(shots);
    auto parallel_for = [&](auto &&body) {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (size_t t = 0; t < std::min(threads, std::max<size_t>(shots, 1)); t++) {
            pool.emplace_back([&] {
                for (size_t s = next++; s < shots; s = next++) {
                    body(s);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    };
    parallel_for([&](size_t s) {
        try {
            oracle[s] = brute_force_mwpf(g, samples[s].syndrome, oracle_cap).weight;
        } catch (const EnumerationOverflow &) {
        }
    });

    std::printf("# shots=%zu p=%s seed=%llu threads=%zu\n", shots, p.str().c_str(), (unsigned long long)seed, threads);
    std::printf("%-6s %14s %12s %12s %14s\n", "c", "avg_time_us", "optimal", "certified", "avg_gap");
    for (const auto &c : cs) {
        DecoderConfig cfg;
        cfg.cluster_limit = c;
        cfg.finders = finders;
        std::vector<ShotResult> results(shots);
        parallel_for([&](size_t s) {
            auto t0 = std::chrono::steady_clock::now();
            Certificate cert = decode(g, samples[s].syndrome, cfg);
            auto t1 = std::chrono::steady_clock::now();
            ShotResult &r = results[s];
            r.seconds = std::chrono::duration<double>(t1 - t0).count();
            r.certified = cert.certified;
            r.gap = cert.gap;
            if (oracle[s]) {
                r.optimal = cert.primal_weight == *oracle[s];
            }
        });
        double time = 0;
        size_t certified = 0, compared = 0, optimal = 0;
        Weight gap;
        for (const auto &r : results) {
            time += r.seconds;
            certified += r.certified;
            gap += r.gap;
            if (r.optimal) {
                compared++;
                optimal += *r.optimal;
            }
        }
        double n = std::max<double>((double)shots, 1);
        std::string optimal_text = compared ? std::to_string((double)optimal / (double)compared) : "n/a";
        std::printf("%-6s %14.3f %12s %12.6f %14.6f\n", c_label(c).c_str(), time / n * 1e6, optimal_text.c_str(),
                    (double)certified / n, (gap / Weight((long)std::max<size_t>(shots, 1))).to_double());
    }
    return kOk;
}

int dispatch(int argc, char **argv) {
    CLI::App app{"Certifying minimum-weight parity factor decoder"};
    app.require_subcommand(1);

    std::string problem_path, out_path, c_text = "inf";
    std::vector<std::string> finder_names{"single-hair"};
    SyndromeArgs syndrome_args;

    auto *decode_cmd = app.add_subcommand("decode", "Decode a syndrome and emit a certificate");
    decode_cmd->add_option("problem", problem_path, "Problem file")->required();
    syndrome_args.attach(decode_cmd);
    decode_cmd->add_option("--c", c_text, "Cluster hyperblossom limit, or inf");
    decode_cmd->add_option("--finders", finder_names, "Relaxer finders")->delimiter(',');
    decode_cmd->add_option("--out", out_path, "Certificate output file");

    size_t cap = 24;
    SyndromeArgs oracle_syndrome;
    auto *oracle_cmd = app.add_subcommand("oracle", "Exact minimum-weight parity factor by enumeration");
    oracle_cmd->add_option("problem", problem_path, "Problem file")->required();
    oracle_syndrome.attach(oracle_cmd);
    oracle_cmd->add_option("--cap", cap, "Largest nullity to enumerate");

    std::string cert_path;
    auto *verify_cmd = app.add_subcommand("verify", "Check a certificate against a problem");
    verify_cmd->add_option("problem", problem_path, "Problem file")->required();
    verify_cmd->add_option("certificate", cert_path, "Certificate file")->required();

    std::string kind_name, p_text;
    size_t distance = 0;
    auto *gen_cmd = app.add_subcommand("gen", "Generate a code-capacity problem");
    gen_cmd->add_option("kind", kind_name, "repetition, surface-bitflip or surface-biased-y")->required();
    gen_cmd->add_option("--d", distance, "Code distance")->required();
    gen_cmd->add_option("--p", p_text, "Error rate setting log-likelihood weights");
    gen_cmd->add_option("--out", out_path, "Problem output file");

    size_t shots = 1000, threads = 0;
    uint64_t seed = 0;
    std::vector<std::string> c_list{"0", "inf"};
    auto *bench_cmd = app.add_subcommand("bench", "Sample syndromes and tabulate decoder quality");
    bench_cmd->add_option("problem", problem_path, "Problem file")->required();
    bench_cmd->add_option("--p", p_text, "Error rate for sampling")->required();
    bench_cmd->add_option("--shots", shots, "Number of shots");
    bench_cmd->add_option("--seed", seed, "Sampler seed");
    bench_cmd->add_option("--c", c_list, "Cluster limits to compare")->delimiter(',');
    bench_cmd->add_option("--finders", finder_names, "Relaxer finders")->delimiter(',');
    bench_cmd->add_option("--cap", cap, "Largest nullity the oracle enumerates");
    bench_cmd->add_option("--threads", threads, "Worker threads (default from MWPF_THREADS)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (*decode_cmd) {
        Problem problem = parse_problem(read_file(problem_path));
        Syndrome syn = syndrome_args.resolve(problem);
        DecoderConfig cfg;
        cfg.cluster_limit = parse_c(c_text);
        cfg.finders = parse_finders(finder_names);
        Certificate cert = decode(problem.graph, syn, cfg);
        write_output(out_path, serialize_certificate(cert, syn));
        if (!out_path.empty() && out_path != "-") {
            std::printf("certified=%s weight=%s dual=%s gap=%s\n", cert.certified ? "true" : "false",
                        cert.primal_weight.str().c_str(), cert.dual_objective.str().c_str(), cert.gap.str().c_str());
        }
        return kOk;
    }
    if (*oracle_cmd) {
        Problem problem = parse_problem(read_file(problem_path));
        Syndrome syn = oracle_syndrome.resolve(problem);
        MwpfResult r = brute_force_mwpf(problem.graph, syn, cap);
        nlohmann::json doc{{"pattern", r.pattern.edges}, {"weight", r.weight.str()}};
        std::cout << doc.dump(2) << "\n";
        return kOk;
    }
    if (*verify_cmd) {
        Problem problem = parse_problem(read_file(problem_path));
        Syndrome syn;
        Certificate cert = parse_certificate(read_file(cert_path), &syn);
        std::vector<std::string> failures;
        try {
            validate_syndrome(problem.graph, syn);
            VerificationReport report = verify_certificate(problem.graph, syn, cert);
            failures = report.failures;
        } catch (const std::exception &ex) {
            failures.push_back(ex.what());
        }
        if (problem.syndrome && *problem.syndrome != syn) {
            failures.push_back("certificate syndrome differs from the problem syndrome");
        }
        if (failures.empty()) {
            std::printf("PASS certified=%s weight=%s gap=%s\n", cert.certified ? "true" : "false",
                        cert.primal_weight.str().c_str(), cert.gap.str().c_str());
            return kOk;
        }
        for (const auto &f : failures) {
            std::printf("FAIL %s\n", f.c_str());
        }
        return kVerify;
    }
    if (*gen_cmd) {
        CodeKind kind;
        try {
            kind = parse_code_kind(kind_name);
        } catch (const std::invalid_argument &ex) {
            throw UsageError(ex.what());
        }
        WeightPolicy policy;
        if (!p_text.empty()) {
            policy.probability = parse_rate(p_text);
        }
        Problem problem;
        try {
            problem = generate_code(kind, distance, policy);
        } catch (const std::invalid_argument &ex) {
            throw UsageError(ex.what());
        }
        write_output(out_path, serialize_problem(problem));
        return kOk;
    }
    if (*bench_cmd) {
        Problem problem = parse_problem(read_file(problem_path));
        std::vector<std::optional<size_t>> cs;
        for (const auto &c : c_list) {
            cs.push_back(parse_c(c));
        }
        return run_bench(problem, parse_rate(p_text), shots, seed, cs, parse_finders(finder_names), cap,
                         threads ? threads : default_threads());
    }
    return kUsage;
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return dispatch(argc, argv);
    } catch (const UsageError &ex) {
        std::fprintf(stderr, "mwpf: %s\n", ex.what());
        return kUsage;
    } catch (const ParseError &ex) {
        std::fprintf(stderr, "mwpf: parse error: %s\n", ex.what());
        return kParse;
    } catch (const std::exception &ex) {
        std::fprintf(stderr, "mwpf: %s\n", ex.what());
        return kSolve;
    }
}
