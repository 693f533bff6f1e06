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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 only
// when every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "mwpf/decoder.h"
#include "mwpf/errors.h"
#include "mwpf/gf2.h"
#include "mwpf/io.h"
#include "mwpf/sampler.h"
#include "oracle.h"
#include "property_suites.h"

namespace mwpf {
namespace {

// Tolerances and budgets.
constexpr double kGoldenSeconds = 0.050;
constexpr double kSweepSeconds = 60.0;
constexpr double kNullitySeconds = 60.0;
constexpr double kPropertySeconds = 120.0;
constexpr double kSimpleGraphOptimalFraction = 0.99;
constexpr double kScalingExponent = 1.5;
constexpr size_t kPropertyCases = 100000;

constexpr size_t kSweepInstances = 1000;
constexpr size_t kNullityInstances = 500;
constexpr size_t kBiasedShots = 1000;
constexpr size_t kBitflipShots = 10000;
constexpr size_t kMonotoneShots = 1000;
constexpr size_t kScalingShots = 2000;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome golden_f1() {
    auto g = fixtures::f1_graph();
    auto start = Clock::now();
    Certificate cert = decode(g, fixtures::f1_syndrome());
    double t = since(start);
    Outcome o;
    o.pass = cert.pattern == ErrorPattern({0, 1, 2}) && cert.primal_weight == Weight(3) &&
             cert.dual_objective == Weight(3) && cert.gap == Weight(0) && cert.certified && t < kGoldenSeconds;
    std::ostringstream os;
    os << "weight=" << cert.primal_weight << " dual=" << cert.dual_objective << " gap=" << cert.gap
       << " certified=" << cert.certified << " time_ms=" << t * 1e3;
    o.detail = os.str();
    return o;
}

// |V| <= 8, |E| <= 10, edge degree <= 4, integer weights 1..10.
std::vector<oracle::Instance> sweep_instances() {
    std::mt19937_64 rng(20260101);
    std::vector<oracle::Instance> out;
    while (out.size() < kSweepInstances) {
        size_t n = std::uniform_int_distribution<size_t>(2, 8)(rng);
        size_t m = std::uniform_int_distribution<size_t>(1, 10)(rng);
        auto inst = oracle::random_instance(rng, n, m, 4, false, 10);
        out.push_back(std::move(inst));
    }
    return out;
}

Outcome oracle_sweep(const std::vector<oracle::Instance> &instances) {
    auto start = Clock::now();
    size_t invalid = 0, negative_gap = 0, mismatch = 0, certified = 0;
    for (const auto &inst : instances) {
        auto g = inst.graph();
        Syndrome syn(inst.syndrome);
        auto truth = oracle::min_parity_factor(inst);
        Certificate cert = decode(g, syn);
        if (defects_of(g, cert.pattern) != syn) {
            invalid++;
        }
        if (cert.gap.is_negative()) {
            negative_gap++;
        }
        if (cert.certified) {
            certified++;
            if (!truth || cert.primal_weight != Weight(truth->weight)) {
                mismatch++;
            }
        }
    }
    double t = since(start);
    Outcome o;
    o.pass = invalid == 0 && negative_gap == 0 && mismatch == 0 && t < kSweepSeconds;
    std::ostringstream os;
    os << "instances=" << instances.size() << " invalid=" << invalid << " negative_gap=" << negative_gap
       << " certified=" << certified << " certified_mismatch=" << mismatch << " time_s=" << t;
    o.detail = os.str();
    return o;
}

Outcome nullity_le1() {
    auto start = Clock::now();
    DecoderConfig cfg;
    cfg.finders = {FinderKind::nullity_le1, FinderKind::single_hair};
    size_t runs = 0, uncertified = 0, wrong = 0;

    std::mt19937_64 rng(77);
    for (size_t i = 0; i < kNullityInstances; i++) {
        size_t n = std::uniform_int_distribution<size_t>(2, 10)(rng);
        auto inst = oracle::random_nullity_le1_instance(rng, n, n + 4, 4, 10);
        auto g = inst.graph();
        Syndrome syn(inst.syndrome);
        auto truth = oracle::min_parity_factor(inst);
        Certificate cert = decode(g, syn, cfg);
        runs++;
        uncertified += !cert.certified;
        wrong += !truth || cert.primal_weight != Weight(truth->weight) || defects_of(g, cert.pattern) != syn;
    }
    WeightPolicy policy;
    policy.probability = Weight(1, 20);
    for (size_t d : {3, 5}) {
        Problem p = generate_code(CodeKind::surface_biased_y, d, policy);
        for (const auto &shot : sample_syndromes(p.graph, Weight(1, 20), kBiasedShots, 1000 + d)) {
            Certificate cert = decode(p.graph, shot.syndrome, cfg);
            MwpfResult truth = brute_force_mwpf(p.graph, shot.syndrome);
            runs++;
            uncertified += !cert.certified;
            wrong += cert.primal_weight != truth.weight || defects_of(p.graph, cert.pattern) != shot.syndrome;
        }
    }
    double t = since(start);
    Outcome o;
    o.pass = uncertified == 0 && wrong == 0 && t < kNullitySeconds;
    std::ostringstream os;
    os << "runs=" << runs << " uncertified=" << uncertified << " weight_mismatch=" << wrong << " time_s=" << t;
    o.detail = os.str();
    return o;
}

Outcome simple_graph_accuracy() {
    DecoderConfig cfg;
    cfg.cluster_limit = 200;
    WeightPolicy policy;
    policy.probability = Weight(1, 20);
    std::ostringstream os;
    bool pass = true;
    for (size_t d : {3, 5}) {
        Problem p = generate_code(CodeKind::surface_bitflip, d, policy);
        size_t optimal = 0, certified = 0, broken = 0;
        for (const auto &shot : sample_syndromes(p.graph, Weight(1, 20), kBitflipShots, 2000 + d)) {
            Certificate cert = decode(p.graph, shot.syndrome, cfg);
            MwpfResult truth = brute_force_mwpf(p.graph, shot.syndrome);
            optimal += cert.primal_weight == truth.weight;
            certified += cert.certified;
            bool parity = defects_of(p.graph, cert.pattern) == shot.syndrome;
            bool weak = !cert.gap.is_negative() && cert.dual_objective <= truth.weight;
            broken += !parity || !weak;
        }
        double frac = (double)optimal / kBitflipShots;
        pass = pass && frac >= kSimpleGraphOptimalFraction && broken == 0;
        os << "d=" << d << " optimal=" << frac << " certified=" << (double)certified / kBitflipShots
           << " invariant_failures=" << broken << " ";
    }
    return {pass, os.str()};
}

Outcome huf_degeneracy(const std::vector<oracle::Instance> &instances) {
    DecoderConfig cfg;
    cfg.cluster_limit = 0;
    size_t calls = 0, invalid = 0;
    for (const auto &inst : instances) {
        auto g = inst.graph();
        Syndrome syn(inst.syndrome);
        Certificate cert = decode(g, syn, cfg);
        calls += cert.stats.finder_calls;
        invalid += defects_of(g, cert.pattern) != syn;
    }
    std::ostringstream os;
    os << "instances=" << instances.size() << " finder_calls=" << calls << " invalid=" << invalid;
    return {calls == 0 && invalid == 0, os.str()};
}

Outcome c_monotonicity() {
    WeightPolicy policy;
    policy.probability = Weight(1, 20);
    Problem p = generate_code(CodeKind::surface_bitflip, 5, policy);
    auto shots = sample_syndromes(p.graph, Weight(1, 20), kMonotoneShots, 4242);
    const std::vector<size_t> limits{0, 15, 200};
    std::vector<Weight> total(limits.size());
    size_t violations = 0;
    for (const auto &shot : shots) {
        std::vector<Weight> gaps;
        for (size_t c : limits) {
            DecoderConfig cfg;
            cfg.cluster_limit = c;
            gaps.push_back(decode(p.graph, shot.syndrome, cfg).gap);
        }
        for (size_t i = 0; i < limits.size(); i++) {
            total[i] += gaps[i];
            if (i > 0 && gaps[i] > gaps[i - 1]) {
                violations++;
            }
        }
    }
    bool average_ok = true;
    std::ostringstream os;
    for (size_t i = 0; i < limits.size(); i++) {
        Weight avg = total[i] / Weight((long)shots.size());
        os << "c=" << limits[i] << " avg_gap=" << avg.to_double() << " ";
        if (i > 0 && total[i] > total[i - 1]) {
            average_ok = false;
        }
    }
    os << "per_shot_violations=" << violations;
    return {average_ok && violations == 0, os.str()};
}

Outcome property_suites() {
    auto start = Clock::now();
    auto suites = props::all_suites();
    size_t per_suite = (kPropertyCases + suites.size() - 1) / suites.size();
    size_t cases = 0, failures = 0;
    std::ostringstream os;
    for (const auto &s : suites) {
        auto r = s.run(7 + cases, per_suite);
        cases += r.cases;
        failures += r.failures;
        if (r.failures > 0) {
            os << "[" << r.name << ": " << r.first_failure << "] ";
        }
    }
    double t = since(start);
    os << "cases=" << cases << " failures=" << failures << " time_s=" << t;
    return {failures == 0 && cases >= kPropertyCases && t < kPropertySeconds, os.str()};
}

Outcome scaling() {
    WeightPolicy policy;
    policy.probability = Weight(1, 100);
    DecoderConfig cfg;
    cfg.cluster_limit = 50;
    std::vector<double> xs, ys;
    std::ostringstream os;
    for (size_t d : {5, 9, 13, 17}) {
        Problem p = generate_code(CodeKind::surface_bitflip, d, policy);
        auto shots = sample_syndromes(p.graph, Weight(1, 100), kScalingShots, 3000 + d);
        auto start = Clock::now();
        for (const auto &shot : shots) {
            decode(p.graph, shot.syndrome, cfg);
        }
        double avg = since(start) / (double)shots.size();
        xs.push_back(std::log((double)(d * d)));
        ys.push_back(std::log(avg));
        os << "d=" << d << " avg_us=" << avg * 1e6 << " ";
    }
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        mx += xs[i] / (double)xs.size();
        my += ys[i] / (double)ys.size();
    }
    double num = 0, den = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    double slope = num / den;
    os << "exponent=" << slope;
    return {slope <= kScalingExponent, os.str()};
}

}  // namespace
}  // namespace mwpf

int main() {
    using namespace mwpf;
    auto instances = sweep_instances();
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"golden-f1", golden_f1},
        {"oracle-sweep", [&] { return oracle_sweep(instances); }},
        {"nullity-le1-optimality", nullity_le1},
        {"simple-graph-accuracy", simple_graph_accuracy},
        {"huf-degeneracy", [&] { return huf_degeneracy(instances); }},
        {"c-monotonicity", c_monotonicity},
        {"property-suites", property_suites},
        {"scaling-smoke", scaling},
    };
    bool all = true;
    for (const auto &[name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception &ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        all = all && o.pass;
        std::printf("%s %s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
