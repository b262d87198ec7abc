// Copyright 2026 The qcaclone Authors
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

#include "qcaclone/optimizer.h"

#include <algorithm>
#include <atomic>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <thread>

#include "qcaclone/evaluator.h"
#include "qcaclone/nelder_mead.h"

namespace qcaclone {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kInitialStep = 0.4;

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits; avoids the implementation-defined
// std::uniform_real_distribution so start points match across standard libraries.
double unit_uniform(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> upcc_angles() {
    return {std::numbers::pi / 4, 0.0, 0.0, 0.0};
}

// Restart r starts at fixed_starts[r] when given, otherwise at a uniform
// random point of [0, 2pi)^dim drawn from its own derived seed.
template <typename Objective>
OptimizationReport multistart(Objective &&fidelity, size_t dim, const OptConfig &cfg, uint64_t partition_index,
                              const std::vector<std::vector<double>> &fixed_starts) {
    OptimizationReport report;
    bool have_best = false;
    SimplexResult best;
    for (int r = 0; r < cfg.multistarts; r++) {
        std::vector<double> x0;
        if (static_cast<size_t>(r) < fixed_starts.size()) {
            x0 = fixed_starts[static_cast<size_t>(r)];
        } else {
            std::mt19937_64 rng(derive_seed(cfg.seed, partition_index, static_cast<uint64_t>(r)));
            x0.resize(dim);
            for (auto &v : x0) {
                v = kTwoPi * unit_uniform(rng);
            }
        }
        SimplexResult res = nelder_mead([&](const std::vector<double> &x) { return -fidelity(x); }, std::move(x0),
                                        kInitialStep, cfg.max_iterations, cfg.simplex_tolerance);
        report.evaluations += res.evaluations;
        if (!res.converged) {
            report.unconverged_restarts++;
        }
        if (!have_best || res.value < best.value) {
            best = std::move(res);
            have_best = true;
        }
    }
    report.best_params = best.x;
    report.best_fidelity = -best.value;
    report.converged = best.converged;
    return report;
}

GateUnitary gate_at(std::span<const double> x, size_t offset) {
    return unitary_from_params(x[offset], x[offset + 1], x[offset + 2], x[offset + 3]);
}

}  // namespace

void OptConfig::validate() const {
    if (multistarts < 1) {
        throw std::invalid_argument("multistarts must be >= 1");
    }
    if (max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }
    if (!(simplex_tolerance > 0)) {
        throw std::invalid_argument("simplex_tolerance must be > 0");
    }
    if (jobs < 0) {
        throw std::invalid_argument("jobs must be >= 0");
    }
}

uint64_t derive_seed(uint64_t seed, uint64_t partition_index, uint64_t restart_index) {
    return splitmix64(splitmix64(splitmix64(seed) ^ partition_index) ^ restart_index);
}

OptimizationReport optimize_gate(const Partition &p, const OptConfig &cfg, CloneSet clone_set,
                                 uint64_t partition_index) {
    cfg.validate();
    FoliationCircuit circuit(foliation_from_partition(p), clone_set);
    auto objective = [&](const std::vector<double> &x) { return circuit.average_fidelity(gate_at(x, 0)); };
    OptimizationReport report = multistart(objective, 4, cfg, partition_index, {upcc_angles()});
    report.best_gate = gate_at(report.best_params, 0);
    report.partition = p;
    return report;
}

OptimizationReport optimize_rest_frame(int layers, const OptConfig &cfg) {
    Partition p = rest_frame_partition(layers);
    OptimizationReport report = optimize_gate(p, cfg);
    report.upcc_fidelity = foliation_fidelity(p, upcc_gate());
    return report;
}

OptimizationReport optimize_over_foliations(int total, const OptConfig &cfg, CloneSet clone_set) {
    cfg.validate();
    std::vector<Partition> all = partitions(total);
    std::vector<OptimizationReport> results(all.size());

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < all.size(); i = next++) {
            results[i] = optimize_gate(all[i], cfg, clone_set, i);
        }
    };
    int jobs = cfg.jobs == 0 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency())) : cfg.jobs;
    jobs = std::min<int>(jobs, static_cast<int>(all.size()));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < jobs; t++) {
            pool.emplace_back(worker);
        }
    }

    OptimizationReport report;
    double top = results.front().best_fidelity;
    for (size_t i = 0; i < all.size(); i++) {
        const auto &r = results[i];
        report.evaluations += r.evaluations;
        report.unconverged_restarts += r.unconverged_restarts;
        top = std::max(top, r.best_fidelity);
        PartitionResult pr;
        pr.partition = all[i];
        pr.fidelity = r.best_fidelity;
        std::copy_n(r.best_params.begin(), 4, pr.params.begin());
        pr.converged = r.converged;
        report.per_partition.push_back(std::move(pr));
    }
    // partitions() is in descending lexicographic order, so the first tie wins.
    size_t best = all.size();
    for (size_t i = 0; i < all.size(); i++) {
        if (results[i].best_fidelity >= top - kTieTolerance) {
            if (best == all.size()) {
                best = i;
            }
            report.ties.push_back(all[i]);
        }
    }

    const auto &w = results[best];
    report.best_params = w.best_params;
    report.best_gate = w.best_gate;
    report.best_fidelity = w.best_fidelity;
    report.partition = all[best];
    report.converged = w.converged;
    return report;
}

OptimizationReport optimize_two_gate(int layers, const OptConfig &cfg, bool b_on_odd) {
    if (layers < 2) {
        throw std::invalid_argument("two-gate search needs at least two layers");
    }
    cfg.validate();
    OptimizationReport single = optimize_rest_frame(layers, cfg);

    FoliationCircuit circuit(rest_frame_gates(layers), CloneSet::Touched);
    auto objective = [&](const std::vector<double> &x) {
        GateUnitary a = gate_at(x, 0);
        GateUnitary b = gate_at(x, 4);
        return b_on_odd ? circuit.average_fidelity(b, a) : circuit.average_fidelity(a, b);
    };
    const std::vector<double> upcc = upcc_angles();
    std::vector<double> both_upcc = upcc;
    both_upcc.insert(both_upcc.end(), upcc.begin(), upcc.end());
    std::vector<double> both_single = single.best_params;
    both_single.insert(both_single.end(), single.best_params.begin(), single.best_params.end());

    // Stream index 1 keeps these starts apart from the single-gate search.
    OptimizationReport report = multistart(objective, 8, cfg, 1, {both_upcc, both_single});
    report.evaluations += single.evaluations;
    report.best_gate = gate_at(report.best_params, 0);
    report.best_gate_b = gate_at(report.best_params, 4);
    report.partition = rest_frame_partition(layers);
    report.single_gate_fidelity = single.best_fidelity;
    report.upcc_fidelity = single.upcc_fidelity;
    return report;
}

}  // namespace qcaclone
