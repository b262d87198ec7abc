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

#ifndef QCACLONE_OPTIMIZER_H
#define QCACLONE_OPTIMIZER_H

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcaclone/cone_geometry.h"
#include "qcaclone/sector_sim.h"

namespace qcaclone {

struct OptConfig {
    int multistarts = 64;
    int max_iterations = 2000;
    /// Convergence threshold on the spread of objective values over the simplex.
    double simplex_tolerance = 1e-10;
    uint64_t seed = 0;
    /// Worker threads for per-partition sweeps. 0 picks the hardware concurrency.
    int jobs = 1;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

struct PartitionResult {
    Partition partition;
    double fidelity = 0;
    std::array<double, 4> params{};
    bool converged = false;
};

struct OptimizationReport {
    /// Four angles, or eight for the two-gate search (A first, then B).
    std::vector<double> best_params;
    GateUnitary best_gate;
    /// Second gate of the two-gate search.
    std::optional<GateUnitary> best_gate_b;
    double best_fidelity = 0;
    std::optional<Partition> partition;
    long evaluations = 0;
    /// Whether the restart that produced the optimum met the simplex tolerance.
    bool converged = false;
    int unconverged_restarts = 0;
    /// Filled by optimize_over_foliations, in partitions() order.
    std::vector<PartitionResult> per_partition;
    /// Partitions whose optimum is within kTieTolerance of the best.
    std::vector<Partition> ties;
    /// Rest frame with upcc_gate(), for comparison.
    std::optional<double> upcc_fidelity;
    /// Single-gate optimum reported next to the two-gate search.
    std::optional<double> single_gate_fidelity;
};

inline constexpr double kTieTolerance = 1e-6;

/// Per-restart seed for stream (seed, partition_index, restart_index).
uint64_t derive_seed(uint64_t seed, uint64_t partition_index, uint64_t restart_index);

/// The first restart starts at the upcc_gate() angles; the rest start uniformly in [0, 2pi)^4.
OptimizationReport optimize_gate(const Partition &p, const OptConfig &cfg, CloneSet clone_set = CloneSet::Touched,
                                 uint64_t partition_index = 0);

OptimizationReport optimize_rest_frame(int layers, const OptConfig &cfg);

/// Optimizes every partition of `total` and keeps the best. Ties within
/// kTieTolerance go to the lexicographically largest partition.
OptimizationReport optimize_over_foliations(int total, const OptConfig &cfg, CloneSet clone_set = CloneSet::Touched);

/// Eight-parameter search over (A, B) on the rest frame with A on odd layers.
/// When `b_on_odd` is set the roles swap (B on odd layers).
OptimizationReport optimize_two_gate(int layers, const OptConfig &cfg, bool b_on_odd = false);

}  // namespace qcaclone

#endif
