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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qcaclone/evaluator.h"
#include "qcaclone/nelder_mead.h"

using namespace qcaclone;

namespace {

const double kOneToTwo = (1 + std::numbers::sqrt2 / 2) / 2;

OptConfig quick(int starts = 16) {
    OptConfig cfg;
    cfg.multistarts = starts;
    return cfg;
}

}  // namespace

TEST(nelder_mead, quadratic_bowl) {
    auto f = [](const std::vector<double> &x) {
        return (x[0] - 1) * (x[0] - 1) + 10 * (x[1] + 2) * (x[1] + 2) + 3;
    };
    SimplexResult r = nelder_mead(f, {5.0, 5.0}, 0.5, 5000, 1e-14);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.x[0], 1, 1e-5);
    EXPECT_NEAR(r.x[1], -2, 1e-5);
    EXPECT_NEAR(r.value, 3, 1e-12);
    EXPECT_EQ(r.value, f(r.x));
}

TEST(nelder_mead, rosenbrock) {
    auto f = [](const std::vector<double> &x) {
        return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
    };
    SimplexResult r = nelder_mead(f, {-1.2, 1.0}, 0.3, 20000, 1e-16);
    EXPECT_NEAR(r.x[0], 1, 1e-4);
    EXPECT_NEAR(r.x[1], 1, 1e-4);
}

TEST(nelder_mead, iteration_cap_reports_unconverged) {
    auto f = [](const std::vector<double> &x) { return x[0] * x[0] + x[1] * x[1]; };
    SimplexResult r = nelder_mead(f, {3.0, 4.0}, 0.1, 3, 1e-14);
    EXPECT_FALSE(r.converged);
    EXPECT_EQ(r.iterations, 3);
    EXPECT_LT(r.value, 25);
}

TEST(optimizer, config_validation) {
    OptConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.multistarts = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = OptConfig{};
    cfg.max_iterations = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = OptConfig{};
    cfg.simplex_tolerance = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    EXPECT_THROW(optimize_gate(Partition{{1}}, cfg), std::invalid_argument);
}

TEST(optimizer, derive_seed_streams) {
    EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
    EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 3, 2));
    EXPECT_NE(derive_seed(0, 0, 1), derive_seed(0, 1, 0));
    EXPECT_NE(derive_seed(0, 0, 0), derive_seed(1, 0, 0));
}

TEST(optimizer, vertex_gate_is_optimal_one_to_two) {
    OptimizationReport r = optimize_gate(Partition{{1}}, quick());
    EXPECT_NEAR(r.best_fidelity, kOneToTwo, 1e-9);
    ASSERT_TRUE(r.partition.has_value());
    EXPECT_EQ(r.partition->parts, std::vector<int>{1});
    EXPECT_GT(r.evaluations, 0);
}

TEST(optimizer, rest_frame_rows) {
    OptimizationReport two = optimize_gate(Partition{{2, 1}}, quick());
    EXPECT_NEAR(two.best_fidelity, 0.676, 0.005);
    EXPECT_GE(two.best_fidelity, 0.676 - 0.002);

    OptimizationReport three = optimize_gate(Partition{{3, 2, 1}}, quick());
    EXPECT_NEAR(three.best_fidelity, 0.617, 0.005);
    EXPECT_GE(three.best_fidelity, 0.617 - 0.002);
}

TEST(optimizer, report_is_reproducible_from_best_gate) {
    for (const auto &p : {Partition{{1}}, Partition{{2, 1}}, Partition{{3, 3}}, Partition{{4, 2, 1}}}) {
        OptimizationReport r = optimize_gate(p, quick(8));
        EXPECT_NEAR(r.best_fidelity, foliation_fidelity(p, r.best_gate), 1e-12);
        GateUnitary again = unitary_from_params(r.best_params[0], r.best_params[1], r.best_params[2], r.best_params[3]);
        EXPECT_NEAR(r.best_fidelity, foliation_fidelity(p, again), 1e-12);
    }
}

TEST(optimizer, optimize_rest_frame) {
    OptimizationReport one = optimize_rest_frame(1, quick());
    ASSERT_TRUE(one.upcc_fidelity.has_value());
    EXPECT_NEAR(one.best_fidelity, kOneToTwo, 1e-9);
    EXPECT_NEAR(*one.upcc_fidelity, kOneToTwo, 1e-15);

    OptimizationReport two = optimize_rest_frame(2, quick());
    EXPECT_NEAR(two.best_fidelity, 0.676, 0.005);
    EXPECT_GT(two.best_fidelity, *two.upcc_fidelity + 1e-3);

    for (int n = 1; n <= 12; n++) {
        OptimizationReport r = optimize_rest_frame(n, quick(4));
        EXPECT_GE(r.best_fidelity, *r.upcc_fidelity) << n;
        if (n >= 2) {
            EXPECT_LT(r.best_fidelity, 0.75) << n;
        }
    }
}

TEST(optimizer, deterministic_for_fixed_config) {
    OptConfig cfg = quick(6);
    cfg.seed = 42;
    OptimizationReport a = optimize_gate(Partition{{3, 3}}, cfg);
    OptimizationReport b = optimize_gate(Partition{{3, 3}}, cfg);
    EXPECT_EQ(a.best_params, b.best_params);
    EXPECT_EQ(a.best_fidelity, b.best_fidelity);
    EXPECT_EQ(a.evaluations, b.evaluations);

    OptConfig serial = quick(3);
    serial.jobs = 1;
    OptConfig threaded = serial;
    threaded.jobs = 3;
    OptimizationReport s = optimize_over_foliations(7, serial);
    OptimizationReport t = optimize_over_foliations(7, threaded);
    ASSERT_EQ(s.per_partition.size(), t.per_partition.size());
    for (size_t i = 0; i < s.per_partition.size(); i++) {
        EXPECT_EQ(s.per_partition[i].fidelity, t.per_partition[i].fidelity);
        EXPECT_EQ(s.per_partition[i].params, t.per_partition[i].params);
    }
    EXPECT_EQ(s.partition, t.partition);
    EXPECT_EQ(s.evaluations, t.evaluations);
}

TEST(optimizer, foliation_sweep_small_budgets) {
    OptimizationReport one = optimize_over_foliations(1, quick());
    EXPECT_EQ(one.partition->parts, std::vector<int>{1});
    EXPECT_NEAR(one.best_fidelity, kOneToTwo, 1e-9);

    // Both light-cone edges of the three-gate budget; the edge continuing
    // through the blank wire of the vertex gate wins.
    OptimizationReport three = optimize_over_foliations(3, quick());
    ASSERT_EQ(three.per_partition.size(), 3u);
    EXPECT_EQ(three.partition->parts, (std::vector<int>{1, 1, 1}));
    EXPECT_NEAR(three.per_partition[0].fidelity, 0.693, 0.002);  // {3}
    EXPECT_NEAR(three.per_partition[1].fidelity, 0.676, 0.002);  // {2,1}
    EXPECT_NEAR(three.best_fidelity, 0.74725, 1e-5);
    EXPECT_LT(three.best_fidelity, 0.75);

    OptimizationReport six = optimize_over_foliations(6, quick(24));
    EXPECT_EQ(six.partition->parts, (std::vector<int>{2, 2, 2}));
    EXPECT_GE(six.best_fidelity, 0.679 - 0.002);
    EXPECT_NEAR(six.best_fidelity, foliation_fidelity(*six.partition, six.best_gate), 1e-12);
    EXPECT_EQ(six.ties.size(), 1u);
    for (const auto &pr : six.per_partition) {
        EXPECT_LE(pr.fidelity, kOneToTwo);
    }
}

TEST(optimizer, more_clones_never_beat_one_to_two) {
    for (int m = 3; m <= 8; m++) {
        OptimizationReport r = optimize_over_foliations(m, quick(6));
        EXPECT_LT(r.best_fidelity, kOneToTwo) << m;
    }
}

TEST(optimizer, two_gate_matches_single_gate) {
    for (int n : {2, 3}) {
        OptimizationReport r = optimize_two_gate(n, quick(16));
        ASSERT_TRUE(r.single_gate_fidelity.has_value());
        ASSERT_TRUE(r.best_gate_b.has_value());
        EXPECT_EQ(r.best_params.size(), 8u);
        EXPECT_GE(r.best_fidelity, *r.single_gate_fidelity - 1e-9);
        EXPECT_LE(r.best_fidelity - *r.single_gate_fidelity, 1e-4) << n;
        EXPECT_NEAR(r.best_fidelity, two_gate_fidelity(n, r.best_gate, *r.best_gate_b), 1e-12);
    }
    EXPECT_THROW(optimize_two_gate(1, quick()), std::invalid_argument);
}
