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

#ifndef QCACLONE_NELDER_MEAD_H
#define QCACLONE_NELDER_MEAD_H

#include <algorithm>
#include <numeric>
#include <vector>

namespace qcaclone {

struct SimplexResult {
    std::vector<double> x;
    double value = 0;
    int iterations = 0;
    long evaluations = 0;
    bool converged = false;
};

/// Minimizes `f` with the Nelder-Mead downhill simplex.
///
/// The initial simplex is `x0` plus `step` along each axis. The search stops
/// once the spread of objective values over the simplex drops to `ftol`; it
/// then rebuilds a fresh simplex around the best vertex and keeps going until
/// a rebuilt simplex converges without improving by more than `ftol`. This
/// catches the usual premature collapse of the simplex on narrow ridges.
template <typename F>
SimplexResult nelder_mead(F &&f, std::vector<double> x0, double step, int max_iterations, double ftol) {
    const size_t n = x0.size();
    SimplexResult out;
    std::vector<std::vector<double>> pts(n + 1, x0);
    std::vector<double> vals(n + 1);
    std::vector<size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);

    auto eval = [&](const std::vector<double> &x) {
        out.evaluations++;
        return f(x);
    };
    auto build = [&](const std::vector<double> &base, double base_value) {
        pts[0] = base;
        vals[0] = base_value;
        for (size_t i = 0; i < n; i++) {
            pts[i + 1] = base;
            pts[i + 1][i] += step;
            vals[i + 1] = eval(pts[i + 1]);
        }
    };
    auto along = [&](double t, std::vector<double> &dst) {
        const auto &worst = pts[order[n]];
        for (size_t k = 0; k < n; k++) {
            dst[k] = centroid[k] + t * (worst[k] - centroid[k]);
        }
    };

    build(x0, eval(x0));
    double last_restart_value = vals[0];
    bool restarted_once = false;

    while (out.iterations < max_iterations) {
        std::iota(order.begin(), order.end(), size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return vals[a] < vals[b]; });
        size_t best = order[0];
        size_t worst = order[n];

        if (vals[worst] - vals[best] <= ftol) {
            if (restarted_once && last_restart_value - vals[best] <= ftol) {
                out.converged = true;
                break;
            }
            restarted_once = true;
            last_restart_value = vals[best];
            std::vector<double> base = pts[best];
            build(base, vals[best]);
            continue;
        }
        out.iterations++;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t i = 0; i < n; i++) {
            const auto &p = pts[order[i]];
            for (size_t k = 0; k < n; k++) {
                centroid[k] += p[k];
            }
        }
        for (auto &c : centroid) {
            c /= static_cast<double>(n);
        }

        double second_worst = vals[order[n - 1]];
        along(-1.0, trial);
        double reflected = eval(trial);
        if (reflected < vals[best]) {
            along(-2.0, trial2);
            double expanded = eval(trial2);
            if (expanded < reflected) {
                pts[worst] = trial2;
                vals[worst] = expanded;
            } else {
                pts[worst] = trial;
                vals[worst] = reflected;
            }
            continue;
        }
        if (reflected < second_worst) {
            pts[worst] = trial;
            vals[worst] = reflected;
            continue;
        }
        if (reflected < vals[worst]) {
            along(-0.5, trial2);
            double contracted = eval(trial2);
            if (contracted <= reflected) {
                pts[worst] = trial2;
                vals[worst] = contracted;
                continue;
            }
        } else {
            along(0.5, trial2);
            double contracted = eval(trial2);
            if (contracted < vals[worst]) {
                pts[worst] = trial2;
                vals[worst] = contracted;
                continue;
            }
        }
        // Shrink toward the best vertex.
        for (size_t i = 0; i <= n; i++) {
            if (i == best) {
                continue;
            }
            for (size_t k = 0; k < n; k++) {
                pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
            }
            vals[i] = eval(pts[i]);
        }
    }

    size_t best = static_cast<size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    out.x = pts[best];
    out.value = vals[best];
    return out;
}

}  // namespace qcaclone

#endif
