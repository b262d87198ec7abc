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

#include "qcaclone/sector_sim.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcaclone {

GateUnitary GateUnitary::identity() {
    return GateUnitary{};
}

double GateUnitary::unitarity_defect() const {
    // Entries of V^dagger V.
    Complex g11 = std::conj(v11) * v11 + std::conj(v21) * v21;
    Complex g12 = std::conj(v11) * v12 + std::conj(v21) * v22;
    Complex g22 = std::conj(v12) * v12 + std::conj(v22) * v22;
    return std::max({std::abs(g11 - 1.0), std::abs(g12), std::abs(g22 - 1.0)});
}

bool GateUnitary::is_unitary(double tol) const {
    return unitarity_defect() <= tol;
}

GateUnitary GateUnitary::adjoint() const {
    GateUnitary r;
    r.v11 = std::conj(v11);
    r.v12 = std::conj(v21);
    r.v21 = std::conj(v12);
    r.v22 = std::conj(v22);
    return r;
}

void require_unitary(const GateUnitary &gate, double tol) {
    double defect = gate.unitarity_defect();
    if (!(defect <= tol)) {
        throw std::invalid_argument("gate is not unitary (defect " + std::to_string(defect) + ")");
    }
}

GateUnitary unitary_from_params(double theta, double a, double b, double d) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    Complex global = std::polar(1.0, d);
    GateUnitary g;
    g.v11 = global * std::polar(1.0, a) * c;
    g.v12 = global * std::polar(1.0, b) * s;
    g.v21 = -global * std::polar(1.0, -b) * s;
    g.v22 = global * std::polar(1.0, -a) * c;
    g.params = std::array<double, 4>{theta, a, b, d};
    return g;
}

GateUnitary unitary_from_params(std::span<const double, 4> angles) {
    return unitary_from_params(angles[0], angles[1], angles[2], angles[3]);
}

GateUnitary upcc_gate() {
    const double h = std::numbers::sqrt2 / 2;
    GateUnitary g;
    g.v11 = h;
    g.v12 = h;
    g.v21 = -h;
    g.v22 = h;
    g.params = std::array<double, 4>{std::numbers::pi / 4, 0.0, 0.0, 0.0};
    return g;
}

void SectorState::reserve_window(int lo, int hi) {
    if (lo > hi) {
        return;
    }
    if (amps_.empty()) {
        offset_ = lo;
        amps_.assign(static_cast<size_t>(hi - lo + 1), Complex{});
        return;
    }
    int cur_lo = window_lo();
    int cur_hi = window_hi();
    if (lo < cur_lo) {
        amps_.insert(amps_.begin(), static_cast<size_t>(cur_lo - lo), Complex{});
        offset_ = lo;
    }
    if (hi > cur_hi) {
        amps_.resize(amps_.size() + static_cast<size_t>(hi - cur_hi), Complex{});
    }
}

Complex SectorState::amplitude(int wire) const {
    if (amps_.empty() || wire < window_lo() || wire > window_hi()) {
        return Complex{};
    }
    return amps_[static_cast<size_t>(wire - offset_)];
}

Complex &SectorState::slot(int wire) {
    if (amps_.empty() || wire < window_lo() || wire > window_hi()) {
        reserve_window(amps_.empty() ? wire : std::min(wire, window_lo()),
                       amps_.empty() ? wire : std::max(wire, window_hi()));
    }
    return amps_[static_cast<size_t>(wire - offset_)];
}

void SectorState::set_amplitude(int wire, Complex value) {
    slot(wire) = value;
}

void SectorState::apply_unchecked(const GateUnitary &gate, int left_wire) {
    if (amps_.empty() || left_wire < window_lo() || left_wire + 1 > window_hi()) {
        reserve_window(amps_.empty() ? left_wire : std::min(left_wire, window_lo()),
                       amps_.empty() ? left_wire + 1 : std::max(left_wire + 1, window_hi()));
    }
    Complex &left = amps_[static_cast<size_t>(left_wire - offset_)];
    Complex &right = amps_[static_cast<size_t>(left_wire + 1 - offset_)];
    Complex x = left;
    Complex y = right;
    left = gate.v22 * x + gate.v21 * y;
    right = gate.v12 * x + gate.v11 * y;
}

double SectorState::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<int> SectorState::support() const {
    std::vector<int> out;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (amps_[i] != Complex{}) {
            out.push_back(offset_ + static_cast<int>(i));
        }
    }
    return out;
}

SectorState init_state(int input_wire) {
    SectorState s;
    s.input_wire_ = input_wire;
    s.set_amplitude(input_wire, 1.0);
    return s;
}

SectorState apply_gate(const SectorState &state, const GateUnitary &gate, int left_wire) {
    require_unitary(gate);
    SectorState out = state;
    out.apply_unchecked(gate, left_wire);
    return out;
}

double local_fidelity(const SectorState &state, int wire) {
    return 0.5 * (1.0 + state.amplitude(wire).real());
}

double average_fidelity(const SectorState &state, std::span<const int> wires) {
    if (wires.empty()) {
        throw std::invalid_argument("average_fidelity needs at least one wire");
    }
    double total = 0;
    for (int w : wires) {
        total += local_fidelity(state, w);
    }
    return total / static_cast<double>(wires.size());
}

}  // namespace qcaclone
