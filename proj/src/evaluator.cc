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

#include "qcaclone/evaluator.h"

#include <algorithm>
#include <stdexcept>

namespace qcaclone {

FoliationCircuit::FoliationCircuit(const Foliation &foliation, CloneSet clone_set) {
    if (!validate_causal(foliation.gates)) {
        throw std::invalid_argument("foliation " + foliation.partition.to_string() + " is not causally closed");
    }
    std::vector<int> clones = foliation.clone_wires(clone_set);
    if (clones.empty()) {
        throw std::invalid_argument("foliation has no clone wires");
    }
    int lo = std::min(0, clones.front());
    int hi = std::max(0, clones.back());
    for (const auto &g : foliation.gates) {
        auto [l, r] = gate_wires(g);
        lo = std::min(lo, l);
        hi = std::max(hi, r);
    }
    lo_ = lo;
    width_ = hi - lo + 1;
    for (const auto &g : foliation.gates) {
        left_.push_back(gate_wires(g).first - lo_);
        even_layer_.push_back(g.layer % 2 == 0);
    }
    for (int w : clones) {
        clones_.push_back(w - lo_);
    }
}

void FoliationCircuit::evolve(const GateUnitary &odd, const GateUnitary &even, std::vector<Complex> &amps) const {
    amps.assign(static_cast<size_t>(width_), Complex{});
    amps[static_cast<size_t>(-lo_)] = 1.0;
    for (size_t i = 0; i < left_.size(); i++) {
        const GateUnitary &g = even_layer_[i] ? even : odd;
        Complex &x = amps[static_cast<size_t>(left_[i])];
        Complex &y = amps[static_cast<size_t>(left_[i]) + 1];
        Complex nx = g.v22 * x + g.v21 * y;
        Complex ny = g.v12 * x + g.v11 * y;
        x = nx;
        y = ny;
    }
}

double FoliationCircuit::average_fidelity(const GateUnitary &gate) const {
    return average_fidelity(gate, gate);
}

double FoliationCircuit::average_fidelity(const GateUnitary &odd_layers, const GateUnitary &even_layers) const {
    thread_local std::vector<Complex> amps;
    evolve(odd_layers, even_layers, amps);
    double total = 0;
    for (int c : clones_) {
        total += 0.5 * (1.0 + amps[static_cast<size_t>(c)].real());
    }
    return total / static_cast<double>(clones_.size());
}

SectorState FoliationCircuit::run(const GateUnitary &gate) const {
    return run(gate, gate);
}

SectorState FoliationCircuit::run(const GateUnitary &odd_layers, const GateUnitary &even_layers) const {
    std::vector<Complex> amps;
    evolve(odd_layers, even_layers, amps);
    SectorState s = init_state(0);
    s.reserve_window(lo_, lo_ + width_ - 1);
    for (int i = 0; i < width_; i++) {
        s.set_amplitude(lo_ + i, amps[static_cast<size_t>(i)]);
    }
    return s;
}

SectorState run_circuit(const Foliation &foliation, const GateUnitary &gate) {
    if (!validate_causal(foliation.gates)) {
        throw std::invalid_argument("foliation " + foliation.partition.to_string() + " is not causally closed");
    }
    require_unitary(gate);
    SectorState s = init_state(0);
    for (const auto &g : foliation.gates) {
        s.apply_unchecked(gate, gate_wires(g).first);
    }
    return s;
}

double foliation_fidelity(const Partition &p, const GateUnitary &gate, CloneSet clone_set) {
    Foliation f = foliation_from_partition(p);
    SectorState s = run_circuit(f, gate);
    std::vector<int> clones = f.clone_wires(clone_set);
    return average_fidelity(s, clones);
}

double FidelityMap::at(int layer, int wire) const {
    if (layer < 0 || layer > layers) {
        throw std::out_of_range("fidelity map layer out of range");
    }
    int c = wire - first_wire;
    if (c < 0 || c >= num_wires()) {
        throw std::out_of_range("fidelity map wire out of range");
    }
    return values[static_cast<size_t>(layer)][static_cast<size_t>(c)];
}

FidelityMap fidelity_map(int layers, const GateUnitary &gate) {
    if (layers < 1) {
        throw std::invalid_argument("fidelity map needs at least one layer");
    }
    require_unitary(gate);
    FidelityMap map;
    map.layers = layers;
    map.first_wire = 1 - layers;
    SectorState s = init_state(0);
    s.reserve_window(map.first_wire, layers);
    auto snapshot = [&] {
        std::vector<double> row(static_cast<size_t>(map.num_wires()));
        for (int c = 0; c < map.num_wires(); c++) {
            row[static_cast<size_t>(c)] = local_fidelity(s, map.first_wire + c);
        }
        map.values.push_back(std::move(row));
    };
    snapshot();
    for (int j = 1; j <= layers; j++) {
        for (int q = 1; q <= j; q++) {
            s.apply_unchecked(gate, gate_wires({j, q}).first);
        }
        snapshot();
    }
    return map;
}

SectorState run_two_gate(int layers, const GateUnitary &a, const GateUnitary &b) {
    require_unitary(a);
    require_unitary(b);
    Foliation f = rest_frame_gates(layers);
    SectorState s = init_state(0);
    for (const auto &g : f.gates) {
        s.apply_unchecked(g.layer % 2 == 1 ? a : b, gate_wires(g).first);
    }
    return s;
}

double two_gate_fidelity(int layers, const GateUnitary &a, const GateUnitary &b) {
    SectorState s = run_two_gate(layers, a, b);
    return average_fidelity(s, rest_frame_gates(layers).touched_wires);
}

}  // namespace qcaclone
