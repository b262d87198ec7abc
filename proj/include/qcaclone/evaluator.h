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

#ifndef QCACLONE_EVALUATOR_H
#define QCACLONE_EVALUATOR_H

#include <vector>

#include "qcaclone/cone_geometry.h"
#include "qcaclone/sector_sim.h"

namespace qcaclone {

/// A foliation flattened into dense wire indices, ready for repeated evaluation.
///
/// Gates are replayed in (layer, pos) order. Gates on odd layers use the
/// first gate argument and gates on even layers the second; the single-gate
/// overloads pass the same gate twice.
class FoliationCircuit {
   public:
    FoliationCircuit(const Foliation &foliation, CloneSet clone_set);

    double average_fidelity(const GateUnitary &gate) const;
    double average_fidelity(const GateUnitary &odd_layers, const GateUnitary &even_layers) const;

    SectorState run(const GateUnitary &gate) const;
    SectorState run(const GateUnitary &odd_layers, const GateUnitary &even_layers) const;

    int num_gates() const { return static_cast<int>(left_.size()); }
    int num_clones() const { return static_cast<int>(clones_.size()); }

   private:
    void evolve(const GateUnitary &odd, const GateUnitary &even, std::vector<Complex> &amps) const;

    int lo_ = 0;
    int width_ = 0;
    std::vector<int> left_;
    std::vector<unsigned char> even_layer_;
    std::vector<int> clones_;
};

/// Replays the foliation's gates on init_state(0). Throws std::invalid_argument
/// if the gate set is not causally closed or `gate` is not unitary.
SectorState run_circuit(const Foliation &foliation, const GateUnitary &gate);

/// Average fidelity of the foliation labelled by `p` over its clone set.
double foliation_fidelity(const Partition &p, const GateUnitary &gate, CloneSet clone_set = CloneSet::Touched);

/// Local fidelities after each rest-frame layer.
struct FidelityMap {
    int layers = 0;
    /// Wire of column 0; columns cover 1 - layers .. layers.
    int first_wire = 0;
    /// values[j][c]: layer j (0 = before any gate), wire first_wire + c.
    std::vector<std::vector<double>> values;

    int num_wires() const { return 2 * layers; }
    double at(int layer, int wire) const;
};

FidelityMap fidelity_map(int layers, const GateUnitary &gate);

/// Rest-frame evolution with gate `a` on odd layers and `b` on even layers.
SectorState run_two_gate(int layers, const GateUnitary &a, const GateUnitary &b);

/// Average over the 2N rest-frame wires of run_two_gate.
double two_gate_fidelity(int layers, const GateUnitary &a, const GateUnitary &b);

}  // namespace qcaclone

#endif
