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

#ifndef QCACLONE_ORACLE_FULL_H
#define QCACLONE_ORACLE_FULL_H

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "qcaclone/cone_geometry.h"
#include "qcaclone/sector_sim.h"

namespace qcaclone::oracle {

inline constexpr int kMaxQubits = 14;

/// Dense 2^n statevector. Qubit 0 is the most significant bit of the basis index.
struct FullState {
    int num_qubits = 0;
    std::vector<Complex> amplitudes;

    double norm_squared() const;
};

/// 4x4 row-major matrix in the basis {|00>, |01>, |10>, |11>}, first qubit most significant.
struct TwoQubitGate {
    std::array<Complex, 16> m{};

    Complex &at(int row, int col) { return m[static_cast<size_t>(4 * row + col)]; }
    Complex at(int row, int col) const { return m[static_cast<size_t>(4 * row + col)]; }

    static TwoQubitGate identity();
    static TwoQubitGate swap();
    TwoQubitGate operator*(const TwoQubitGate &rhs) const;
    double unitarity_defect() const;
};

/// diag(1, V, 1). Throws std::invalid_argument if V is not unitary.
TwoQubitGate full_gate_matrix(const GateUnitary &gate);

/// P_chi (x) P_chi with P_chi = diag(1, e^{i chi}).
TwoQubitGate phase_pair(double chi);

/// |phi> = (|0> + e^{i phi}|1>)/sqrt2 on `input_qubit`, |0> elsewhere.
FullState prepare_input(int num_qubits, int input_qubit, double phi);

/// In-place application of `g` to (q_left, q_right).
void apply_two_qubit(FullState &state, const TwoQubitGate &g, int q_left, int q_right);

/// Applies full_gate_matrix(gate) on each qubit pair in order, starting from
/// prepare_input(num_qubits, input_qubit, phi).
FullState simulate_full(std::span<const std::pair<int, int>> qubit_pairs, const GateUnitary &gate, int num_qubits,
                        int input_qubit, double phi);

/// <phi| rho_k |phi> with rho_k the partial trace onto qubit k.
double reduced_fidelity_full(const FullState &state, int qubit, double phi);

/// Probability weight on basis states with two or more qubits up.
double population_outside_sector(const FullState &state);

/// True iff ||[G, P_chi (x) P_chi]|| < 1e-10 (max entry) for every sample.
bool check_phase_covariance(const TwoQubitGate &g, std::span<const double> chi_samples);

/// `count` evenly spaced angles on [0, 2pi).
std::vector<double> chi_grid(int count = 32);

/// A foliation mapped onto a dense qubit register.
struct MappedCircuit {
    int num_qubits = 0;
    int input_qubit = 0;
    /// Wire w sits on qubit w - first_wire.
    int first_wire = 0;
    std::vector<std::pair<int, int>> pairs;
};

/// Maps the foliation's wires (touched set plus input) onto qubits 0..n-1.
MappedCircuit map_to_register(const Foliation &foliation);

}  // namespace qcaclone::oracle

#endif
