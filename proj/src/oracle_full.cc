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

#include "qcaclone/oracle_full.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcaclone::oracle {

namespace {

void require_qubit(int num_qubits, int q) {
    if (q < 0 || q >= num_qubits) {
        throw std::out_of_range("qubit " + std::to_string(q) + " outside register of " + std::to_string(num_qubits));
    }
}

size_t bit_of(int num_qubits, int q) {
    return size_t{1} << (num_qubits - 1 - q);
}

}  // namespace

double FullState::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes) {
        total += std::norm(a);
    }
    return total;
}

TwoQubitGate TwoQubitGate::identity() {
    TwoQubitGate g;
    for (int i = 0; i < 4; i++) {
        g.at(i, i) = 1.0;
    }
    return g;
}

TwoQubitGate TwoQubitGate::swap() {
    TwoQubitGate g;
    g.at(0, 0) = 1.0;
    g.at(1, 2) = 1.0;
    g.at(2, 1) = 1.0;
    g.at(3, 3) = 1.0;
    return g;
}

TwoQubitGate TwoQubitGate::operator*(const TwoQubitGate &rhs) const {
    TwoQubitGate out;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            Complex acc{};
            for (int k = 0; k < 4; k++) {
                acc += at(i, k) * rhs.at(k, j);
            }
            out.at(i, j) = acc;
        }
    }
    return out;
}

double TwoQubitGate::unitarity_defect() const {
    double worst = 0;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            Complex acc{};
            for (int k = 0; k < 4; k++) {
                acc += std::conj(at(k, i)) * at(k, j);
            }
            worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

TwoQubitGate full_gate_matrix(const GateUnitary &gate) {
    require_unitary(gate);
    TwoQubitGate g;
    g.at(0, 0) = 1.0;
    g.at(1, 1) = gate.v11;
    g.at(1, 2) = gate.v12;
    g.at(2, 1) = gate.v21;
    g.at(2, 2) = gate.v22;
    g.at(3, 3) = 1.0;
    return g;
}

TwoQubitGate phase_pair(double chi) {
    Complex p = std::polar(1.0, chi);
    TwoQubitGate g;
    g.at(0, 0) = 1.0;
    g.at(1, 1) = p;
    g.at(2, 2) = p;
    g.at(3, 3) = p * p;
    return g;
}

FullState prepare_input(int num_qubits, int input_qubit, double phi) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("register size must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    require_qubit(num_qubits, input_qubit);
    FullState s;
    s.num_qubits = num_qubits;
    s.amplitudes.assign(size_t{1} << num_qubits, Complex{});
    const double h = std::numbers::sqrt2 / 2;
    s.amplitudes[0] = h;
    s.amplitudes[bit_of(num_qubits, input_qubit)] = std::polar(h, phi);
    return s;
}

void apply_two_qubit(FullState &state, const TwoQubitGate &g, int q_left, int q_right) {
    require_qubit(state.num_qubits, q_left);
    require_qubit(state.num_qubits, q_right);
    if (q_left == q_right) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
    size_t bl = bit_of(state.num_qubits, q_left);
    size_t br = bit_of(state.num_qubits, q_right);
    for (size_t base = 0; base < state.amplitudes.size(); base++) {
        if (base & (bl | br)) {
            continue;
        }
        std::array<size_t, 4> idx{base, base | br, base | bl, base | bl | br};
        std::array<Complex, 4> in;
        for (int k = 0; k < 4; k++) {
            in[static_cast<size_t>(k)] = state.amplitudes[idx[static_cast<size_t>(k)]];
        }
        for (int r = 0; r < 4; r++) {
            Complex acc{};
            for (int c = 0; c < 4; c++) {
                acc += g.at(r, c) * in[static_cast<size_t>(c)];
            }
            state.amplitudes[idx[static_cast<size_t>(r)]] = acc;
        }
    }
}

FullState simulate_full(std::span<const std::pair<int, int>> qubit_pairs, const GateUnitary &gate, int num_qubits,
                        int input_qubit, double phi) {
    TwoQubitGate g = full_gate_matrix(gate);
    FullState s = prepare_input(num_qubits, input_qubit, phi);
    for (const auto &[l, r] : qubit_pairs) {
        apply_two_qubit(s, g, l, r);
    }
    return s;
}

double reduced_fidelity_full(const FullState &state, int qubit, double phi) {
    require_qubit(state.num_qubits, qubit);
    size_t b = bit_of(state.num_qubits, qubit);
    // rho = [[r00, r01], [r10, r11]] in the {|0>, |1>} basis of `qubit`.
    double r00 = 0;
    double r11 = 0;
    Complex r10{};
    for (size_t i = 0; i < state.amplitudes.size(); i++) {
        if (i & b) {
            r11 += std::norm(state.amplitudes[i]);
        } else {
            r00 += std::norm(state.amplitudes[i]);
            r10 += state.amplitudes[i | b] * std::conj(state.amplitudes[i]);
        }
    }
    // <phi|rho|phi> with |phi> = (|0> + e^{i phi}|1>)/sqrt2.
    Complex e = std::polar(1.0, phi);
    Complex value = 0.5 * (r00 + r11 + std::conj(e) * r10 + e * std::conj(r10));
    return value.real();
}

double population_outside_sector(const FullState &state) {
    double total = 0;
    for (size_t i = 0; i < state.amplitudes.size(); i++) {
        if (std::popcount(i) >= 2) {
            total += std::norm(state.amplitudes[i]);
        }
    }
    return total;
}

bool check_phase_covariance(const TwoQubitGate &g, std::span<const double> chi_samples) {
    for (double chi : chi_samples) {
        TwoQubitGate p = phase_pair(chi);
        TwoQubitGate gp = g * p;
        TwoQubitGate pg = p * g;
        for (size_t k = 0; k < gp.m.size(); k++) {
            if (std::abs(gp.m[k] - pg.m[k]) >= 1e-10) {
                return false;
            }
        }
    }
    return true;
}

std::vector<double> chi_grid(int count) {
    std::vector<double> out;
    for (int i = 0; i < count; i++) {
        out.push_back(2 * std::numbers::pi * i / count);
    }
    return out;
}

MappedCircuit map_to_register(const Foliation &foliation) {
    int lo = 0;
    int hi = 0;
    for (int w : foliation.touched_wires) {
        lo = std::min(lo, w);
        hi = std::max(hi, w);
    }
    MappedCircuit c;
    c.first_wire = lo;
    c.num_qubits = hi - lo + 1;
    c.input_qubit = -lo;
    for (const auto &g : foliation.gates) {
        auto [l, r] = gate_wires(g);
        c.pairs.emplace_back(l - lo, r - lo);
    }
    return c;
}

}  // namespace qcaclone::oracle
