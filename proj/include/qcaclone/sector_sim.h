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

#ifndef QCACLONE_SECTOR_SIM_H
#define QCACLONE_SECTOR_SIM_H

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace qcaclone {

using Complex = std::complex<double>;

/// Unitarity defect accepted when a gate enters the simulator from outside.
inline constexpr double kUnitarityTolerance = 1e-9;

/// The 2x2 block V of the phase-covariant two-qubit gate A = diag(1, V, 1).
///
/// Entries are expressed in the ordered basis {|01>, |10>}, where the first
/// qubit is the left wire of the gate. `params` remembers the angles the gate
/// was generated from, when it came from `unitary_from_params`.
struct GateUnitary {
    Complex v11{1.0};
    Complex v12{0.0};
    Complex v21{0.0};
    Complex v22{1.0};
    std::optional<std::array<double, 4>> params;

    static GateUnitary identity();

    /// Largest entrywise deviation of V^dagger V from the identity.
    double unitarity_defect() const;
    bool is_unitary(double tol = kUnitarityTolerance) const;

    GateUnitary adjoint() const;
};

/// Throws std::invalid_argument if `gate` is not unitary within `tol`.
void require_unitary(const GateUnitary &gate, double tol = kUnitarityTolerance);

/// V = e^{id} [[e^{ia} cos t, e^{ib} sin t], [-e^{-ib} sin t, e^{-ia} cos t]].
GateUnitary unitary_from_params(double theta, double a, double b, double d);
GateUnitary unitary_from_params(std::span<const double, 4> angles);

/// The real gate block realizing the optimal 1->2 economical cloner,
/// (1/sqrt2) [[1, 1], [-1, 1]]. Equals unitary_from_params(pi/4, 0, 0, 0).
GateUnitary upcc_gate();

/// Excitation amplitudes of the state (|vac> + e^{i phi} sum_k alpha_k |k>)/sqrt2.
///
/// Wires are addressed by signed position. Storage is a dense window that
/// grows on demand; positions outside it hold an implicit zero amplitude.
/// The vacuum component and the input phase are never stored since no gate
/// touches them.
class SectorState {
   public:
    SectorState() = default;

    /// Pre-reserves the window [lo, hi]; does not change any amplitude.
    void reserve_window(int lo, int hi);

    Complex amplitude(int wire) const;
    void set_amplitude(int wire, Complex value);

    /// Applies A(j, j+1) in place without re-validating `gate`.
    void apply_unchecked(const GateUnitary &gate, int left_wire);

    double norm_squared() const;

    int input_wire() const { return input_wire_; }
    /// Lowest and highest stored positions (inclusive). Empty window when lo > hi.
    int window_lo() const { return offset_; }
    int window_hi() const { return offset_ + static_cast<int>(amps_.size()) - 1; }

    /// Positions with a non-zero amplitude, ascending.
    std::vector<int> support() const;

    friend SectorState init_state(int input_wire);

   private:
    Complex &slot(int wire);

    std::vector<Complex> amps_;
    int offset_ = 0;
    int input_wire_ = 0;
};

/// Excitation on `input_wire` with amplitude 1, every other wire blank.
SectorState init_state(int input_wire);

/// Returns `state` after A(left_wire, left_wire + 1). Rejects non-unitary gates.
SectorState apply_gate(const SectorState &state, const GateUnitary &gate, int left_wire);

/// F_k = (1 + Re alpha_k) / 2.
double local_fidelity(const SectorState &state, int wire);

/// Mean of local_fidelity over `wires`. Throws std::invalid_argument when empty.
double average_fidelity(const SectorState &state, std::span<const int> wires);

}  // namespace qcaclone

#endif
