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

#ifndef QCACLONE_CONE_GEOMETRY_H
#define QCACLONE_CONE_GEOMETRY_H

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qcaclone {

/// A gate of the light-cone lattice: layer j >= 1 holds gates pos = 1..j.
struct GateSite {
    int layer = 1;
    int pos = 1;

    bool is_valid() const { return layer >= 1 && pos >= 1 && pos <= layer; }
    auto operator<=>(const GateSite &) const = default;
};

/// Wires (left, left + 1) acted on by `site`: (2 pos - layer - 1, 2 pos - layer).
/// The vertex gate (1, 1) sits on wires (0, 1); the input excitation starts on wire 0.
std::pair<int, int> gate_wires(const GateSite &site);

/// An integer partition, parts stored non-increasing.
struct Partition {
    std::vector<int> parts;

    int total() const;
    /// Parts strictly positive and non-increasing.
    bool is_valid() const;
    /// "{4,3,3}".
    std::string to_string() const;

    auto operator<=>(const Partition &) const = default;
};

/// Parses "{4,3,3}", "4,3,3" or "4 3 3". Throws std::invalid_argument on bad input.
Partition parse_partition(const std::string &text);

/// Averaging set used for a foliation's clones.
enum class CloneSet {
    /// Every wire acted on by at least one gate of the foliation.
    Touched,
    /// Every wire of the full cone spanned up to the foliation's top layer L,
    /// i.e. positions 1 - L .. L, including blank wires the leaf crosses untouched.
    Leaf,
};

const char *clone_set_name(CloneSet cs);
/// Accepts "touched" and "leaf".
CloneSet parse_clone_set(const std::string &text);

/// A causally closed gate set together with the partition that labels it.
struct Foliation {
    Partition partition;
    /// Sorted by (layer, pos), which is a topological order.
    std::vector<GateSite> gates;
    /// Ascending.
    std::vector<int> touched_wires;

    int top_layer() const;
    std::vector<int> clone_wires(CloneSet cs) const;
};

/// All gates of layers 1..layers, i.e. the partition {N, N-1, ..., 1}.
Foliation rest_frame_gates(int layers);

/// The partition {N, N-1, ..., 1}.
Partition rest_frame_partition(int layers);

/// All partitions of `total`, in descending lexicographic order ({M} first).
std::vector<Partition> partitions(int total);

/// Part c_d fills the left-leaning diagonal d with gates (d, d), (d+1, d), ..., (d+c_d-1, d).
/// Throws std::invalid_argument unless the parts are positive and non-increasing.
Foliation foliation_from_partition(const Partition &p);

/// True iff every gate's in-cone predecessors (j-1, p-1) and (j-1, p) are present.
bool validate_causal(std::span<const GateSite> gates);

}  // namespace qcaclone

#endif
