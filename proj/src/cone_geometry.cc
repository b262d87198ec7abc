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

#include "qcaclone/cone_geometry.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qcaclone {

std::pair<int, int> gate_wires(const GateSite &site) {
    if (!site.is_valid()) {
        throw std::invalid_argument("invalid gate site (" + std::to_string(site.layer) + ", " +
                                    std::to_string(site.pos) + ")");
    }
    int left = 2 * site.pos - site.layer - 1;
    return {left, left + 1};
}

int Partition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool Partition::is_valid() const {
    if (parts.empty()) {
        return false;
    }
    for (size_t i = 0; i < parts.size(); i++) {
        if (parts[i] < 1 || (i > 0 && parts[i] > parts[i - 1])) {
            return false;
        }
    }
    return true;
}

std::string Partition::to_string() const {
    std::string out = "{";
    for (size_t i = 0; i < parts.size(); i++) {
        if (i) {
            out += ',';
        }
        out += std::to_string(parts[i]);
    }
    out += '}';
    return out;
}

Partition parse_partition(const std::string &text) {
    Partition p;
    int cur = -1;
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
            if (cur > 1000000) {
                throw std::invalid_argument("partition part too large: " + text);
            }
        } else if (c == ',' || c == ' ' || c == '{' || c == '}') {
            if (cur >= 0) {
                p.parts.push_back(cur);
                cur = -1;
            }
        } else {
            throw std::invalid_argument("bad partition text: " + text);
        }
    }
    if (cur >= 0) {
        p.parts.push_back(cur);
    }
    if (!p.is_valid()) {
        throw std::invalid_argument("not a non-increasing positive partition: " + text);
    }
    return p;
}

const char *clone_set_name(CloneSet cs) {
    return cs == CloneSet::Touched ? "touched" : "leaf";
}

CloneSet parse_clone_set(const std::string &text) {
    if (text == "touched") {
        return CloneSet::Touched;
    }
    if (text == "leaf") {
        return CloneSet::Leaf;
    }
    throw std::invalid_argument("unknown clone set: " + text);
}

int Foliation::top_layer() const {
    int top = 0;
    for (const auto &g : gates) {
        top = std::max(top, g.layer);
    }
    return top;
}

std::vector<int> Foliation::clone_wires(CloneSet cs) const {
    if (cs == CloneSet::Touched) {
        return touched_wires;
    }
    int top = top_layer();
    std::vector<int> out;
    for (int w = 1 - top; w <= top; w++) {
        out.push_back(w);
    }
    return out;
}

namespace {

Foliation finish(Partition p, std::vector<GateSite> gates) {
    std::sort(gates.begin(), gates.end());
    std::set<int> wires;
    for (const auto &g : gates) {
        auto [l, r] = gate_wires(g);
        wires.insert(l);
        wires.insert(r);
    }
    Foliation f;
    f.partition = std::move(p);
    f.gates = std::move(gates);
    f.touched_wires.assign(wires.begin(), wires.end());
    return f;
}

}  // namespace

Partition rest_frame_partition(int layers) {
    if (layers < 1) {
        throw std::invalid_argument("rest frame needs at least one layer");
    }
    Partition p;
    for (int c = layers; c >= 1; c--) {
        p.parts.push_back(c);
    }
    return p;
}

Foliation rest_frame_gates(int layers) {
    Partition p = rest_frame_partition(layers);
    std::vector<GateSite> gates;
    for (int j = 1; j <= layers; j++) {
        for (int q = 1; q <= j; q++) {
            gates.push_back({j, q});
        }
    }
    return finish(std::move(p), std::move(gates));
}

std::vector<Partition> partitions(int total) {
    if (total < 1) {
        throw std::invalid_argument("partitions need a positive total");
    }
    // Descending lexicographic successor: strip trailing ones, decrement the
    // last part > 1, then refill greedily with parts no larger than it.
    std::vector<Partition> out;
    std::vector<int> cur{total};
    while (true) {
        out.push_back(Partition{cur});
        int ones = 0;
        while (!cur.empty() && cur.back() == 1) {
            cur.pop_back();
            ones++;
        }
        if (cur.empty()) {
            break;
        }
        int k = --cur.back();
        int rest = ones + 1;
        while (rest > 0) {
            int piece = std::min(k, rest);
            cur.push_back(piece);
            rest -= piece;
        }
    }
    return out;
}

Foliation foliation_from_partition(const Partition &p) {
    if (!p.is_valid()) {
        throw std::invalid_argument("partition " + p.to_string() +
                                    " is not non-increasing; its gate set would not be causally closed");
    }
    std::vector<GateSite> gates;
    for (size_t i = 0; i < p.parts.size(); i++) {
        int d = static_cast<int>(i) + 1;
        for (int k = 0; k < p.parts[i]; k++) {
            gates.push_back({d + k, d});
        }
    }
    return finish(p, std::move(gates));
}

bool validate_causal(std::span<const GateSite> gates) {
    std::set<GateSite> present(gates.begin(), gates.end());
    for (const auto &g : gates) {
        if (!g.is_valid()) {
            return false;
        }
        if (g.layer == 1) {
            continue;
        }
        for (int q : {g.pos - 1, g.pos}) {
            GateSite pred{g.layer - 1, q};
            if (pred.is_valid() && !present.contains(pred)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qcaclone
