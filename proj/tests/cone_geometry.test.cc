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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "test_util.h"

using namespace qcaclone;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition> &ps) {
    std::vector<std::vector<int>> out;
    for (const auto &p : ps) {
        out.push_back(p.parts);
    }
    return out;
}

}  // namespace

TEST(cone_geometry, gate_wires) {
    EXPECT_EQ(gate_wires({1, 1}), std::make_pair(0, 1));
    EXPECT_EQ(gate_wires({2, 1}), std::make_pair(-1, 0));
    EXPECT_EQ(gate_wires({2, 2}), std::make_pair(1, 2));
    EXPECT_EQ(gate_wires({3, 2}), std::make_pair(0, 1));
    EXPECT_THROW(gate_wires({2, 3}), std::invalid_argument);
    EXPECT_THROW(gate_wires({0, 1}), std::invalid_argument);
    EXPECT_THROW(gate_wires({3, 0}), std::invalid_argument);
}

TEST(cone_geometry, brick_wall_adjacency) {
    // Each gate shares exactly one wire with each in-cone predecessor.
    for (int j = 2; j <= 12; j++) {
        for (int p = 1; p <= j; p++) {
            auto [l, r] = gate_wires({j, p});
            for (int q : {p - 1, p}) {
                GateSite pred{j - 1, q};
                if (!pred.is_valid()) {
                    continue;
                }
                auto [pl, pr] = gate_wires(pred);
                int shared = (l == pl) + (l == pr) + (r == pl) + (r == pr);
                EXPECT_EQ(shared, 1) << j << "," << p;
            }
        }
    }
}

TEST(cone_geometry, rest_frame_gates) {
    Foliation one = rest_frame_gates(1);
    EXPECT_EQ(one.gates.size(), 1u);
    EXPECT_EQ(one.touched_wires, (std::vector<int>{0, 1}));

    EXPECT_EQ(rest_frame_gates(3).gates.size(), 6u);
    EXPECT_EQ(rest_frame_gates(7).gates.size(), 28u);
    EXPECT_THROW(rest_frame_gates(0), std::invalid_argument);

    for (int n = 1; n <= 40; n++) {
        Foliation f = rest_frame_gates(n);
        EXPECT_EQ(f.touched_wires.size(), static_cast<size_t>(2 * n));
        EXPECT_TRUE(std::binary_search(f.touched_wires.begin(), f.touched_wires.end(), 0));
        EXPECT_EQ(f.partition.total(), n * (n + 1) / 2);
        EXPECT_TRUE(std::is_sorted(f.gates.begin(), f.gates.end()));
    }
}

TEST(cone_geometry, partitions_examples) {
    EXPECT_EQ(parts_of(partitions(3)), (std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}}));
    EXPECT_EQ(parts_of(partitions(6)), (std::vector<std::vector<int>>{{6},
                                                                      {5, 1},
                                                                      {4, 2},
                                                                      {4, 1, 1},
                                                                      {3, 3},
                                                                      {3, 2, 1},
                                                                      {3, 1, 1, 1},
                                                                      {2, 2, 2},
                                                                      {2, 2, 1, 1},
                                                                      {2, 1, 1, 1, 1},
                                                                      {1, 1, 1, 1, 1, 1}}));
    EXPECT_EQ(partitions(1).size(), 1u);
    EXPECT_EQ(partitions(28).size(), 3718u);
    EXPECT_THROW(partitions(0), std::invalid_argument);
}

TEST(cone_geometry, partitions_match_counting_oracle) {
    for (int m = 1; m <= 30; m++) {
        std::vector<Partition> all = partitions(m);
        EXPECT_EQ(all.size(), testkit::partition_count(m)) << m;
        for (size_t i = 0; i < all.size(); i++) {
            EXPECT_TRUE(all[i].is_valid());
            EXPECT_EQ(all[i].total(), m);
            if (i > 0) {
                EXPECT_GT(all[i - 1].parts, all[i].parts);
            }
        }
    }
}

TEST(cone_geometry, partition_text) {
    EXPECT_EQ(parse_partition("{4,3,3}").parts, (std::vector<int>{4, 3, 3}));
    EXPECT_EQ(parse_partition("4 3 3").parts, (std::vector<int>{4, 3, 3}));
    EXPECT_EQ(parse_partition("{1}").to_string(), "{1}");
    EXPECT_THROW(parse_partition("{1,2}"), std::invalid_argument);
    EXPECT_THROW(parse_partition("{}"), std::invalid_argument);
    EXPECT_THROW(parse_partition("3;2"), std::invalid_argument);
    EXPECT_THROW(parse_partition("{3,0}"), std::invalid_argument);
}

TEST(cone_geometry, foliation_from_partition_examples) {
    Foliation vertex = foliation_from_partition(Partition{{1}});
    EXPECT_EQ(vertex.gates, (std::vector<GateSite>{{1, 1}}));
    EXPECT_EQ(vertex.touched_wires, (std::vector<int>{0, 1}));

    Foliation edge = foliation_from_partition(Partition{{3}});
    EXPECT_EQ(edge.gates, (std::vector<GateSite>{{1, 1}, {2, 1}, {3, 1}}));
    EXPECT_EQ(edge.touched_wires, (std::vector<int>{-2, -1, 0, 1}));

    // The two counterexamples from the open question on averaging sets.
    EXPECT_EQ(foliation_from_partition(Partition{{6}}).touched_wires.size(), 7u);
    EXPECT_EQ(foliation_from_partition(Partition{{2, 2, 2}}).touched_wires.size(), 5u);

    for (int n = 1; n <= 7; n++) {
        Foliation a = foliation_from_partition(rest_frame_partition(n));
        Foliation b = rest_frame_gates(n);
        EXPECT_EQ(a.gates, b.gates);
        EXPECT_EQ(a.touched_wires, b.touched_wires);
    }

    EXPECT_THROW(foliation_from_partition(Partition{{1, 2}}), std::invalid_argument);
    EXPECT_THROW(foliation_from_partition(Partition{{2, 0}}), std::invalid_argument);
    EXPECT_THROW(foliation_from_partition(Partition{}), std::invalid_argument);
}

TEST(cone_geometry, clone_sets) {
    Foliation edge = foliation_from_partition(Partition{{3}});
    EXPECT_EQ(edge.top_layer(), 3);
    EXPECT_EQ(edge.clone_wires(CloneSet::Touched), (std::vector<int>{-2, -1, 0, 1}));
    EXPECT_EQ(edge.clone_wires(CloneSet::Leaf), (std::vector<int>{-2, -1, 0, 1, 2, 3}));
    for (int n = 1; n <= 8; n++) {
        Foliation f = rest_frame_gates(n);
        EXPECT_EQ(f.clone_wires(CloneSet::Leaf), f.clone_wires(CloneSet::Touched));
    }
    EXPECT_EQ(parse_clone_set("leaf"), CloneSet::Leaf);
    EXPECT_THROW(parse_clone_set("all"), std::invalid_argument);
}

TEST(cone_geometry, validate_causal) {
    for (int m = 1; m <= 15; m++) {
        for (const auto &p : partitions(m)) {
            Foliation f = foliation_from_partition(p);
            EXPECT_TRUE(validate_causal(f.gates)) << p.to_string();
            EXPECT_EQ(f.gates.size(), static_cast<size_t>(m));
        }
    }
    std::vector<GateSite> orphan{{2, 1}};
    EXPECT_FALSE(validate_causal(orphan));
    std::vector<GateSite> gap{{1, 1}, {2, 1}, {3, 2}};
    EXPECT_FALSE(validate_causal(gap));
    EXPECT_TRUE(validate_causal(rest_frame_gates(4).gates));
    std::vector<GateSite> empty;
    EXPECT_TRUE(validate_causal(empty));
}

TEST(cone_geometry, partitions_biject_onto_closed_gate_sets) {
    for (int m = 1; m <= 8; m++) {
        testkit::ConeIndex cone(m);
        std::set<uint64_t> brute = testkit::brute_force_closed_sets(m, cone);
        EXPECT_EQ(brute.size(), testkit::partition_count(m)) << m;

        std::set<uint64_t> images;
        for (const auto &p : partitions(m)) {
            uint64_t mask = 0;
            for (const auto &g : foliation_from_partition(p).gates) {
                auto it = std::find(cone.sites.begin(), cone.sites.end(), std::make_pair(g.layer, g.pos));
                ASSERT_NE(it, cone.sites.end());
                mask |= uint64_t{1} << (it - cone.sites.begin());
            }
            images.insert(mask);
        }
        EXPECT_EQ(images, brute) << m;
    }
}

TEST(cone_geometry, partitions_are_injective_up_to_twenty) {
    for (int m = 9; m <= 20; m++) {
        std::set<std::vector<GateSite>> seen;
        for (const auto &p : partitions(m)) {
            Foliation f = foliation_from_partition(p);
            EXPECT_TRUE(validate_causal(f.gates));
            EXPECT_TRUE(seen.insert(f.gates).second) << p.to_string();
        }
    }
}

TEST(cone_geometry, mirror_maps_partition_to_conjugate) {
    for (int m = 1; m <= 14; m++) {
        for (const auto &p : partitions(m)) {
            Foliation f = foliation_from_partition(p);
            std::vector<GateSite> mirrored;
            for (const auto &g : f.gates) {
                mirrored.push_back({g.layer, g.layer + 1 - g.pos});
            }
            EXPECT_TRUE(validate_causal(mirrored));
            std::sort(mirrored.begin(), mirrored.end());
            Foliation conj = foliation_from_partition(Partition{testkit::conjugate(p.parts)});
            EXPECT_EQ(mirrored, conj.gates) << p.to_string();

            std::vector<int> wires;
            for (int w : f.touched_wires) {
                wires.push_back(1 - w);
            }
            std::sort(wires.begin(), wires.end());
            EXPECT_EQ(wires, conj.touched_wires);
        }
    }
}
