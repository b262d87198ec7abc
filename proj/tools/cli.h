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

#ifndef QCACLONE_TOOLS_CLI_H
#define QCACLONE_TOOLS_CLI_H

#include <array>
#include <ostream>
#include <string>
#include <vector>

namespace qcaclone::cli {

inline constexpr const char *kVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

/// One published row of the foliation table: gate budget, layers, rest-frame
/// and foliation-optimized average fidelity, winning partition.
struct ReferenceRow {
    int gates;
    int layers;
    double rest;
    double best;
    const char *partition;
};

inline constexpr std::array<ReferenceRow, 7> kReferenceTable{{
    {1, 1, 0.853, 0.853, "{1}"},
    {3, 2, 0.676, 0.693, "{3}"},
    {6, 3, 0.617, 0.679, "{2,2,2}"},
    {10, 4, 0.588, 0.670, "{4,3,3}"},
    {15, 5, 0.570, 0.653, "{4,4,4,3}"},
    {21, 6, 0.558, 0.614, "{4,3,2,2,2,2,2,2,2}"},
    {28, 7, 0.550, 0.603, "{6,6,6,5,5}"},
}};

/// Runs the command line `args` (args[0] is the program name). Table output
/// goes to `out` unless --out is given; diagnostics and the run manifest of
/// stdout runs go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qcaclone::cli

#endif
