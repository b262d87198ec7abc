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

#include "cli.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcaclone/cone_geometry.h"
#include "qcaclone/evaluator.h"
#include "qcaclone/optimizer.h"
#include "qcaclone/oracle_full.h"
#include "qcaclone/sector_sim.h"

namespace qcaclone::cli {

namespace {

using nlohmann::json;
using Cell = std::variant<long long, double, std::string, bool>;

constexpr double kCrosscheckLimit = 1e-10;
constexpr int kCrosscheckMaxGates = 10;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Emit JSON rows as plain arrays instead of objects keyed by column.
    bool json_arrays = false;
    /// Extra top-level JSON members.
    json extra = json::object();
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string csv_cell(const Cell &c) {
    return std::visit(
        [](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::string>) {
                if (v.find_first_of(",\"\n") == std::string::npos) {
                    return v;
                }
                std::string q = "\"";
                for (char ch : v) {
                    if (ch == '"') {
                        q += '"';
                    }
                    q += ch;
                }
                return q + "\"";
            } else {
                return std::to_string(v);
            }
        },
        c);
}

json json_cell(const Cell &c) {
    return std::visit([](const auto &v) { return json(v); }, c);
}

void write_csv(std::ostream &os, const Table &t) {
    for (size_t i = 0; i < t.columns.size(); i++) {
        os << (i ? "," : "") << csv_cell(t.columns[i]);
    }
    os << '\n';
    for (const auto &row : t.rows) {
        for (size_t i = 0; i < row.size(); i++) {
            os << (i ? "," : "") << csv_cell(row[i]);
        }
        os << '\n';
    }
}

void write_json(std::ostream &os, const Table &t, const json &manifest) {
    json doc = t.extra;
    doc["manifest"] = manifest;
    doc["columns"] = t.columns;
    json rows = json::array();
    for (const auto &row : t.rows) {
        if (t.json_arrays) {
            json r = json::array();
            for (const auto &c : row) {
                r.push_back(json_cell(c));
            }
            rows.push_back(std::move(r));
        } else {
            json r = json::object();
            for (size_t i = 0; i < row.size(); i++) {
                r[t.columns[i]] = json_cell(row[i]);
            }
            rows.push_back(std::move(r));
        }
    }
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << '\n';
}

struct Options {
    int layers = 1;
    int gates = 1;
    int trials = 50;
    std::string gate = "upcc";
    std::string format = "csv";
    std::string out_path;
    std::string clone_set = "touched";
    OptConfig opt;
};

json manifest_for(const std::string &command, const Options &o) {
    json params = {
        {"seed", o.opt.seed},
        {"multistarts", o.opt.multistarts},
        {"max_iter", o.opt.max_iterations},
        {"tol", o.opt.simplex_tolerance},
        {"jobs", o.opt.jobs},
        {"format", o.format},
        {"out", o.out_path},
        {"clone_set", o.clone_set},
    };
    if (command == "rest-frame" || command == "map") {
        params["layers"] = o.layers;
        params["gate"] = o.gate;
    }
    if (command == "foliate" || command == "partitions" || command == "crosscheck") {
        params["gates"] = o.gates;
    }
    if (command == "crosscheck") {
        params["trials"] = o.trials;
    }
    return {{"command", command}, {"version", kVersion}, {"parameters", params}};
}

std::vector<Cell> params_cells(const std::vector<double> &p) {
    std::vector<Cell> cells;
    for (size_t i = 0; i < 4; i++) {
        cells.emplace_back(i < p.size() ? p[i] : 0.0);
    }
    return cells;
}

Table cmd_rest_frame(const Options &o) {
    bool optimize = o.gate == "optimize";
    Table t;
    t.columns = {"layers", "gates", "fidelity_upcc"};
    if (optimize) {
        for (const char *c : {"fidelity_optimized", "gain", "evaluations", "converged", "theta", "a", "b", "d"}) {
            t.columns.emplace_back(c);
        }
    }
    for (int n = 1; n <= o.layers; n++) {
        Partition p = rest_frame_partition(n);
        double upcc = foliation_fidelity(p, upcc_gate());
        std::vector<Cell> row{static_cast<long long>(n), static_cast<long long>(p.total()), upcc};
        if (optimize) {
            OptimizationReport r = optimize_rest_frame(n, o.opt);
            row.emplace_back(r.best_fidelity);
            row.emplace_back(r.best_fidelity - upcc);
            row.emplace_back(static_cast<long long>(r.evaluations));
            row.emplace_back(r.converged);
            for (auto &c : params_cells(r.best_params)) {
                row.push_back(std::move(c));
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string join_partitions(const std::vector<Partition> &ps) {
    std::string s;
    for (const auto &p : ps) {
        s += (s.empty() ? "" : " ") + p.to_string();
    }
    return s;
}

Table cmd_foliate(const Options &o) {
    CloneSet cs = parse_clone_set(o.clone_set);
    OptimizationReport r = optimize_over_foliations(o.gates, o.opt, cs);
    Table t;
    t.columns = {"kind", "gates", "partition", "clones", "fidelity", "converged", "theta", "a",
                 "b", "d", "rest_fidelity", "ties"};
    for (const auto &pr : r.per_partition) {
        Foliation f = foliation_from_partition(pr.partition);
        std::vector<Cell> row{std::string("partition"), static_cast<long long>(o.gates), pr.partition.to_string(),
                              static_cast<long long>(f.clone_wires(cs).size()), pr.fidelity, pr.converged};
        for (double v : pr.params) {
            row.emplace_back(v);
        }
        row.emplace_back(std::string());
        row.emplace_back(std::string());
        t.rows.push_back(std::move(row));
    }

    // The rest-frame reference exists only for triangular gate counts.
    Cell rest = std::string();
    int n = static_cast<int>(std::lround((std::sqrt(8.0 * o.gates + 1) - 1) / 2));
    if (n * (n + 1) / 2 == o.gates) {
        Partition rp = rest_frame_partition(n);
        for (const auto &pr : r.per_partition) {
            if (pr.partition == rp) {
                rest = pr.fidelity;
            }
        }
    }
    Foliation bf = foliation_from_partition(*r.partition);
    std::vector<Cell> row{std::string("summary"), static_cast<long long>(o.gates), r.partition->to_string(),
                          static_cast<long long>(bf.clone_wires(cs).size()), r.best_fidelity, r.converged};
    for (auto &c : params_cells(r.best_params)) {
        row.push_back(std::move(c));
    }
    row.push_back(rest);
    row.emplace_back(join_partitions(r.ties));
    t.rows.push_back(std::move(row));
    return t;
}

GateUnitary gate_for_map(const Options &o) {
    if (o.gate == "optimize") {
        return optimize_rest_frame(o.layers, o.opt).best_gate;
    }
    return upcc_gate();
}

Table cmd_map(const Options &o) {
    FidelityMap m = fidelity_map(o.layers, gate_for_map(o));
    Table t;
    t.json_arrays = true;
    json wires = json::array();
    for (int c = 0; c < m.num_wires(); c++) {
        t.columns.push_back(std::to_string(m.first_wire + c));
        wires.push_back(m.first_wire + c);
    }
    for (const auto &vals : m.values) {
        std::vector<Cell> row;
        for (double v : vals) {
            row.emplace_back(v);
        }
        t.rows.push_back(std::move(row));
    }
    t.extra["wires"] = wires;
    t.extra["layers"] = m.layers;
    return t;
}

Table cmd_partitions(const Options &o) {
    std::vector<Partition> all = partitions(o.gates);
    Table t;
    t.columns = {"partition"};
    for (const auto &p : all) {
        t.rows.push_back({p.to_string()});
    }
    t.extra["count"] = all.size();
    return t;
}

struct CrosscheckResult {
    Table table;
    bool ok = false;
};

CrosscheckResult cmd_crosscheck(const Options &o) {
    std::vector<Partition> all = partitions(o.gates);
    std::mt19937_64 rng(derive_seed(o.opt.seed, 0xC4EC, 0));
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    double worst = 0;
    double worst_leak = 0;
    for (int trial = 0; trial < o.trials; trial++) {
        const Partition &p = all[static_cast<size_t>(rng() % all.size())];
        double angles[4];
        for (double &a : angles) {
            a = 2 * std::numbers::pi * uniform();
        }
        double phi = 2 * std::numbers::pi * uniform();
        GateUnitary v = unitary_from_params(angles[0], angles[1], angles[2], angles[3]);
        Foliation f = foliation_from_partition(p);
        SectorState sector = run_circuit(f, v);
        oracle::MappedCircuit mc = oracle::map_to_register(f);
        oracle::FullState full = oracle::simulate_full(mc.pairs, v, mc.num_qubits, mc.input_qubit, phi);
        for (int q = 0; q < mc.num_qubits; q++) {
            double d = std::abs(local_fidelity(sector, mc.first_wire + q) - oracle::reduced_fidelity_full(full, q, phi));
            worst = std::max(worst, d);
        }
        worst_leak = std::max(worst_leak, oracle::population_outside_sector(full));
    }
    CrosscheckResult res;
    res.ok = worst <= kCrosscheckLimit;
    res.table.columns = {"gates", "trials", "max_discrepancy", "max_outside_population", "limit", "status"};
    res.table.rows.push_back({static_cast<long long>(o.gates), static_cast<long long>(o.trials), worst, worst_leak,
                              kCrosscheckLimit, std::string(res.ok ? "pass" : "fail")});
    return res;
}

Table cmd_table1(const Options &o) {
    CloneSet cs = parse_clone_set(o.clone_set);
    Table t;
    t.columns = {"gates",           "layers",        "rest_fidelity",    "rest_paper",     "rest_delta",
                 "rest_rounded",    "best_fidelity", "best_paper",       "best_delta",     "best_rounded",
                 "best_partition",  "paper_partition", "partition_match", "ties",         "clone_set"};
    for (const auto &ref : kReferenceTable) {
        OptimizationReport rest = optimize_rest_frame(ref.layers, o.opt);
        OptimizationReport best = optimize_over_foliations(ref.gates, o.opt, cs);
        std::string bp = best.partition->to_string();
        bool match = false;
        for (const auto &tp : best.ties) {
            match = match || tp.to_string() == ref.partition;
        }
        t.rows.push_back({static_cast<long long>(ref.gates), static_cast<long long>(ref.layers), rest.best_fidelity,
                          ref.rest, rest.best_fidelity - ref.rest, std::round(rest.best_fidelity * 1000) / 1000,
                          best.best_fidelity, ref.best, best.best_fidelity - ref.best,
                          std::round(best.best_fidelity * 1000) / 1000, bp, std::string(ref.partition), match,
                          join_partitions(best.ties), std::string(clone_set_name(cs))});
    }
    return t;
}

void add_opt_flags(CLI::App *sub, Options &o) {
    sub->add_option("--seed", o.opt.seed, "Seed for optimizer start points")->capture_default_str();
    sub->add_option("--multistarts", o.opt.multistarts, "Simplex restarts per search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-iter", o.opt.max_iterations, "Iteration cap per restart")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--tol", o.opt.simplex_tolerance, "Simplex objective spread tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--jobs", o.opt.jobs, "Worker threads for partition sweeps (0 = all cores)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
}

void add_output_flags(CLI::App *sub, Options &o) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", o.out_path, "Output file (default: standard output)");
}

void add_clone_set_flag(CLI::App *sub, Options &o) {
    sub->add_option("--clone-set", o.clone_set, "Averaging set for foliations")
        ->check(CLI::IsMember({"touched", "leaf"}))
        ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    o.opt.jobs = 0;

    CLI::App app{"Phase-covariant cloning by a one-dimensional quantum cellular automaton"};
    app.name("qcaclone");
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto *rest = app.add_subcommand("rest-frame", "Average fidelity of the rest-frame automaton per layer count");
    rest->add_option("--layers", o.layers, "Largest layer count")->required()->check(CLI::PositiveNumber);
    rest->add_option("--gate", o.gate, "Gate choice")->check(CLI::IsMember({"upcc", "optimize"}))->capture_default_str();
    add_opt_flags(rest, o);
    add_output_flags(rest, o);

    auto *fol = app.add_subcommand("foliate", "Optimize every foliation with a fixed number of gates");
    fol->add_option("--gates", o.gates, "Gate budget M")->required()->check(CLI::PositiveNumber);
    add_opt_flags(fol, o);
    add_output_flags(fol, o);
    add_clone_set_flag(fol, o);

    auto *map = app.add_subcommand("map", "Layer-by-wire local fidelity map of the rest frame");
    // rest-frame requires --layers, so this default only reaches map.
    o.layers = 40;
    map->add_option("--layers", o.layers, "Layer count")->check(CLI::PositiveNumber)->capture_default_str();
    map->add_option("--gate", o.gate, "Gate choice")->check(CLI::IsMember({"upcc", "optimize"}))->capture_default_str();
    add_opt_flags(map, o);
    add_output_flags(map, o);

    auto *parts = app.add_subcommand("partitions", "List the partitions of M");
    parts->add_option("gates", o.gates, "M")->required()->check(CLI::PositiveNumber);
    add_output_flags(parts, o);

    auto *cross = app.add_subcommand("crosscheck", "Compare sector fidelities with the full statevector oracle");
    cross->add_option("--gates", o.gates, "Gate budget M")->required()->check(CLI::Range(1, kCrosscheckMaxGates));
    cross->add_option("--trials", o.trials, "Random instances")->check(CLI::PositiveNumber)->capture_default_str();
    cross->add_option("--seed", o.opt.seed, "Seed")->capture_default_str();
    add_output_flags(cross, o);

    auto *table = app.add_subcommand("table1", "Rest-frame and foliation-optimized fidelities next to published values");
    add_opt_flags(table, o);
    add_output_flags(table, o);
    add_clone_set_flag(table, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    Table result;
    bool ok = true;
    std::string command;
    try {
        if (rest->parsed()) {
            command = "rest-frame";
            result = cmd_rest_frame(o);
        } else if (fol->parsed()) {
            command = "foliate";
            result = cmd_foliate(o);
        } else if (map->parsed()) {
            command = "map";
            result = cmd_map(o);
        } else if (parts->parsed()) {
            command = "partitions";
            result = cmd_partitions(o);
        } else if (cross->parsed()) {
            command = "crosscheck";
            auto r = cmd_crosscheck(o);
            result = std::move(r.table);
            ok = r.ok;
        } else {
            command = "table1";
            result = cmd_table1(o);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json manifest = manifest_for(command, o);
    json timed = manifest;
    timed["duration_seconds"] = seconds;

    std::ostringstream body;
    if (o.format == "json") {
        write_json(body, result, manifest);
    } else if (command == "partitions") {
        for (const auto &row : result.rows) {
            body << std::get<std::string>(row[0]) << '\n';
        }
        body << "count: " << result.rows.size() << '\n';
    } else {
        write_csv(body, result);
    }

    if (o.out_path.empty()) {
        out << body.str();
        err << "manifest: " << timed.dump() << '\n';
    } else {
        std::ofstream f(o.out_path, std::ios::binary);
        f << body.str();
        std::ofstream mf(o.out_path + ".manifest.json", std::ios::binary);
        mf << timed.dump(2) << '\n';
        if (!f || !mf) {
            err << "error: cannot write " << o.out_path << '\n';
            return kExitIo;
        }
    }
    if (!ok) {
        err << "self-check failed\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

}  // namespace qcaclone::cli
