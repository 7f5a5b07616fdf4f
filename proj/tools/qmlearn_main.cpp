// Copyright 2026 The qmlearn Authors
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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qmlearn/errors.hpp"
#include "qmlearn/run.hpp"

int main(int argc, char **argv) {
    using namespace qmlearn;

    CLI::App app{"Learn hidden multilinear polynomials over F_q with counted oracle queries"};
    RunConfig cfg;
    std::string mode = "both";
    std::string n_text;
    std::string d_text = "1";
    std::string format = "json";
    std::string poly_file;
    std::string out_path;

    app.add_option("--q", cfg.fields, "Field: p^r:c0,...,cr, p^r or a bare order q (repeat for sweeps)");
    app.add_option("--n", n_text, "Number of variables; sweeps accept a..b or a,b,c");
    app.add_option("--d", d_text, "Degree bound; sweeps accept a..b or a,b,c");
    app.add_option("--mode", mode, "classical|quantum|both|verify-fs|verify-kickback|verify-count|bound-table|sweep");
    app.add_option("--trials", cfg.trials, "Random polynomials per configuration");
    app.add_option("--seed", cfg.seed, "Master seed");
    app.add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--poly-file", poly_file, "Hidden polynomial in JSON form instead of random ones");
    app.add_option("--mem-cap", cfg.mem_cap, "Largest number of amplitudes in one state vector");
    app.add_option("--out", out_path, "Write rows to this file instead of stdout");
    app.add_flag("--timing", cfg.timing, "Include wall time in verifier reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        cfg.mode = parse_mode(mode);
        if (!n_text.empty()) cfg.n_values = parse_int_list(n_text);
        cfg.d_values = parse_int_list(d_text);
        // A polynomial file supplies the field, n and d for the learn modes.
        const bool learn = cfg.mode == Mode::Classical || cfg.mode == Mode::Quantum || cfg.mode == Mode::Both;
        const bool from_file = learn && !poly_file.empty();
        if (cfg.n_values.empty() && !from_file) throw Error(ErrorCode::ParseError, "--n is required");
        if (cfg.fields.empty() && !from_file) throw Error(ErrorCode::ParseError, "--q is required");
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    if (!poly_file.empty()) cfg.poly_file = poly_file;

    if (out_path.empty()) return run(cfg, std::cout, std::cerr);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return kExitUsage;
    }
    return run(cfg, out, std::cerr);
}
