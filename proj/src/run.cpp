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

#include "qmlearn/run.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "qmlearn/errors.hpp"
#include "qmlearn/learners.hpp"
#include "qmlearn/poly_io.hpp"
#include "qmlearn/verification.hpp"

namespace qmlearn {

namespace {

using Row = nlohmann::ordered_json;

const std::vector<std::string> kLearnColumns = {"kind",     "learner",        "field", "n",           "d",
                                                "trial",    "seed",           "trials", "queries_used", "expected_queries",
                                                "exact",    "count_match",    "per_degree", "error"};
const std::vector<std::string> kSweepColumns = {"kind",          "field",          "q",      "n",
                                                "d",             "classical_queries", "quantum_queries", "ratio",
                                                "trials",        "classical_exact", "quantum_exact", "status"};
const std::vector<std::string> kBoundColumns = {"kind",
                                                "q",
                                                "n",
                                                "d",
                                                "r",
                                                "error_lower_bound",
                                                "min_queries_for_third",
                                                "quantum_queries",
                                                "classical_queries",
                                                "asymptotic_optimality_verified"};

std::string csv_cell(const Row &v) {
    if (v.is_null()) return "";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + csv_cell(v[i]);
        return out;
    }
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s.find_first_of(",\"") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char c : s) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
        return quoted + "\"";
    }
    return v.dump();
}

class RowWriter {
public:
    RowWriter(std::ostream &out, OutputFormat format, const std::vector<std::string> &columns)
        : out_(out), format_(format), columns_(columns) {
        if (format_ == OutputFormat::Csv) {
            for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
            out_ << '\n';
        }
    }

    void write(const Row &row) {
        if (format_ == OutputFormat::Json) {
            out_ << row.dump() << '\n';
            return;
        }
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            out_ << (i ? "," : "") << (row.contains(columns_[i]) ? csv_cell(row[columns_[i]]) : "");
        }
        out_ << '\n';
    }

private:
    std::ostream &out_;
    OutputFormat format_;
    const std::vector<std::string> &columns_;
};

int single(const std::vector<int> &values, const char *flag) {
    if (values.size() != 1) throw Error(ErrorCode::ParseError, std::string(flag) + " takes a single value in this mode");
    return values.front();
}

const std::string &single_field(const RunConfig &cfg) {
    if (cfg.fields.size() != 1) throw Error(ErrorCode::ParseError, "--q takes a single field in this mode");
    return cfg.fields.front();
}

struct LearnOutcome {
    std::uint64_t queries = 0;
    bool exact = false;
    std::vector<std::uint64_t> per_degree;
    std::string error;
};

LearnOutcome run_learner(bool quantum, const MultilinearPoly &secret, int n, int d, std::size_t cap) {
    const HiddenOracle oracle(secret, cap);
    LearnOutcome out;
    try {
        const auto report = quantum ? quantum_learn(oracle, n, d) : classical_learn(oracle, n, d);
        out.queries = report.queries_used;
        out.exact = poly_equal(report.learned, secret);
        out.per_degree = report.per_degree_queries;
    } catch (const Error &e) {
        if (e.code() == ErrorCode::MemoryLimitExceeded) throw;
        out.queries = oracle.queries();
        out.error = e.what();
    }
    return out;
}

int run_learn(const RunConfig &cfg, std::ostream &out) {
    std::optional<MultilinearPoly> file_poly;
    if (cfg.poly_file) file_poly = load_poly(*cfg.poly_file);

    const FieldCtx ctx = cfg.fields.empty() && file_poly ? file_poly->field() : FieldCtx::parse(single_field(cfg));
    int n = file_poly ? file_poly->num_vars() : single(cfg.n_values, "--n");
    int d = file_poly ? file_poly->degree_bound() : single(cfg.d_values, "--d");
    if (file_poly && !(file_poly->field() == ctx)) {
        throw Error(ErrorCode::ParseError, "--q disagrees with the field in --poly-file");
    }
    if (n < 1 || n > SubsetIndex::kMaxVars) throw Error(ErrorCode::ParseError, "--n must be in [1, 64]");
    if (d < 0) throw Error(ErrorCode::ParseError, "--d must be nonnegative");
    d = std::min(d, n);
    if (cfg.trials < 1) throw Error(ErrorCode::ParseError, "--trials must be positive");

    std::vector<bool> learners;  // true = quantum
    if (cfg.mode != Mode::Classical) learners.push_back(true);
    if (cfg.mode != Mode::Quantum) learners.push_back(false);
    if (std::find(learners.begin(), learners.end(), true) != learners.end()) {
        checked_dimension(ctx.q(), n, cfg.mem_cap);
    }

    RowWriter writer(out, cfg.format, kLearnColumns);
    bool failed = false;
    for (bool quantum : learners) {
        const std::uint64_t expected = quantum ? quantum_query_count(n, d) : classical_query_count(n, d);
        bool all_exact = true;
        bool all_match = true;
        for (int t = 0; t < cfg.trials; ++t) {
            const std::uint64_t trial_seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(t));
            const auto secret = file_poly ? *file_poly : random_poly(ctx, n, d, trial_seed);
            const auto res = run_learner(quantum, secret, n, d, cfg.mem_cap);
            all_exact = all_exact && res.exact;
            all_match = all_match && res.queries == expected;
            Row row;
            row["kind"] = "trial";
            row["learner"] = quantum ? "quantum" : "classical";
            row["field"] = ctx.spec();
            row["n"] = n;
            row["d"] = d;
            row["trial"] = t;
            row["seed"] = trial_seed;
            row["queries_used"] = res.queries;
            row["exact"] = res.exact;
            row["per_degree"] = res.per_degree;
            if (!res.error.empty()) row["error"] = res.error;
            writer.write(row);
        }
        Row summary;
        summary["kind"] = "summary";
        summary["learner"] = quantum ? "quantum" : "classical";
        summary["field"] = ctx.spec();
        summary["n"] = n;
        summary["d"] = d;
        summary["trials"] = cfg.trials;
        summary["expected_queries"] = expected;
        summary["exact"] = all_exact;
        summary["count_match"] = all_match;
        writer.write(summary);
        failed = failed || !all_exact || !all_match;
    }
    return failed ? kExitFailure : kExitOk;
}

int run_sweep(const RunConfig &cfg, std::ostream &out) {
    if (cfg.fields.empty() || cfg.n_values.empty() || cfg.d_values.empty()) {
        throw Error(ErrorCode::ParseError, "sweep needs --q, --n and --d");
    }
    if (cfg.trials < 1) throw Error(ErrorCode::ParseError, "--trials must be positive");
    RowWriter writer(out, cfg.format, kSweepColumns);
    bool failed = false;
    for (const auto &spec : cfg.fields) {
        const auto ctx = FieldCtx::parse(spec);
        for (int n : cfg.n_values) {
            if (n < 1 || n > SubsetIndex::kMaxVars) throw Error(ErrorCode::ParseError, "--n must be in [1, 64]");
            for (int d : cfg.d_values) {
                if (d < 0 || d > n) continue;
                const auto classical = classical_query_count(n, d);
                const auto quantum = quantum_query_count(n, d);
                Row row;
                row["kind"] = "sweep";
                row["field"] = ctx.spec();
                row["q"] = ctx.q();
                row["n"] = n;
                row["d"] = d;
                row["classical_queries"] = classical;
                row["quantum_queries"] = quantum;
                row["ratio"] = static_cast<double>(quantum) / static_cast<double>(classical);
                row["trials"] = cfg.trials;
                bool fits = true;
                try {
                    checked_dimension(ctx.q(), n, cfg.mem_cap);
                } catch (const Error &) {
                    fits = false;
                }
                if (!fits) {
                    row["classical_exact"] = nullptr;
                    row["quantum_exact"] = nullptr;
                    row["status"] = "skipped";
                    writer.write(row);
                    continue;
                }
                bool c_ok = true;
                bool q_ok = true;
                for (int t = 0; t < cfg.trials; ++t) {
                    const auto seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(t));
                    const auto secret = random_poly(ctx, n, d, seed);
                    const auto c_res = run_learner(false, secret, n, d, cfg.mem_cap);
                    const auto q_res = run_learner(true, secret, n, d, cfg.mem_cap);
                    c_ok = c_ok && c_res.exact && c_res.queries == classical;
                    q_ok = q_ok && q_res.exact && q_res.queries == quantum;
                }
                row["classical_exact"] = c_ok;
                row["quantum_exact"] = q_ok;
                row["status"] = (c_ok && q_ok) ? "ok" : "failed";
                failed = failed || !c_ok || !q_ok;
                writer.write(row);
            }
        }
    }
    return failed ? kExitFailure : kExitOk;
}

int run_bound_table(const RunConfig &cfg, std::ostream &out) {
    const auto ctx = FieldCtx::parse(single_field(cfg));
    const int n = single(cfg.n_values, "--n");
    const int d = std::min(single(cfg.d_values, "--d"), n);
    if (n < 1 || d < 0) throw Error(ErrorCode::ParseError, "need n >= 1 and d >= 0");
    const auto quantum = quantum_query_count(n, d);
    const auto min_r = lower_bound_report(ctx.q(), n, d, 0).min_queries_for_third;
    const std::uint64_t last = std::max<std::uint64_t>(min_r, quantum);

    RowWriter writer(out, cfg.format, kBoundColumns);
    for (std::uint64_t r = 0; r <= last; ++r) {
        Row row;
        row["kind"] = "bound";
        row["q"] = ctx.q();
        row["n"] = n;
        row["d"] = d;
        row["r"] = r;
        row["error_lower_bound"] = lower_bound_report(ctx.q(), n, d, r).error_lower_bound;
        writer.write(row);
    }
    Row summary;
    summary["kind"] = "summary";
    summary["q"] = ctx.q();
    summary["n"] = n;
    summary["d"] = d;
    summary["min_queries_for_third"] = min_r;
    summary["quantum_queries"] = quantum;
    summary["classical_queries"] = classical_query_count(n, d);
    summary["asymptotic_optimality_verified"] = false;
    if (cfg.format == OutputFormat::Json) {
        summary["note"] = "formula evaluation only; optimality of the n^(d-1) scaling is an asymptotic statement";
    }
    writer.write(summary);
    return kExitOk;
}

int run_verify(const RunConfig &cfg, std::ostream &out) {
    const auto ctx = FieldCtx::parse(single_field(cfg));
    const int n = single(cfg.n_values, "--n");
    VerificationReport report;
    switch (cfg.mode) {
        case Mode::VerifyFs:
            report = verify_lemma_fs(ctx, n, single(cfg.d_values, "--d"), cfg.trials, cfg.seed);
            break;
        case Mode::VerifyKickback:
            report = verify_kickback(ctx, n, cfg.trials, cfg.seed, cfg.mem_cap);
            break;
        default:
            report = verify_counting(ctx, n, single(cfg.d_values, "--d"));
            break;
    }
    out << report.to_json(cfg.timing) << '\n';
    return report.ok() ? kExitOk : kExitFailure;
}

}  // namespace

Mode parse_mode(std::string_view name) {
    static const std::pair<std::string_view, Mode> names[] = {
        {"classical", Mode::Classical},     {"quantum", Mode::Quantum},
        {"both", Mode::Both},               {"verify-fs", Mode::VerifyFs},
        {"verify-kickback", Mode::VerifyKickback}, {"verify-count", Mode::VerifyCount},
        {"bound-table", Mode::BoundTable},  {"sweep", Mode::Sweep},
    };
    for (const auto &[k, v] : names) {
        if (k == name) return v;
    }
    throw Error(ErrorCode::ParseError, "unknown mode '" + std::string(name) + "'");
}

std::string_view mode_name(Mode mode) {
    switch (mode) {
        case Mode::Classical: return "classical";
        case Mode::Quantum: return "quantum";
        case Mode::Both: return "both";
        case Mode::VerifyFs: return "verify-fs";
        case Mode::VerifyKickback: return "verify-kickback";
        case Mode::VerifyCount: return "verify-count";
        case Mode::BoundTable: return "bound-table";
        case Mode::Sweep: return "sweep";
    }
    return "unknown";
}

std::vector<int> parse_int_list(std::string_view text) {
    auto to_int = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
            throw Error(ErrorCode::ParseError, "bad integer list '" + std::string(text) + "'");
        }
        return v;
    };
    std::vector<int> out;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        if (const auto dots = item.find(".."); dots != std::string_view::npos) {
            const int lo = to_int(item.substr(0, dots));
            const int hi = to_int(item.substr(dots + 2));
            if (hi < lo) throw Error(ErrorCode::ParseError, "empty range '" + std::string(item) + "'");
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(to_int(item));
        }
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return out;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        switch (config.mode) {
            case Mode::Classical:
            case Mode::Quantum:
            case Mode::Both: return run_learn(config, out);
            case Mode::Sweep: return run_sweep(config, out);
            case Mode::BoundTable: return run_bound_table(config, out);
            case Mode::VerifyFs:
            case Mode::VerifyKickback:
            case Mode::VerifyCount: return run_verify(config, out);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        switch (e.code()) {
            case ErrorCode::MemoryLimitExceeded:
            case ErrorCode::BudgetExceeded: return kExitResource;
            case ErrorCode::ParseError:
            case ErrorCode::InvalidField:
            case ErrorCode::InvalidDegree:
            case ErrorCode::IndexOutOfRange: return kExitUsage;
            default: return kExitFailure;
        }
    }
    return kExitFailure;
}

}  // namespace qmlearn
