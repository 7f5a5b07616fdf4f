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

#include "qmlearn/verification.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qmlearn/errors.hpp"
#include "qmlearn/oracle.hpp"
#include "qmlearn/poly.hpp"

namespace qmlearn {

namespace {

constexpr std::size_t kMaxListedCounterexamples = 20;
constexpr double kKickbackTolerance = 1e-12;

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::uint64_t ipow_checked(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (out > limit / base) return limit + 1;
        out *= base;
    }
    return out;
}

// Advances a mixed-radix counter; false once it wraps to all zeros.
bool next_point(PointVec &x, std::uint32_t q) {
    for (int i = x.size(); i-- > 0;) {
        auto &c = x[static_cast<std::size_t>(i)];
        if (++c.value < q) return true;
        c.value = 0;
    }
    return false;
}

std::string describe_point(const PointVec &x) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[static_cast<std::size_t>(i)].value;
    os << ')';
    return os.str();
}

std::string describe_subset(SubsetIndex s) {
    std::ostringstream os;
    os << '{';
    const auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << '}';
    return os.str();
}

VerificationReport make_report(std::string check, const FieldCtx &ctx, int n, int d, int trials, std::uint64_t seed) {
    VerificationReport r;
    r.check = std::move(check);
    r.field = ctx.spec();
    r.n = n;
    r.d = d;
    r.trials = trials;
    r.seed = seed;
    return r;
}

void record(VerificationReport &report, std::uint64_t &failures, std::string what) {
    ++failures;
    if (report.counterexamples.size() < kMaxListedCounterexamples) report.counterexamples.push_back(std::move(what));
}

}  // namespace

std::string VerificationReport::to_json(bool with_timing) const {
    nlohmann::ordered_json doc;
    doc["check"] = check;
    doc["field"] = field;
    doc["n"] = n;
    doc["d"] = d;
    doc["trials"] = trials;
    doc["seed"] = seed;
    doc["cases"] = cases;
    doc["ok"] = ok();
    doc["counterexamples"] = counterexamples;
    auto &m = doc["metrics"] = nlohmann::ordered_json::object();
    for (const auto &[k, v] : metrics) m[k] = v;
    if (with_timing) doc["wall_time_s"] = wall_time_s;
    return doc.dump();
}

VerificationReport verify_lemma_fs(const FieldCtx &ctx, int n, int d, int trials, std::uint64_t seed,
                                   std::uint64_t budget) {
    if (d < 1 || d > n) throw Error(ErrorCode::InvalidDegree, "need 1 <= d <= n");
    if (ipow_checked(ctx.q(), static_cast<std::uint64_t>(n), budget) > budget) {
        throw Error(ErrorCode::BudgetExceeded, "q^n exceeds the exhaustive evaluation budget");
    }
    const Stopwatch clock;
    auto report = make_report("fs-closed-form", ctx, n, d, trials, seed);
    std::uint64_t failures = 0;
    const auto subsets = subsets_of_size(n, d - 1);

    for (int t = 0; t < trials; ++t) {
        const auto f = random_poly(ctx, n, d, mix_seed(seed, static_cast<std::uint64_t>(t)));
        for (auto s : subsets) {
            const auto members = s.members();
            const std::size_t k = members.size();
            auto x = PointVec::zeros(n);
            do {
                // Alternating sum straight from the definition.
                FieldElem lhs{};
                for (std::uint64_t beta = 0; beta < (std::uint64_t{1} << k); ++beta) {
                    PointVec y = x;
                    std::size_t ones = 0;
                    for (std::size_t j = 0; j < k; ++j) {
                        if ((beta >> j) & 1u) {
                            auto &c = y[static_cast<std::size_t>(members[j] - 1)];
                            c = ctx.add(c, ctx.one());
                            ++ones;
                        }
                    }
                    const FieldElem v = evaluate(f, y);
                    lhs = ctx.add(lhs, ((k - ones) % 2 == 1) ? ctx.neg(v) : v);
                }
                // Closed form alpha_S + sum_{k not in S} alpha_{S+k} x_k.
                FieldElem rhs = f.coeff(s);
                for (int i = 1; i <= n; ++i) {
                    if (s.contains(i)) continue;
                    rhs = ctx.add(rhs, ctx.mul(f.coeff(s.with(i)), x[static_cast<std::size_t>(i - 1)]));
                }
                ++report.cases;
                if (lhs != rhs) {
                    record(report, failures,
                           "trial=" + std::to_string(t) + " S=" + describe_subset(s) + " x=" + describe_point(x) +
                               " f_S=" + std::to_string(lhs.value) + " closed_form=" + std::to_string(rhs.value));
                }
            } while (next_point(x, ctx.q()));
        }
    }
    report.metrics.emplace_back("counterexample_count", static_cast<double>(failures));
    report.wall_time_s = clock.seconds();
    return report;
}

VerificationReport verify_kickback(const FieldCtx &ctx, int n_max, int trials, std::uint64_t seed, std::size_t cap) {
    if (n_max < 1) throw Error(ErrorCode::InvalidDegree, "n_max must be at least 1");
    if (ipow_checked(ctx.q(), static_cast<std::uint64_t>(n_max) + 1, cap) > cap) {
        throw Error(ErrorCode::BudgetExceeded, "q^(n+1) exceeds the state-vector budget");
    }
    const Stopwatch clock;
    auto report = make_report("kickback", ctx, n_max, n_max, trials, seed);
    std::uint64_t failures = 0;
    double worst = 0.0;
    const auto qft = build_qft(ctx);

    std::vector<StateVector> ancillas;
    for (std::uint32_t c = 0; c < ctx.q(); ++c) {
        auto anc = StateVector::basis(ctx, PointVec({FieldElem{c}}));
        apply_single(anc, qft.inverse(), 1);
        ancillas.push_back(std::move(anc));
    }

    for (int n = 1; n <= n_max; ++n) {
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t trial_seed = mix_seed(seed, static_cast<std::uint64_t>(n) * 1000003u + t);
            const auto f = random_poly(ctx, n, n, trial_seed);

            std::mt19937_64 rng(mix_seed(trial_seed, 1));
            std::normal_distribution<double> gauss;
            std::vector<Amplitude> amps(checked_dimension(ctx.q(), n, cap));
            for (auto &a : amps) a = Amplitude(gauss(rng), gauss(rng));
            StateVector data(ctx, n, std::move(amps));
            const double nrm = data.norm();
            for (auto &a : data.amplitudes()) a /= nrm;

            for (std::uint32_t c = 0; c < ctx.q(); ++c) {
                const HiddenOracle full_oracle(f, cap);
                auto full = data.tensor(ancillas[c]);
                full_oracle.apply_standard_oracle(full);

                const HiddenOracle phase_oracle(f, cap);
                auto direct = data;
                phase_oracle.apply_phase_oracle(direct, FieldElem{c});
                const auto expected = direct.tensor(ancillas[c]);

                const double dev = max_abs_diff(full.amplitudes(), expected.amplitudes());
                worst = std::max(worst, dev);
                ++report.cases;
                const std::string where = "n=" + std::to_string(n) + " trial=" + std::to_string(t) +
                                          " c=" + std::to_string(c);
                if (!(dev < kKickbackTolerance)) {
                    record(report, failures, where + " deviation=" + std::to_string(dev));
                }
                if (full_oracle.queries() != 1 || phase_oracle.queries() != 1) {
                    record(report, failures, where + " query count differs from 1");
                }
            }
        }
    }
    report.metrics.emplace_back("max_deviation", worst);
    report.metrics.emplace_back("tolerance", kKickbackTolerance);
    report.metrics.emplace_back("counterexample_count", static_cast<double>(failures));
    report.wall_time_s = clock.seconds();
    return report;
}

VerificationReport verify_counting(const FieldCtx &ctx, int n, int d, CountingMode mode, std::uint64_t budget) {
    if (n < 0 || n > SubsetIndex::kMaxVars || d < 0) throw Error(ErrorCode::InvalidDegree, "need 0 <= d, 0 <= n <= 64");
    d = std::min(d, n);
    const Stopwatch clock;
    auto report = make_report("counting", ctx, n, d, 0, 0);
    std::uint64_t failures = 0;

    std::uint64_t exponent = 0;
    for (int i = 0; i <= d; ++i) exponent += binomial(n, i);
    const double formula = std::pow(static_cast<double>(ctx.q()), static_cast<double>(exponent));
    report.metrics.emplace_back("exponent", static_cast<double>(exponent));
    report.metrics.emplace_back("formula_count", formula);

    const std::uint64_t count = ipow_checked(ctx.q(), exponent, budget);
    const bool within = count <= budget;
    if (mode == CountingMode::Exhaustive && !within) {
        throw Error(ErrorCode::BudgetExceeded, "polynomial count exceeds the enumeration budget");
    }
    if (mode == CountingMode::FormulaOnly || !within) {
        report.metrics.emplace_back("exhaustive", 0.0);
        report.wall_time_s = clock.seconds();
        return report;
    }

    std::vector<SubsetIndex> subsets;
    for (int k = 0; k <= d; ++k) {
        for (auto s : subsets_of_size(n, k)) subsets.push_back(s);
    }
    std::set<std::vector<std::uint32_t>> tables;
    std::uint64_t enumerated = 0;
    std::vector<std::uint32_t> digits(subsets.size(), 0);
    while (true) {
        MultilinearPoly f(ctx, n, d);
        for (std::size_t i = 0; i < subsets.size(); ++i) f.set(subsets[i], FieldElem{digits[i]});
        std::vector<std::uint32_t> table;
        auto x = PointVec::zeros(n);
        do {
            table.push_back(evaluate(f, x).value);
        } while (next_point(x, ctx.q()));
        tables.insert(std::move(table));
        ++enumerated;

        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == ctx.q()) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    report.cases = enumerated;

    const double all_functions = std::pow(static_cast<double>(ctx.q()), std::pow(static_cast<double>(ctx.q()), n));
    report.metrics.emplace_back("exhaustive", 1.0);
    report.metrics.emplace_back("enumerated", static_cast<double>(enumerated));
    report.metrics.emplace_back("distinct_functions", static_cast<double>(tables.size()));
    report.metrics.emplace_back("all_functions_multilinear", tables.size() == all_functions ? 1.0 : 0.0);
    if (enumerated != count) record(report, failures, "enumerated count differs from the formula");
    if (tables.size() != enumerated) {
        record(report, failures, "distinct coefficient maps share a truth table");
    }
    report.wall_time_s = clock.seconds();
    return report;
}

}  // namespace qmlearn
