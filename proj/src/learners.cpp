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

#include "qmlearn/learners.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "qmlearn/errors.hpp"

namespace qmlearn {

namespace {

void check_vars(const HiddenOracle &o, int n) {
    if (o.num_vars() != n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "oracle has " + std::to_string(o.num_vars()) + " variables, learner asked for " + std::to_string(n));
    }
}

}  // namespace

std::uint64_t classical_query_count(int n, int d) {
    std::uint64_t total = 0;
    for (int i = 0; i <= std::min(d, n); ++i) total += binomial(n, i);
    return total;
}

std::uint64_t quantum_query_count(int n, int d) {
    std::uint64_t total = 1;
    for (int i = 1; i <= std::min(d, n); ++i) total += (std::uint64_t{1} << (i - 1)) * binomial(n, i - 1);
    return total;
}

LearnReport classical_learn(const HiddenOracle &o, int n, int d) {
    check_vars(o, n);
    const auto &ledger = o.ledger();
    const std::uint64_t start = ledger.count();
    LearnReport report{MultilinearPoly(o.field(), n, d), 0, {}};
    const int top = report.learned.degree_bound();

    HiddenOracle view = o;
    for (int k = 0; k <= top; ++k) {
        const std::uint64_t before = ledger.count();
        MultilinearPoly level(o.field(), n, top);
        for (auto s : subsets_of_size(n, k)) level.set(s, view.classical_query(PointVec::indicator(n, s)));
        view = view.reduced(level);
        report.learned += level;
        report.per_degree_queries.push_back(ledger.count() - before);
    }
    std::reverse(report.per_degree_queries.begin(), report.per_degree_queries.end());
    report.queries_used = ledger.count() - start;
    return report;
}

LinearLearnResult learn_affine(const FieldCtx &ctx, int n, const PhaseOracle &phase, const QueryLedger &ledger,
                               std::size_t mem_cap) {
    StateVector psi = prepare_uniform(ctx, n, mem_cap);
    const std::uint64_t before = ledger.count();
    phase(psi);
    const std::uint64_t spent = ledger.count() - before;
    apply_all(psi, build_qft(ctx).inverse());
    auto m = measure_computational(psi);
    if (m.probability < kCertaintyThreshold) {
        throw Error(ErrorCode::PromiseViolated,
                    "top outcome probability " + std::to_string(m.probability) + " is below certainty");
    }
    return {std::move(m.outcome), spent, m.probability};
}

LinearLearnResult quantum_learn_linear(const HiddenOracle &o, int n) {
    check_vars(o, n);
    const auto one = o.field().one();
    return learn_affine(
        o.field(), n, [&](StateVector &psi) { o.apply_phase_oracle(psi, one); }, o.ledger(), o.mem_cap());
}

TopDegreeResult learn_top_degree(const HiddenOracle &o, int n, int d) {
    check_vars(o, n);
    if (d < 1 || d > n) throw Error(ErrorCode::InvalidDegree, "top degree must be in [1, n]");
    const auto &ctx = o.field();
    const std::uint64_t start = o.ledger().count();

    std::map<std::uint64_t, FieldElem> found;
    for (auto s : subsets_of_size(n, d - 1)) {
        const auto res = learn_affine(
            ctx, n, [&](StateVector &psi) { apply_fS_phase_oracle(o, psi, s, ctx.one()); }, o.ledger(), o.mem_cap());
        for (int k = 1; k <= n; ++k) {
            const FieldElem a = res.a[static_cast<std::size_t>(k - 1)];
            if (s.contains(k)) {
                if (a.value != 0) {
                    throw Error(ErrorCode::InconsistentCoefficients,
                                "f_S depends on x_" + std::to_string(k) + " although k is in S");
                }
                continue;
            }
            const auto [it, inserted] = found.emplace(s.with(k).mask(), a);
            if (!inserted && it->second != a) {
                throw Error(ErrorCode::InconsistentCoefficients,
                            "two determinations of one degree-" + std::to_string(d) + " coefficient disagree");
            }
        }
    }

    TopDegreeResult out{MultilinearPoly(ctx, n, d), 0};
    for (const auto &[mask, a] : found) out.top.set(SubsetIndex::from_mask(mask), a);
    out.queries = o.ledger().count() - start;
    return out;
}

LearnReport quantum_learn(const HiddenOracle &o, int n, int d) {
    check_vars(o, n);
    const auto &ledger = o.ledger();
    const std::uint64_t start = ledger.count();
    LearnReport report{MultilinearPoly(o.field(), n, d), 0, {}};
    const int top = report.learned.degree_bound();

    HiddenOracle view = o;
    for (int k = top; k >= 1; --k) {
        auto level = learn_top_degree(view, n, k);
        view = view.reduced(level.top);
        report.learned += level.top;
        report.per_degree_queries.push_back(level.queries);
    }
    const std::uint64_t before = ledger.count();
    report.learned.set(SubsetIndex{}, view.classical_query(PointVec::zeros(n)));
    report.per_degree_queries.push_back(ledger.count() - before);
    report.queries_used = ledger.count() - start;
    return report;
}

LowerBoundReport lower_bound_report(std::uint32_t q, int n, int d, std::uint64_t r) {
    const double total = static_cast<double>(classical_query_count(n, d));
    const double inv_log_q = 1.0 / std::log2(static_cast<double>(q));
    const double per_query = 2.0 * (n + 1);
    auto bound = [&](std::uint64_t rounds) {
        return 1.0 - (per_query * static_cast<double>(rounds) + inv_log_q) / total;
    };

    // Bound <= 1/3 iff r >= (2N/3 - 1/log2 q) / (2(n+1)); settle rounding on the formula itself.
    const double estimate = std::ceil((2.0 * total / 3.0 - inv_log_q) / per_query);
    std::uint64_t r_min = estimate > 0.0 ? static_cast<std::uint64_t>(estimate) : 0;
    while (r_min > 0 && bound(r_min - 1) <= 1.0 / 3.0) --r_min;
    while (bound(r_min) > 1.0 / 3.0) ++r_min;
    return {bound(r), r_min};
}

}  // namespace qmlearn
