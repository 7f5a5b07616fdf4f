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

#pragma once

// Exhaustive brute-force checks of the algebraic facts the learners rely on.
// These recompute everything from evaluate() and explicit loops; they do not
// call derivative_fn, evaluate_all or the learners.

#include <cstdint>
#include <string>
#include <vector>

#include "qmlearn/field.hpp"
#include "qmlearn/statevector.hpp"

namespace qmlearn {

struct VerificationReport {
    std::string check;
    std::string field;
    int n = 0;
    int d = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t cases = 0;  // individual comparisons performed
    std::vector<std::string> counterexamples;
    double wall_time_s = 0.0;
    /// Check-specific numbers (max deviation, counts, ...), serialized verbatim.
    std::vector<std::pair<std::string, double>> metrics;

    bool ok() const noexcept { return counterexamples.empty(); }
    /// One JSON object; wall time only when `with_timing`.
    std::string to_json(bool with_timing = true) const;
};

inline constexpr std::uint64_t kExhaustiveEvalBudget = 100000;
inline constexpr std::uint64_t kCountingBudget = 1000000;

/// For `trials` random degree-d polynomials, every S with |S| = d-1 and every
/// x in F_q^n: the alternating sum f_S(x) equals
/// alpha_S + sum_{k not in S} alpha_{S+k} x_k. Requires 1 <= d <= n and
/// q^n <= budget (else Error(BudgetExceeded)).
VerificationReport verify_lemma_fs(const FieldCtx &ctx, int n, int d, int trials, std::uint64_t seed,
                                   std::uint64_t budget = kExhaustiveEvalBudget);

/// For n = 1..n_max, random polynomials, random data states and every c in F_q:
/// the standard oracle on data (x) Q^{-1}|c> matches the phase oracle on the
/// data register tensored with the untouched ancilla. Flags deviations >= 1e-12.
/// Throws Error(BudgetExceeded) when q^{n_max+1} > cap.
VerificationReport verify_kickback(const FieldCtx &ctx, int n_max, int trials, std::uint64_t seed,
                                   std::size_t cap = kDefaultMemCap);

enum class CountingMode { Auto, Exhaustive, FormulaOnly };

/// Number of multilinear degree-<=d polynomials is q^{sum_{i<=d} C(n,i)}, and
/// (exhaustive mode) distinct coefficient maps give distinct truth tables.
/// Auto enumerates when the count is within budget and otherwise reports the
/// formula only; Exhaustive over budget throws Error(BudgetExceeded).
VerificationReport verify_counting(const FieldCtx &ctx, int n, int d, CountingMode mode = CountingMode::Auto,
                                   std::uint64_t budget = kCountingBudget);

}  // namespace qmlearn
