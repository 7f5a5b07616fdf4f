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

#include <cstdint>
#include <functional>
#include <vector>

#include "qmlearn/oracle.hpp"
#include "qmlearn/poly.hpp"
#include "qmlearn/statevector.hpp"

namespace qmlearn {

/// Smallest top-outcome probability accepted from a final measurement.
inline constexpr double kCertaintyThreshold = 1.0 - 1e-9;

struct LearnReport {
    MultilinearPoly learned;
    std::uint64_t queries_used = 0;
    /// Queries spent on degree levels d, d-1, ..., 0 (in that order).
    std::vector<std::uint64_t> per_degree_queries;
};

/// Closed-form query counts.
std::uint64_t classical_query_count(int n, int d);  // sum_{i=0}^{d} C(n, i)
std::uint64_t quantum_query_count(int n, int d);    // 1 + sum_{i=1}^{d} 2^{i-1} C(n, i-1)

/// Queries f on every 0/1 point of Hamming weight <= d, lowest weight first.
/// Each weight-k answer, minus the already learned lower-degree parts, is
/// exactly one degree-k coefficient.
LearnReport classical_learn(const HiddenOracle &o, int n, int d);

struct LinearLearnResult {
    PointVec a;
    std::uint64_t queries = 0;
    double probability = 0.0;
};

/// A diagonal phase oracle |x> -> omega^{Tr(g(x))}|x>.
using PhaseOracle = std::function<void(StateVector &)>;

/// Learns a from g(x) = a.x + beta given one use of its phase oracle:
/// uniform superposition, phase oracle, inverse QFT on every register,
/// measurement. beta only contributes a global phase and is not recovered.
/// `queries` is the ledger delta. Throws Error(PromiseViolated) when the top
/// outcome has probability below kCertaintyThreshold (g was not affine).
LinearLearnResult learn_affine(const FieldCtx &ctx, int n, const PhaseOracle &phase, const QueryLedger &ledger,
                               std::size_t mem_cap = kDefaultMemCap);

/// learn_affine against the oracle's own phase oracle (c = 1, no shift).
LinearLearnResult quantum_learn_linear(const HiddenOracle &o, int n);

struct TopDegreeResult {
    MultilinearPoly top;
    std::uint64_t queries = 0;
};

/// Learns the degree-d part of a polynomial of degree <= d: for every
/// (d-1)-subset S in canonical order, one affine learning run on the f_S
/// phase oracle yields alpha_{S+k} for all k outside S. Every degree-d
/// coefficient is found d times and the copies must agree (else
/// Error(InconsistentCoefficients)); the entries a_k for k in S must be zero.
TopDegreeResult learn_top_degree(const HiddenOracle &o, int n, int d);

/// Degree levels d..1 via learn_top_degree on successively reduced views,
/// then one classical query f(0^n) for the constant term.
LearnReport quantum_learn(const HiddenOracle &o, int n, int d);

struct LowerBoundReport {
    /// 1 - (2r(n+1) + 1/log2 q) / (1 + n + C(n,2) + ... + C(n,d)); may be negative.
    double error_lower_bound = 0.0;
    /// Smallest r with error_lower_bound <= 1/3.
    std::uint64_t min_queries_for_third = 0;
};

/// Evaluates the Holevo/Fano error bound for r queries. Formula only.
LowerBoundReport lower_bound_report(std::uint32_t q, int n, int d, std::uint64_t r);

}  // namespace qmlearn
