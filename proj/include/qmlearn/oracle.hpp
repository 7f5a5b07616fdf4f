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

#include <atomic>
#include <cstdint>
#include <memory>

#include "qmlearn/poly.hpp"
#include "qmlearn/statevector.hpp"

namespace qmlearn {

/// Number of unit-cost invocations of the hidden function. Never decreases.
class QueryLedger {
public:
    std::uint64_t count() const noexcept { return count_.load(std::memory_order_relaxed); }
    void charge(std::uint64_t units) noexcept { count_.fetch_add(units, std::memory_order_relaxed); }

private:
    std::atomic<std::uint64_t> count_{0};
};

/// Counted access to a hidden multilinear polynomial f.
///
/// A HiddenOracle is a handle: copies, and views made with reduced(), share
/// the secret and the ledger. A view answers for f - known, where the
/// subtraction is evaluated classically and costs nothing.
///
/// Cost rules: classical_query, apply_standard_oracle and apply_phase_oracle
/// each charge 1.
///
/// The quantum oracles act on q^n (or q^{n+1}) amplitude vectors, so they
/// tabulate the view's values on F_q^n once, on first use. That table is
/// internal to the oracle; learners only see the charged operations.
class HiddenOracle {
public:
    explicit HiddenOracle(MultilinearPoly secret, std::size_t mem_cap = kDefaultMemCap);

    const FieldCtx &field() const noexcept;
    int num_vars() const noexcept;
    std::size_t mem_cap() const noexcept;
    const QueryLedger &ledger() const noexcept;
    std::uint64_t queries() const noexcept { return ledger().count(); }

    /// The classically known part subtracted by this view (zero for the root oracle).
    const MultilinearPoly &known() const noexcept { return known_; }

    /// f(x) - known(x). Throws Error(DimensionMismatch) for a wrong-length x.
    FieldElem classical_query(const PointVec &x) const;

    /// |x>|y> -> |x>|y + f(x) - known(x)> on n data registers plus a trailing
    /// ancilla register.
    void apply_standard_oracle(StateVector &psi) const;

    /// |x> -> omega^{Tr(c (f - known)(x + shift))} |x>.
    void apply_phase_oracle(StateVector &psi, FieldElem c, const PointVec &shift) const;
    void apply_phase_oracle(StateVector &psi, FieldElem c) const;

    /// A view for f - (known + extra), sharing this oracle's ledger.
    /// Throws Error(ContextMismatch) when `extra` has another field or n.
    HiddenOracle reduced(const MultilinearPoly &extra) const;

private:
    struct Core;
    struct ValueTable;

    HiddenOracle(std::shared_ptr<Core> core, MultilinearPoly known);
    const std::vector<FieldElem> &values() const;
    void check_state(const StateVector &psi, int registers) const;

    std::shared_ptr<Core> core_;
    MultilinearPoly known_;
    std::shared_ptr<ValueTable> table_;
};

inline FieldElem classical_query(const HiddenOracle &o, const PointVec &x) { return o.classical_query(x); }
inline void apply_standard_oracle(const HiddenOracle &o, StateVector &psi) { o.apply_standard_oracle(psi); }
inline void apply_phase_oracle(const HiddenOracle &o, StateVector &psi, FieldElem c, const PointVec &shift) {
    o.apply_phase_oracle(psi, c, shift);
}
inline HiddenOracle reduce_oracle(const HiddenOracle &o, const MultilinearPoly &known) { return o.reduced(known); }

/// |x> -> omega^{Tr(c f_S(x))} |x>, realized as 2^{|S|} phase-oracle calls,
/// one per beta in {0,1}^{|S|} with coefficient (-1)^{|S| - |beta|} c and shift
/// sum_j beta_j e_{S_j}. Charges exactly 2^{|S|}.
void apply_fS_phase_oracle(const HiddenOracle &o, StateVector &psi, SubsetIndex s, FieldElem c);

}  // namespace qmlearn
