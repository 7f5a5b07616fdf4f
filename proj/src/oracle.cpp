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

#include "qmlearn/oracle.hpp"

#include <mutex>
#include <string>

#include "qmlearn/errors.hpp"

namespace qmlearn {

struct HiddenOracle::Core {
    Core(MultilinearPoly f, std::size_t cap) : secret(std::move(f)), mem_cap(cap), roots(secret.field().p()) {}

    const MultilinearPoly secret;
    const std::size_t mem_cap;
    const RootsOfUnity roots;
    QueryLedger ledger;
};

struct HiddenOracle::ValueTable {
    std::once_flag once;
    std::vector<FieldElem> values;
};

HiddenOracle::HiddenOracle(MultilinearPoly secret, std::size_t mem_cap)
    : HiddenOracle(std::make_shared<Core>(secret, mem_cap),
                   MultilinearPoly(secret.field(), secret.num_vars(), secret.degree_bound())) {}

HiddenOracle::HiddenOracle(std::shared_ptr<Core> core, MultilinearPoly known)
    : core_(std::move(core)), known_(std::move(known)), table_(std::make_shared<ValueTable>()) {}

const FieldCtx &HiddenOracle::field() const noexcept { return core_->secret.field(); }
int HiddenOracle::num_vars() const noexcept { return core_->secret.num_vars(); }
std::size_t HiddenOracle::mem_cap() const noexcept { return core_->mem_cap; }
const QueryLedger &HiddenOracle::ledger() const noexcept { return core_->ledger; }

const std::vector<FieldElem> &HiddenOracle::values() const {
    checked_dimension(field().q(), num_vars(), core_->mem_cap);
    std::call_once(table_->once, [this] {
        // evaluate_all is linear in the coefficients, so tabulate f - known directly.
        table_->values = evaluate_all(core_->secret - known_);
    });
    return table_->values;
}

void HiddenOracle::check_state(const StateVector &psi, int registers) const {
    if (!(psi.field() == field())) throw Error(ErrorCode::ContextMismatch, "state is over a different field");
    if (psi.num_registers() != registers) {
        throw Error(ErrorCode::DimensionMismatch, "state has " + std::to_string(psi.num_registers()) +
                                                      " registers, oracle expects " + std::to_string(registers));
    }
}

FieldElem HiddenOracle::classical_query(const PointVec &x) const {
    const FieldElem fx = evaluate(core_->secret, x);
    const FieldElem kx = evaluate(known_, x);
    core_->ledger.charge(1);
    return field().sub(fx, kx);
}

void HiddenOracle::apply_standard_oracle(StateVector &psi) const {
    check_state(psi, num_vars() + 1);
    const auto &vals = values();
    core_->ledger.charge(1);

    const auto &ctx = field();
    const std::size_t q = ctx.q();
    auto amps = psi.amplitudes();
    std::vector<Amplitude> block(q);
    for (std::size_t x = 0; x < vals.size(); ++x) {
        Amplitude *row = &amps[x * q];
        std::copy(row, row + q, block.begin());
        for (std::uint32_t y = 0; y < q; ++y) row[ctx.add(FieldElem{y}, vals[x]).value] = block[y];
    }
}

void HiddenOracle::apply_phase_oracle(StateVector &psi, FieldElem c) const {
    apply_phase_oracle(psi, c, PointVec::zeros(num_vars()));
}

void HiddenOracle::apply_phase_oracle(StateVector &psi, FieldElem c, const PointVec &shift) const {
    const int n = num_vars();
    check_state(psi, n);
    const auto &ctx = field();
    if (shift.size() != n) throw Error(ErrorCode::DimensionMismatch, "shift length differs from n");
    if (!ctx.valid(c)) throw Error(ErrorCode::IndexOutOfRange, "phase coefficient outside F_q");
    for (const auto &s : shift.coords()) {
        if (!ctx.valid(s)) throw Error(ErrorCode::IndexOutOfRange, "shift coordinate outside F_q");
    }
    const auto &vals = values();
    core_->ledger.charge(1);

    const std::uint32_t q = ctx.q();
    std::vector<std::uint32_t> exponent(q);
    for (std::uint32_t v = 0; v < q; ++v) exponent[v] = ctx.trace(ctx.mul(c, FieldElem{v}));

    // Walk x in index order while tracking the index of x + shift.
    std::vector<std::size_t> weight(static_cast<std::size_t>(n));
    std::size_t w = 1;
    for (int i = n; i-- > 0;) {
        weight[static_cast<std::size_t>(i)] = w;
        w *= q;
    }
    auto shifted_digit = [&](int i, std::uint32_t d) {
        return ctx.add(FieldElem{d}, shift[static_cast<std::size_t>(i)]).value;
    };
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(n), 0);
    std::size_t sidx = 0;
    for (int i = 0; i < n; ++i) sidx += shifted_digit(i, 0) * weight[static_cast<std::size_t>(i)];

    const auto &roots = core_->roots;
    auto amps = psi.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        amps[idx] *= roots[exponent[vals[sidx].value]];
        for (int i = n - 1; i >= 0; --i) {
            const auto ui = static_cast<std::size_t>(i);
            sidx -= shifted_digit(i, digits[ui]) * weight[ui];
            digits[ui] = (digits[ui] + 1 == q) ? 0 : digits[ui] + 1;
            sidx += shifted_digit(i, digits[ui]) * weight[ui];
            if (digits[ui] != 0) break;
        }
    }
}

HiddenOracle HiddenOracle::reduced(const MultilinearPoly &extra) const {
    return HiddenOracle(core_, known_ + extra);
}

void apply_fS_phase_oracle(const HiddenOracle &o, StateVector &psi, SubsetIndex s, FieldElem c) {
    const int n = o.num_vars();
    if (s.max_member() > n) throw Error(ErrorCode::IndexOutOfRange, "subset leaves [1, n]");
    const auto &ctx = o.field();
    const auto members = s.members();
    const auto k = members.size();
    for (std::uint64_t beta = 0; beta < (std::uint64_t{1} << k); ++beta) {
        auto shift = PointVec::zeros(n);
        for (std::size_t j = 0; j < k; ++j) {
            if ((beta >> j) & 1u) shift[static_cast<std::size_t>(members[j] - 1)] = ctx.one();
        }
        const bool odd = ((k - static_cast<std::size_t>(std::popcount(beta))) & 1u) != 0;
        o.apply_phase_oracle(psi, odd ? ctx.neg(c) : c, shift);
    }
}

}  // namespace qmlearn
