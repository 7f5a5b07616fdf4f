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

#include "qmlearn/poly.hpp"

#include <iostream>
#include <random>
#include <string>

#include "qmlearn/errors.hpp"

namespace qmlearn {

SubsetIndex SubsetIndex::from_members(const std::vector<int> &members) {
    std::uint64_t mask = 0;
    int prev = 0;
    for (int m : members) {
        if (m <= prev || m > kMaxVars) {
            throw Error(ErrorCode::IndexOutOfRange, "subset members must be strictly increasing in [1, 64]");
        }
        mask |= std::uint64_t{1} << (m - 1);
        prev = m;
    }
    return SubsetIndex(mask);
}

std::vector<int> SubsetIndex::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

std::vector<SubsetIndex> subsets_of_size(int n, int k) {
    std::vector<SubsetIndex> out;
    if (k < 0 || k > n) return out;
    if (k == 0) return {SubsetIndex{}};
    // Gosper's hack walks same-popcount masks in increasing order.
    std::uint64_t x = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    while (true) {
        out.push_back(SubsetIndex::from_mask(x));
        const std::uint64_t c = x & (~x + 1);
        const std::uint64_t r = x + c;
        if (r == 0) break;
        x = (((r ^ x) >> 2) / c) | r;
        if (n < 64 && (x >> n) != 0) break;
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 out = 1;
    for (int i = 1; i <= k; ++i) out = out * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(out);
}

PointVec PointVec::basis(int n, int i) {
    if (i < 1 || i > n) throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(i));
    auto v = zeros(n);
    v[static_cast<std::size_t>(i - 1)] = FieldElem{1};
    return v;
}

PointVec PointVec::indicator(int n, SubsetIndex s) {
    if (s.max_member() > n) throw Error(ErrorCode::IndexOutOfRange, "subset leaves [1, n]");
    auto v = zeros(n);
    for (int i : s.members()) v[static_cast<std::size_t>(i - 1)] = FieldElem{1};
    return v;
}

MultilinearPoly::MultilinearPoly(FieldCtx ctx, int n, int d) : ctx_(std::move(ctx)), n_(n), d_(d) {
    if (n < 0 || n > SubsetIndex::kMaxVars) {
        throw Error(ErrorCode::IndexOutOfRange, "number of variables must be in [0, 64]");
    }
    if (d < 0) throw Error(ErrorCode::InvalidDegree, "negative degree bound");
    if (d_ > n_) {
        std::cerr << "warning: degree bound " << d_ << " exceeds n=" << n_ << "; clamping to " << n_ << '\n';
        d_ = n_;
    }
}

FieldElem MultilinearPoly::coeff(SubsetIndex s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? FieldElem{} : it->second;
}

void MultilinearPoly::set(SubsetIndex s, FieldElem alpha) {
    if (s.size() > d_) {
        throw Error(ErrorCode::InvalidDegree, "subset of size " + std::to_string(s.size()) +
                                                  " exceeds degree bound " + std::to_string(d_));
    }
    if (s.max_member() > n_) throw Error(ErrorCode::IndexOutOfRange, "subset leaves [1, n]");
    if (!ctx_.valid(alpha)) throw Error(ErrorCode::InvalidField, "coefficient outside F_q");
    if (alpha.value == 0) {
        coeffs_.erase(s);
    } else {
        coeffs_[s] = alpha;
    }
}

void MultilinearPoly::accumulate(SubsetIndex s, FieldElem alpha) { set(s, ctx_.add(coeff(s), alpha)); }

int MultilinearPoly::actual_degree() const noexcept {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first.size();
}

void MultilinearPoly::check_compatible(const MultilinearPoly &other) const {
    if (!(ctx_ == other.ctx_) || n_ != other.n_) {
        throw Error(ErrorCode::ContextMismatch, "polynomials over different fields or variable counts");
    }
}

MultilinearPoly &MultilinearPoly::operator+=(const MultilinearPoly &other) {
    check_compatible(other);
    d_ = std::max(d_, other.d_);
    for (const auto &[s, a] : other.coeffs_) accumulate(s, a);
    return *this;
}

MultilinearPoly &MultilinearPoly::operator-=(const MultilinearPoly &other) {
    check_compatible(other);
    d_ = std::max(d_, other.d_);
    for (const auto &[s, a] : other.coeffs_) accumulate(s, ctx_.neg(a));
    return *this;
}

MultilinearPoly MultilinearPoly::scaled(FieldElem c) const {
    MultilinearPoly out(ctx_, n_, d_);
    for (const auto &[s, a] : coeffs_) out.set(s, ctx_.mul(c, a));
    return out;
}

FieldElem evaluate(const MultilinearPoly &f, const PointVec &x) {
    if (x.size() != f.num_vars()) {
        throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(x.size()) +
                                                      " coordinates, polynomial has " +
                                                      std::to_string(f.num_vars()) + " variables");
    }
    const auto &ctx = f.field();
    FieldElem sum{};
    for (const auto &[s, alpha] : f.coeffs()) {
        FieldElem term = alpha;
        for (std::uint64_t m = s.mask(); m != 0 && term.value != 0; m &= m - 1) {
            term = ctx.mul(term, x[static_cast<std::size_t>(std::countr_zero(m))]);
        }
        sum = ctx.add(sum, term);
    }
    return sum;
}

std::vector<FieldElem> evaluate_all(const MultilinearPoly &f) {
    const auto &ctx = f.field();
    const int n = f.num_vars();
    const std::size_t q = ctx.q();

    // Dense coefficient array over {0,1}^n, variable 1 most significant.
    std::vector<FieldElem> cur(std::size_t{1} << n);
    for (const auto &[s, alpha] : f.coeffs()) {
        std::size_t idx = 0;
        for (int i = 1; i <= n; ++i) idx = (idx << 1) | (s.contains(i) ? 1u : 0u);
        cur[idx] = alpha;
    }

    // Replace axis i (size 2: c0 + c1 x_i) by its q evaluations, one axis at a time.
    std::size_t outer = 1;
    std::size_t inner = cur.size() >> 1;
    for (int i = 1; i <= n; ++i) {
        std::vector<FieldElem> next(outer * q * inner);
        for (std::size_t o = 0; o < outer; ++o) {
            const FieldElem *c0 = &cur[(o * 2) * inner];
            const FieldElem *c1 = &cur[(o * 2 + 1) * inner];
            for (std::size_t x = 0; x < q; ++x) {
                FieldElem *dst = &next[(o * q + x) * inner];
                const FieldElem xv{static_cast<std::uint32_t>(x)};
                for (std::size_t in = 0; in < inner; ++in) dst[in] = ctx.add(c0[in], ctx.mul(xv, c1[in]));
            }
        }
        cur = std::move(next);
        outer *= q;
        inner >>= 1;
    }
    return cur;
}

MultilinearPoly degree_part(const MultilinearPoly &f, int k) {
    if (k < 0 || k > f.degree_bound()) {
        throw Error(ErrorCode::InvalidDegree, "degree " + std::to_string(k) + " outside [0, " +
                                                  std::to_string(f.degree_bound()) + "]");
    }
    MultilinearPoly out(f.field(), f.num_vars(), f.degree_bound());
    for (const auto &[s, a] : f.coeffs()) {
        if (s.size() == k) out.set(s, a);
    }
    return out;
}

DerivativeFn derivative_fn(const MultilinearPoly &f, SubsetIndex s) {
    if (s.max_member() > f.num_vars()) throw Error(ErrorCode::IndexOutOfRange, "subset leaves [1, n]");
    const auto members = s.members();
    const auto k = members.size();
    auto fn = [f, members, k](const PointVec &x) {
        const auto &ctx = f.field();
        FieldElem sum{};
        for (std::uint64_t beta = 0; beta < (std::uint64_t{1} << k); ++beta) {
            PointVec y = x;
            for (std::size_t j = 0; j < k; ++j) {
                if ((beta >> j) & 1u) {
                    auto &c = y[static_cast<std::size_t>(members[j] - 1)];
                    c = ctx.add(c, ctx.one());
                }
            }
            const FieldElem v = evaluate(f, y);
            const bool odd = ((k - static_cast<std::size_t>(std::popcount(beta))) & 1u) != 0;
            sum = ctx.add(sum, odd ? ctx.neg(v) : v);
        }
        return sum;
    };
    return DerivativeFn{std::move(fn), std::uint64_t{1} << k};
}

MultilinearPoly discrete_derivative(const MultilinearPoly &f, int i) {
    if (i < 1 || i > f.num_vars()) throw Error(ErrorCode::IndexOutOfRange, "direction " + std::to_string(i));
    MultilinearPoly out(f.field(), f.num_vars(), f.degree_bound());
    for (const auto &[s, a] : f.coeffs()) {
        if (s.contains(i)) out.accumulate(s.without(i), a);
    }
    return out;
}

MultilinearPoly random_poly(const FieldCtx &ctx, int n, int d, std::uint64_t seed) {
    MultilinearPoly out(ctx, n, d);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, ctx.q() - 1);
    for (int k = 0; k <= out.degree_bound(); ++k) {
        for (auto s : subsets_of_size(n, k)) out.set(s, FieldElem{dist(rng)});
    }
    return out;
}

bool poly_equal(const MultilinearPoly &f, const MultilinearPoly &g) {
    if (!(f.field() == g.field()) || f.num_vars() != g.num_vars()) {
        throw Error(ErrorCode::ContextMismatch, "polynomials over different fields or variable counts");
    }
    return f.coeffs() == g.coeffs();
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace qmlearn
