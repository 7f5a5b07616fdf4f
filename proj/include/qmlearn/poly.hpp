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

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qmlearn/field.hpp"

namespace qmlearn {

/// A subset of the variable indices [1, n], n <= 64. Members are 1-based;
/// bit i-1 of the mask holds variable i.
class SubsetIndex {
public:
    static constexpr int kMaxVars = 64;

    constexpr SubsetIndex() = default;
    static constexpr SubsetIndex from_mask(std::uint64_t mask) { return SubsetIndex(mask); }
    /// Members must be strictly increasing and in [1, 64]; throws Error(IndexOutOfRange) otherwise.
    static SubsetIndex from_members(const std::vector<int> &members);

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr bool contains(int i) const noexcept {
        return i >= 1 && i <= kMaxVars && ((mask_ >> (i - 1)) & 1u);
    }
    /// Largest member, or 0 for the empty set.
    constexpr int max_member() const noexcept { return 64 - std::countl_zero(mask_); }
    std::vector<int> members() const;

    constexpr SubsetIndex with(int i) const noexcept { return SubsetIndex(mask_ | (std::uint64_t{1} << (i - 1))); }
    constexpr SubsetIndex without(int i) const noexcept { return SubsetIndex(mask_ & ~(std::uint64_t{1} << (i - 1))); }
    constexpr bool subset_of(SubsetIndex other) const noexcept { return (mask_ & ~other.mask_) == 0; }

    friend constexpr bool operator==(SubsetIndex, SubsetIndex) = default;

private:
    constexpr explicit SubsetIndex(std::uint64_t mask) : mask_(mask) {}
    std::uint64_t mask_ = 0;
};

/// Canonical subset order: by size, then by mask value (colex within a size).
struct CanonicalOrder {
    constexpr bool operator()(SubsetIndex a, SubsetIndex b) const noexcept {
        return a.size() != b.size() ? a.size() < b.size() : a.mask() < b.mask();
    }
};

/// All k-subsets of [1, n] in canonical order.
std::vector<SubsetIndex> subsets_of_size(int n, int k);

/// Binomial coefficient as an exact integer (0 when k < 0 or k > n).
std::uint64_t binomial(int n, int k);

/// A point of F_q^n.
class PointVec {
public:
    PointVec() = default;
    explicit PointVec(std::vector<FieldElem> coords) : coords_(std::move(coords)) {}

    static PointVec zeros(int n) { return PointVec(std::vector<FieldElem>(static_cast<std::size_t>(n))); }
    /// Standard basis vector e_i, i in [1, n].
    static PointVec basis(int n, int i);
    /// The 0/1 indicator vector of S.
    static PointVec indicator(int n, SubsetIndex s);

    int size() const noexcept { return static_cast<int>(coords_.size()); }
    FieldElem operator[](std::size_t i) const { return coords_[i]; }
    FieldElem &operator[](std::size_t i) { return coords_[i]; }
    const std::vector<FieldElem> &coords() const noexcept { return coords_; }

    friend bool operator==(const PointVec &, const PointVec &) = default;

private:
    std::vector<FieldElem> coords_;
};

/// f(x) = sum over |S| <= d of alpha_S prod_{i in S} x_i over F_q.
///
/// Coefficients are stored sparsely; zero coefficients are never stored, so
/// an absent subset and an explicit zero are the same polynomial.
class MultilinearPoly {
public:
    using CoeffMap = std::map<SubsetIndex, FieldElem, CanonicalOrder>;

    /// d is clamped to n (with a warning on stderr) when it exceeds n.
    MultilinearPoly(FieldCtx ctx, int n, int d);

    const FieldCtx &field() const noexcept { return ctx_; }
    int num_vars() const noexcept { return n_; }
    int degree_bound() const noexcept { return d_; }
    const CoeffMap &coeffs() const noexcept { return coeffs_; }

    /// Zero when the subset is absent.
    FieldElem coeff(SubsetIndex s) const;
    /// Throws Error(InvalidDegree) for |S| > d and Error(IndexOutOfRange) when
    /// S leaves [1, n]. Setting zero erases the entry.
    void set(SubsetIndex s, FieldElem alpha);
    /// coeff(S) += alpha.
    void accumulate(SubsetIndex s, FieldElem alpha);

    /// Largest |S| with a nonzero coefficient, -1 for the zero polynomial.
    int actual_degree() const noexcept;

    MultilinearPoly &operator+=(const MultilinearPoly &other);
    MultilinearPoly &operator-=(const MultilinearPoly &other);
    friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly &b) { return a += b; }
    friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly &b) { return a -= b; }
    MultilinearPoly scaled(FieldElem c) const;

private:
    void check_compatible(const MultilinearPoly &other) const;

    FieldCtx ctx_;
    int n_;
    int d_;
    CoeffMap coeffs_;
};

/// Throws Error(DimensionMismatch) when x has the wrong length.
FieldElem evaluate(const MultilinearPoly &f, const PointVec &x);

/// f on every point of F_q^n in mixed-radix order (x_1 most significant),
/// computed by a per-variable transform in O(n q^n) field operations.
std::vector<FieldElem> evaluate_all(const MultilinearPoly &f);

/// The |S| = k part of f. Throws Error(InvalidDegree) unless 0 <= k <= d.
MultilinearPoly degree_part(const MultilinearPoly &f, int k);

/// The alternating-sum function f_S together with its cost in evaluations of f.
struct DerivativeFn {
    std::function<FieldElem(const PointVec &)> fn;
    std::uint64_t cost;
};

/// f_S(x) = sum_{beta in {0,1}^k} (-1)^{k - |beta|} f(x + sum_j beta_j e_{S_j}),
/// with the sign acting in F_q. The returned function evaluates f 2^k times.
DerivativeFn derivative_fn(const MultilinearPoly &f, SubsetIndex s);

/// Symbolic (Delta_i f)(x) = f(x + e_i) - f(x). For multilinear f this keeps
/// the monomials containing i and removes x_i from them.
MultilinearPoly discrete_derivative(const MultilinearPoly &f, int i);

/// Every coefficient alpha_S, |S| <= d, drawn uniformly from F_q by a
/// generator seeded with `seed`; coefficients are drawn in canonical order.
MultilinearPoly random_poly(const FieldCtx &ctx, int n, int d, std::uint64_t seed);

/// Coefficient-wise equality. Throws Error(ContextMismatch) on different fields or n.
bool poly_equal(const MultilinearPoly &f, const MultilinearPoly &g);

/// SplitMix64 finalizer; derives independent per-trial seeds from a master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace qmlearn
