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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qmlearn/field.hpp"
#include "qmlearn/poly.hpp"

namespace qmlearn {

using Amplitude = std::complex<double>;

/// Default cap on the number of amplitudes in one state (2^24, 256 MiB).
inline constexpr std::size_t kDefaultMemCap = std::size_t{1} << 24;

/// q^n, or throws Error(MemoryLimitExceeded) when it exceeds `cap`.
std::size_t checked_dimension(std::uint32_t q, int n, std::size_t cap);

/// Dense row-major complex matrix.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    static SquareMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    Amplitude operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
    Amplitude &operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }

    SquareMatrix adjoint() const;
    friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b);

    /// max |(M^dagger M - I)_{ij}|.
    double unitarity_error() const;

private:
    std::size_t dim_ = 0;
    std::vector<Amplitude> data_;
};

/// omega^k for omega = e^{2 pi i / p}, k in [0, p), from exact angles.
class RootsOfUnity {
public:
    explicit RootsOfUnity(std::uint32_t p);
    Amplitude operator[](std::uint32_t k) const { return table_[k]; }
    std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(table_.size()); }

private:
    std::vector<Amplitude> table_;
};

/// QFT over F_q: entry (y, x) = omega^{Tr(xy)} / sqrt(q).
class QftMatrix {
public:
    const FieldCtx &field() const noexcept { return ctx_; }
    const SquareMatrix &forward() const noexcept { return forward_; }
    /// Conjugate transpose of forward().
    const SquareMatrix &inverse() const noexcept { return inverse_; }

private:
    friend QftMatrix build_qft(const FieldCtx &ctx);
    QftMatrix(FieldCtx ctx, SquareMatrix forward);

    FieldCtx ctx_;
    SquareMatrix forward_;
    SquareMatrix inverse_;
};

QftMatrix build_qft(const FieldCtx &ctx);

/// Amplitudes over F_q^n. Index = mixed-radix encoding with register 1 as the
/// most significant digit.
class StateVector {
public:
    /// |0...0>.
    StateVector(FieldCtx ctx, int n_registers, std::size_t cap = kDefaultMemCap);
    /// Throws Error(DimensionMismatch) unless amplitudes.size() == q^n.
    StateVector(FieldCtx ctx, int n_registers, std::vector<Amplitude> amplitudes);

    static StateVector basis(const FieldCtx &ctx, const PointVec &x, std::size_t cap = kDefaultMemCap);

    const FieldCtx &field() const noexcept { return ctx_; }
    int num_registers() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return amps_.size(); }
    std::span<Amplitude> amplitudes() noexcept { return amps_; }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    Amplitude operator[](std::size_t i) const { return amps_[i]; }
    Amplitude &operator[](std::size_t i) { return amps_[i]; }

    std::size_t index_of(const PointVec &x) const;
    PointVec point_at(std::size_t index) const;

    double norm() const;

    /// this (x) other, with this state's registers first.
    StateVector tensor(const StateVector &other) const;

private:
    FieldCtx ctx_;
    int n_;
    std::vector<Amplitude> amps_;
};

/// Every amplitude equal to q^{-n/2}. Throws Error(MemoryLimitExceeded) when q^n > cap.
StateVector prepare_uniform(const FieldCtx &ctx, int n, std::size_t cap = kDefaultMemCap);

/// Applies a q x q matrix to one register (1-based). Throws
/// Error(IndexOutOfRange) for a bad register, Error(DimensionMismatch) for a
/// matrix of the wrong size.
void apply_single(StateVector &psi, const SquareMatrix &m, int reg);

/// The same matrix on every register.
void apply_all(StateVector &psi, const SquareMatrix &m);

struct Measurement {
    PointVec outcome;
    double probability;
};

/// Most probable basis outcome; ties go to the lowest index.
Measurement measure_computational(const StateVector &psi);

/// Samples an outcome from the Born distribution with a seeded generator.
Measurement sample_computational(const StateVector &psi, std::uint64_t seed);

/// max_i |a_i - b_i|; throws Error(DimensionMismatch) on different sizes.
double max_abs_diff(std::span<const Amplitude> a, std::span<const Amplitude> b);

/// CSV rows `index,x,re,im` where x lists the register values separated by spaces.
void dump_csv(const StateVector &psi, std::ostream &out);

}  // namespace qmlearn
