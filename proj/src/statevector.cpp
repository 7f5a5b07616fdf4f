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

#include "qmlearn/statevector.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

#include "qmlearn/errors.hpp"

namespace qmlearn {

std::size_t checked_dimension(std::uint32_t q, int n, std::size_t cap) {
    if (n < 0) throw Error(ErrorCode::DimensionMismatch, "negative register count");
    std::size_t dim = 1;
    for (int i = 0; i < n; ++i) {
        if (dim > cap / q) {
            throw Error(ErrorCode::MemoryLimitExceeded, std::to_string(q) + "^" + std::to_string(n) +
                                                            " amplitudes exceed the cap of " + std::to_string(cap));
        }
        dim *= q;
    }
    if (dim > cap) throw Error(ErrorCode::MemoryLimitExceeded, "state exceeds the amplitude cap");
    return dim;
}

SquareMatrix SquareMatrix::identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

SquareMatrix SquareMatrix::adjoint() const {
    SquareMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    }
    return out;
}

SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix sizes differ");
    const std::size_t n = a.dim();
    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Amplitude aik = a(i, k);
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

double SquareMatrix::unitarity_error() const {
    const auto prod = adjoint() * (*this);
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            worst = std::max(worst, std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

RootsOfUnity::RootsOfUnity(std::uint32_t p) : table_(p) {
    for (std::uint32_t k = 0; k < p; ++k) {
        table_[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p));
    }
}

QftMatrix::QftMatrix(FieldCtx ctx, SquareMatrix forward)
    : ctx_(std::move(ctx)), forward_(std::move(forward)), inverse_(forward_.adjoint()) {}

QftMatrix build_qft(const FieldCtx &ctx) {
    const std::uint32_t q = ctx.q();
    const RootsOfUnity omega(ctx.p());
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    SquareMatrix m(q);
    for (std::uint32_t y = 0; y < q; ++y) {
        for (std::uint32_t x = 0; x < q; ++x) {
            m(y, x) = omega[ctx.trace(ctx.mul(FieldElem{x}, FieldElem{y}))] * scale;
        }
    }
    return QftMatrix(ctx, std::move(m));
}

StateVector::StateVector(FieldCtx ctx, int n_registers, std::size_t cap)
    : ctx_(std::move(ctx)), n_(n_registers), amps_(checked_dimension(ctx_.q(), n_registers, cap)) {
    amps_[0] = 1.0;
}

StateVector::StateVector(FieldCtx ctx, int n_registers, std::vector<Amplitude> amplitudes)
    : ctx_(std::move(ctx)), n_(n_registers), amps_(std::move(amplitudes)) {
    std::size_t expected = 1;
    for (int i = 0; i < n_ && expected <= amps_.size(); ++i) expected *= ctx_.q();
    if (n_ < 0 || expected != amps_.size()) {
        throw Error(ErrorCode::DimensionMismatch, "amplitude count is not q^n");
    }
}

StateVector StateVector::basis(const FieldCtx &ctx, const PointVec &x, std::size_t cap) {
    StateVector psi(ctx, x.size(), cap);
    psi.amps_[0] = 0.0;
    psi.amps_[psi.index_of(x)] = 1.0;
    return psi;
}

std::size_t StateVector::index_of(const PointVec &x) const {
    if (x.size() != n_) throw Error(ErrorCode::DimensionMismatch, "point length differs from register count");
    std::size_t idx = 0;
    for (int i = 0; i < n_; ++i) {
        const auto v = x[static_cast<std::size_t>(i)];
        if (!ctx_.valid(v)) throw Error(ErrorCode::IndexOutOfRange, "coordinate outside F_q");
        idx = idx * ctx_.q() + v.value;
    }
    return idx;
}

PointVec StateVector::point_at(std::size_t index) const {
    auto x = PointVec::zeros(n_);
    for (int i = n_; i-- > 0;) {
        x[static_cast<std::size_t>(i)] = FieldElem{static_cast<std::uint32_t>(index % ctx_.q())};
        index /= ctx_.q();
    }
    return x;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto &a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

StateVector StateVector::tensor(const StateVector &other) const {
    if (!(ctx_ == other.ctx_)) throw Error(ErrorCode::ContextMismatch, "tensor of states over different fields");
    std::vector<Amplitude> out(amps_.size() * other.amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        for (std::size_t j = 0; j < other.amps_.size(); ++j) out[i * other.amps_.size() + j] = amps_[i] * other.amps_[j];
    }
    return StateVector(ctx_, n_ + other.n_, std::move(out));
}

StateVector prepare_uniform(const FieldCtx &ctx, int n, std::size_t cap) {
    const std::size_t dim = checked_dimension(ctx.q(), n, cap);
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    return StateVector(ctx, n, std::vector<Amplitude>(dim, Amplitude(amp, 0.0)));
}

void apply_single(StateVector &psi, const SquareMatrix &m, int reg) {
    const std::size_t q = psi.field().q();
    if (m.dim() != q) throw Error(ErrorCode::DimensionMismatch, "matrix is not q x q");
    if (reg < 1 || reg > psi.num_registers()) {
        throw Error(ErrorCode::IndexOutOfRange, "register " + std::to_string(reg));
    }
    std::size_t stride = 1;
    for (int i = reg; i < psi.num_registers(); ++i) stride *= q;
    const std::size_t block = stride * q;
    auto amps = psi.amplitudes();
    std::vector<Amplitude> in(q);
    for (std::size_t base = 0; base < amps.size(); base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            for (std::size_t x = 0; x < q; ++x) in[x] = amps[base + off + x * stride];
            for (std::size_t y = 0; y < q; ++y) {
                Amplitude acc = 0.0;
                for (std::size_t x = 0; x < q; ++x) acc += m(y, x) * in[x];
                amps[base + off + y * stride] = acc;
            }
        }
    }
}

void apply_all(StateVector &psi, const SquareMatrix &m) {
    for (int reg = 1; reg <= psi.num_registers(); ++reg) apply_single(psi, m, reg);
}

Measurement measure_computational(const StateVector &psi) {
    const auto amps = psi.amplitudes();
    std::size_t best = 0;
    double best_p = -1.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p > best_p) {
            best_p = p;
            best = i;
        }
    }
    return {psi.point_at(best), best_p};
}

Measurement sample_computational(const StateVector &psi, std::uint64_t seed) {
    const auto amps = psi.amplitudes();
    std::vector<double> weights(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) weights[i] = std::norm(amps[i]);
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
    const std::size_t idx = dist(rng);
    return {psi.point_at(idx), weights[idx]};
}

double max_abs_diff(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "state sizes differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

void dump_csv(const StateVector &psi, std::ostream &out) {
    out << "index,x,re,im\n";
    const auto flags = out.flags();
    out << std::setprecision(17);
    for (std::size_t i = 0; i < psi.dimension(); ++i) {
        const auto x = psi.point_at(i);
        out << i << ',';
        for (int k = 0; k < x.size(); ++k) out << (k ? " " : "") << x[static_cast<std::size_t>(k)].value;
        out << ',' << psi[i].real() << ',' << psi[i].imag() << '\n';
    }
    out.flags(flags);
}

}  // namespace qmlearn
