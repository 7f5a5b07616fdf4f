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

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qmlearn {

/// An element of GF(p^r), encoded as an integer in [0, q). The base-p digits
/// of `value` are the coefficients of the element in the power basis
/// 1, t, ..., t^{r-1} (least significant digit = constant coefficient).
struct FieldElem {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// GF(p^r) with a fixed monic irreducible modulus.
///
/// The context is an immutable handle: copies share the same lookup tables and
/// every operation is a pure function, so a context can be used from any
/// number of threads.
///
/// Supported range: p prime, p <= 2^16, 1 <= r <= 4, q = p^r <= 2^16.
class FieldCtx {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;
    static constexpr std::uint32_t kMaxDegree = 4;

    /// `modulus` lists F_p coefficients from the constant term up to the
    /// leading term; it must have length r+1 and leading coefficient 1.
    /// Throws Error(InvalidField) when p is not prime, the modulus is not
    /// monic and irreducible, or q is out of range.
    FieldCtx(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus);

    /// The prime field F_p.
    static FieldCtx prime(std::uint32_t p);

    /// F_q for prime q, or from the built-in modulus table
    /// (4, 8, 9, 16, 25, 27). Built-in moduli still pass the irreducibility
    /// check at construction.
    static FieldCtx from_order(std::uint32_t q);

    /// Parses `p^r:c0,c1,...,cr`, `p^r` (built-in modulus) or a bare `q`.
    static FieldCtx parse(std::string_view spec);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t r() const noexcept { return r_; }
    std::uint32_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t> &modulus() const noexcept { return modulus_; }

    /// Canonical `p^r:c0,...,cr` form, accepted by parse().
    std::string spec() const;

    bool valid(FieldElem a) const noexcept { return a.value < q_; }

    FieldElem zero() const noexcept { return FieldElem{0}; }
    FieldElem one() const noexcept { return FieldElem{1}; }

    FieldElem add(FieldElem a, FieldElem b) const noexcept;
    FieldElem sub(FieldElem a, FieldElem b) const noexcept;
    FieldElem neg(FieldElem a) const noexcept;
    FieldElem mul(FieldElem a, FieldElem b) const noexcept;
    /// Throws Error(DivisionByZero) for a == 0.
    FieldElem inv(FieldElem a) const;
    FieldElem pow(FieldElem a, std::uint64_t k) const noexcept;

    /// Absolute trace GF(p^r) -> F_p, returned as an integer in [0, p).
    std::uint32_t trace(FieldElem a) const noexcept { return tables_->trace[a.value]; }

    /// The image of the integer m under Z -> F_q.
    FieldElem from_integer(std::int64_t m) const noexcept;

    /// Two contexts are equal when they describe the same p, r and modulus.
    friend bool operator==(const FieldCtx &a, const FieldCtx &b) noexcept {
        return a.p_ == b.p_ && a.r_ == b.r_ && a.modulus_ == b.modulus_;
    }

private:
    struct Tables {
        std::vector<std::uint32_t> exp;  // exp[i] = g^i, i in [0, q-1)
        std::vector<std::uint32_t> log;  // log[exp[i]] = i; log[0] unused
        std::vector<std::uint32_t> trace;
    };

    std::uint32_t p_;
    std::uint32_t r_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::shared_ptr<const Tables> tables_;
};

namespace detail {

bool is_prime(std::uint32_t n) noexcept;

/// Schoolbook product of two encoded elements reduced by the monic modulus.
/// Independent of the exp/log tables; used to build them and to check them.
std::uint32_t polymul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                          std::span<const std::uint32_t> modulus);

/// True when the monic polynomial (coefficients low to high) has no monic
/// factor of degree 1..deg/2 over F_p.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace detail

}  // namespace qmlearn
