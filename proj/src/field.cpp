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

#include "qmlearn/field.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>
#include <utility>

#include "qmlearn/errors.hpp"

namespace qmlearn {

namespace detail {

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

// Coefficients of an encoded element, low degree first.
std::array<std::uint32_t, 2 * FieldCtx::kMaxDegree> digits_of(std::uint32_t v, std::uint32_t p,
                                                             std::uint32_t r) {
    std::array<std::uint32_t, 2 * FieldCtx::kMaxDegree> out{};
    for (std::uint32_t i = 0; i < r; ++i) {
        out[i] = v % p;
        v /= p;
    }
    return out;
}

// Remainder of `poly` (low to high, trailing zeros allowed) modulo a monic divisor.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> poly,
                                    std::span<const std::uint32_t> monic, std::uint32_t p) {
    const std::size_t dd = monic.size() - 1;
    for (std::size_t k = poly.size(); k-- > dd;) {
        const std::uint64_t c = poly[k];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            const std::uint64_t sub = (c * monic[j]) % p;
            poly[k - dd + j] = static_cast<std::uint32_t>((poly[k - dd + j] + p - sub) % p);
        }
    }
    poly.resize(std::min(poly.size(), dd));
    return poly;
}

}  // namespace

std::uint32_t polymul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                          std::span<const std::uint32_t> modulus) {
    const auto r = static_cast<std::uint32_t>(modulus.size() - 1);
    const auto da = digits_of(a, p, r);
    const auto db = digits_of(b, p, r);
    std::vector<std::uint32_t> prod(2 * r, 0);
    for (std::uint32_t i = 0; i < r; ++i) {
        for (std::uint32_t j = 0; j < r; ++j) {
            const std::uint64_t t = static_cast<std::uint64_t>(da[i]) * db[j] % p;
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + t) % p);
        }
    }
    const auto rem = poly_rem(std::move(prod), modulus, p);
    std::uint32_t out = 0;
    for (std::size_t i = rem.size(); i-- > 0;) out = out * p + rem[i];
    return out;
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
    const std::size_t deg = monic.size() - 1;
    // Enumerate every monic divisor candidate of degree k by its k low coefficients.
    for (std::size_t k = 1; k <= deg / 2; ++k) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < k; ++i) count *= p;
        std::vector<std::uint32_t> divisor(k + 1, 0);
        divisor[k] = 1;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = 0; i < k; ++i) {
                divisor[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            const auto rem = poly_rem({monic.begin(), monic.end()}, divisor, p);
            if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t x) { return x == 0; })) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace detail

namespace {

struct Builtin {
    std::uint32_t q, p, r;
    std::vector<std::uint32_t> modulus;
};

const std::vector<Builtin> &builtin_moduli() {
    static const std::vector<Builtin> table = {
        {4, 2, 2, {1, 1, 1}},        // t^2 + t + 1
        {8, 2, 3, {1, 1, 0, 1}},     // t^3 + t + 1
        {9, 3, 2, {1, 0, 1}},        // t^2 + 1
        {16, 2, 4, {1, 1, 0, 0, 1}}, // t^4 + t + 1
        {25, 5, 2, {2, 1, 1}},       // t^2 + t + 2
        {27, 3, 3, {1, 2, 0, 1}},    // t^3 + 2t + 1
        {49, 7, 2, {1, 0, 1}},       // t^2 + 1
    };
    return table;
}

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
    std::uint32_t v = 0;
    const auto *first = s.data();
    const auto *last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (s.empty() || ec != std::errc{} || ptr != last) {
        throw Error(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), q_(1), modulus_(std::move(modulus)) {
    if (p > kMaxOrder || !detail::is_prime(p)) {
        throw Error(ErrorCode::InvalidField, "characteristic " + std::to_string(p) + " is not a supported prime");
    }
    if (r < 1 || r > kMaxDegree) {
        throw Error(ErrorCode::InvalidField, "extension degree must be in [1, 4], got " + std::to_string(r));
    }
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) q *= p;
    if (q > kMaxOrder) {
        throw Error(ErrorCode::InvalidField, "field order " + std::to_string(q) + " exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (modulus_.size() != r + 1 || modulus_.back() != 1) {
        throw Error(ErrorCode::InvalidField, "modulus must be monic of degree " + std::to_string(r));
    }
    for (auto c : modulus_) {
        if (c >= p) throw Error(ErrorCode::InvalidField, "modulus coefficient out of range");
    }
    if (!detail::is_irreducible(modulus_, p)) {
        throw Error(ErrorCode::InvalidField, "modulus is reducible over F_" + std::to_string(p));
    }

    auto tables = std::make_shared<Tables>();
    const std::uint32_t order = q_ - 1;
    tables->log.assign(q_, 0);
    // Smallest primitive element by brute-force order computation.
    for (std::uint32_t g = 1; g < q_; ++g) {
        tables->exp.clear();
        std::uint32_t x = 1;
        do {
            tables->exp.push_back(x);
            x = detail::polymul_mod(x, g, p_, modulus_);
        } while (x != 1 && tables->exp.size() <= order);
        if (tables->exp.size() == order) break;
    }
    for (std::uint32_t i = 0; i < order; ++i) tables->log[tables->exp[i]] = i;
    tables_ = tables;

    tables->trace.assign(q_, 0);
    for (std::uint32_t v = 0; v < q_; ++v) {
        FieldElem acc = zero();
        FieldElem frob{v};
        for (std::uint32_t i = 0; i < r_; ++i) {
            acc = add(acc, frob);
            frob = pow(frob, p_);
        }
        if (acc.value >= p_) {
            throw Error(ErrorCode::InvalidField, "trace left the prime subfield");
        }
        tables->trace[v] = acc.value;
    }
}

FieldCtx FieldCtx::prime(std::uint32_t p) { return FieldCtx(p, 1, {0, 1}); }

FieldCtx FieldCtx::from_order(std::uint32_t q) {
    if (detail::is_prime(q)) return prime(q);
    for (const auto &b : builtin_moduli()) {
        if (b.q == q) return FieldCtx(b.p, b.r, b.modulus);
    }
    throw Error(ErrorCode::InvalidField,
                "no built-in modulus for q=" + std::to_string(q) + "; use the p^r:modulus form");
}

FieldCtx FieldCtx::parse(std::string_view spec) {
    spec = trim(spec);
    const auto colon = spec.find(':');
    const auto head = trim(spec.substr(0, colon));
    const auto caret = head.find('^');
    if (caret == std::string_view::npos) {
        if (colon != std::string_view::npos) {
            throw Error(ErrorCode::ParseError, "a modulus needs the p^r form: '" + std::string(spec) + "'");
        }
        return from_order(parse_uint(head, "field order"));
    }
    const auto p = parse_uint(trim(head.substr(0, caret)), "characteristic");
    const auto r = parse_uint(trim(head.substr(caret + 1)), "extension degree");
    if (colon == std::string_view::npos) {
        if (r == 1) return prime(p);
        for (const auto &b : builtin_moduli()) {
            if (b.p == p && b.r == r) return FieldCtx(b.p, b.r, b.modulus);
        }
        throw Error(ErrorCode::InvalidField, "no built-in modulus for " + std::string(head));
    }
    std::vector<std::uint32_t> modulus;
    auto rest = spec.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        modulus.push_back(parse_uint(trim(rest.substr(0, comma)), "modulus coefficient"));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return FieldCtx(p, r, std::move(modulus));
}

std::string FieldCtx::spec() const {
    std::ostringstream os;
    os << p_ << '^' << r_ << ':';
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    return os.str();
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const noexcept {
    if (r_ == 1) return FieldElem{(a.value + b.value) % p_};
    if (p_ == 2) return FieldElem{a.value ^ b.value};
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    std::uint32_t x = a.value;
    std::uint32_t y = b.value;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out += ((x % p_ + y % p_) % p_) * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return FieldElem{out};
}

FieldElem FieldCtx::neg(FieldElem a) const noexcept {
    if (r_ == 1) return FieldElem{(p_ - a.value) % p_};
    if (p_ == 2) return a;
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    std::uint32_t x = a.value;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out += ((p_ - x % p_) % p_) * place;
        x /= p_;
        place *= p_;
    }
    return FieldElem{out};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const noexcept {
    if (a.value == 0 || b.value == 0) return zero();
    const std::uint32_t order = q_ - 1;
    const auto &t = *tables_;
    return FieldElem{t.exp[(t.log[a.value] + t.log[b.value]) % order]};
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a.value == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint32_t order = q_ - 1;
    const auto &t = *tables_;
    return FieldElem{t.exp[(order - t.log[a.value]) % order]};
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t k) const noexcept {
    if (k == 0) return one();
    if (a.value == 0) return zero();
    const std::uint64_t order = q_ - 1;
    const auto &t = *tables_;
    return FieldElem{t.exp[(t.log[a.value] * (k % order)) % order]};
}

FieldElem FieldCtx::from_integer(std::int64_t m) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    return FieldElem{static_cast<std::uint32_t>(((m % p) + p) % p)};
}

}  // namespace qmlearn
