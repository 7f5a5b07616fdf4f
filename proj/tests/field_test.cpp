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

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "qmlearn/errors.hpp"
#include "qmlearn/field.hpp"
#include "test_support.hpp"

namespace qmlearn {
namespace {

using testing::RefField;

FieldElem E(std::uint32_t v) { return FieldElem{v}; }

// Every monic modulus of degree r >= 2 with p^r <= 32 whose residue ring is a
// field, decided by checking with the reference arithmetic that each nonzero
// residue has an inverse.
std::vector<FieldCtx> every_extension_up_to_32() {
    std::vector<FieldCtx> out;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        std::uint32_t q = p;
        for (std::uint32_t r = 2; r <= FieldCtx::kMaxDegree && (q *= p) <= 32; ++r) {
            for (std::uint32_t low = 0; low < q; ++low) {
                std::vector<std::uint32_t> mod;
                for (std::uint32_t v = low, i = 0; i < r; ++i, v /= p) mod.push_back(v % p);
                mod.push_back(1);
                const RefField F(p, mod);
                std::uint32_t units = 0;
                for (std::uint32_t a = 1; a < q; ++a) {
                    for (std::uint32_t b = 1; b < q; ++b) {
                        if (F.mul(a, b) == 1) {
                            ++units;
                            break;
                        }
                    }
                }
                if (units == q - 1) out.emplace_back(p, r, mod);
            }
        }
    }
    return out;
}

std::vector<FieldCtx> axiom_fields() {
    auto out = testing::small_fields();
    for (auto &f : every_extension_up_to_32()) out.push_back(f);
    return out;
}

TEST(FieldExamples, PrimeFieldArithmetic) {
    const auto f2 = FieldCtx::prime(2);
    EXPECT_EQ(f2.add(E(1), E(1)), E(0));
    const auto f5 = FieldCtx::prime(5);
    EXPECT_EQ(f5.add(E(3), E(4)), E(2));
    EXPECT_EQ(f5.inv(E(2)), E(3));
    EXPECT_EQ(f5.trace(E(3)), 3u);
    const auto f3 = FieldCtx::prime(3);
    EXPECT_EQ(f3.mul(E(2), E(2)), E(1));
}

TEST(FieldExamples, F4WithStandardModulus) {
    const FieldCtx f4(2, 2, {1, 1, 1});
    // t = 2, t + 1 = 3.
    EXPECT_EQ(f4.add(E(2), E(3)), E(1));
    EXPECT_EQ(f4.mul(E(2), E(2)), E(3));
    EXPECT_EQ(f4.inv(E(2)), E(3));
    EXPECT_EQ(f4.trace(E(2)), 1u);
    const std::vector<std::uint32_t> traces{0, 0, 1, 1};
    for (std::uint32_t x = 0; x < 4; ++x) EXPECT_EQ(f4.trace(E(x)), traces[x]) << x;
}

TEST(FieldExamples, FrozenTablesForBuiltinExtensions) {
    struct Case {
        std::uint32_t q;
        std::vector<std::uint32_t> traces;
        std::vector<std::uint32_t> inverses;
    };
    const std::vector<Case> cases{
        {8, {0, 1, 0, 1, 0, 1, 0, 1}, {0, 1, 5, 6, 7, 2, 3, 4}},
        {9, {0, 2, 1, 0, 2, 1, 0, 2, 1}, {0, 1, 2, 6, 5, 4, 3, 8, 7}},
        {27,
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1},
         {0, 1, 2, 19, 21, 24, 11, 12, 15, 25, 23, 6, 7, 22, 18, 8, 20, 26, 14, 3, 16, 4, 13, 10, 5, 9, 17}},
    };
    for (const auto &c : cases) {
        const auto ctx = FieldCtx::from_order(c.q);
        for (std::uint32_t x = 0; x < c.q; ++x) {
            EXPECT_EQ(ctx.trace(E(x)), c.traces[x]) << "q=" << c.q << " x=" << x;
            if (x != 0) EXPECT_EQ(ctx.inv(E(x)).value, c.inverses[x]) << "q=" << c.q << " x=" << x;
        }
    }
    const auto f9 = FieldCtx::from_order(9);
    const std::vector<std::uint32_t> row5{0, 5, 7, 8, 1, 3, 4, 6, 2};
    for (std::uint32_t b = 0; b < 9; ++b) EXPECT_EQ(f9.mul(E(5), E(b)).value, row5[b]);
}

TEST(FieldErrors, InverseOfZero) {
    for (const auto &ctx : {FieldCtx::prime(7), FieldCtx::from_order(4)}) {
        try {
            (void)ctx.inv(ctx.zero());
            FAIL() << "expected DivisionByZero";
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
        }
    }
}

TEST(FieldErrors, RejectsBadParameters) {
    auto expect_invalid = [](auto make) {
        try {
            make();
            FAIL() << "expected InvalidField";
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidField);
        }
    };
    expect_invalid([] { FieldCtx(2, 2, {1, 0, 1}); });     // t^2 + 1 = (t + 1)^2 over F_2
    expect_invalid([] { FieldCtx(3, 2, {2, 0, 1}); });     // t^2 - 1
    expect_invalid([] { FieldCtx(2, 2, {1, 1, 0}); });     // not monic
    expect_invalid([] { FieldCtx(2, 2, {1, 1}); });        // wrong length
    expect_invalid([] { FieldCtx(2, 2, {1, 3, 1}); });     // coefficient outside F_p
    expect_invalid([] { FieldCtx::prime(6); });
    expect_invalid([] { FieldCtx::prime(1); });
    expect_invalid([] { FieldCtx(2, 5, {1, 0, 1, 0, 0, 1}); });  // r > 4
    expect_invalid([] { FieldCtx::prime(65537); });              // q > 2^16
    expect_invalid([] { FieldCtx::from_order(6); });
    expect_invalid([] { FieldCtx::from_order(32); });
}

TEST(FieldParse, AcceptedForms) {
    EXPECT_EQ(FieldCtx::parse("5"), FieldCtx::prime(5));
    EXPECT_EQ(FieldCtx::parse("2^2"), FieldCtx(2, 2, {1, 1, 1}));
    EXPECT_EQ(FieldCtx::parse("2^2:1,1,1"), FieldCtx(2, 2, {1, 1, 1}));
    EXPECT_EQ(FieldCtx::parse("4"), FieldCtx(2, 2, {1, 1, 1}));
    EXPECT_EQ(FieldCtx::parse("3^2:2,2,1").modulus(), (std::vector<std::uint32_t>{2, 2, 1}));
    for (const auto &ctx : axiom_fields()) EXPECT_EQ(FieldCtx::parse(ctx.spec()), ctx) << ctx.spec();
}

TEST(FieldParse, RejectsMalformedText) {
    for (const std::string bad : {"", "x", "2^", "^2", "2^2:1,1", "2^2:1,,1", "2^2:1,1,1,", "-3", "2^2:1,0,1", "10"}) {
        try {
            (void)FieldCtx::parse(bad);
            FAIL() << "accepted '" << bad << "'";
        } catch (const Error &e) {
            EXPECT_TRUE(e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidField) << bad;
        }
    }
}

TEST(FieldParse, DistinctModuliGiveDistinctContexts) {
    EXPECT_FALSE(FieldCtx(3, 2, {1, 0, 1}) == FieldCtx(3, 2, {2, 2, 1}));
}

TEST(FieldIrreducibility, MatchesUnitCountOnEverySmallModulus) {
    for (std::uint32_t p : {2u, 3u}) {
        for (std::uint32_t r = 1; r <= 4; ++r) {
            std::uint32_t q = 1;
            for (std::uint32_t i = 0; i < r; ++i) q *= p;
            for (std::uint32_t low = 0; low < q; ++low) {
                std::vector<std::uint32_t> mod;
                for (std::uint32_t v = low, i = 0; i < r; ++i, v /= p) mod.push_back(v % p);
                mod.push_back(1);
                const RefField F(p, mod);
                bool field = true;
                for (std::uint32_t a = 1; a < q && field; ++a) {
                    bool unit = false;
                    for (std::uint32_t b = 1; b < q && !unit; ++b) unit = F.mul(a, b) == 1;
                    field = unit;
                }
                EXPECT_EQ(detail::is_irreducible(mod, p), field) << "p=" << p << " low=" << low << " r=" << r;
            }
        }
    }
}

// Axioms by full table scan.
TEST(FieldProperties, AxiomsHoldExhaustively) {
    for (const auto &ctx : axiom_fields()) {
        const std::uint32_t q = ctx.q();
        SCOPED_TRACE(ctx.spec());
        for (std::uint32_t a = 0; a < q; ++a) {
            ASSERT_EQ(ctx.add(E(a), ctx.zero()), E(a));
            ASSERT_EQ(ctx.mul(E(a), ctx.one()), E(a));
            ASSERT_EQ(ctx.add(E(a), ctx.neg(E(a))), ctx.zero());
            if (a != 0) ASSERT_EQ(ctx.mul(E(a), ctx.inv(E(a))), ctx.one());
            for (std::uint32_t b = 0; b < q; ++b) {
                ASSERT_EQ(ctx.add(E(a), E(b)), ctx.add(E(b), E(a)));
                ASSERT_EQ(ctx.mul(E(a), E(b)), ctx.mul(E(b), E(a)));
                ASSERT_EQ(ctx.sub(E(a), E(b)), ctx.add(E(a), ctx.neg(E(b))));
                for (std::uint32_t c = 0; c < q; ++c) {
                    ASSERT_EQ(ctx.add(ctx.add(E(a), E(b)), E(c)), ctx.add(E(a), ctx.add(E(b), E(c))));
                    ASSERT_EQ(ctx.mul(ctx.mul(E(a), E(b)), E(c)), ctx.mul(E(a), ctx.mul(E(b), E(c))));
                    ASSERT_EQ(ctx.mul(E(a), ctx.add(E(b), E(c))), ctx.add(ctx.mul(E(a), E(b)), ctx.mul(E(a), E(c))));
                }
            }
        }
    }
}

TEST(FieldProperties, TablesAgreeWithReferenceArithmetic) {
    for (const auto &ctx : axiom_fields()) {
        const RefField F(ctx);
        SCOPED_TRACE(ctx.spec());
        for (std::uint32_t a = 0; a < ctx.q(); ++a) {
            ASSERT_EQ(ctx.trace(E(a)), F.trace(a));
            for (std::uint32_t b = 0; b < ctx.q(); ++b) {
                ASSERT_EQ(ctx.add(E(a), E(b)).value, F.add(a, b));
                ASSERT_EQ(ctx.mul(E(a), E(b)).value, F.mul(a, b));
                ASSERT_EQ(detail::polymul_mod(a, b, ctx.p(), ctx.modulus()), F.mul(a, b));
            }
        }
    }
}

TEST(FieldProperties, FrobeniusIsAdditive) {
    for (const auto &ctx : axiom_fields()) {
        for (std::uint32_t a = 0; a < ctx.q(); ++a) {
            for (std::uint32_t b = 0; b < ctx.q(); ++b) {
                ASSERT_EQ(ctx.pow(ctx.add(E(a), E(b)), ctx.p()),
                          ctx.add(ctx.pow(E(a), ctx.p()), ctx.pow(E(b), ctx.p())))
                    << ctx.spec();
            }
        }
    }
}

TEST(FieldProperties, TraceIsFpLinearAndOnto) {
    for (const auto &ctx : axiom_fields()) {
        std::set<std::uint32_t> image;
        for (std::uint32_t a = 0; a < ctx.q(); ++a) {
            const std::uint32_t ta = ctx.trace(E(a));
            ASSERT_LT(ta, ctx.p());
            image.insert(ta);
            for (std::uint32_t b = 0; b < ctx.q(); ++b) {
                ASSERT_EQ(ctx.trace(ctx.add(E(a), E(b))), (ta + ctx.trace(E(b))) % ctx.p()) << ctx.spec();
            }
            for (std::uint32_t c = 0; c < ctx.p(); ++c) {
                ASSERT_EQ(ctx.trace(ctx.mul(E(c), E(a))), (c * ta) % ctx.p()) << ctx.spec();
            }
        }
        EXPECT_EQ(image.size(), ctx.p()) << ctx.spec();
    }
}

TEST(FieldProperties, PrimeTraceIsIdentity) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u, 65521u}) {
        const auto ctx = FieldCtx::prime(p);
        for (std::uint32_t a : {0u, 1u, p / 2, p - 1}) EXPECT_EQ(ctx.trace(E(a)), a);
    }
}

TEST(FieldProperties, PowMatchesRepeatedMultiplication) {
    for (const auto &ctx : testing::small_fields()) {
        for (std::uint32_t a = 0; a < ctx.q(); ++a) {
            FieldElem acc = ctx.one();
            for (std::uint64_t k = 0; k < 2 * ctx.q(); ++k) {
                ASSERT_EQ(ctx.pow(E(a), k), acc) << ctx.spec() << " a=" << a << " k=" << k;
                acc = ctx.mul(acc, E(a));
            }
        }
    }
}

TEST(FieldProperties, FromIntegerReducesModP) {
    const auto f4 = FieldCtx::from_order(4);
    EXPECT_EQ(f4.from_integer(3), E(1));
    EXPECT_EQ(f4.from_integer(-1), E(1));
    const auto f7 = FieldCtx::prime(7);
    EXPECT_EQ(f7.from_integer(-1), E(6));
    EXPECT_EQ(f7.from_integer(1000), E(1000 % 7));
    const auto f9 = FieldCtx::from_order(9);
    EXPECT_EQ(f9.from_integer(-4), E(2));
}

TEST(FieldProperties, LargestSupportedFields) {
    for (const auto &ctx : {FieldCtx::prime(65521), FieldCtx(2, 4, {1, 1, 0, 0, 1}), FieldCtx::from_order(49)}) {
        std::mt19937_64 rng(ctx.q());
        std::uniform_int_distribution<std::uint32_t> dist(1, ctx.q() - 1);
        const RefField F(ctx);
        for (int i = 0; i < 2000; ++i) {
            const FieldElem a{dist(rng)}, b{dist(rng)};
            ASSERT_EQ(ctx.mul(a, ctx.inv(a)), ctx.one());
            ASSERT_EQ(ctx.mul(a, b).value, F.mul(a.value, b.value));
        }
    }
}

}  // namespace
}  // namespace qmlearn
