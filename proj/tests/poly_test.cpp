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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "qmlearn/errors.hpp"
#include "qmlearn/poly.hpp"
#include "test_support.hpp"

namespace qmlearn {
namespace {

using testing::all_points;
using testing::RefField;

FieldElem E(std::uint32_t v) { return FieldElem{v}; }
SubsetIndex S(std::vector<int> m) { return SubsetIndex::from_members(m); }
PointVec P(std::vector<std::uint32_t> v) {
    std::vector<FieldElem> c;
    for (auto x : v) c.push_back(E(x));
    return PointVec(c);
}

template <class F>
ErrorCode code_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::ParseError;
}

TEST(Subsets, CanonicalEnumeration) {
    const auto two = subsets_of_size(4, 2);
    ASSERT_EQ(two.size(), 6u);
    const std::vector<std::uint64_t> masks{0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100};
    for (std::size_t i = 0; i < masks.size(); ++i) EXPECT_EQ(two[i].mask(), masks[i]);
    EXPECT_EQ(subsets_of_size(5, 0).size(), 1u);
    EXPECT_TRUE(subsets_of_size(3, 4).empty());
    EXPECT_EQ(subsets_of_size(64, 1).size(), 64u);
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) EXPECT_EQ(subsets_of_size(n, k).size(), binomial(n, k));
}

TEST(Subsets, MembersAndErrors) {
    const auto s = S({1, 3, 64});
    EXPECT_EQ(s.members(), (std::vector<int>{1, 3, 64}));
    EXPECT_EQ(s.max_member(), 64);
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(2));
    EXPECT_EQ(s.without(64).with(2), S({1, 2, 3}));
    EXPECT_TRUE(S({1}).subset_of(s));
    EXPECT_EQ(code_of([] { S({0}); }), ErrorCode::IndexOutOfRange);
    EXPECT_EQ(code_of([] { S({65}); }), ErrorCode::IndexOutOfRange);
    EXPECT_EQ(code_of([] { S({2, 1}); }), ErrorCode::IndexOutOfRange);
}

TEST(Binomial, SmallValues) {
    EXPECT_EQ(binomial(10, 2), 45u);
    EXPECT_EQ(binomial(12, 3), 220u);
    EXPECT_EQ(binomial(64, 32), 1832624140942590534ull);
    EXPECT_EQ(binomial(3, 5), 0u);
    EXPECT_EQ(binomial(3, -1), 0u);
}

TEST(PolyExamples, Evaluate) {
    const auto f2 = FieldCtx::prime(2);
    MultilinearPoly f(f2, 2, 2);
    f.set(SubsetIndex{}, E(1));
    f.set(S({1, 2}), E(1));
    EXPECT_EQ(evaluate(f, P({1, 1})), E(0));

    const auto f5 = FieldCtx::prime(5);
    MultilinearPoly g(f5, 3, 3);
    g.set(S({1}), E(2));
    g.set(S({1, 2}), E(4));
    g.set(S({1, 2, 3}), E(1));
    EXPECT_EQ(evaluate(g, P({1, 1, 1})), E(2));
    EXPECT_EQ(evaluate(g, P({0, 0, 0})), E(0));

    const auto h = random_poly(FieldCtx::from_order(9), 4, 3, 17);
    EXPECT_EQ(evaluate(h, PointVec::zeros(4)), h.coeff(SubsetIndex{}));
}

TEST(PolyExamples, DegreePart) {
    const auto f5 = FieldCtx::prime(5);
    MultilinearPoly f(f5, 2, 2);
    f.set(SubsetIndex{}, E(1));
    f.set(S({1}), E(1));
    f.set(S({1, 2}), E(1));
    const auto d1 = degree_part(f, 1);
    ASSERT_EQ(d1.coeffs().size(), 1u);
    EXPECT_EQ(d1.coeff(S({1})), E(1));
    EXPECT_EQ(degree_part(f, 0).coeffs().size(), 1u);
    EXPECT_EQ(degree_part(f, 0).coeff(SubsetIndex{}), E(1));
    EXPECT_EQ(code_of([&] { degree_part(f, 3); }), ErrorCode::InvalidDegree);
    EXPECT_EQ(code_of([&] { degree_part(f, -1); }), ErrorCode::InvalidDegree);

    MultilinearPoly g(f5, 3, 3);
    g.set(S({1}), E(2));
    g.set(S({1, 2}), E(4));
    g.set(S({1, 2, 3}), E(1));
    const auto top = degree_part(g, 3);
    ASSERT_EQ(top.coeffs().size(), 1u);
    EXPECT_EQ(top.coeff(S({1, 2, 3})), E(1));
}

TEST(PolyExamples, DerivativeFn) {
    const auto f2 = FieldCtx::prime(2);
    MultilinearPoly f(f2, 2, 2);
    f.set(S({1, 2}), E(1));
    const auto d1 = derivative_fn(f, S({1}));
    EXPECT_EQ(d1.cost, 2u);
    for (const auto &x : all_points(2, 2)) EXPECT_EQ(d1.fn(x), x[1]);

    const auto d0 = derivative_fn(f, SubsetIndex{});
    EXPECT_EQ(d0.cost, 1u);
    for (const auto &x : all_points(2, 2)) EXPECT_EQ(d0.fn(x), evaluate(f, x));

    // f_{1,2}(x) = f(x) - f(x+e1) - f(x+e2) + f(x+e1+e2), written out.
    const auto ctx = FieldCtx::prime(7);
    const auto g = random_poly(ctx, 3, 3, 5);
    const auto d12 = derivative_fn(g, S({1, 2}));
    EXPECT_EQ(d12.cost, 4u);
    for (const auto &x : all_points(7, 3)) {
        auto shift = [&](int i, int j) {
            PointVec y = x;
            if (i) y[0] = ctx.add(y[0], ctx.one());
            if (j) y[1] = ctx.add(y[1], ctx.one());
            return evaluate(g, y);
        };
        const auto expected = ctx.add(ctx.sub(ctx.sub(shift(0, 0), shift(1, 0)), shift(0, 1)), shift(1, 1));
        ASSERT_EQ(d12.fn(x), expected);
    }
}

TEST(PolyExamples, DiscreteDerivative) {
    for (const auto &ctx : {FieldCtx::prime(2), FieldCtx::prime(3), FieldCtx::from_order(4), FieldCtx::prime(7)}) {
        MultilinearPoly f(ctx, 3, 2);
        f.set(S({1, 2}), E(1));
        const auto d1 = discrete_derivative(f, 1);
        ASSERT_EQ(d1.coeffs().size(), 1u);
        EXPECT_EQ(d1.coeff(S({2})), E(1));
        EXPECT_TRUE(discrete_derivative(f, 3).coeffs().empty());

        MultilinearPoly g = f;
        g.set(S({1}), E(1));
        g.set(SubsetIndex{}, ctx.from_integer(5));
        const auto dd = discrete_derivative(discrete_derivative(g, 1), 2);
        ASSERT_EQ(dd.coeffs().size(), 1u) << ctx.spec();
        EXPECT_EQ(dd.coeff(SubsetIndex{}), E(1));
        const auto fn = derivative_fn(g, S({1, 2}));
        for (const auto &x : all_points(ctx.q(), 3)) ASSERT_EQ(fn.fn(x), E(1));
    }
}

TEST(PolyExamples, RandomPolyOutcomes) {
    const auto f2 = FieldCtx::prime(2);
    std::set<std::uint32_t> constants;
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        const auto f = random_poly(f2, 1, 0, seed);
        EXPECT_EQ(f.degree_bound(), 0);
        EXPECT_LE(f.coeffs().size(), 1u);
        constants.insert(f.coeff(SubsetIndex{}).value);
    }
    EXPECT_EQ(constants.size(), 2u);

    // q^{1+n} = 27 outcomes for (q=3, n=2, d=1).
    const auto f3 = FieldCtx::prime(3);
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint64_t seed = 0; seed < 3000; ++seed) {
        const auto f = random_poly(f3, 2, 1, seed);
        seen.insert({f.coeff(SubsetIndex{}).value, f.coeff(S({1})).value, f.coeff(S({2})).value});
    }
    EXPECT_EQ(seen.size(), 27u);

    EXPECT_TRUE(poly_equal(random_poly(f3, 5, 3, 99), random_poly(f3, 5, 3, 99)));
    EXPECT_FALSE(poly_equal(random_poly(f3, 5, 3, 99), random_poly(f3, 5, 3, 100)));
}

TEST(PolyExamples, Equality) {
    const auto ctx = FieldCtx::prime(5);
    const auto f = random_poly(ctx, 4, 2, 3);
    EXPECT_TRUE(poly_equal(f, f));
    auto g = f;
    g.set(S({1, 2}), ctx.add(f.coeff(S({1, 2})), ctx.one()));
    EXPECT_FALSE(poly_equal(f, g));
    MultilinearPoly z1(ctx, 3, 2), z2(ctx, 3, 2);
    z1.set(S({1, 3}), E(0));
    EXPECT_TRUE(z1.coeffs().empty());
    EXPECT_TRUE(poly_equal(z1, z2));
    EXPECT_EQ(code_of([&] { poly_equal(f, MultilinearPoly(ctx, 3, 2)); }), ErrorCode::ContextMismatch);
    EXPECT_EQ(code_of([&] { poly_equal(f, MultilinearPoly(FieldCtx::prime(7), 4, 2)); }), ErrorCode::ContextMismatch);
}

TEST(PolyErrors, SetAndEvaluate) {
    const auto ctx = FieldCtx::prime(3);
    MultilinearPoly f(ctx, 3, 2);
    EXPECT_EQ(code_of([&] { f.set(S({1, 2, 3}), E(1)); }), ErrorCode::InvalidDegree);
    EXPECT_EQ(code_of([&] { f.set(S({4}), E(1)); }), ErrorCode::IndexOutOfRange);
    EXPECT_EQ(code_of([&] { f.set(S({1}), E(3)); }), ErrorCode::InvalidField);
    EXPECT_EQ(code_of([&] { evaluate(f, PointVec::zeros(2)); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([&] { f += MultilinearPoly(FieldCtx::prime(5), 3, 2); }), ErrorCode::ContextMismatch);
}

TEST(PolyErrors, DegreeAboveVariablesIsClamped) {
    const MultilinearPoly f(FieldCtx::prime(2), 2, 5);
    EXPECT_EQ(f.degree_bound(), 2);
}

TEST(PolyArithmetic, AddSubScale) {
    const auto ctx = FieldCtx::from_order(8);
    const auto f = random_poly(ctx, 3, 2, 1);
    const auto g = random_poly(ctx, 3, 2, 2);
    const auto sum = f + g;
    const auto diff = f - g;
    const auto c = E(5);
    const auto scaled = f.scaled(c);
    for (const auto &x : all_points(8, 3)) {
        ASSERT_EQ(evaluate(sum, x), ctx.add(evaluate(f, x), evaluate(g, x)));
        ASSERT_EQ(evaluate(diff, x), ctx.sub(evaluate(f, x), evaluate(g, x)));
        ASSERT_EQ(evaluate(scaled, x), ctx.mul(c, evaluate(f, x)));
    }
    EXPECT_TRUE((f - f).coeffs().empty());
    EXPECT_EQ((f - f).actual_degree(), -1);
    EXPECT_EQ(f.actual_degree(), 2);
}

// Properties over seeded random instances.

class PolyProperties : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(PolyProperties, EvaluateMatchesReference) {
    const auto ctx = FieldCtx::from_order(GetParam());
    const RefField F(ctx);
    std::mt19937_64 rng(GetParam());
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 5;
        const auto f = random_poly(ctx, n, n, rng());
        for (int k = 0; k < 20; ++k) {
            const auto x = testing::random_point(ctx, n, rng);
            ASSERT_EQ(evaluate(f, x).value, testing::ref_evaluate(F, f, x));
        }
    }
}

TEST_P(PolyProperties, EvaluateAllMatchesPointwise) {
    const auto ctx = FieldCtx::from_order(GetParam());
    for (int n = 0; n <= 3; ++n) {
        for (int d = 0; d <= n; ++d) {
            const auto f = random_poly(ctx, n, d, mix_seed(GetParam(), 10 * n + d));
            const auto all = evaluate_all(f);
            const auto pts = all_points(ctx.q(), n);
            ASSERT_EQ(all.size(), pts.size());
            for (std::size_t i = 0; i < pts.size(); ++i) ASSERT_EQ(all[i], evaluate(f, pts[i]));
        }
    }
}

TEST_P(PolyProperties, EvaluateIsLinearInCoefficients) {
    const auto ctx = FieldCtx::from_order(GetParam());
    std::mt19937_64 rng(GetParam() * 31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_poly(ctx, 4, 3, rng());
        const auto g = random_poly(ctx, 4, 3, rng());
        const auto x = testing::random_point(ctx, 4, rng);
        ASSERT_EQ(evaluate(f + g, x), ctx.add(evaluate(f, x), evaluate(g, x)));
    }
}

TEST_P(PolyProperties, ClosedFormOfSubsetDerivative) {
    const auto ctx = FieldCtx::from_order(GetParam());
    const int n = ctx.q() <= 5 ? 4 : 3;
    for (int d = 1; d <= 3; ++d) {
        for (int trial = 0; trial < 25; ++trial) {
            const auto f = random_poly(ctx, n, d, mix_seed(GetParam(), 100 * d + trial));
            for (auto s : subsets_of_size(n, d - 1)) {
                const auto fs = derivative_fn(f, s);
                ASSERT_EQ(fs.cost, std::uint64_t{1} << (d - 1));
                for (const auto &x : all_points(ctx.q(), n)) {
                    FieldElem rhs = f.coeff(s);
                    for (int k = 1; k <= n; ++k)
                        if (!s.contains(k))
                            rhs = ctx.add(rhs, ctx.mul(f.coeff(s.with(k)), x[static_cast<std::size_t>(k - 1)]));
                    ASSERT_EQ(fs.fn(x), rhs);
                }
            }
            // |S| = d: the derivative is the constant alpha_S.
            for (auto s : subsets_of_size(n, d)) {
                const auto fs = derivative_fn(f, s);
                for (const auto &x : all_points(ctx.q(), n)) ASSERT_EQ(fs.fn(x), f.coeff(s));
            }
        }
    }
}

TEST_P(PolyProperties, IteratedDerivativeIsOrderIndependent) {
    const auto ctx = FieldCtx::from_order(GetParam());
    const int n = 3;
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_poly(ctx, n, n, mix_seed(GetParam(), 7000 + trial));
        for (int k = 0; k <= n; ++k) {
            for (auto s : subsets_of_size(n, k)) {
                auto order = s.members();
                const auto fs = derivative_fn(f, s);
                do {
                    MultilinearPoly g = f;
                    for (int i : order) g = discrete_derivative(g, i);
                    for (const auto &x : all_points(ctx.q(), n)) ASSERT_EQ(evaluate(g, x), fs.fn(x));
                } while (std::next_permutation(order.begin(), order.end()));
            }
        }
    }
}

TEST_P(PolyProperties, DiscreteDerivativeMatchesDefinition) {
    const auto ctx = FieldCtx::from_order(GetParam());
    const auto f = random_poly(ctx, 3, 3, GetParam());
    for (int i = 1; i <= 3; ++i) {
        const auto di = discrete_derivative(f, i);
        for (const auto &x : all_points(ctx.q(), 3)) {
            PointVec y = x;
            y[static_cast<std::size_t>(i - 1)] = ctx.add(y[static_cast<std::size_t>(i - 1)], ctx.one());
            ASSERT_EQ(evaluate(di, x), ctx.sub(evaluate(f, y), evaluate(f, x)));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, PolyProperties, ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u),
                         [](const auto &info) { return "q" + std::to_string(info.param); });

}  // namespace
}  // namespace qmlearn
