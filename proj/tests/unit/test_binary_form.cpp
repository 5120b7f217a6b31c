/*
   Copyright 2026 The sextactic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace sextactic {
namespace {

using testing::B;

TEST(BinaryForm, LinearFactorOrders) {
    BinaryForm f = B("s^17*t^10*(192*s^3 + 1680*s^2*t + 5275*s*t^2 + 5250*t^3)");
    EXPECT_EQ(linear_factor_order(f, Rat(0), Rat(1)), 17u);
    EXPECT_EQ(linear_factor_order(f, Rat(1), Rat(0)), 10u);
    EXPECT_EQ(linear_factor_order(f, Rat(-15), Rat(8)), 1u);
    EXPECT_EQ(linear_factor_order(f, Rat(1), Rat(1)), 0u);
    EXPECT_THROW(linear_factor_order(B("0"), Rat(1), Rat(1)), Error);
    EXPECT_THROW(linear_factor_order(f, Rat(0), Rat(0)), Error);
}

TEST(BinaryForm, DenseRoundTrip) {
    BinaryForm f = B("3*s^4 - s^2*t^2 + 7*t^4");
    EXPECT_EQ(from_dense(to_dense(f)), f);
    EXPECT_EQ(homogenize(dehomogenize(B("s^2*t + t^3"))) * B("t"), B("s^2*t + t^3"));
}

TEST(BinaryForm, Gcd) {
    EXPECT_EQ(binary_gcd(B("s^2*t - s*t^2"), B("s^3 - s*t^2")), B("s^2 - s*t"));
    EXPECT_EQ(binary_gcd(B("s^2"), B("t^3")), B("1"));
}

TEST(BinaryForm, SquarefreeReconstruction) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        BinaryForm f = MPoly::constant(st_vars(), testing::random_nonzero(rng));
        std::uniform_int_distribution<int> nf(1, 4), e(1, 3), deg(1, 3);
        int k = nf(rng);
        for (int j = 0; j < k; ++j) f *= pow(testing::random_form(rng, st_vars(), deg(rng), 3), e(rng));
        if (f.is_zero()) continue;
        auto dec = squarefree_decomp(f);
        BinaryForm g = MPoly::constant(st_vars(), dec.content);
        for (const auto& sf : dec.factors) g *= pow(sf.factor, sf.multiplicity);
        EXPECT_EQ(g, f);
        for (std::size_t a = 0; a < dec.factors.size(); ++a)
            for (std::size_t b = a + 1; b < dec.factors.size(); ++b)
                EXPECT_EQ(binary_gcd(dec.factors[a].factor, dec.factors[b].factor).degree(), 0u);
    }
}

TEST(BinaryForm, ZeroClassesSplitRationalRoots) {
    auto zc = zero_classes(B("-5*s^17*t^10*(192*s^3 + 1680*s^2*t + 5275*s*t^2 + 5250*t^3)"));
    ASSERT_EQ(zc.size(), 4u);
    EXPECT_EQ(zc[0].factor, B("s"));
    EXPECT_EQ(zc[0].multiplicity, 17u);
    EXPECT_EQ(zc[1].factor, B("t"));
    EXPECT_EQ(zc[1].multiplicity, 10u);
    EXPECT_EQ(zc[2].factor, B("8*s + 15*t"));
    ASSERT_TRUE(zc[2].root);
    EXPECT_EQ(*zc[2].root, (PointP1{Rat(-15), Rat(8)}));
    EXPECT_EQ(zc[3].factor, B("24*s^2 + 165*s*t + 350*t^2"));
    EXPECT_EQ(zc[3].degree, 2u);
    EXPECT_TRUE(zc[3].irreducible);
    EXPECT_FALSE(zc[3].root);
}

TEST(BinaryForm, FactorMultiplicity) {
    BinaryForm q = B("14*s^2 - 7*s*t + 2*t^2");
    EXPECT_EQ(factor_multiplicity(pow(q, 3) * B("s - t"), q), 3u);
    EXPECT_EQ(factor_multiplicity(B("s - t"), q), 0u);
}

TEST(BinaryForm, RejectsNonForms) {
    EXPECT_THROW(squarefree_decomp(B("s^2 + t")), Error);
    EXPECT_THROW(squarefree_decomp(testing::P("x")), Error);
}

}  // namespace
}  // namespace sextactic
