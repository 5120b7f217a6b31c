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

using testing::P;
using testing::random_poly;

TEST(VarSet, RejectsBadAlphabets) {
    EXPECT_THROW(VarSet(""), Error);
    EXPECT_THROW(VarSet("xx"), Error);
    EXPECT_THROW(VarSet("wxyz"), Error);
    EXPECT_EQ(VarSet("st").index_of('t'), 1u);
    EXPECT_FALSE(VarSet("st").index_of('x'));
}

TEST(MPoly, CanonicalPrinting) {
    EXPECT_EQ(P("x^4 - x^3*y + y^3*z").to_string(), "x^4 - x^3*y + y^3*z");
    EXPECT_EQ(P("z + y + x").to_string(), "x + y + z");
    EXPECT_EQ(P("0").to_string(), "0");
    EXPECT_EQ(P("-1").to_string(), "-1");
    EXPECT_EQ(P("-x*z^1 + 3*x^2").to_string(), "3*x^2 - x*z");
    EXPECT_EQ((Rat(1, 2) * P("x")).to_string(), "1/2*x");
}

TEST(MPoly, RingAxiomsOnRandomInputs) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        MPoly a = random_poly(rng, xyz_vars(), 4, 6, 3);
        MPoly b = random_poly(rng, xyz_vars(), 4, 6, 3);
        MPoly c = random_poly(rng, xyz_vars(), 4, 6, 3);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a * MPoly::constant(xyz_vars(), Rat(1)), a);
    }
}

TEST(MPoly, MixedVariableSetsAreRejected) {
    MPoly a = P("x");
    MPoly b = MPoly::variable(st_vars(), 's');
    EXPECT_THROW(a + b, Error);
    EXPECT_THROW(a * b, Error);
}

TEST(MPoly, EvaluateAndDegree) {
    MPoly f = P("x^4 - x^3*y + y^3*z");
    std::array<Rat, 3> p{Rat(1), Rat(2), Rat(3)};
    EXPECT_EQ(f.evaluate(p), Rat(1 - 2 + 24));
    EXPECT_EQ(f.degree(), 4u);
    EXPECT_TRUE(f.is_homogeneous());
    EXPECT_FALSE(P("x^2 + y").is_homogeneous());
    EXPECT_FALSE(P("0").degree());
}

TEST(MPoly, EulerIdentityOnRandomForms) {
    std::mt19937_64 rng(12);
    const MPoly X[3] = {P("x"), P("y"), P("z")};
    for (int i = 0; i < 100; ++i) {
        unsigned d = 3 + i % 3;
        MPoly f = testing::random_form(rng, xyz_vars(), d, 8);
        MPoly sum(xyz_vars());
        for (std::size_t v = 0; v < 3; ++v) sum += X[v] * partial(f, v);
        EXPECT_EQ(sum, Rat(d) * f);
    }
}

TEST(MPoly, PartialDerivative) {
    EXPECT_EQ(partial(P("x^4 - x^3*y + y^3*z"), 'x'), P("4*x^3 - 3*x^2*y"));
    EXPECT_EQ(partial(P("x^4 - x^3*y + y^3*z"), 'z'), P("y^3"));
    EXPECT_TRUE(partial(P("7"), 'y').is_zero());
}

TEST(MPoly, ExactDivision) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        MPoly a = random_poly(rng, xyz_vars(), 3, 5, 2);
        MPoly b = random_poly(rng, xyz_vars(), 3, 5, 2);
        if (b.is_zero()) continue;
        EXPECT_EQ(divide_exact(a * b, b), a);
    }
    EXPECT_FALSE(try_divide(P("x^2 + y"), P("x")));
    EXPECT_THROW(divide_exact(P("x"), P("0")), Error);
    EXPECT_THROW(divide_exact(P("x + 1"), P("y")), Error);
}

TEST(MPoly, ContentAndPrimitivePart) {
    MPoly f = Rat(-6) * P("x^2") + Rat(9) * P("y*z");
    EXPECT_EQ(content(f), Rat(3));
    EXPECT_EQ(primitive_part(f), P("2*x^2 - 3*y*z"));
    MPoly g = Rat(1, 2) * P("x") + Rat(1, 3) * P("y");
    EXPECT_EQ(primitive_part(g), P("3*x + 2*y"));
}

TEST(MPoly, ComposeSubstitutes) {
    MPoly F = P("x^4 - x^3*y + y^3*z");
    std::array<MPoly, 3> phi{testing::B("s*t^3"), testing::B("t^4"), testing::B("s^3*t - s^4")};
    EXPECT_TRUE(compose(F, phi).is_zero());
    std::array<MPoly, 3> id{P("x"), P("y"), P("z")};
    EXPECT_EQ(compose(F, id), F);
}

TEST(Monomial, OverflowIsReported) {
    EXPECT_THROW(pow(P("x^60000"), 2), Error);
}

}  // namespace
}  // namespace sextactic
