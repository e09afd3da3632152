// Copyright 2026 The cmzv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmzv/matrix.hpp>
#include <cmzv/polynomial.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace cmzv;

namespace
{

ThetaPoly random_poly(const FieldRef &f, std::mt19937_64 &rng, int max_deg)
{
    std::uniform_int_distribution<std::uint32_t> d(0, f->order() - 1);
    std::vector<FfElem> c;
    const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    for (int i = 0; i <= deg; ++i) {
        c.push_back(f->element(d(rng)));
    }
    return ThetaPoly(f->zero(), c);
}

} // namespace

TEST(Polynomial, BasicArithmetic)
{
    const auto f = ff_create(3, 1);
    const ThetaPoly x = theta(f);
    const ThetaPoly one = ThetaPoly::constant(f->one());
    EXPECT_EQ((x + one) * (x - one), x * x - one);
    EXPECT_EQ((x + one).pow(3), x.pow(3) + one);
    EXPECT_EQ((x - x).degree(), -1);
    EXPECT_EQ(x.pow(5).degree(), 5);
    EXPECT_EQ(to_string(x.pow(3) - x), "theta^3 + 2*theta");
}

TEST(Polynomial, DivisionIdentity)
{
    const auto f = ff_create(2, 2);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const ThetaPoly a = random_poly(f, rng, 8);
        ThetaPoly b = random_poly(f, rng, 4);
        if (b.zero()) {
            continue;
        }
        const auto [q, r] = divmod(a, b);
        ASSERT_EQ(q * b + r, a);
        ASSERT_LT(r.degree(), b.degree());
        const ThetaPoly g = gcd(a * b, b);
        ASSERT_EQ(g.leading(), f->one());
        ASSERT_TRUE(divmod(b, g).second.zero());
    }
    EXPECT_THROW(exact_div_monic(theta(f) + ThetaPoly::constant(f->one()), theta(f)), std::logic_error);
}

TEST(Polynomial, TwistIsFrobenius)
{
    const auto f = ff_create(3, 2);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const ThetaPoly a = random_poly(f, rng, 5), b = random_poly(f, rng, 5);
        EXPECT_EQ(twist(a, 1), a.pow(3));
        EXPECT_EQ(twist(a * b, 2), twist(a, 2) * twist(b, 2));
    }
}

TEST(Polynomial, Bivariate)
{
    const auto f = ff_create(2, 1);
    const TPoly t = t_var(f);
    const TPoly th = t_constant(theta(f));
    const TPoly lin = t - th;
    EXPECT_EQ(eval_t_at_theta_power(lin, 1), theta_poly(f));
    EXPECT_EQ(eval_t_at_theta_power(t * t + th, 2), theta(f).pow(4) + theta(f));
    EXPECT_EQ(theta_degree(lin.pow(3)), 3);
    EXPECT_EQ(twist(lin, 1), t - t_constant(theta(f).pow(2)));
    const auto [q, r] = divmod_monic(lin.pow(2) * (t + th), lin);
    EXPECT_TRUE(r.zero());
    EXPECT_EQ(q, lin * (t + th));
    EXPECT_EQ(to_string(lin), "t + theta");
}

TEST(Matrix, LowerTriangularInverse)
{
    const auto f = ff_create(5, 1);
    Matrix<FfElem> m(3, 3, f->zero());
    m(0, 0) = f->element(2);
    m(1, 0) = f->element(3);
    m(1, 1) = f->element(4);
    m(2, 0) = f->element(1);
    m(2, 1) = f->element(2);
    m(2, 2) = f->element(3);
    const auto inv = lower_triangular_inverse(m, [](const FfElem &a) { return a.inverse(); });
    EXPECT_EQ(m * inv, Matrix<FfElem>::identity(3, f->zero()));
    const auto bd = block_diagonal(m, inv);
    EXPECT_EQ(bd.rows(), 6u);
    EXPECT_TRUE(bd.is_lower_triangular());
}
