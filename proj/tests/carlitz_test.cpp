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

#include "oracles.hpp"

#include <cmzv/carlitz.hpp>

#include <gtest/gtest.h>

using namespace cmzv;

namespace
{

const std::vector<std::pair<std::uint32_t, unsigned>> kLevels = {{2, 1}, {3, 1}, {2, 2}};

// Gamma_{n+1} recomputed from scratch: digits by repeated subtraction of the
// largest power, D_i by enumeration.
ThetaPoly factorial_oracle(const CarlitzContext &ctx, std::uint64_t n)
{
    ThetaPoly g = ThetaPoly::constant(ctx.F().one());
    unsigned i = 0;
    std::uint64_t qi = 1;
    while (qi * ctx.q <= n) {
        qi *= ctx.q;
        ++i;
    }
    for (;; --i, qi /= ctx.q) {
        while (n >= qi) {
            n -= qi;
            ThetaPoly d = ThetaPoly::constant(ctx.F().one());
            for (const auto &a : oracle::monics(ctx.F(), i)) {
                d *= a;
            }
            g *= d;
        }
        if (i == 0) {
            break;
        }
    }
    return g;
}

} // namespace

TEST(Carlitz, DRecursionMatchesEnumeration)
{
    for (auto [p, l] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        const auto ctx = make_context(p, l);
        for (unsigned i = 0; i <= 3; ++i) {
            std::uint64_t count = 1;
            for (unsigned k = 0; k < i; ++k) {
                count *= ctx.q;
            }
            if (count > 10000) {
                continue;
            }
            ThetaPoly prod = ThetaPoly::constant(ctx.F().one());
            for (const auto &a : oracle::monics(ctx.F(), i)) {
                prod *= a;
            }
            ASSERT_EQ(carlitz_d(ctx, i), prod) << "q=" << ctx.q << " i=" << i;
        }
    }
}

TEST(Carlitz, DExamples)
{
    const auto ctx = make_context(3, 1);
    const ThetaPoly th = ctx.theta_poly();
    EXPECT_EQ(carlitz_d(ctx, 0), ThetaPoly::constant(ctx.F().one()));
    EXPECT_EQ(carlitz_d(ctx, 1), th.pow(3) - th);
    EXPECT_EQ(carlitz_d(ctx, 2), (th.pow(9) - th) * (th.pow(3) - th).pow(3));
}

TEST(Carlitz, Factorial)
{
    for (auto [p, l] : kLevels) {
        const auto ctx = make_context(p, l);
        for (std::uint64_t s = 0; s < ctx.q; ++s) {
            EXPECT_EQ(carlitz_factorial(ctx, s), ThetaPoly::constant(ctx.F().one()));
        }
        EXPECT_EQ(carlitz_factorial(ctx, ctx.q), carlitz_d(ctx, 1));
        for (std::uint64_t n = 0; n <= 20; ++n) {
            ASSERT_EQ(carlitz_factorial(ctx, n), factorial_oracle(ctx, n)) << "q=" << ctx.q << " n=" << n;
        }
    }
}

TEST(Carlitz, OmegaLowCoefficients)
{
    for (auto [p, l] : kLevels) {
        const auto ctx = make_context(p, l);
        const auto q = static_cast<std::int64_t>(ctx.q);
        const TateElement om = omega_series(ctx, 3, 6, 200);
        EXPECT_EQ(om.coeff(0).val(), q);
        EXPECT_EQ(om.coeff(0).leading_coeff(), ctx.F().one());
        // t^1: -z^q * sum_{i<=3} theta^{-q^i}
        LaurentSeries s = ctx.zero();
        std::uint64_t qi = 1;
        for (int i = 1; i <= 3; ++i) {
            qi *= ctx.q;
            s += ctx.theta().inverse().pow(qi);
        }
        const LaurentSeries expect = -(LaurentSeries::monomial(ctx.F().one(), ctx.q, q) * s);
        EXPECT_TRUE(eq_to_prec(om.coeff(1), expect).equal());
        EXPECT_TRUE(om.certificate_consistent());
        EXPECT_EQ(om.coeff(0).prec(), std::min<std::int64_t>(200, omega_truncation_floor(ctx, 3)));
    }
}

TEST(Carlitz, OmegaFunctionalEquation)
{
    for (auto [p, l] : kLevels) {
        const auto ctx = make_context(p, l);
        const TateElement om = omega_series(ctx, omega_factors_for(ctx, 60), 20, 60);
        const auto r = omega_functional_residual(ctx, om);
        EXPECT_TRUE(r.sane);
        EXPECT_TRUE(r.residual.passes(60)) << r.residual.describe();
        const TateElement broken = omega_series(ctx, omega_factors_for(ctx, 60), 20, 60, 1u);
        const auto rb = omega_functional_residual(ctx, broken);
        EXPECT_FALSE(rb.residual.zero);
        EXPECT_LT(*rb.residual.exponent, 60);
        const auto rz = omega_functional_residual(ctx, TateElement::zero(ctx.F(), ctx.q));
        EXPECT_FALSE(rz.sane);
        EXPECT_FALSE(rz.residual.passes(1));
    }
}

TEST(Carlitz, PiTildeTwoPaths)
{
    for (auto [p, l] : kLevels) {
        const auto ctx = make_context(p, l);
        const auto q = static_cast<std::int64_t>(ctx.q);
        const LaurentSeries pt = pi_tilde(ctx, 60);
        EXPECT_EQ(pt.prec(), 60);
        EXPECT_EQ(ls_norm(pt), ExtRational::of(Rational(q, q - 1)));
        const LaurentSeries om = te_eval_theta(omega_for_evaluation(ctx, 60 + q));
        const auto cmp = eq_to_prec(pt * om, ctx.one(), 50);
        EXPECT_TRUE(cmp.equal()) << cmp.to_string();
    }
}

TEST(Carlitz, PiTildeLeadingTermsQ3)
{
    const auto ctx = make_context(3, 1);
    const LaurentSeries pt = pi_tilde(ctx, 10);
    EXPECT_EQ(pt.to_string(), "1*z^-3 + 1*z^1 + 1*z^5 + 1*z^9 + O(z^10)");
}
