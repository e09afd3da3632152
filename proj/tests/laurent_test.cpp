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

#include <cmzv/laurent.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace cmzv;

namespace
{

struct Level {
    std::uint32_t p;
    unsigned l;
};

// Power series of num/den in x = 1/theta by schoolbook long division, then
// mapped to z through x = -z^{q-1}. Shares nothing with LaurentSeries::inverse.
LaurentSeries long_division(const ThetaPoly &num, const ThetaPoly &den, std::uint64_t q, std::int64_t prec)
{
    const GaloisField &f = *num.zero_coefficient().field();
    const long dn = num.degree(), dd = den.degree();
    // num/den = x^{dd-dn} * N(x)/D(x) with N, D reversed polynomials.
    std::vector<FfElem> N(static_cast<std::size_t>(dn + 1)), D(static_cast<std::size_t>(dd + 1));
    for (long i = 0; i <= dn; ++i) {
        N[static_cast<std::size_t>(i)] = num[static_cast<std::size_t>(dn - i)];
    }
    for (long i = 0; i <= dd; ++i) {
        D[static_cast<std::size_t>(i)] = den[static_cast<std::size_t>(dd - i)];
    }
    const auto e = static_cast<std::int64_t>(q - 1);
    const std::int64_t shift = dd - dn;
    // x^k lands at z^{e k}; need k with e(k) < prec.
    const std::int64_t kmax = prec / e + 2 - shift;
    std::vector<FfElem> quo;
    std::vector<FfElem> rem = N;
    rem.resize(static_cast<std::size_t>(std::max<std::int64_t>(kmax, 1) + D.size()), f.zero());
    const FfElem d0inv = D[0].inverse();
    for (std::int64_t k = 0; k < kmax; ++k) {
        const FfElem c = rem[static_cast<std::size_t>(k)] * d0inv;
        quo.push_back(c);
        for (std::size_t i = 0; i < D.size(); ++i) {
            rem[static_cast<std::size_t>(k) + i] = rem[static_cast<std::size_t>(k) + i] - c * D[i];
        }
    }
    LaurentSeries out = LaurentSeries::zero(f, q, prec);
    for (std::size_t k = 0; k < quo.size(); ++k) {
        const std::int64_t xk = static_cast<std::int64_t>(k) + shift;
        FfElem c = quo[k];
        if (xk % 2 != 0) {
            c = -c;
        }
        out = out + LaurentSeries::monomial(c, q, e * xk, prec);
    }
    return out;
}

ThetaPoly random_poly(const FieldRef &f, std::mt19937_64 &rng, int max_deg, bool nonzero)
{
    std::uniform_int_distribution<std::uint32_t> d(0, f->order() - 1);
    for (;;) {
        std::vector<FfElem> c;
        const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
        for (int i = 0; i <= deg; ++i) {
            c.push_back(f->element(d(rng)));
        }
        ThetaPoly r(f->zero(), c);
        if (!nonzero || !r.zero()) {
            return r;
        }
    }
}

LaurentSeries random_series(const FieldRef &f, std::uint64_t q, std::mt19937_64 &rng, std::int64_t prec)
{
    std::uniform_int_distribution<std::uint32_t> d(0, f->order() - 1);
    const std::int64_t v = static_cast<std::int64_t>(rng() % 9) - 4;
    std::vector<std::uint32_t> c;
    for (std::int64_t k = v; k < prec; ++k) {
        c.push_back(d(rng));
    }
    c[0] = 1 + d(rng) % (f->order() - 1);
    return LaurentSeries::from_codes(*f, q, v, c, prec);
}

} // namespace

TEST(Laurent, ThetaEmbedding)
{
    for (Level lv : {Level{2, 1}, Level{3, 1}, Level{2, 2}, Level{5, 1}}) {
        const auto f = ff_create(lv.p, lv.l);
        const std::uint64_t q = f->order();
        const auto e = static_cast<std::int64_t>(q - 1);
        const ThetaPoly th = theta(f), one = ThetaPoly::constant(f->one());
        const LaurentSeries a = ls_embed_theta_rational(th, one, q, 20);
        EXPECT_EQ(a, LaurentSeries::monomial(-f->one(), q, -e)) << "exact when the denominator is 1";
        EXPECT_EQ(ls_embed_theta_rational(one, th, q, 20).truncated(20),
                  LaurentSeries::monomial(-f->one(), q, e, 20));
        EXPECT_EQ(LaurentSeries::theta(*f, q), a);
    }
}

TEST(Laurent, RationalEmbeddingMatchesLongDivision)
{
    std::mt19937_64 rng(3);
    for (Level lv : {Level{2, 1}, Level{3, 1}, Level{2, 2}}) {
        const auto f = ff_create(lv.p, lv.l);
        const std::uint64_t q = f->order();
        for (int i = 0; i < 40; ++i) {
            const ThetaPoly num = random_poly(f, rng, 5, true), den = random_poly(f, rng, 5, true);
            const LaurentSeries got = ls_embed_theta_rational(num, den, q, 40);
            ASSERT_GE(got.prec(), 40);
            const auto cmp = eq_to_prec(got, long_division(num, den, q, 40));
            ASSERT_TRUE(cmp.equal()) << cmp.to_string();
            // num/den * den == num to precision
            const auto back = eq_to_prec(got * LaurentSeries::from_theta_poly(den, q),
                                         LaurentSeries::from_theta_poly(num, q));
            ASSERT_TRUE(back.equal()) << back.to_string();
        }
    }
}

TEST(Laurent, ThirdExampleQ3)
{
    const auto f = ff_create(3, 1);
    const ThetaPoly th = theta(f);
    const ThetaPoly den = th.pow(3) - th;
    const LaurentSeries r = ls_embed_theta_rational(ThetaPoly::constant(f->one()), den, 3, 30);
    EXPECT_EQ(r.val(), 6);
    const auto cmp = eq_to_prec(r * LaurentSeries::from_theta_poly(den, 3), LaurentSeries::one(*f, 3));
    EXPECT_TRUE(cmp.equal());
    EXPECT_GE(cmp.exponent, 24);
}

TEST(Laurent, ArithmeticExamples)
{
    const auto f = ff_create(3, 1);
    const LaurentSeries z = LaurentSeries::monomial(f->one(), 3, 1);
    const LaurentSeries one = LaurentSeries::one(*f, 3);
    const LaurentSeries g = (one - z).inverse(10);
    EXPECT_EQ(g.prec(), 10);
    for (int k = 0; k < 10; ++k) {
        EXPECT_EQ(g.coeff(k), f->one());
    }
    EXPECT_THROW(g.coeff(10), precision_error);
    const LaurentSeries a = LaurentSeries::monomial(f->element(2), 3, 3) * (one + z);
    const LaurentSeries b = LaurentSeries::monomial(f->one(), 3, -5) * (one - z);
    EXPECT_EQ((a * b).val(), -2);
    EXPECT_THROW(LaurentSeries::zero(*f, 3).inverse(5), std::domain_error);
    EXPECT_THROW(LaurentSeries::zero(*f, 3, 5).inverse(5), precision_error);
}

TEST(Laurent, TwistExamples)
{
    for (Level lv : {Level{2, 1}, Level{3, 1}, Level{2, 2}, Level{3, 2}}) {
        const auto f = ff_create(lv.p, lv.l);
        const std::uint64_t q = f->order();
        const LaurentSeries z = LaurentSeries::monomial(f->one(), q, 1);
        const LaurentSeries th = LaurentSeries::theta(*f, q);
        EXPECT_EQ(ls_twist(z, 1), z.pow(std::uint64_t{lv.p}));
        EXPECT_EQ(ls_twist(th, lv.l), th.pow(q));
        EXPECT_TRUE(eq_to_prec(th.pow(q) - ls_twist(th, lv.l), LaurentSeries::zero(*f, q)).equal());
        EXPECT_EQ(ls_inverse_twist(ls_twist(z, 1), 1), z);
        EXPECT_EQ(ls_inverse_twist(ls_twist(th, lv.l), lv.l), th);
        EXPECT_THROW(ls_inverse_twist(z, 1), std::domain_error);
    }
}

TEST(Laurent, Norms)
{
    const auto f = ff_create(3, 1);
    EXPECT_EQ(ls_norm(LaurentSeries::theta(*f, 3)).to_string(), "1");
    EXPECT_EQ(ls_norm(LaurentSeries::theta(*f, 3).inverse()).to_string(), "-1");
    EXPECT_EQ(ls_norm(LaurentSeries::monomial(f->one(), 3, -3)).to_string(), "3/2");
    EXPECT_TRUE(ls_norm(LaurentSeries::zero(*f, 3, 4)).neg_inf);
}

TEST(Laurent, EqToPrecExamples)
{
    const auto f = ff_create(2, 1);
    const LaurentSeries z = LaurentSeries::monomial(f->one(), 2, 1);
    const LaurentSeries z2 = LaurentSeries::monomial(f->one(), 2, 2);
    const LaurentSeries s = z.truncated(10);
    EXPECT_TRUE(eq_to_prec(s, s).equal());
    const auto c = eq_to_prec(z.truncated(5), (z + z2).truncated(5));
    EXPECT_EQ(c.kind, Comparison::Kind::unequal);
    EXPECT_EQ(c.exponent, 2);
    const auto d = eq_to_prec(LaurentSeries::zero(*f, 2, 5), LaurentSeries::monomial(f->one(), 2, 7, 9));
    EXPECT_TRUE(d.equal());
    EXPECT_EQ(d.exponent, 5);
    const auto e = eq_to_prec(LaurentSeries::zero(*f, 2, 5), LaurentSeries::zero(*f, 2, 9), 8);
    EXPECT_EQ(e.kind, Comparison::Kind::incomparable);
}

TEST(Laurent, Properties)
{
    std::mt19937_64 rng(99);
    for (Level lv : {Level{2, 1}, Level{3, 1}, Level{2, 2}}) {
        const auto f = ff_create(lv.p, lv.l);
        const std::uint64_t q = f->order();
        for (int i = 0; i < 100; ++i) {
            const LaurentSeries a = random_series(f, q, rng, 25), b = random_series(f, q, rng, 25);
            const LaurentSeries ab = a * b;
            ASSERT_EQ(ab.val(), a.val() + b.val());
            ASSERT_EQ(ab.prec(), std::min(a.val() + b.prec(), b.val() + a.prec()));
            for (unsigned n : {1u, 2u}) {
                const auto pn = static_cast<std::int64_t>(detail::ipow(lv.p, n));
                ASSERT_TRUE(eq_to_prec(ls_twist(a + b, n), ls_twist(a, n) + ls_twist(b, n)).equal());
                ASSERT_TRUE(eq_to_prec(ls_twist(ab, n), ls_twist(a, n) * ls_twist(b, n)).equal());
                ASSERT_EQ(ls_twist(a, n).val(), a.val() * pn);
                ASSERT_EQ(ls_twist(a, n).prec(), a.prec() * pn);
                ASSERT_EQ(ls_inverse_twist(ls_twist(a, n), n), a);
            }
            const LaurentSeries ai = a.inverse();
            ASSERT_EQ(ai.prec(), a.prec() - 2 * a.val());
            const auto back = eq_to_prec(ai.inverse(), a);
            ASSERT_TRUE(back.equal()) << back.to_string();
            ASSERT_TRUE(eq_to_prec(a * ai, LaurentSeries::one(*f, q)).equal());
            ASSERT_EQ(LaurentSeries::parse(a.to_string(), *f, q), a);
            ASSERT_EQ(LaurentSeries::parse(ab.to_string(), *f, q), ab);
            // pow through base-p digits agrees with repeated multiplication
            LaurentSeries rep = LaurentSeries::one(*f, q);
            for (int k = 0; k < 5; ++k) {
                rep = rep * a;
            }
            ASSERT_TRUE(eq_to_prec(a.pow(std::uint64_t{5}), rep).equal());
            ASSERT_GE(a.pow(std::uint64_t{5}).prec(), rep.prec());
        }
    }
}

TEST(Laurent, EmbeddingConsistency)
{
    std::mt19937_64 rng(17);
    const auto f = ff_create(3, 1);
    for (int i = 0; i < 50; ++i) {
        const ThetaPoly num = random_poly(f, rng, 4, false), den = random_poly(f, rng, 4, true);
        const LaurentSeries lhs =
            ls_embed_theta_rational(num, den, 3, 30) * ls_embed_theta_rational(den, ThetaPoly::constant(f->one()), 3, 30);
        const auto cmp = eq_to_prec(lhs, ls_embed_theta_rational(num, ThetaPoly::constant(f->one()), 3, 30));
        ASSERT_TRUE(cmp.equal()) << cmp.to_string();
    }
}

TEST(Laurent, TextForm)
{
    const auto f = ff_create(3, 2);
    const LaurentSeries s = LaurentSeries::from_codes(*f, 9, -2, {7, 0, 3}, 5);
    EXPECT_EQ(s.to_string(), "(2*g+1)*z^-2 + g*z^0 + O(z^5)");
    EXPECT_EQ(LaurentSeries::parse(s.to_string(), *f, 9), s);
    EXPECT_EQ(LaurentSeries::zero(*f, 9).to_string(), "0");
    EXPECT_EQ(LaurentSeries::zero(*f, 9, 4).to_string(), "O(z^4)");
    EXPECT_EQ(LaurentSeries::parse("O(z^4)", *f, 9), LaurentSeries::zero(*f, 9, 4));
}
