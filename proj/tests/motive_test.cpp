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

#include <cmzv/motive.hpp>

#include <gtest/gtest.h>

using namespace cmzv;

namespace
{

constexpr std::int64_t kPrec = 40;
constexpr std::size_t kTdeg = 10;

const IndexSet kIndices = {{1}, {2}, {1, 1}, {2, 1}, {1, 2}};

TateElement bump(const TateElement &e, const CarlitzContext &ctx)
{
    return e + TateElement::constant(LaurentSeries::monomial(ctx.F().one(), ctx.q, 1));
}

} // namespace

TEST(Phi, DepthOneZeroArgument)
{
    const auto ctx = make_context(3, 1);
    const auto phi = phi_build(ctx, {t_poly(ctx.field)}, {2});
    const TPoly lin = linear_factor_twisted(ctx);
    EXPECT_EQ(phi.twisted(0, 0), lin.pow(2));
    EXPECT_TRUE(phi.twisted(1, 0).zero());
    EXPECT_TRUE(phi.twisted(0, 1).zero());
    EXPECT_EQ(phi.twisted(1, 1), t_constant(ThetaPoly::constant(ctx.F().one())));
    EXPECT_THROW(phi_build(ctx, {}, {2}), std::invalid_argument);
}

TEST(Phi, ShapeAndDeterminant)
{
    const auto ctx = make_context(2, 1);
    const Index s{1, 2};
    const auto u = at_arguments(ctx, s);
    const auto phi = phi_build(ctx, u, s);
    EXPECT_TRUE(phi.twisted.is_lower_triangular());
    const TPoly lin = linear_factor_twisted(ctx);
    EXPECT_EQ(phi.twisted(0, 0), lin.pow(3));
    EXPECT_EQ(phi.twisted(1, 1), lin.pow(2));
    EXPECT_EQ(phi.twisted(1, 0), lin.pow(3) * u[0]);
    EXPECT_EQ(phi.twisted(2, 1), lin.pow(2) * u[1]);
    TPoly det = t_constant(ThetaPoly::constant(ctx.F().one()));
    for (std::size_t k = 0; k < 3; ++k) {
        det = det * phi.twisted(k, k);
    }
    EXPECT_EQ(det, lin.pow(5));
    // nonzero at t = theta
    EXPECT_FALSE(eval_t_at_theta_power(det, 1).zero());
}

TEST(Psi, DepthOneZeroArgument)
{
    const auto ctx = make_context(2, 1);
    const auto psi = psi_build(ctx, {t_poly(ctx.field)}, {1}, kTdeg, kPrec);
    for (const auto &c : psi.entries(1, 0).coefficients()) {
        EXPECT_TRUE(c.is_zero());
    }
    const auto omega = omega_series(ctx, omega_factors_for(ctx, kPrec), kTdeg, kPrec);
    EXPECT_TRUE(te_residual(psi.entries(0, 0), omega).passes(kPrec));
    EXPECT_TRUE(is_zero(psi.entries(0, 1)));
}

TEST(Psi, CertificatesAreConsistent)
{
    const auto ctx = make_context(3, 1);
    const Index s{2, 1};
    const auto psi = psi_build(ctx, at_arguments(ctx, s), s, kTdeg, kPrec);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c <= r; ++c) {
            const auto &e = psi.entries(r, c);
            if (!e.is_polynomial()) {
                ASSERT_TRUE(e.certificate().has_value()) << r << "," << c;
                EXPECT_TRUE(e.certificate_consistent()) << r << "," << c;
            }
        }
    }
}

TEST(FrobeniusResidual, PassesForAtArguments)
{
    for (std::uint32_t p : {2u, 3u}) {
        const auto ctx = make_context(p, 1);
        for (const auto &s : kIndices) {
            const auto u = at_arguments(ctx, s);
            const auto rep = frobenius_residual(phi_build(ctx, u, s), psi_build(ctx, u, s, kTdeg, kPrec));
            EXPECT_TRUE(rep.passes(kPrec)) << "q=" << ctx.q << " s=" << to_string(s) << ": " << rep.describe();
        }
    }
}

TEST(FrobeniusResidual, PassesAtLevelTwo)
{
    const auto ctx = make_context(2, 2);
    const Index s{2, 1};
    const auto u = at_arguments(ctx, s);
    const auto rep = frobenius_residual(phi_build(ctx, u, s), psi_build(ctx, u, s, 6, 30));
    EXPECT_TRUE(rep.passes(30)) << rep.describe();
}

TEST(FrobeniusResidual, EverySingleEntryMutationIsKilled)
{
    for (std::uint32_t p : {2u, 3u}) {
        const auto ctx = make_context(p, 1);
        for (const auto &s : kIndices) {
            const auto u = at_arguments(ctx, s);
            const auto phi = phi_build(ctx, u, s);
            const auto psi = psi_build(ctx, u, s, kTdeg, kPrec);
            const std::size_t n = s.size() + 1;
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    PsiMatrix mutant = psi;
                    mutant.entries(r, c) = bump(mutant.entries(r, c), ctx);
                    const auto rep = frobenius_residual(phi, mutant);
                    EXPECT_FALSE(rep.zero) << "mutant (" << r + 1 << "," << c + 1 << ") survived";
                }
            }
        }
    }
}

TEST(FrobeniusResidual, ZeroedEntryFailsWithLocation)
{
    const auto ctx = make_context(2, 1);
    const Index s{2, 1};
    const auto u = at_arguments(ctx, s);
    auto psi = psi_build(ctx, u, s, kTdeg, kPrec);
    psi.entries(2, 1) = TateElement::zero(ctx.F(), ctx.q);
    const auto rep = frobenius_residual(phi_build(ctx, u, s), psi);
    EXPECT_FALSE(rep.zero);
    EXPECT_EQ(rep.where, "(3,2)");
    EXPECT_NE(rep.describe().find("(3,2)"), std::string::npos);
}

TEST(FrobeniusResidual, SizeMismatchThrows)
{
    const auto ctx = make_context(2, 1);
    const auto phi = phi_build(ctx, at_arguments(ctx, {1, 1}), {1, 1});
    const auto psi = psi_build(ctx, at_arguments(ctx, {1}), {1}, 4, 20);
    EXPECT_THROW(frobenius_residual(phi, psi), mismatch_error);
}

TEST(DirectSum, ResidualDistributes)
{
    const auto ctx = make_context(3, 1);
    const Index a{1}, b{2, 1};
    const auto ua = at_arguments(ctx, a), ub = at_arguments(ctx, b);
    const auto pa = phi_build(ctx, ua, a), pb = phi_build(ctx, ub, b);
    const auto sa = psi_build(ctx, ua, a, kTdeg, kPrec), sb = psi_build(ctx, ub, b, kTdeg, kPrec);
    const auto ra = frobenius_residual(pa, sa), rb = frobenius_residual(pb, sb);
    const auto rs = frobenius_residual(direct_sum(pa, pb), direct_sum(sa, sb));
    EXPECT_TRUE(rs.passes(kPrec));
    EXPECT_EQ(rs.floor, std::min(ra.floor, rb.floor));
    // a failing block makes the sum fail
    PsiMatrix bad = sb;
    bad.entries(1, 0) = bump(bad.entries(1, 0), ctx);
    EXPECT_FALSE(frobenius_residual(direct_sum(pa, pb), direct_sum(sa, bad)).zero);
}

TEST(DirectSum, OnesGiveIdentity)
{
    const auto ctx = make_context(2, 1);
    const TPoly one = t_constant(ThetaPoly::constant(ctx.F().one()));
    PhiMatrix a{1, Matrix<TPoly>(1, 1, t_poly(ctx.field))};
    a.twisted(0, 0) = one;
    const auto s = direct_sum(a, a);
    EXPECT_EQ(s.twisted, Matrix<TPoly>::identity(2, one));
}

TEST(Derived, SingleStepIsUnchanged)
{
    const auto ctx = make_context(2, 1);
    const auto phi = phi_build(ctx, at_arguments(ctx, {2, 1}), {2, 1});
    const auto d1 = derived_product(phi, 1);
    EXPECT_EQ(d1.level, 1u);
    EXPECT_EQ(d1.twisted, phi.twisted);
}

TEST(Derived, CarlitzMotive)
{
    const auto ctx = make_context(2, 1);
    const TPoly lin = linear_factor_twisted(ctx);
    PhiMatrix phi{1, Matrix<TPoly>(1, 1, t_poly(ctx.field))};
    phi.twisted(0, 0) = lin;
    PsiMatrix psi{1, Matrix<TateElement>(1, 1, TateElement::zero(ctx.F(), ctx.q))};
    psi.entries(0, 0) = omega_series(ctx, omega_factors_for(ctx, 60), 20, 60);
    const auto d2 = derived_product(phi, 2);
    EXPECT_EQ(d2.level, 2u);
    const TPoly lin2 = t_var(ctx.field) - t_constant(ctx.theta_poly().pow(4));
    EXPECT_EQ(d2.twisted(0, 0), lin * lin2);
    EXPECT_TRUE(frobenius_residual(d2, psi).passes(60));
    EXPECT_TRUE(frobenius_residual(derived_product(phi, 3), psi).passes(60));
}

TEST(Derived, SamePsiSatisfiesDerivedEquations)
{
    for (std::uint32_t p : {2u, 3u}) {
        const auto ctx = make_context(p, 1);
        for (const auto &s : IndexSet{{1}, {2, 1}, {1, 2}}) {
            const auto u = at_arguments(ctx, s);
            const auto phi = phi_build(ctx, u, s);
            const auto psi = psi_build(ctx, u, s, kTdeg, kPrec);
            for (unsigned k : {2u, 3u}) {
                const auto rep = frobenius_residual(derived_product(phi, k), psi);
                EXPECT_TRUE(rep.passes(kPrec)) << "q=" << ctx.q << " s=" << to_string(s) << " k=" << k << ": "
                                               << rep.describe();
            }
        }
    }
}

TEST(PsiTilde, TelescopingVanishes)
{
    for (std::uint32_t p : {2u, 3u}) {
        const auto ctx = make_context(p, 1);
        for (const auto &s : IndexSet{{1}, {2}, {1, 1}, {2, 1}, {1, 2}, {3, 2}}) {
            for (std::size_t i = 1; i <= s.size() + 1; ++i) {
                for (std::size_t j = 1; j <= i; ++j) {
                    const auto rep = psi_tilde_component(ctx, s, i, j, 30);
                    EXPECT_TRUE(rep.pass()) << "q=" << ctx.q << " s=" << to_string(s) << " (" << i << "," << j
                                            << "): " << rep.comparison.to_string();
                    EXPECT_GE(rep.value.prec(), 30);
                }
            }
        }
    }
}
