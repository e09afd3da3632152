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

#ifndef CMZV_MOTIVE_HPP
#define CMZV_MOTIVE_HPP

/// @file motive.hpp
/// Frobenius difference systems attached to an index s = (s_1..s_d) and
/// arguments u = (u_1..u_d).
///
/// Phi is stored in its l-fold twisted form Phi^{(l)}, which is polynomial:
/// with w_k = s_k + ... + s_d,
///
///     Phi^{(l)}(k,k)   = (t - theta^q)^{w_k}         k < d
///     Phi^{(l)}(k+1,k) = (t - theta^q)^{w_k} u_k
///     Phi^{(l)}(d,d)   = 1.
///
/// Psi(j,i) = Omega^{w_i} L_{j,i} for j >= i, where L_{j,i} is the CMPL series
/// for the window (s_i..s_{j-1}) and L_{i,i} = 1. The relation Psi^{(-l)} =
/// Phi Psi is checked after twisting both sides by l: Psi = Phi^{(l)} Psi^{(l)}.

#include <cmzv/carlitz.hpp>
#include <cmzv/error.hpp>
#include <cmzv/index.hpp>
#include <cmzv/matrix.hpp>
#include <cmzv/parallel.hpp>
#include <cmzv/special.hpp>
#include <cmzv/tate.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmzv
{

/// Twisted Phi: entries are polynomials in (t, theta). `level` is the twist
/// exponent n (over F_p) that relates Psi and its Frobenius image.
struct PhiMatrix {
    unsigned level = 1;
    Matrix<TPoly> twisted;
};

/// Psi: entries are Tate-algebra series.
struct PsiMatrix {
    unsigned level = 1;
    Matrix<TateElement> entries;
};

inline TPoly linear_factor_twisted(const CarlitzContext &ctx)
{
    return t_var(ctx.field) - t_constant(ctx.theta_poly().pow(ctx.q));
}

inline PhiMatrix phi_build(const CarlitzContext &ctx, const std::vector<TPoly> &u, const Index &s)
{
    if (u.size() != s.size()) {
        throw std::invalid_argument("phi_build needs one argument per index entry (got " + std::to_string(u.size()) +
                                    " for depth " + std::to_string(s.size()) + ")");
    }
    const std::size_t d = s.size();
    const TPoly lin = linear_factor_twisted(ctx);
    PhiMatrix phi{ctx.l, Matrix<TPoly>(d + 1, d + 1, t_poly(ctx.field))};
    for (std::size_t k = 0; k < d; ++k) {
        const TPoly f = lin.pow(static_cast<std::uint64_t>(tail_weight(s, k)));
        phi.twisted(k, k) = f;
        phi.twisted(k + 1, k) = f * u[k];
    }
    phi.twisted(d, d) = t_constant(ThetaPoly::constant(ctx.F().one()));
    return phi;
}

/// Psi truncated at t^tdeg with coefficients known to prec. Needs every
/// window (u_i..u_{j-1}; s_i..s_{j-1}) to satisfy the convergence condition.
inline PsiMatrix psi_build(const CarlitzContext &ctx, const std::vector<TPoly> &u, const Index &s, std::size_t tdeg,
                           std::int64_t prec)
{
    if (u.size() != s.size()) {
        throw std::invalid_argument("psi_build needs one argument per index entry");
    }
    const std::size_t d = s.size();
    const GaloisField &F = ctx.F();
    const TateElement omega = omega_series(ctx, omega_factors_for(ctx, prec), tdeg, prec);
    PsiMatrix psi{ctx.l, Matrix<TateElement>(d + 1, d + 1, TateElement::zero(F, ctx.q))};

    // Omega^w for every tail weight, and L for every window, computed in parallel.
    std::vector<TateElement> omega_pow(d + 1);
    parallel_for(d + 1, ctx.workers, [&](std::size_t i) {
        TateElement r = TateElement::one(F, ctx.q).truncated_degree(tdeg, omega.certificate()->slope);
        for (int k = 0; k < tail_weight(s, i); ++k) {
            r = (r * omega).truncated(prec, 0);
        }
        omega_pow[i] = r;
    });
    std::vector<std::pair<std::size_t, std::size_t>> windows;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j <= d; ++j) {
            windows.emplace_back(j, i);
        }
    }
    std::vector<TateElement> L(windows.size());
    parallel_for(windows.size(), ctx.workers, [&](std::size_t w) {
        const auto [j, i] = windows[w];
        const CmplSpec spec{window(s, i, j), std::vector<TPoly>(u.begin() + static_cast<std::ptrdiff_t>(i),
                                                                u.begin() + static_cast<std::ptrdiff_t>(j))};
        L[w] = cmpl_series(ctx, spec, tdeg, prec);
    });
    for (std::size_t i = 0; i <= d; ++i) {
        psi.entries(i, i) = i == d ? TateElement::one(F, ctx.q) : omega_pow[i];
    }
    for (std::size_t w = 0; w < windows.size(); ++w) {
        const auto [j, i] = windows[w];
        psi.entries(j, i) = (omega_pow[i] * L[w]).truncated(prec, 0);
    }
    return psi;
}

/// Entry-wise residual of Psi - Phi^{(n)} Psi^{(n)} with n = phi.level.
inline ResidualReport frobenius_residual(const PhiMatrix &phi, const PsiMatrix &psi)
{
    const std::size_t n = phi.twisted.rows();
    if (psi.entries.rows() != n || psi.entries.cols() != n || phi.twisted.cols() != n) {
        throw mismatch_error("Phi is " + std::to_string(n) + "x" + std::to_string(phi.twisted.cols()) +
                             " but Psi is " + std::to_string(psi.entries.rows()) + "x" +
                             std::to_string(psi.entries.cols()));
    }
    if (phi.level % psi.level != 0) {
        throw mismatch_error("Phi level " + std::to_string(phi.level) + " is not a multiple of Psi level " +
                             std::to_string(psi.level));
    }
    const TateElement &like = psi.entries(0, 0);
    const std::uint64_t q = like.q();
    ResidualReport total;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            TateElement acc = TateElement::zero(like.field(), q);
            for (std::size_t k = 0; k < n; ++k) {
                const TPoly &f = phi.twisted(r, k);
                const TateElement &g = psi.entries(k, c);
                if (f.zero() || is_zero(g)) {
                    continue;
                }
                acc = acc + TateElement::from_tpoly(f, q) * te_twist(g, phi.level);
            }
            ResidualReport e = te_residual(psi.entries(r, c), acc);
            e.where = "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
            total.merge(e);
        }
    }
    return total;
}

template <class M>
M direct_sum(const M &a, const M &b);

template <>
inline PhiMatrix direct_sum(const PhiMatrix &a, const PhiMatrix &b)
{
    if (a.level != b.level) {
        throw mismatch_error("direct sum of Phi matrices at different levels");
    }
    return {a.level, block_diagonal(a.twisted, b.twisted)};
}

template <>
inline PsiMatrix direct_sum(const PsiMatrix &a, const PsiMatrix &b)
{
    if (a.level != b.level) {
        throw mismatch_error("direct sum of Psi matrices at different levels");
    }
    return {a.level, block_diagonal(a.entries, b.entries)};
}

/// The s-th derived system in fully twisted form:
/// (Phi')^{(ls)} = Phi^{(l)} Phi^{(2l)} ... Phi^{(sl)}, at level l*s.
inline PhiMatrix derived_product(const PhiMatrix &phi, unsigned s)
{
    if (s == 0) {
        throw std::invalid_argument("derived_product needs s >= 1");
    }
    Matrix<TPoly> acc = phi.twisted;
    for (unsigned k = 2; k <= s; ++k) {
        const unsigned shift = (k - 1) * phi.level;
        acc = acc * phi.twisted.map([shift](const TPoly &f) { return twist(f, shift); });
    }
    return {phi.level * s, acc};
}

/// Arguments u_j = H_{s_j - 1}.
inline std::vector<TPoly> at_arguments(const CarlitzContext &ctx, const Index &s)
{
    const int smax = *std::max_element(s.begin(), s.end());
    const auto H = at_polynomials(ctx, static_cast<unsigned>(smax - 1));
    std::vector<TPoly> u;
    for (int v : s) {
        u.push_back(H[static_cast<std::size_t>(v - 1)]);
    }
    return u;
}

/// The Carlitz motive: Phi = (t - theta), Psi = (Omega).
inline std::pair<PhiMatrix, PsiMatrix> carlitz_system(const CarlitzContext &ctx, std::size_t tdeg, std::int64_t prec)
{
    PhiMatrix phi{ctx.l, Matrix<TPoly>(1, 1, linear_factor_twisted(ctx))};
    PsiMatrix psi{ctx.l, Matrix<TateElement>(1, 1, omega_series(ctx, omega_factors_for(ctx, prec), tdeg, prec))};
    return {phi, psi};
}

/// C + M[(m)] + M[(n)] + M[(m,n)] with u = AT polynomials: the 8x8 system
/// attached to the index set {(m), (n), (m,n)}.
inline std::pair<PhiMatrix, PsiMatrix> example_system(const CarlitzContext &ctx, int m, int n, std::size_t tdeg,
                                                      std::int64_t prec)
{
    auto [phi, psi] = carlitz_system(ctx, tdeg, prec);
    for (const Index &s : IndexSet{{m}, {n}, {m, n}}) {
        const auto u = at_arguments(ctx, s);
        phi = direct_sum(phi, phi_build(ctx, u, s));
        psi = direct_sum(psi, psi_build(ctx, u, s, tdeg, prec));
    }
    return {phi, psi};
}

struct TelescopeReport {
    std::size_t i = 0, j = 0;     // 1-based positions, i >= j
    LaurentSeries value;          // the collapsed component
    Comparison comparison;        // against 0 (i > j) or 1 (i = j)
    /// Least z-valuation among the summands C(n) L_{n,j} Omega^{...}. Below
    /// the precision it shows the cancellation is not just zero against zero.
    std::int64_t least_summand_val = kExact;
    bool pass() const { return comparison.equal(); }
};

/// The (i,j) component of Psi^{-1} (x) Psi with the tensor collapsed to an
/// ordinary product, at t = theta:
///
///     Omega^{w_j - w_i} sum_{n=j..i} C(n) L_{n,j},
///     C(n) = sum_m (-1)^m sum over chains n = k_0 < ... < k_m = i of
///            L_{k_1,k_0} ... L_{k_m,k_{m-1}},
///
/// which must be 0 for i > j and 1 for i = j. The chain sums are expanded
/// explicitly (C(n) = -sum_{k>n} L_{k,n} C(k)), not taken from a matrix
/// inverse. Arguments are u_j = H_{s_j-1}.
inline TelescopeReport psi_tilde_component(const CarlitzContext &ctx, const Index &s, std::size_t i, std::size_t j,
                                           std::int64_t prec)
{
    const std::size_t d = s.size();
    if (j < 1 || i < j || i > d + 1) {
        throw std::invalid_argument("psi_tilde_component needs 1 <= j <= i <= dep+1");
    }
    const auto u = at_arguments(ctx, s);
    auto Lval = [&](std::size_t row, std::size_t col) {  // 1-based, row >= col
        if (row == col) {
            return ctx.one();
        }
        const CmplSpec spec{window(s, col - 1, row - 1),
                            std::vector<TPoly>(u.begin() + static_cast<std::ptrdiff_t>(col - 1),
                                               u.begin() + static_cast<std::ptrdiff_t>(row - 1))};
        return cmpl_value(ctx, spec, prec);
    };
    std::vector<LaurentSeries> C(i + 1, ctx.zero());
    C[i] = ctx.one();
    for (std::size_t n = i; n-- > j;) {
        LaurentSeries acc = ctx.zero();
        for (std::size_t k = n + 1; k <= i; ++k) {
            acc = acc + Lval(k, n) * C[k];
        }
        C[n] = -acc;
    }
    const int wdiff = tail_weight(s, j - 1) - tail_weight(s, i - 1);
    const LaurentSeries om = te_eval_theta(omega_for_evaluation(ctx, prec + ctx.q * wdiff));
    LaurentSeries factor = ctx.one();
    for (int k = 0; k < wdiff; ++k) {
        factor = factor * om;
    }
    TelescopeReport rep;
    LaurentSeries sum = ctx.zero();
    for (std::size_t n = j; n <= i; ++n) {
        const LaurentSeries term = C[n] * Lval(n, j);
        sum = sum + term;
        const LaurentSeries scaled = (factor * term).truncated(prec);
        if (!scaled.is_zero()) {
            rep.least_summand_val = std::min(rep.least_summand_val, scaled.val());
        }
    }
    rep.i = i;
    rep.j = j;
    if (i == j) {
        // Omega^{-w} Omega^{w}
        const int w = tail_weight(s, i - 1);
        LaurentSeries up = ctx.one();
        const LaurentSeries om_i = te_eval_theta(omega_for_evaluation(ctx, prec + 2 * ctx.q * w));
        for (int k = 0; k < w; ++k) {
            up = up * om_i;
        }
        rep.value = (up.inverse(prec + ctx.q * w) * up * sum).truncated(prec);
        rep.comparison = eq_to_prec(rep.value, ctx.one(), prec);
    } else {
        rep.value = (factor * sum).truncated(prec);
        rep.comparison = eq_to_prec(rep.value, ctx.zero(), prec);
    }
    return rep;
}

} // namespace cmzv

#endif
