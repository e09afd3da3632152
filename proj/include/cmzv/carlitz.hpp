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

#ifndef CMZV_CARLITZ_HPP
#define CMZV_CARLITZ_HPP

/// @file carlitz.hpp
/// The Carlitz tower at level l (q = p^l): the products D_i of all monic
/// polynomials of degree i, Carlitz factorials, the period series
///
///     Omega(t) = (-theta)^{-q/(q-1)} prod_{i>=1} (1 - t/theta^{q^i}),
///
/// and the Carlitz period pi~ = 1/Omega(theta). With z = (-theta)^{-1/(q-1)}
/// the prefactor is the monomial z^q, and 1/theta^{q^i} = (-1)^{q^i} z^{(q-1)q^i},
/// so every factor of the product is an exact binomial in t and z.

#include <cmzv/error.hpp>
#include <cmzv/ffield.hpp>
#include <cmzv/laurent.hpp>
#include <cmzv/polynomial.hpp>
#include <cmzv/tate.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmzv
{

/// Level data shared by every computation: the constant field F_q and the
/// defaults used when a caller does not say otherwise.
struct CarlitzContext {
    std::uint32_t p = 2;
    unsigned l = 1;
    std::uint64_t q = 2;
    FieldRef field;
    std::int64_t prec = 40;
    std::size_t tdeg = 20;
    unsigned workers = 1; // threads for the independent outer loops

    const GaloisField &F() const { return *field; }
    LaurentSeries theta() const { return LaurentSeries::theta(*field, q); }
    LaurentSeries one() const { return LaurentSeries::one(*field, q); }
    LaurentSeries zero(std::int64_t prec_ = kExact) const { return LaurentSeries::zero(*field, q, prec_); }
    ThetaPoly theta_poly() const { return cmzv::theta(field); }
    LaurentSeries embed(const ThetaPoly &f) const { return LaurentSeries::from_theta_poly(f, q); }
};

inline CarlitzContext make_context(std::uint32_t p, unsigned l, std::int64_t prec = 40, std::size_t tdeg = 20)
{
    if (l == 0) {
        throw std::invalid_argument("level l must be positive");
    }
    CarlitzContext c;
    c.p = p;
    c.l = l;
    c.field = ff_create(p, l);
    c.q = c.field->order();
    if (prec < 1) {
        throw std::invalid_argument("precision must be at least 1");
    }
    c.prec = prec;
    c.tdeg = tdeg;
    return c;
}

/// D_i by the recursion D_0 = 1, D_i = (theta^{q^i} - theta) D_{i-1}^q.
inline ThetaPoly carlitz_d(const CarlitzContext &ctx, unsigned i)
{
    const ThetaPoly th = ctx.theta_poly();
    ThetaPoly d = ThetaPoly::constant(ctx.F().one());
    std::uint64_t qi = 1;
    for (unsigned k = 1; k <= i; ++k) {
        qi *= ctx.q;
        d = (th.pow(qi) - th) * d.pow(ctx.q);
    }
    return d;
}

/// Base-q digits of n, least significant first.
inline std::vector<std::uint64_t> base_q_digits(std::uint64_t n, std::uint64_t q)
{
    std::vector<std::uint64_t> d;
    for (; n; n /= q) {
        d.push_back(n % q);
    }
    return d;
}

/// Gamma_{n+1} = prod_i D_i^{n_i} over the base-q digits n_i of n.
inline ThetaPoly carlitz_factorial(const CarlitzContext &ctx, std::uint64_t n)
{
    ThetaPoly g = ThetaPoly::constant(ctx.F().one());
    const auto digits = base_q_digits(n, ctx.q);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] != 0) {
            g *= carlitz_d(ctx, static_cast<unsigned>(i)).pow(digits[i]);
        }
    }
    return g;
}

/// Valuation of the first t-coefficient error after keeping `factors`
/// factors of the product: q + (q-1) q^{factors+1}.
inline std::int64_t omega_truncation_floor(const CarlitzContext &ctx, unsigned factors)
{
    std::int64_t v = static_cast<std::int64_t>(ctx.q - 1);
    for (unsigned i = 0; i <= factors; ++i) {
        v = detail::prec_scale(v, ctx.q);
    }
    return detail::prec_add(v, static_cast<std::int64_t>(ctx.q));
}

/// Least number of factors whose truncation error lies at or above prec,
/// plus one factor of margin.
inline unsigned omega_factors_for(const CarlitzContext &ctx, std::int64_t prec)
{
    unsigned f = 1;
    while (omega_truncation_floor(ctx, f) < prec) {
        ++f;
    }
    return f + 1;
}

/// Omega truncated at t^tdeg with every coefficient known to
/// min(prec, q + (q-1) q^{factors+1}), tail certificate slope (q-1)q and
/// offset q. skip_factor (1-based) leaves one factor out while keeping the
/// same claimed precision; it exists for negative controls.
inline TateElement omega_series(const CarlitzContext &ctx, unsigned factors, std::size_t tdeg, std::int64_t prec,
                                std::optional<unsigned> skip_factor = std::nullopt)
{
    if (factors < 1) {
        throw std::invalid_argument("omega_series needs at least one factor");
    }
    const std::int64_t cprec = std::min(prec, omega_truncation_floor(ctx, factors));
    const LaurentSeries theta_inv = ctx.theta().inverse();
    const auto qi = static_cast<std::int64_t>(ctx.q);
    std::vector<LaurentSeries> acc(tdeg + 1, ctx.zero());
    acc[0] = LaurentSeries::monomial(ctx.F().one(), ctx.q, qi).truncated(cprec);
    std::uint64_t qpow = 1;
    for (unsigned i = 1; i <= factors; ++i) {
        qpow *= ctx.q;
        if (skip_factor && *skip_factor == i) {
            continue;
        }
        // multiply by (1 - t * theta^{-q^i})
        const LaurentSeries a = -theta_inv.pow(qpow);
        for (std::size_t k = tdeg; k >= 1; --k) {
            acc[k] = (acc[k] + a * acc[k - 1]).truncated(cprec);
        }
    }
    for (auto &c : acc) {
        c = c.truncated(cprec);
    }
    const Rational slope(static_cast<std::int64_t>((ctx.q - 1) * ctx.q));
    return TateElement::series(ctx.F(), ctx.q, std::move(acc), TailCertificate{slope, Rational(qi)});
}

/// Omega sized so that its value at t = theta is known to precision prec:
/// the t-degree makes the certified tail reach prec, and coefficient k is kept
/// to prec + (q-1)k.
inline TateElement omega_for_evaluation(const CarlitzContext &ctx, std::int64_t prec)
{
    const auto e = static_cast<std::int64_t>(ctx.q - 1);
    const auto q = static_cast<std::int64_t>(ctx.q);
    // (sigma - (q-1)) (D+1) + q >= prec with sigma - (q-1) = (q-1)^2
    const std::int64_t D = std::max<std::int64_t>(1, detail::ceil_div(prec - q, e * e));
    const std::int64_t cprec = prec + e * D;
    return omega_series(ctx, omega_factors_for(ctx, cprec), static_cast<std::size_t>(D), cprec);
}

/// Report of the check Omega = (t - theta^q) Omega^{(l)}.
struct OmegaResidual {
    bool sane = true; // Omega nonzero at t^0
    ResidualReport residual;
};

inline OmegaResidual omega_functional_residual(const CarlitzContext &ctx, const TateElement &omega)
{
    OmegaResidual r;
    if (omega.coefficients().empty() || omega.coeff(0).is_zero()) {
        r.sane = false;
        r.residual.zero = false;
        r.residual.t_index = 0;
        r.residual.exponent = 0;
        r.residual.where = "sanity precheck (Omega is zero)";
        return r;
    }
    const LaurentSeries thq = ctx.theta().pow(ctx.q);
    const TateElement lin = TateElement::t(ctx.F(), ctx.q) - TateElement::constant(thq);
    r.residual = te_residual(omega, lin * te_twist(omega, ctx.l));
    return r;
}

/// pi~ = z^{-q} prod_{i>=1} (1 - theta^{1-q^i})^{-1}, known mod z^prec.
/// theta^{1-q^i} is the monomial z^{(q-1)(q^i-1)}, so the product converges
/// geometrically and the first omitted factor is 1 + O(z^{prec+q}).
inline LaurentSeries pi_tilde(const CarlitzContext &ctx, std::int64_t prec)
{
    const auto q = static_cast<std::int64_t>(ctx.q);
    const std::int64_t rel = prec + q;
    const LaurentSeries th = ctx.theta();
    const LaurentSeries theta_inv = th.inverse();
    LaurentSeries u = ctx.one();
    std::uint64_t qpow = 1;
    for (;;) {
        qpow *= ctx.q;
        const LaurentSeries w = th * theta_inv.pow(qpow);
        if (w.val() >= rel) {
            break;
        }
        u = (u * (ctx.one() - w).inverse(rel)).truncated(rel);
    }
    return u.truncated(rel).shifted(-q);
}

} // namespace cmzv

#endif
