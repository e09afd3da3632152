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

#ifndef CMZV_SPECIAL_HPP
#define CMZV_SPECIAL_HPP

/// @file special.hpp
/// Special values at level l (q = p^l, A = F_q[theta]):
///
///  * monic power sums S_d(s) = sum over monic a of degree d of a^{-s};
///  * multiple zeta values zeta(s_1,...,s_d) = sum over d_1 > ... > d_d >= 0
///    of S_{d_1}(s_1) ... S_{d_d}(s_d);
///  * Anderson-Thakur polynomials H_s in A[t];
///  * Carlitz multiple polylogarithms, both as values at t = theta and as
///    series in the Tate algebra;
///  * the identity L_{(H_{s_1-1},...,H_{s_d-1}),s}(theta) = Gamma_{s_1} ...
///    Gamma_{s_d} zeta(s).
///
/// All stopping rules use valuation bounds known before any term is computed.
/// Whenever a working precision turns out too small after the fact, the
/// computation is repeated with a larger one rather than reporting less.

#include <cmzv/carlitz.hpp>
#include <cmzv/error.hpp>
#include <cmzv/index.hpp>
#include <cmzv/laurent.hpp>
#include <cmzv/parallel.hpp>
#include <cmzv/polynomial.hpp>
#include <cmzv/tate.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmzv
{

// ---------------------------------------------------------------------------
// Monic power sums
// ---------------------------------------------------------------------------

/// Default cap on the number of monic polynomials an enumeration may visit.
inline constexpr std::uint64_t kEnumerationBudget = 1u << 20;

/// S_d(s) by summing a^{-s} over all q^d monic a of degree d, each expanded
/// to absolute precision prec. Throws budget_error when q^d exceeds budget.
inline LaurentSeries monic_power_sum(const CarlitzContext &ctx, unsigned d, unsigned s, std::int64_t prec,
                                     std::uint64_t budget = kEnumerationBudget)
{
    if (s == 0) {
        throw std::invalid_argument("power sums need s >= 1");
    }
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) {
        if (count > budget / ctx.q) {
            throw budget_error("enumerating q^" + std::to_string(d) + " monic polynomials exceeds the budget of " +
                               std::to_string(budget));
        }
        count *= ctx.q;
    }
    const GaloisField &F = ctx.F();
    const auto e = static_cast<std::int64_t>(ctx.q - 1);
    // a^{-s} has valuation s*d*(q-1); its inverse must be known that far past prec.
    const std::int64_t cap = prec + static_cast<std::int64_t>(s) * static_cast<std::int64_t>(d) * e;
    LaurentSeries sum = ctx.zero(prec);
    std::vector<FfElem> coeffs(d + 1, F.zero());
    coeffs[d] = F.one();
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < d; ++i, c /= ctx.q) {
            coeffs[i] = F.element(static_cast<std::uint32_t>(c % ctx.q));
        }
        const LaurentSeries a = ctx.embed(ThetaPoly(F.zero(), coeffs));
        const LaurentSeries inv = d == 0 ? ctx.one() : a.inverse(cap);
        sum = (sum + inv.pow(static_cast<std::uint64_t>(s))).truncated(prec);
    }
    return sum;
}

/// Lower bound on v_z(S_d(s)): S_d(s) = +-beta_{d,0} * (unit power series),
/// and v_z(beta_{d,0}) = v_z(1/l_d) = q^{d+1} - q.
inline std::int64_t power_sum_valuation_bound(std::uint64_t q, unsigned d, unsigned s)
{
    const std::int64_t a = static_cast<std::int64_t>(detail::ipow(q, d + 1) - q);
    const std::int64_t b = static_cast<std::int64_t>(s) * d * static_cast<std::int64_t>(q - 1);
    return std::max(a, b);
}

/// Power sums S_d(s) for d = 0..dmax by the recursion on the coefficients of
/// e_d(x)/D_d, where e_d(x) = prod over deg b < d of (x - b):
///
///     e_d(theta^d + h) / D_d = 1 + sum_i beta_{d,i} h^{q^i},
///     beta_{0,0} = 1,
///     beta_{d,i} = (beta_{d-1,i-1}^q - beta_{d-1,i}) / (theta^{q^d} - theta).
///
/// Summing 1/(a + h) over monic a of degree d gives beta_{d,0} divided by the
/// series above, and the coefficient of h^{s-1} is (-1)^{s-1} S_d(s). Every
/// beta has nonnegative valuation, so working precision W gives results
/// known to W.
class PowerSumTable
{
public:
    PowerSumTable(const CarlitzContext &ctx, std::int64_t working_prec) : ctx_(ctx), w_(working_prec)
    {
        beta_.push_back({ctx_.one()});
    }

    std::int64_t working_precision() const noexcept { return w_; }

    const LaurentSeries &get(unsigned d, unsigned s)
    {
        extend(d);
        auto &row = sums_[d];
        if (row.size() < s + 1) {
            row.resize(s + 1);
        }
        if (!row[s]) {
            row[s] = compute(d, s);
        }
        return *row[s];
    }

private:
    void extend(unsigned d)
    {
        const LaurentSeries th = ctx_.theta();
        while (beta_.size() <= d) {
            const unsigned k = static_cast<unsigned>(beta_.size());
            const LaurentSeries den = (th.pow(detail::ipow(ctx_.q, k)) - th).inverse(w_);
            const auto &prev = beta_.back();
            std::vector<LaurentSeries> row;
            for (unsigned i = 0; i <= k; ++i) {
                LaurentSeries num = ctx_.zero();
                if (i >= 1) {
                    num = prev[i - 1].pow(ctx_.q);
                }
                if (i < prev.size()) {
                    num = num - prev[i];
                }
                row.push_back((num.truncated(w_) * den).truncated(w_));
            }
            beta_.push_back(std::move(row));
        }
        if (sums_.size() <= d) {
            sums_.resize(d + 1);
        }
    }

    LaurentSeries compute(unsigned d, unsigned s) const
    {
        const auto &beta = beta_[d];
        // c_n = [h^n] 1/(1 + sum_i beta_i h^{q^i})
        std::vector<LaurentSeries> c{ctx_.one()};
        for (unsigned n = 1; n < s; ++n) {
            LaurentSeries acc = ctx_.zero();
            std::uint64_t qi = 1;
            for (unsigned i = 0; i < beta.size() && qi <= n; ++i, qi *= ctx_.q) {
                acc = acc - beta[i] * c[n - qi];
            }
            c.push_back(acc.truncated(w_));
        }
        LaurentSeries r = (beta[0] * c[s - 1]).truncated(w_);
        return (s - 1) % 2 == 1 ? -r : r;
    }

    CarlitzContext ctx_;
    std::int64_t w_;
    std::vector<std::vector<LaurentSeries>> beta_;
    std::vector<std::vector<std::optional<LaurentSeries>>> sums_;
};

/// S_d(s) by the recursion, known to absolute precision prec.
inline LaurentSeries power_sum(const CarlitzContext &ctx, unsigned d, unsigned s, std::int64_t prec)
{
    for (std::int64_t w = prec;; w += prec) {
        PowerSumTable table(ctx, w);
        const LaurentSeries r = table.get(d, s);
        if (r.prec() >= prec) {
            return r.truncated(prec);
        }
    }
}

// ---------------------------------------------------------------------------
// Multiple zeta values
// ---------------------------------------------------------------------------

struct MzvResult {
    LaurentSeries value;
    unsigned degree_bound = 0;   // tuples with d_1 < degree_bound were summed
    std::uint64_t terms = 0;     // number of degree tuples summed
};

namespace detail
{

/// Sum over degree_bound > d_1 > ... > d_r >= 0 of prod S_{d_j}(s_j), by a
/// suffix recursion: T_j(n) = sum over m < n of S_m(s_j) T_{j+1}(m).
inline MzvResult mzv_below(const CarlitzContext &ctx, const Index &s, unsigned degree_bound, std::int64_t prec)
{
    for (std::int64_t w = prec;; w += std::max<std::int64_t>(prec, 8)) {
        PowerSumTable table(ctx, w);
        const std::size_t r = s.size();
        const unsigned N = degree_bound;
        std::vector<LaurentSeries> next(N + 1, ctx.one());
        std::vector<std::uint64_t> next_count(N + 1, 1);
        for (std::size_t j = r; j-- > 0;) {
            std::vector<LaurentSeries> cur(N + 1, ctx.zero());
            std::vector<std::uint64_t> cur_count(N + 1, 0);
            for (unsigned n = 1; n <= N; ++n) {
                const unsigned m = n - 1;
                const LaurentSeries term =
                    next_count[m] ? (table.get(m, static_cast<unsigned>(s[j])) * next[m]).truncated(w) : ctx.zero();
                cur[n] = (cur[n - 1] + term).truncated(w);
                cur_count[n] = cur_count[n - 1] + next_count[m];
            }
            next = std::move(cur);
            next_count = std::move(cur_count);
        }
        MzvResult res{next[N].truncated(prec), N, next_count[N]};
        if (res.value.prec() >= prec) {
            return res;
        }
    }
}

} // namespace detail

/// zeta(s) known to absolute precision prec. Tuples with d_1 >= N are
/// dropped once power_sum_valuation_bound(q, N, s_1) >= prec; every other
/// factor has nonnegative valuation.
/// Least N such that every tuple with d_1 >= N lies below z^prec; the sum in
/// mzv_direct runs over d_1 < N.
inline unsigned mzv_degree_bound(std::uint64_t q, const Index &s, std::int64_t prec)
{
    unsigned N = static_cast<unsigned>(s.size());
    while (power_sum_valuation_bound(q, N, static_cast<unsigned>(s[0])) < prec) {
        ++N;
    }
    return N;
}

inline MzvResult mzv_direct(const CarlitzContext &ctx, const Index &s, std::int64_t prec)
{
    if (s.empty()) {
        throw std::invalid_argument("mzv needs a nonempty index");
    }
    for (int v : s) {
        if (v < 1) {
            throw std::invalid_argument("index entries must be positive");
        }
    }
    if (prec < 1) {
        throw std::invalid_argument("precision must be at least 1");
    }
    return detail::mzv_below(ctx, s, mzv_degree_bound(ctx.q, s, prec), prec);
}

/// Partial sum over tuples with d_1 <= max_degree, to absolute precision prec.
inline LaurentSeries mzv_partial(const CarlitzContext &ctx, const Index &s, unsigned max_degree, std::int64_t prec)
{
    return detail::mzv_below(ctx, s, max_degree + 1, prec).value;
}

// ---------------------------------------------------------------------------
// Anderson-Thakur polynomials
// ---------------------------------------------------------------------------

/// H_0..H_{s_max}. With
///
///     g_0 = 1,  g_i = prod_{j=1..i} (t^{q^i} - theta^{q^j}) / prod_{j=0..i-1} (t^{q^i} - t^{q^j}),
///
/// expand 1/(1 - sum_i g_i x^{q^i}) = sum_n c_n x^n; then H_n = Gamma_{n+1}|_{theta=t} c_n,
/// read from the x^n slot. Writing c_n = P_n / U_n with the common denominator
/// U_n = prod_{i>=1} D_i(t)^{floor(n/q^i)} keeps everything polynomial; the
/// final division by U_n must be exact.
inline std::vector<TPoly> at_polynomials(const CarlitzContext &ctx, unsigned s_max)
{
    const FieldRef &f = ctx.field;
    const TPoly t = t_var(f);
    const TPoly one = t_constant(ThetaPoly::constant(ctx.F().one()));
    const ThetaPoly th = ctx.theta_poly();

    unsigned imax = 0;
    while (detail::ipow(ctx.q, imax + 1) <= s_max) {
        ++imax;
    }
    std::vector<std::uint64_t> qp(imax + 1);
    for (unsigned i = 0; i <= imax; ++i) {
        qp[i] = detail::ipow(ctx.q, i);
    }
    std::vector<TPoly> num(imax + 1, one), den(imax + 1, one);
    for (unsigned i = 1; i <= imax; ++i) {
        for (unsigned j = 1; j <= i; ++j) {
            num[i] = num[i] * (t.pow(qp[i]) - t_constant(th.pow(qp[j])));
        }
        for (unsigned j = 0; j < i; ++j) {
            den[i] = den[i] * (t.pow(qp[i]) - t.pow(qp[j]));
        }
    }
    auto exponent = [&](unsigned k, unsigned n) { return static_cast<std::uint64_t>(n / qp[k]); };

    std::vector<TPoly> P{one};
    for (unsigned n = 1; n <= s_max; ++n) {
        TPoly acc = t_poly(f);
        for (unsigned i = 0; i <= imax && qp[i] <= n; ++i) {
            // U_n / (D_i U_{n-q^i}) is a product of D_k with nonnegative exponents.
            TPoly term = num[i] * P[n - qp[i]];
            for (unsigned k = 1; k <= imax; ++k) {
                const std::uint64_t ek = exponent(k, n) - exponent(k, static_cast<unsigned>(n - qp[i])) - (k == i ? 1 : 0);
                if (ek > 0) {
                    term = term * den[k].pow(ek);
                }
            }
            acc = acc + term;
        }
        P.push_back(acc);
    }

    std::vector<TPoly> H;
    for (unsigned n = 0; n <= s_max; ++n) {
        TPoly U = one;
        for (unsigned k = 1; k <= imax; ++k) {
            U = U * den[k].pow(exponent(k, n));
        }
        const TPoly gamma = theta_to_t(carlitz_factorial(ctx, n));
        try {
            H.push_back(exact_div_monic(gamma * P[n], U));
        } catch (const std::logic_error &) {
            throw std::logic_error("Anderson-Thakur polynomial H_" + std::to_string(n) +
                                   " is not integral: the generating-series normalization is wrong");
        }
    }
    return H;
}

// ---------------------------------------------------------------------------
// Carlitz multiple polylogarithms
// ---------------------------------------------------------------------------

/// Index s with arguments u_1..u_d in F_q[t, theta].
struct CmplSpec {
    Index s;
    std::vector<TPoly> u;
};

struct ConvergenceEntry {
    std::size_t position = 0;  // 1-based
    long theta_degree = -1;    // deg_theta u_i, -1 for u_i = 0
    Rational bound;            // s_i q / (q-1)
    bool pass = true;
};

struct ConvergenceReport {
    bool pass = true;
    std::vector<ConvergenceEntry> entries;

    std::string describe() const
    {
        std::string out;
        for (const auto &e : entries) {
            if (!out.empty()) {
                out += "; ";
            }
            out += "u_" + std::to_string(e.position) + ": deg " +
                   (e.theta_degree < 0 ? std::string("-inf") : std::to_string(e.theta_degree)) + " vs " +
                   std::to_string(e.bound.numerator()) +
                   (e.bound.denominator() == 1 ? std::string() : "/" + std::to_string(e.bound.denominator())) +
                   (e.pass ? " ok" : " FAIL");
        }
        return out;
    }
};

/// |u_i|_inf < |theta|^{s_i q/(q-1)}, compared exactly: deg_theta u_i < s_i q/(q-1).
inline ConvergenceReport convergence_check(const CarlitzContext &ctx, const CmplSpec &spec)
{
    if (spec.u.size() != spec.s.size()) {
        throw std::invalid_argument("CMPL needs one argument per index entry");
    }
    ConvergenceReport r;
    for (std::size_t i = 0; i < spec.s.size(); ++i) {
        ConvergenceEntry e;
        e.position = i + 1;
        e.theta_degree = theta_degree(spec.u[i]);
        e.bound = Rational(static_cast<std::int64_t>(spec.s[i]) * static_cast<std::int64_t>(ctx.q),
                           static_cast<std::int64_t>(ctx.q - 1));
        e.pass = e.theta_degree < 0 || Rational(e.theta_degree) < e.bound;
        r.pass = r.pass && e.pass;
        r.entries.push_back(e);
    }
    return r;
}

namespace detail
{

struct CmplShape {
    std::vector<std::int64_t> a;  // deg_t u_j (0 for u_j = 0)
    std::vector<std::int64_t> b;  // deg_theta u_j (0 for u_j = 0)
};

inline CmplShape cmpl_shape(const CmplSpec &spec)
{
    CmplShape sh;
    for (const auto &u : spec.u) {
        sh.a.push_back(std::max<long>(0, u.degree()));
        sh.b.push_back(std::max<long>(0, theta_degree(u)));
    }
    return sh;
}

inline void require_convergent(const CarlitzContext &ctx, const CmplSpec &spec)
{
    const auto rep = convergence_check(ctx, spec);
    if (!rep.pass) {
        throw convergence_error("CMPL convergence condition fails: " + rep.describe());
    }
}

/// u^{(k l)} as a polynomial in (t, theta).
inline TPoly twisted_argument(const CarlitzContext &ctx, const TPoly &u, unsigned k)
{
    return twist(u, k * ctx.l);
}

} // namespace detail

/// Value at t = theta:
///
///     sum over i_1 > ... > i_d >= 0 of prod_j u_j^{(i_j l)}(theta) / l_{i_j}^{s_j},
///     l_i = prod_{k=1..i} (theta - theta^{q^k}).
///
/// With a_j = deg_t u_j and b_j = deg_theta u_j the j-th factor has valuation
/// at least B_j(i) = s_j (q^{i+1} - q) - (q-1)(a_j + b_j q^i), which increases
/// with i exactly when the convergence condition holds. Summation stops at
/// the first N with B_1(N) + sum_{j>=2} B_j(0) >= prec.
inline LaurentSeries cmpl_value(const CarlitzContext &ctx, const CmplSpec &spec, std::int64_t prec)
{
    detail::require_convergent(ctx, spec);
    const std::size_t d = spec.s.size();
    const auto sh = detail::cmpl_shape(spec);
    const auto e = static_cast<std::int64_t>(ctx.q - 1);
    const auto q = static_cast<std::int64_t>(ctx.q);
    auto bound = [&](std::size_t j, unsigned i) {
        const auto qi = static_cast<std::int64_t>(detail::ipow(ctx.q, i));
        return spec.s[j] * (qi * q - q) - e * (sh.a[j] + sh.b[j] * qi);
    };
    std::int64_t rest = 0;
    for (std::size_t j = 1; j < d; ++j) {
        rest += bound(j, 0);
    }
    unsigned N = static_cast<unsigned>(d);
    while (bound(0, N) + rest < prec) {
        ++N;
    }
    const LaurentSeries th = ctx.theta();

    // Values may start at negative exponents, so the retry step cannot be prec itself.
    const std::int64_t step = std::max<std::int64_t>(prec, q);
    for (std::int64_t extra = 0;; extra += step) {
        const std::int64_t target = prec - rest + extra;  // precision of each factor
        const std::int64_t cap = target + e * (sh.a.empty() ? 0 : *std::max_element(sh.a.begin(), sh.a.end())) +
                                 e * (*std::max_element(sh.b.begin(), sh.b.end())) *
                                     static_cast<std::int64_t>(detail::ipow(ctx.q, N));
        // inv_ell[i] = 1 / l_i to precision cap
        std::vector<LaurentSeries> inv_ell{ctx.one()};
        for (unsigned i = 1; i < N; ++i) {
            const LaurentSeries lin = th - th.pow(detail::ipow(ctx.q, i));
            inv_ell.push_back((inv_ell.back() * lin.inverse(cap)).truncated(cap));
        }
        // term[j][i], computed independently per i
        std::vector<std::vector<LaurentSeries>> term(d, std::vector<LaurentSeries>(N, ctx.zero()));
        parallel_for(N, ctx.workers, [&](std::size_t i) {
            for (std::size_t j = 0; j < d; ++j) {
                const ThetaPoly numer = eval_t_at_theta_power(
                    detail::twisted_argument(ctx, spec.u[j], static_cast<unsigned>(i)), 1);
                LaurentSeries v = ctx.embed(numer) * inv_ell[i].pow(static_cast<std::uint64_t>(spec.s[j]));
                v = v.truncated(target);
                if (!v.is_zero() && v.val() < bound(j, static_cast<unsigned>(i))) {
                    throw std::logic_error("CMPL term valuation below its a priori bound");
                }
                term[j][i] = std::move(v);
            }
        });
        // suffix sums: T_j(n) = sum_{i < n} term_j(i) T_{j+1}(i)
        std::vector<LaurentSeries> next(N + 1, ctx.one());
        for (std::size_t j = d; j-- > 0;) {
            std::vector<LaurentSeries> cur(N + 1, ctx.zero());
            for (unsigned n = 1; n <= N; ++n) {
                cur[n] = cur[n - 1] + term[j][n - 1] * next[n - 1];
            }
            next = std::move(cur);
        }
        const LaurentSeries r = next[N];
        if (r.prec() >= prec) {
            return r.truncated(prec);
        }
    }
}

/// The series L_{u,s}(t) in the Tate algebra, truncated at t^tdeg with every
/// coefficient known to absolute precision prec:
///
///     sum over i_1 > ... > i_d >= 0 of prod_j u_j^{(i_j l)}(t) / prod_{k=1..i_j} (t - theta^{q^k})^{s_j}.
///
/// Each t-coefficient of the j-th factor has valuation at least
/// s_j (q^{i+1} - q) - (q-1) b_j q^i, and along t the factor decays with
/// slope (q-1)q after its first a_j coefficients. That gives the tail
/// certificate slope (q-1)q, offset -(q-1) sum_j (b_j + q a_j).
inline TateElement cmpl_series(const CarlitzContext &ctx, const CmplSpec &spec, std::size_t tdeg,
                               std::int64_t prec)
{
    detail::require_convergent(ctx, spec);
    const std::size_t d = spec.s.size();
    const auto sh = detail::cmpl_shape(spec);
    const auto e = static_cast<std::int64_t>(ctx.q - 1);
    const auto q = static_cast<std::int64_t>(ctx.q);
    auto bound = [&](std::size_t j, unsigned i) {
        const auto qi = static_cast<std::int64_t>(detail::ipow(ctx.q, i));
        return spec.s[j] * (qi * q - q) - e * sh.b[j] * qi;
    };
    std::int64_t rest = 0;
    Rational offset(0);
    for (std::size_t j = 0; j < d; ++j) {
        if (j >= 1) {
            rest += bound(j, 0);
        }
        offset -= Rational(e * (sh.b[j] + q * sh.a[j]));
    }
    unsigned N = static_cast<unsigned>(d);
    while (bound(0, N) + rest < prec) {
        ++N;
    }
    const TailCertificate cert{Rational(e * q), offset};
    const LaurentSeries th = ctx.theta();
    const GaloisField &F = ctx.F();

    // Values may start at negative exponents, so the retry step cannot be prec itself.
    const std::int64_t step = std::max<std::int64_t>(prec, q);
    for (std::int64_t extra = 0;; extra += step) {
        const std::int64_t target = prec - rest + extra;
        const std::int64_t cap = target + e * (*std::max_element(sh.b.begin(), sh.b.end())) *
                                              static_cast<std::int64_t>(detail::ipow(ctx.q, N));
        // lin[i] = (t - theta^{q^i})^{-1}, i >= 1
        std::vector<TateElement> lin(N);
        parallel_for(N, ctx.workers, [&](std::size_t i) {
            if (i >= 1) {
                lin[i] = te_invert_linear_factor(th.pow(detail::ipow(ctx.q, static_cast<unsigned>(i))), 1, tdeg, cap);
            }
        });
        std::vector<std::vector<TateElement>> term(d, std::vector<TateElement>(N));
        parallel_for(d, ctx.workers, [&](std::size_t j) {
            TateElement den = TateElement::one(F, ctx.q);
            for (unsigned i = 0; i < N; ++i) {
                if (i >= 1) {
                    den = (den * lin[i].pow(static_cast<unsigned>(spec.s[j]))).truncated(cap, 0);
                }
                const TateElement numer =
                    TateElement::from_tpoly(detail::twisted_argument(ctx, spec.u[j], i), ctx.q);
                TateElement v = (numer * den.truncated_degree(tdeg, cert.slope)).truncated(target, 0);
                term[j][i] = v.truncated_degree(tdeg, cert.slope);
            }
        });
        std::vector<TateElement> next(N + 1, TateElement::one(F, ctx.q));
        for (std::size_t j = d; j-- > 0;) {
            std::vector<TateElement> cur(N + 1, TateElement::zero(F, ctx.q));
            for (unsigned n = 1; n <= N; ++n) {
                cur[n] = cur[n - 1] + term[j][n - 1] * next[n - 1];
            }
            next = std::move(cur);
        }
        TateElement r = next[N].truncated_degree(tdeg, cert.slope);
        std::int64_t floor = kExact;
        for (const auto &c : r.coefficients()) {
            floor = std::min(floor, c.prec());
        }
        if (floor >= prec) {
            return r.truncated(prec, 0).with_certificate(cert);
        }
    }
}

/// Level data for evaluating a CMPL series at t = theta to precision prec:
/// the truncation degree D with (q-1)^2 (D+1) + tau >= prec, and the uniform
/// coefficient precision prec + (q-1) D.
struct SeriesEvalPlan {
    std::size_t tdeg = 0;
    std::int64_t coeff_prec = 0;
};

inline SeriesEvalPlan cmpl_eval_plan(const CarlitzContext &ctx, const CmplSpec &spec, std::int64_t prec)
{
    const auto sh = detail::cmpl_shape(spec);
    const auto e = static_cast<std::int64_t>(ctx.q - 1);
    const auto q = static_cast<std::int64_t>(ctx.q);
    std::int64_t tau = 0;
    for (std::size_t j = 0; j < spec.s.size(); ++j) {
        tau -= e * (sh.b[j] + q * sh.a[j]);
    }
    const std::int64_t D = std::max<std::int64_t>(1, detail::ceil_div(prec - tau, e * e) - 1);
    return {static_cast<std::size_t>(D), prec + e * D};
}

// ---------------------------------------------------------------------------
// Period identity
// ---------------------------------------------------------------------------

struct PeriodIdentityReport {
    Index s;
    std::int64_t digits = 0;      // requested z-digits past the valuation floor
    std::int64_t leading = 0;     // v_z of the right side (the comparison anchor)
    LaurentSeries lhs;
    LaurentSeries rhs;
    Comparison comparison;        // at absolute precision floor + digits
    bool perturbed = false;

    bool pass() const { return comparison.equal(); }
    std::string describe() const
    {
        return "L(H)(theta) vs Gamma*zeta for s=(" + to_string(s) + ")" + (perturbed ? " [perturbed]" : "") + ": " +
               comparison.to_string() + " (leading exponent " + std::to_string(leading) + ")";
    }
};

/// Lower bound on v_z(zeta(s)): the tuple degrees satisfy d_j >= dep - j.
inline std::int64_t mzv_valuation_floor(std::uint64_t q, const Index &s)
{
    std::int64_t v = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        v += power_sum_valuation_bound(q, static_cast<unsigned>(s.size() - 1 - j), static_cast<unsigned>(s[j]));
    }
    return v;
}

/// Compares L_{(H_{s_1-1},...,H_{s_d-1}),s}(theta) with
/// Gamma_{s_1}...Gamma_{s_d} zeta(s) on `digits` z-coefficients starting at
/// the leading exponent v of the right side, i.e. to absolute precision
/// v + digits. Deep indices have values starting far out in z, so a fixed
/// absolute precision would compare zero with zero. The leading exponent is
/// found by raising the precision from the a priori floor until the right
/// side is visibly nonzero. With perturb set, u_1 is replaced by
/// H_{s_1-1} + 1 as a negative control.
inline PeriodIdentityReport verify_period_identity(const CarlitzContext &ctx, const Index &s, std::int64_t digits,
                                                   bool perturb = false)
{
    if (s.empty()) {
        throw std::invalid_argument("period identity needs a nonempty index");
    }
    if (digits < 1) {
        throw std::invalid_argument("precision must be at least 1");
    }
    const int smax = *std::max_element(s.begin(), s.end());
    const auto H = at_polynomials(ctx, static_cast<unsigned>(smax - 1));
    CmplSpec spec{s, {}};
    ThetaPoly gamma = ThetaPoly::constant(ctx.F().one());
    for (int sj : s) {
        spec.u.push_back(H[static_cast<std::size_t>(sj - 1)]);
        gamma = gamma * carlitz_factorial(ctx, static_cast<std::uint64_t>(sj - 1));
    }
    if (perturb) {
        spec.u[0] = spec.u[0] + t_constant(ThetaPoly::constant(ctx.F().one()));
    }
    const LaurentSeries g = ctx.embed(gamma);
    auto rhs_at = [&](std::int64_t prec) {
        return (g * mzv_direct(ctx, s, prec - g.val()).value).truncated(prec);
    };

    PeriodIdentityReport rep;
    rep.s = s;
    rep.digits = digits;
    rep.perturbed = perturb;
    std::int64_t prec = g.val() + mzv_valuation_floor(ctx.q, s) + digits;
    rep.rhs = rhs_at(prec);
    for (int tries = 0; rep.rhs.is_zero() && tries < 16; ++tries) {
        prec += std::max<std::int64_t>(digits, 30);
        rep.rhs = rhs_at(prec);
    }
    if (rep.rhs.is_zero()) {
        throw convergence_error("Gamma*zeta(" + to_string(s) + ") is zero to precision " + std::to_string(prec) +
                                "; cannot anchor the comparison");
    }
    rep.leading = rep.rhs.val();
    prec = rep.leading + digits;
    rep.rhs = rhs_at(prec);
    rep.lhs = cmpl_value(ctx, spec, prec);
    rep.comparison = eq_to_prec(rep.lhs, rep.rhs, prec);
    return rep;
}

/// Negative control for verify_period_identity: perturbs u_1 and widens the
/// window (doubling, up to 8 times `digits`) until the difference shows. When
/// H_{s_1-1} has large twists the perturbation can sit well past the leading
/// term. The report is the last one tried.
inline PeriodIdentityReport period_identity_control(const CarlitzContext &ctx, const Index &s, std::int64_t digits)
{
    PeriodIdentityReport rep;
    for (std::int64_t w = std::max<std::int64_t>(digits, 1); w <= 8 * std::max<std::int64_t>(digits, 1); w *= 2) {
        rep = verify_period_identity(ctx, s, w, true);
        if (rep.comparison.kind == Comparison::Kind::unequal) {
            break;
        }
    }
    return rep;
}

} // namespace cmzv

#endif
