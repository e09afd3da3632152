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

#ifndef CMZV_TATE_HPP
#define CMZV_TATE_HPP

// Power series in t with LaurentSeries coefficients, truncated at a degree D,
// as a model of the Tate algebra. A truncated element may carry a tail
// certificate (sigma, tau) asserting v_z(c_k) >= sigma*k + tau for every k,
// including the unknown k > D. Polynomials in t are a separate state: their
// coefficients past the degree are exactly zero and they need no certificate.

#include <cmzv/error.hpp>
#include <cmzv/laurent.hpp>
#include <cmzv/polynomial.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmzv
{

struct TailCertificate {
    Rational slope;
    Rational offset;
};

/// Result of checking that a difference of series vanishes.
struct ResidualReport {
    bool zero = true;                      // every known coefficient vanished
    std::int64_t floor = kExact;           // least coefficient precision seen
    std::optional<std::size_t> t_index;    // first offending t-exponent
    std::optional<std::int64_t> exponent;  // its first nonzero z-exponent
    ExtRational max_norm;                  // Gauss-norm exponent of the residual
    std::string where;                     // caller-supplied location (matrix entry)

    /// Passes iff zero and known to at least `required` digits.
    bool passes(std::int64_t required) const { return zero && floor >= required; }
    std::string status(std::int64_t required) const
    {
        if (!zero) {
            return "fail";
        }
        return floor >= required ? "pass" : "incomparable";
    }
    std::string describe() const
    {
        if (!zero) {
            return "nonzero" + (where.empty() ? std::string() : " at " + where) + ": t^" +
                   std::to_string(*t_index) + " coefficient has z^" + std::to_string(*exponent) +
                   " term (norm exponent " + max_norm.to_string() + ")";
        }
        return "zero to precision " + (floor >= kExact ? std::string("exact") : std::to_string(floor));
    }
    /// Folds another residual into this one (worst case wins).
    void merge(const ResidualReport &o)
    {
        if (zero && !o.zero) {
            t_index = o.t_index;
            exponent = o.exponent;
            where = o.where;
        }
        zero = zero && o.zero;
        floor = std::min(floor, o.floor);
        max_norm = max(max_norm, o.max_norm);
    }
};

class TateElement
{
public:
    TateElement() = default;

    /// Polynomial in t with the given coefficients.
    static TateElement polynomial(const GaloisField &f, std::uint64_t q, std::vector<LaurentSeries> coeffs)
    {
        TateElement r(&f, q);
        r.poly_ = true;
        r.c_ = std::move(coeffs);
        r.trim();
        return r;
    }
    static TateElement from_tpoly(const TPoly &p, std::uint64_t q)
    {
        const GaloisField &f = *p.zero_coefficient().zero_coefficient().field();
        std::vector<LaurentSeries> v;
        for (const auto &c : p.coefficients()) {
            v.push_back(LaurentSeries::from_theta_poly(c, q));
        }
        return polynomial(f, q, std::move(v));
    }
    static TateElement constant(const LaurentSeries &c) { return polynomial(c.field(), c.q(), {c}); }
    static TateElement zero(const GaloisField &f, std::uint64_t q) { return polynomial(f, q, {}); }
    static TateElement one(const GaloisField &f, std::uint64_t q)
    {
        return constant(LaurentSeries::one(f, q));
    }
    /// The variable t.
    static TateElement t(const GaloisField &f, std::uint64_t q)
    {
        return polynomial(f, q, {LaurentSeries::zero(f, q), LaurentSeries::one(f, q)});
    }
    /// Truncated series c_0..c_D with an optional tail certificate.
    static TateElement series(const GaloisField &f, std::uint64_t q, std::vector<LaurentSeries> coeffs,
                              std::optional<TailCertificate> cert)
    {
        if (coeffs.empty()) {
            throw std::invalid_argument("a truncated Tate element needs at least one coefficient");
        }
        TateElement r(&f, q);
        r.poly_ = false;
        r.c_ = std::move(coeffs);
        r.cert_ = cert;
        return r;
    }

    const GaloisField &field() const noexcept { return *f_; }
    std::uint64_t q() const noexcept { return q_; }
    bool is_polynomial() const noexcept { return poly_; }
    /// Truncation degree D; the t-degree for a polynomial (-1 for zero).
    long tdeg() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::optional<TailCertificate> &certificate() const noexcept { return cert_; }
    const std::vector<LaurentSeries> &coefficients() const noexcept { return c_; }

    LaurentSeries coeff(std::size_t k) const
    {
        if (k < c_.size()) {
            return c_[k];
        }
        if (poly_) {
            return LaurentSeries::zero(*f_, q_);
        }
        throw precision_error("t^" + std::to_string(k) + " lies past the truncation degree " +
                              std::to_string(tdeg()));
    }

    /// Least tau with v(c_k) >= slope*k + tau over the stored coefficients, or
    /// nullopt if every stored coefficient is exactly zero. A coefficient that
    /// is zero to precision N counts as valuation N unless known_only is set,
    /// in which case it is skipped.
    std::optional<Rational> offset_for_slope(const Rational &slope, bool known_only = false) const
    {
        std::optional<Rational> tau;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero() && (c_[k].exact() || known_only)) {
                continue;
            }
            const Rational v = Rational(c_[k].val()) - slope * static_cast<std::int64_t>(k);
            tau = tau ? std::min(*tau, v) : v;
        }
        return tau;
    }

    /// Certificate valid for every coefficient at the given slope, if one is
    /// available (always for polynomials).
    std::optional<Rational> tail_offset(const Rational &slope) const
    {
        if (poly_) {
            return offset_for_slope(slope);
        }
        if (!cert_ || slope > cert_->slope) {
            return std::nullopt;
        }
        return cert_->offset;
    }

    /// True iff the stored coefficients satisfy the stored certificate.
    bool certificate_consistent() const
    {
        if (!cert_) {
            return true;
        }
        const auto tau = offset_for_slope(cert_->slope, true);
        return !tau || *tau >= cert_->offset;
    }

    friend TateElement operator+(const TateElement &a, const TateElement &b) { return combine(a, b, false); }
    friend TateElement operator-(const TateElement &a, const TateElement &b) { return combine(a, b, true); }
    TateElement operator-() const
    {
        TateElement r(*this);
        for (auto &c : r.c_) {
            c = -c;
        }
        return r;
    }

    friend TateElement operator*(const TateElement &a, const TateElement &b)
    {
        check(a, b);
        if (a.poly_ && b.poly_) {
            if (a.c_.empty() || b.c_.empty()) {
                return zero(*a.f_, a.q_);
            }
            std::vector<LaurentSeries> v(a.c_.size() + b.c_.size() - 1, LaurentSeries::zero(*a.f_, a.q_));
            for (std::size_t i = 0; i < a.c_.size(); ++i) {
                for (std::size_t j = 0; j < b.c_.size(); ++j) {
                    v[i + j] += a.c_[i] * b.c_[j];
                }
            }
            return polynomial(*a.f_, a.q_, std::move(v));
        }
        if ((a.poly_ && a.c_.empty()) || (b.poly_ && b.c_.empty())) {
            return zero(*a.f_, a.q_);
        }
        const std::size_t n = std::min(a.poly_ ? std::numeric_limits<std::size_t>::max() : a.c_.size(),
                                       b.poly_ ? std::numeric_limits<std::size_t>::max() : b.c_.size());
        std::vector<LaurentSeries> v(n, LaurentSeries::zero(*a.f_, a.q_));
        for (std::size_t i = 0; i < std::min(n, a.c_.size()); ++i) {
            for (std::size_t j = 0; j < std::min(n - i, b.c_.size()); ++j) {
                v[i + j] += a.c_[i] * b.c_[j];
            }
        }
        std::optional<TailCertificate> cert;
        const Rational slope = a.poly_ ? b.cert_ ? b.cert_->slope : Rational(0)
                               : b.poly_ ? a.cert_ ? a.cert_->slope : Rational(0)
                               : a.cert_ && b.cert_ ? std::min(a.cert_->slope, b.cert_->slope) : Rational(0);
        const auto ta = a.tail_offset(slope), tb = b.tail_offset(slope);
        const bool certified = (a.poly_ || a.cert_) && (b.poly_ || b.cert_);
        if (certified && ta && tb) {
            cert = TailCertificate{slope, *ta + *tb};
        }
        return series(*a.f_, a.q_, std::move(v), cert);
    }
    friend TateElement operator*(const LaurentSeries &s, const TateElement &a) { return constant(s) * a; }
    TateElement &operator+=(const TateElement &b) { return *this = *this + b; }
    TateElement &operator-=(const TateElement &b) { return *this = *this - b; }
    TateElement &operator*=(const TateElement &b) { return *this = *this * b; }

    TateElement pow(unsigned e) const
    {
        TateElement r = one(*f_, q_);
        for (unsigned i = 0; i < e; ++i) {
            r = r * *this;
        }
        return r;
    }

    /// Coefficient-wise twist; t is fixed.
    TateElement twist(unsigned n) const
    {
        TateElement r(*this);
        for (auto &c : r.c_) {
            c = c.twist(n);
        }
        if (r.cert_) {
            const auto pn = static_cast<std::int64_t>(detail::ipow(f_->p(), n));
            r.cert_->slope *= pn;
            r.cert_->offset *= pn;
        }
        return r;
    }

    /// Coefficient k truncated to absolute precision base + per_k * k.
    TateElement truncated(std::int64_t base, std::int64_t per_k) const
    {
        TateElement r(*this);
        for (std::size_t k = 0; k < r.c_.size(); ++k) {
            r.c_[k] = r.c_[k].truncated(base + per_k * static_cast<std::int64_t>(k));
        }
        return r;
    }

    /// Keeps t^0..t^D. A polynomial becomes a series whose zero tail is
    /// certified at the requested slope.
    TateElement truncated_degree(std::size_t D, const Rational &slope) const
    {
        std::vector<LaurentSeries> v;
        for (std::size_t k = 0; k <= D; ++k) {
            v.push_back(k < c_.size() ? c_[k] : poly_ ? LaurentSeries::zero(*f_, q_) : coeff(k));
        }
        std::optional<TailCertificate> cert;
        if (const auto tau = tail_offset(slope)) {
            cert = TailCertificate{slope, *tau};
        } else if (poly_) {
            cert = TailCertificate{slope, Rational(0)};
        }
        return series(*f_, q_, std::move(v), cert);
    }

    /// Replaces the tail certificate (used by constructions that know a
    /// sharper bound than the arithmetic rules derive).
    TateElement with_certificate(std::optional<TailCertificate> cert) const
    {
        TateElement r(*this);
        r.cert_ = cert;
        return r;
    }

    /// Specialization t = theta. Requires slope > q-1 for truncated elements.
    LaurentSeries eval_theta() const
    {
        const LaurentSeries th = LaurentSeries::theta(*f_, q_);
        const auto e = static_cast<std::int64_t>(q_ - 1);
        LaurentSeries acc = LaurentSeries::zero(*f_, q_);
        LaurentSeries thk = LaurentSeries::one(*f_, q_);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            acc += c_[k] * thk;
            thk = thk * th;
        }
        if (poly_) {
            return acc;
        }
        if (!cert_) {
            throw convergence_error("evaluation at t = theta needs a tail certificate");
        }
        const Rational excess = cert_->slope - Rational(e);
        if (excess <= 0) {
            throw convergence_error("tail certificate slope " + std::to_string(boost::rational_cast<double>(cert_->slope)) +
                                    " does not exceed q-1 = " + std::to_string(e));
        }
        const Rational bound = excess * static_cast<std::int64_t>(c_.size()) + cert_->offset;
        const std::int64_t tail = detail::ceil_div(bound.numerator(), bound.denominator());
        return acc.truncated(tail);
    }

    /// Max over the stored coefficients of the norm exponent. The flag is set
    /// when the certified tail bound could exceed that maximum.
    std::pair<ExtRational, bool> gauss_norm() const
    {
        ExtRational m;
        for (const auto &c : c_) {
            m = max(m, c.norm());
        }
        bool tail_may_dominate = false;
        if (!poly_) {
            if (!cert_) {
                tail_may_dominate = true;
            } else {
                const Rational vmin = cert_->slope * static_cast<std::int64_t>(c_.size()) + cert_->offset;
                const ExtRational tail = ExtRational::of(-vmin / static_cast<std::int64_t>(q_ - 1));
                tail_may_dominate = !(tail < m);
            }
        }
        return {m, tail_may_dominate};
    }

    friend bool operator==(const TateElement &a, const TateElement &b)
    {
        auto same_cert = [](const std::optional<TailCertificate> &x, const std::optional<TailCertificate> &y) {
            return x.has_value() == y.has_value() && (!x || (x->slope == y->slope && x->offset == y->offset));
        };
        return a.f_ == b.f_ && a.q_ == b.q_ && a.poly_ == b.poly_ && a.c_ == b.c_ && same_cert(a.cert_, b.cert_);
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero() && c_[k].exact()) {
                continue;
            }
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + c_[k].to_string() + ")*t^" + std::to_string(k);
        }
        if (!poly_) {
            out += (out.empty() ? "" : " + ") + std::string("O(t^") + std::to_string(c_.size()) + ")";
        }
        return out.empty() ? "0" : out;
    }

private:
    TateElement(const GaloisField *f, std::uint64_t q) : f_(f), q_(q) {}

    static void check(const TateElement &a, const TateElement &b)
    {
        if (a.f_ != b.f_ || a.q_ != b.q_) {
            throw mismatch_error("Tate elements over different fields or levels");
        }
    }

    void trim()
    {
        while (!c_.empty() && c_.back().is_zero() && c_.back().exact()) {
            c_.pop_back();
        }
    }

    static TateElement combine(const TateElement &a, const TateElement &b, bool subtract)
    {
        check(a, b);
        auto op = [subtract](const LaurentSeries &x, const LaurentSeries &y) { return subtract ? x - y : x + y; };
        if (a.poly_ && b.poly_) {
            std::vector<LaurentSeries> v(std::max(a.c_.size(), b.c_.size()), LaurentSeries::zero(*a.f_, a.q_));
            for (std::size_t k = 0; k < v.size(); ++k) {
                v[k] = op(a.coeff(k), b.coeff(k));
            }
            return polynomial(*a.f_, a.q_, std::move(v));
        }
        const std::size_t n = std::min(a.poly_ ? std::numeric_limits<std::size_t>::max() : a.c_.size(),
                                       b.poly_ ? std::numeric_limits<std::size_t>::max() : b.c_.size());
        std::vector<LaurentSeries> v(n, LaurentSeries::zero(*a.f_, a.q_));
        for (std::size_t k = 0; k < n; ++k) {
            v[k] = op(a.coeff(k), b.coeff(k));
        }
        std::optional<TailCertificate> cert;
        const Rational slope = a.poly_   ? (b.cert_ ? b.cert_->slope : Rational(0))
                               : b.poly_ ? (a.cert_ ? a.cert_->slope : Rational(0))
                               : (a.cert_ && b.cert_ ? std::min(a.cert_->slope, b.cert_->slope) : Rational(0));
        const bool certified = (a.poly_ || a.cert_) && (b.poly_ || b.cert_);
        if (certified) {
            const auto ta = a.tail_offset(slope), tb = b.tail_offset(slope);
            if (ta && tb) {
                cert = TailCertificate{slope, std::min(*ta, *tb)};
            } else if (ta || tb) {
                // One operand is the zero polynomial.
                cert = TailCertificate{slope, ta ? *ta : *tb};
            }
        }
        return series(*a.f_, a.q_, std::move(v), cert);
    }

    const GaloisField *f_ = nullptr;
    std::uint64_t q_ = 2;
    bool poly_ = true;
    std::vector<LaurentSeries> c_;
    std::optional<TailCertificate> cert_;
};

inline TateElement zero_like(const TateElement &a) { return TateElement::zero(a.field(), a.q()); }
inline TateElement one_like(const TateElement &a) { return TateElement::one(a.field(), a.q()); }
inline bool is_zero(const TateElement &a) { return a.is_polynomial() && a.tdeg() < 0; }
inline std::string to_string(const TateElement &a) { return a.to_string(); }

inline TateElement te_twist(const TateElement &f, unsigned n) { return f.twist(n); }
inline LaurentSeries te_eval_theta(const TateElement &f) { return f.eval_theta(); }
inline std::pair<ExtRational, bool> te_gauss_norm(const TateElement &f) { return f.gauss_norm(); }

/// (t - c)^{-s} truncated at t^tdeg, for v_z(c) < 0, via
/// (t - c)^{-1} = -c^{-1} * sum_k (t/c)^k. Coefficients are cut at absolute
/// z-precision `cap` (exact when c is a monomial and cap is kExact).
inline TateElement te_invert_linear_factor(const LaurentSeries &c, unsigned s, std::size_t tdeg,
                                           std::int64_t cap = kExact)
{
    if (c.is_zero() || c.val() >= 0) {
        throw convergence_error("(t - c)^{-1} lies in the Tate algebra only when |c| > 1");
    }
    if (s == 0) {
        return TateElement::one(c.field(), c.q());
    }
    const std::int64_t nv = -c.val();
    const LaurentSeries cinv = c.inverse(cap);
    std::vector<LaurentSeries> v;
    LaurentSeries pw = -cinv;
    for (std::size_t k = 0; k <= tdeg; ++k) {
        v.push_back(pw.truncated(cap));
        pw = (pw * cinv).truncated(cap);
    }
    const TateElement base =
        TateElement::series(c.field(), c.q(), std::move(v), TailCertificate{Rational(nv), Rational(nv)});
    TateElement r = base;
    for (unsigned i = 1; i < s; ++i) {
        r = r * base;
    }
    return r.truncated(cap, 0);
}

/// Coefficient-wise comparison of a - b on the joint known range.
inline ResidualReport te_residual(const TateElement &a, const TateElement &b)
{
    const TateElement d = a - b;
    ResidualReport r;
    const std::size_t n = d.is_polynomial() ? static_cast<std::size_t>(d.tdeg() + 1) : d.coefficients().size();
    for (std::size_t k = 0; k < n; ++k) {
        const LaurentSeries &c = d.coefficients()[k];
        r.floor = std::min(r.floor, c.prec());
        if (!c.is_zero()) {
            if (r.zero) {
                r.zero = false;
                r.t_index = k;
                r.exponent = c.val();
            }
            r.max_norm = max(r.max_norm, c.norm());
        }
    }
    return r;
}

} // namespace cmzv

#endif
