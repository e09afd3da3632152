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

#ifndef CMZV_POLYNOMIAL_HPP
#define CMZV_POLYNOMIAL_HPP

// Dense univariate polynomials over any ring type R that provides +, -, *,
// unary -, == and the free functions zero_like, one_like and is_zero.
// Polynomial<R> provides the same protocol, so Polynomial<Polynomial<R>>
// works as a bivariate ring.

#include <cmzv/error.hpp>
#include <cmzv/ffield.hpp>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmzv
{

template <class R>
concept RingElement = requires(const R &a, const R &b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { zero_like(a) } -> std::convertible_to<R>;
    { one_like(a) } -> std::convertible_to<R>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

template <RingElement R>
class Polynomial
{
public:
    using coefficient_type = R;

    explicit Polynomial(R zero) : zero_(zero_like(zero)) {}
    Polynomial(R zero, std::vector<R> coeffs) : zero_(zero_like(zero)), c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const R &c) { return Polynomial(c, {c}); }
    static Polynomial monomial(const R &c, std::size_t k)
    {
        std::vector<R> v(k + 1, zero_like(c));
        v[k] = c;
        return Polynomial(c, std::move(v));
    }
    /// The variable itself, over the ring of `like`.
    static Polynomial x(const R &like) { return monomial(one_like(like), 1); }

    const R &zero_coefficient() const noexcept { return zero_; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool zero() const noexcept { return c_.empty(); }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<R> &coefficients() const noexcept { return c_; }
    const R &operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : zero_; }
    const R &leading() const
    {
        if (c_.empty()) {
            throw std::domain_error("leading coefficient of the zero polynomial");
        }
        return c_.back();
    }

    void set(std::size_t i, const R &v)
    {
        if (i >= c_.size()) {
            if (is_zero(v)) {
                return;
            }
            c_.resize(i + 1, zero_);
        }
        c_[i] = v;
        trim();
    }

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b)
    {
        Polynomial r(a.zero_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), a.zero_);
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            r.c_[i] = a[i] + b[i];
        }
        r.trim();
        return r;
    }
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b)
    {
        Polynomial r(a.zero_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), a.zero_);
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            r.c_[i] = a[i] - b[i];
        }
        r.trim();
        return r;
    }
    Polynomial operator-() const
    {
        Polynomial r(*this);
        for (auto &c : r.c_) {
            c = -c;
        }
        return r;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        Polynomial r(a.zero_);
        if (a.c_.empty() || b.c_.empty()) {
            return r;
        }
        r.c_.assign(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (!is_zero(b.c_[j])) {
                    r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
                }
            }
        }
        r.trim();
        return r;
    }
    friend Polynomial operator*(const R &s, const Polynomial &a)
    {
        Polynomial r(a);
        for (auto &c : r.c_) {
            c = s * c;
        }
        r.trim();
        return r;
    }
    Polynomial &operator+=(const Polynomial &b) { return *this = *this + b; }
    Polynomial &operator-=(const Polynomial &b) { return *this = *this - b; }
    Polynomial &operator*=(const Polynomial &b) { return *this = *this * b; }

    friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.c_ == b.c_; }

    Polynomial pow(std::uint64_t e) const
    {
        Polynomial r = constant(one_like(zero_));
        Polynomial base = *this;
        for (; e; e >>= 1) {
            if (e & 1u) {
                r *= base;
            }
            if (e > 1) {
                base *= base;
            }
        }
        return r;
    }

    /// Horner evaluation at a value of any type V that R multiplies into.
    template <class V>
    V evaluate(const V &x, const V &zero) const
    {
        V acc = zero;
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * x + lift(c_[i], zero);
        }
        return acc;
    }

    /// Applies f to every coefficient.
    template <class F>
    Polynomial map(F &&f) const
    {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto &c : c_) {
            v.push_back(f(c));
        }
        return Polynomial(zero_, std::move(v));
    }

private:
    template <class V>
    static V lift(const R &c, const V &zero)
    {
        if constexpr (std::is_same_v<V, R>) {
            (void)zero;
            return c;
        } else {
            return zero + c;
        }
    }

    void trim()
    {
        while (!c_.empty() && is_zero(c_.back())) {
            c_.pop_back();
        }
    }

    R zero_;
    std::vector<R> c_;
};

template <class R>
Polynomial<R> zero_like(const Polynomial<R> &a)
{
    return Polynomial<R>(a.zero_coefficient());
}
template <class R>
Polynomial<R> one_like(const Polynomial<R> &a)
{
    return Polynomial<R>::constant(one_like(a.zero_coefficient()));
}
template <class R>
bool is_zero(const Polynomial<R> &a)
{
    return a.zero();
}

/// Division by a polynomial with leading coefficient one. Returns (quotient,
/// remainder) with deg remainder < deg divisor.
template <class R>
std::pair<Polynomial<R>, Polynomial<R>> divmod_monic(const Polynomial<R> &a, const Polynomial<R> &b)
{
    if (b.zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (!(b.leading() == one_like(b.leading()))) {
        throw std::invalid_argument("divmod_monic requires a monic divisor");
    }
    const R zero = a.zero_coefficient();
    if (a.degree() < b.degree()) {
        return {Polynomial<R>(zero), a};
    }
    std::vector<R> rem = a.coefficients();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<R> quot(rem.size() - db, zero);
    for (std::size_t k = rem.size(); k-- > db;) {
        const R c = rem[k];
        if (is_zero(c)) {
            continue;
        }
        const std::size_t shift = k - db;
        quot[shift] = c;
        for (std::size_t i = 0; i <= db; ++i) {
            if (!is_zero(b[i])) {
                rem[shift + i] = rem[shift + i] - c * b[i];
            }
        }
    }
    rem.resize(db, zero);
    return {Polynomial<R>(zero, std::move(quot)), Polynomial<R>(zero, std::move(rem))};
}

/// Exact division by a monic polynomial; throws if a remainder is left.
template <class R>
Polynomial<R> exact_div_monic(const Polynomial<R> &a, const Polynomial<R> &b)
{
    auto [q, r] = divmod_monic(a, b);
    if (!r.zero()) {
        throw std::logic_error("polynomial division left a nonzero remainder");
    }
    return q;
}

/// Division with remainder over a field coefficient ring.
inline std::pair<Polynomial<FfElem>, Polynomial<FfElem>> divmod(const Polynomial<FfElem> &a,
                                                                 const Polynomial<FfElem> &b)
{
    const FfElem lc = b.leading();
    const FfElem lc_inv = lc.inverse();
    auto [q, r] = divmod_monic(a, lc_inv * b);
    return {lc_inv * q, r};
}

/// Monic gcd over a field coefficient ring (zero if both inputs are zero).
inline Polynomial<FfElem> gcd(Polynomial<FfElem> a, Polynomial<FfElem> b)
{
    while (!b.zero()) {
        a = divmod(a, b).second;
        std::swap(a, b);
    }
    if (a.zero()) {
        return a;
    }
    return a.leading().inverse() * a;
}

// Polynomials in theta over F_q, and bivariate polynomials stored as
// polynomials in t whose coefficients are polynomials in theta.
using ThetaPoly = Polynomial<FfElem>;
using TPoly = Polynomial<ThetaPoly>;

inline ThetaPoly theta_poly(const FieldRef &f) { return ThetaPoly(f->zero()); }
inline ThetaPoly theta(const FieldRef &f) { return ThetaPoly::x(f->zero()); }
inline ThetaPoly theta_constant(const FfElem &c) { return ThetaPoly::constant(c); }
inline TPoly t_poly(const FieldRef &f) { return TPoly(theta_poly(f)); }
inline TPoly t_var(const FieldRef &f) { return TPoly::x(theta_poly(f)); }
inline TPoly t_constant(const ThetaPoly &c) { return TPoly::constant(c); }

/// Substitutes theta -> theta^k (k >= 1).
inline ThetaPoly theta_dilate(const ThetaPoly &f, std::uint64_t k)
{
    if (f.zero()) {
        return f;
    }
    std::vector<FfElem> v(static_cast<std::size_t>(f.degree()) * k + 1, f.zero_coefficient());
    for (std::size_t i = 0; i < f.size(); ++i) {
        v[i * k] = f[i];
    }
    return ThetaPoly(f.zero_coefficient(), std::move(v));
}

/// n-fold twist of a polynomial in theta: coefficients a -> a^{p^n} and
/// theta -> theta^{p^n}.
inline ThetaPoly twist(const ThetaPoly &f, unsigned n)
{
    if (f.zero()) {
        return f;
    }
    const std::uint64_t pn = [&] {
        std::uint64_t r = 1;
        for (unsigned i = 0; i < n; ++i) {
            r *= f.zero_coefficient().field()->p();
        }
        return r;
    }();
    return theta_dilate(f.map([n](const FfElem &a) { return a.frobenius(n); }), pn);
}

/// n-fold twist of a polynomial in (t, theta): t is fixed.
inline TPoly twist(const TPoly &f, unsigned n)
{
    return f.map([n](const ThetaPoly &c) { return twist(c, n); });
}

/// Substitutes t -> theta^k, giving a polynomial in theta.
inline ThetaPoly eval_t_at_theta_power(const TPoly &f, std::uint64_t k)
{
    ThetaPoly acc = f.zero_coefficient();
    const ThetaPoly shift = ThetaPoly::monomial(one_like(acc.zero_coefficient()), k);
    for (std::size_t a = f.size(); a-- > 0;) {
        acc = acc * shift + f[a];
    }
    return acc;
}

/// deg_theta over all t-coefficients; -1 for the zero polynomial.
inline long theta_degree(const TPoly &f)
{
    long d = -1;
    for (const auto &c : f.coefficients()) {
        d = std::max(d, c.degree());
    }
    return d;
}

/// Polynomial in t with coefficients in F_q embedded as constants in theta.
inline TPoly t_poly_from_ff(const Polynomial<FfElem> &f)
{
    std::vector<ThetaPoly> v;
    v.reserve(f.size());
    for (const auto &c : f.coefficients()) {
        v.push_back(theta_constant(c));
    }
    return TPoly(ThetaPoly(f.zero_coefficient()), std::move(v));
}

/// Reads a polynomial in theta as a polynomial in t (theta -> t).
inline TPoly theta_to_t(const ThetaPoly &f) { return t_poly_from_ff(f); }

inline std::string to_string(const ThetaPoly &f, const std::string &var = "theta")
{
    if (f.zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i].is_zero()) {
            continue;
        }
        std::string c = f[i].to_string();
        if (!out.empty()) {
            out += " + ";
        }
        if (i == 0) {
            out += c;
            continue;
        }
        if (c != "1") {
            out += c + "*";
        }
        out += var;
        if (i > 1) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline std::string to_string(const TPoly &f)
{
    if (f.zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t a = f.size(); a-- > 0;) {
        if (f[a].zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        std::string c = to_string(f[a]);
        if (a == 0) {
            out += c;
            continue;
        }
        const bool compound = f[a].size() > 1 && c.find(" + ") != std::string::npos;
        if (c != "1") {
            out += (compound ? "(" + c + ")" : c) + "*";
        }
        out += "t";
        if (a > 1) {
            out += "^" + std::to_string(a);
        }
    }
    return out;
}

} // namespace cmzv

#endif
