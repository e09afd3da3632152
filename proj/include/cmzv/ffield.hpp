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

#ifndef CMZV_FFIELD_HPP
#define CMZV_FFIELD_HPP

/// @file ffield.hpp
/// Finite fields F_{p^m} in a polynomial basis.
///
/// Elements are encoded as integers c_0 + c_1 p + ... + c_{m-1} p^{m-1}, where
/// c_i is the coefficient of g^i and g is the class of x modulo the field's
/// modulus. The modulus is the monic irreducible of degree m whose lower
/// coefficients have the smallest such encoding, so a given (p, m) always yields
/// the same field. Fields are interned: ff_create(p, m) returns the same object
/// on every call, and element handles compare fields by address.

#include <cmzv/error.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmzv
{

namespace detail
{

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

// Dense polynomials over F_p as coefficient vectors (low degree first), used
// only while building a field.
using fp_poly = std::vector<std::uint32_t>;

inline void fp_trim(fp_poly &a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p)
{
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1u) {
            r = r * b % p;
        }
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

inline fp_poly fp_mod(fp_poly a, const fp_poly &m, std::uint32_t p)
{
    fp_trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = fp_inv(m.back(), p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
        }
        fp_trim(a);
    }
    return a;
}

inline fp_poly fp_mulmod(const fp_poly &a, const fp_poly &b, const fp_poly &m, std::uint32_t p)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    fp_poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    return fp_mod(std::move(r), m, p);
}

inline fp_poly fp_gcd(fp_poly a, fp_poly b, std::uint32_t p)
{
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        a = fp_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// f of degree m is irreducible iff it has no factor of degree <= m/2, i.e.
// gcd(x^{p^i} - x, f) = 1 for 1 <= i <= m/2.
inline bool fp_is_irreducible(const fp_poly &f, std::uint32_t p)
{
    const std::size_t m = f.size() - 1;
    if (m == 1) {
        return true;
    }
    fp_poly xp = {0, 1};
    for (std::size_t i = 1; i <= m / 2; ++i) {
        fp_poly acc = {1};
        fp_poly base = xp;
        for (std::uint32_t e = p; e; e >>= 1) {
            if (e & 1u) {
                acc = fp_mulmod(acc, base, f, p);
            }
            base = fp_mulmod(base, base, f, p);
        }
        xp = acc;
        fp_poly diff = xp;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(diff);
        if (diff.empty()) {
            return false;
        }
        const fp_poly g = fp_gcd(f, diff, p);
        if (g.size() > 1) {
            return false;
        }
    }
    return true;
}

} // namespace detail

class GaloisField;
class FfElem;

using FieldRef = std::shared_ptr<const GaloisField>;

/// F_{p^m}: immutable, with precomputed log/antilog and addition tables.
class GaloisField
{
public:
    static constexpr std::uint64_t max_order = std::uint64_t{1} << 20;

    std::uint32_t p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return order_; }
    /// Monic modulus, low degree first (size m + 1).
    const std::vector<std::uint32_t> &modulus() const noexcept { return modulus_; }
    /// Encoding of the least primitive element used for the log tables.
    std::uint32_t primitive() const noexcept { return exp_[1]; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept
    {
        if (p_ == 2) {
            return a ^ b;
        }
        if (!add_table_.empty()) {
            return add_table_[std::size_t{a} * order_ + b];
        }
        return add_slow(a, b);
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return neg_[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg_[b]); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept
    {
        if (a == 0 || b == 0) {
            return 0;
        }
        return exp_[log_[a] + log_[b]];
    }
    std::uint32_t inv(std::uint32_t a) const
    {
        if (a == 0) {
            throw std::domain_error("division by zero in " + name());
        }
        return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept
    {
        if (e == 0) {
            return 1;
        }
        if (a == 0) {
            return 0;
        }
        const std::uint64_t n = order_ - 1;
        return exp_[static_cast<std::size_t>((std::uint64_t{log_[a]} * (e % n)) % n)];
    }
    /// a^{p^n}; negative n applies the inverse Frobenius.
    std::uint32_t frob(std::uint32_t a, long long n) const noexcept
    {
        if (a == 0 || m_ == 1) {
            return a;
        }
        const long long mm = static_cast<long long>(m_);
        const long long k = ((n % mm) + mm) % mm;
        return exp_[frob_log_[static_cast<std::size_t>(k)][log_[a]]];
    }
    std::uint32_t from_int(long long k) const noexcept
    {
        const long long pp = static_cast<long long>(p_);
        return static_cast<std::uint32_t>(((k % pp) + pp) % pp);
    }
    std::uint32_t encode(const std::vector<std::uint32_t> &coeffs) const
    {
        if (coeffs.size() > m_) {
            throw std::invalid_argument("too many coefficients for " + name());
        }
        std::uint32_t code = 0, w = 1;
        for (std::uint32_t c : coeffs) {
            code += (c % p_) * w;
            w *= p_;
        }
        return code;
    }
    std::vector<std::uint32_t> decode(std::uint32_t a) const
    {
        std::vector<std::uint32_t> c(m_, 0);
        for (unsigned i = 0; i < m_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    }

    /// Polynomial-basis text: "2" in prime fields, "(g^2+2*g+1)" otherwise.
    std::string to_string(std::uint32_t a) const
    {
        if (m_ == 1) {
            return std::to_string(a);
        }
        const auto c = decode(a);
        std::string out;
        for (unsigned i = m_; i-- > 0;) {
            if (c[i] == 0) {
                continue;
            }
            if (!out.empty()) {
                out += '+';
            }
            if (i == 0) {
                out += std::to_string(c[i]);
                continue;
            }
            if (c[i] != 1) {
                out += std::to_string(c[i]) + '*';
            }
            out += 'g';
            if (i > 1) {
                out += '^' + std::to_string(i);
            }
        }
        if (out.empty()) {
            return "0";
        }
        return out.find('+') == std::string::npos ? out : '(' + out + ')';
    }

    std::string name() const { return "F_" + std::to_string(p_) + "^" + std::to_string(m_); }

    FfElem zero() const;
    FfElem one() const;
    FfElem element(std::uint32_t code) const;
    FfElem generator() const;

    /// Interned construction; see ff_create.
    static FieldRef get(std::uint32_t p, unsigned m)
    {
        if (!detail::is_prime(p)) {
            throw std::invalid_argument("p must be prime (got " + std::to_string(p) + ")");
        }
        if (m == 0) {
            throw std::invalid_argument("extension degree m must be positive");
        }
        std::uint64_t order = 1;
        for (unsigned i = 0; i < m; ++i) {
            order *= p;
            if (order > max_order) {
                throw std::invalid_argument("field order p^m exceeds the supported table size");
            }
        }
        static std::mutex mtx;
        static std::map<std::pair<std::uint32_t, unsigned>, FieldRef> registry;
        const std::lock_guard<std::mutex> lock(mtx);
        auto &slot = registry[{p, m}];
        if (!slot) {
            slot = FieldRef(new GaloisField(p, m, static_cast<std::uint32_t>(order)));
        }
        return slot;
    }

private:
    GaloisField(std::uint32_t p, unsigned m, std::uint32_t order) : p_(p), m_(m), order_(order)
    {
        modulus_ = least_irreducible();
        build_tables();
    }

    std::vector<std::uint32_t> least_irreducible() const
    {
        std::uint32_t lower_count = order_;
        for (std::uint32_t code = 0; code < lower_count; ++code) {
            detail::fp_poly f(m_ + 1, 0);
            std::uint32_t c = code;
            for (unsigned i = 0; i < m_; ++i) {
                f[i] = c % p_;
                c /= p_;
            }
            f[m_] = 1;
            if (m_ > 1 && f[0] == 0) {
                continue;
            }
            if (detail::fp_is_irreducible(f, p_)) {
                return f;
            }
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const noexcept
    {
        std::uint32_t r = 0, w = 1;
        for (unsigned i = 0; i < m_; ++i) {
            r += ((a % p_ + b % p_) % p_) * w;
            a /= p_;
            b /= p_;
            w *= p_;
        }
        return r;
    }

    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const
    {
        const auto pa = decode(a), pb = decode(b);
        const auto r = detail::fp_mulmod(pa, pb, modulus_, p_);
        return encode(r);
    }

    void build_tables()
    {
        neg_.resize(order_);
        for (std::uint32_t a = 0; a < order_; ++a) {
            auto c = decode(a);
            for (auto &ci : c) {
                ci = (p_ - ci) % p_;
            }
            neg_[a] = encode(c);
        }
        if (p_ != 2 && std::uint64_t{order_} * order_ <= (1u << 20)) {
            add_table_.resize(std::size_t{order_} * order_);
            for (std::uint32_t a = 0; a < order_; ++a) {
                for (std::uint32_t b = 0; b < order_; ++b) {
                    add_table_[std::size_t{a} * order_ + b] = add_slow(a, b);
                }
            }
        }
        const std::uint32_t n = order_ - 1;
        exp_.assign(2 * std::size_t{n} + 1, 0);
        log_.assign(order_, 0);
        if (order_ == 2) {
            exp_.assign(3, 1);
            log_[1] = 0;
        } else {
            for (std::uint32_t g = 2; g < order_; ++g) {
                std::uint32_t x = 1;
                std::uint32_t period = 0;
                do {
                    x = mul_slow(x, g);
                    ++period;
                } while (x != 1 && period <= n);
                if (period != n) {
                    continue;
                }
                x = 1;
                for (std::uint32_t k = 0; k < n; ++k) {
                    exp_[k] = x;
                    log_[x] = k;
                    x = mul_slow(x, g);
                }
                break;
            }
            for (std::size_t k = n; k < exp_.size(); ++k) {
                exp_[k] = exp_[k - n];
            }
        }
        // frob_log_[k][log a] = log(a^{p^k})
        frob_log_.assign(m_, std::vector<std::uint32_t>(n == 0 ? 1 : n, 0));
        std::uint64_t pk = 1;
        for (unsigned k = 0; k < m_; ++k) {
            for (std::uint32_t e = 0; e < n; ++e) {
                frob_log_[k][e] = static_cast<std::uint32_t>((std::uint64_t{e} * pk) % n);
            }
            pk = pk * p_ % n;
        }
    }

    std::uint32_t p_;
    unsigned m_;
    std::uint32_t order_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::vector<std::uint32_t>> frob_log_;
};

/// F_{p^m} with the canonical modulus. Equal arguments give the same object.
inline FieldRef ff_create(std::uint32_t p, unsigned m) { return GaloisField::get(p, m); }

/// Element handle: a field pointer plus an encoding. Fields are interned and
/// never destroyed, so the raw pointer is always valid.
class FfElem
{
public:
    FfElem() = default;
    FfElem(const GaloisField *f, std::uint32_t v) : f_(f), v_(v) {}

    const GaloisField *field() const noexcept { return f_; }
    std::uint32_t code() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }

    friend FfElem operator+(const FfElem &a, const FfElem &b)
    {
        check(a, b);
        return {a.f_, a.f_->add(a.v_, b.v_)};
    }
    friend FfElem operator-(const FfElem &a, const FfElem &b)
    {
        check(a, b);
        return {a.f_, a.f_->sub(a.v_, b.v_)};
    }
    friend FfElem operator*(const FfElem &a, const FfElem &b)
    {
        check(a, b);
        return {a.f_, a.f_->mul(a.v_, b.v_)};
    }
    friend FfElem operator/(const FfElem &a, const FfElem &b)
    {
        check(a, b);
        return {a.f_, a.f_->div(a.v_, b.v_)};
    }
    FfElem operator-() const { return {f_, f_->neg(v_)}; }
    FfElem &operator+=(const FfElem &b) { return *this = *this + b; }
    FfElem &operator-=(const FfElem &b) { return *this = *this - b; }
    FfElem &operator*=(const FfElem &b) { return *this = *this * b; }

    friend bool operator==(const FfElem &a, const FfElem &b) noexcept
    {
        return a.f_ == b.f_ && a.v_ == b.v_;
    }

    FfElem pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }
    FfElem inverse() const { return {f_, f_->inv(v_)}; }
    FfElem frobenius(long long n) const { return {f_, f_->frob(v_, n)}; }

    std::string to_string() const { return f_ ? f_->to_string(v_) : "?"; }

private:
    static void check(const FfElem &a, const FfElem &b)
    {
        if (a.f_ != b.f_) {
            throw mismatch_error("finite-field operands from different fields");
        }
    }

    const GaloisField *f_ = nullptr;
    std::uint32_t v_ = 0;
};

inline FfElem GaloisField::zero() const { return {this, 0}; }
inline FfElem GaloisField::one() const { return {this, 1}; }
inline FfElem GaloisField::element(std::uint32_t code) const
{
    if (code >= order_) {
        throw std::out_of_range("element encoding outside " + name());
    }
    return {this, code};
}
inline FfElem GaloisField::generator() const { return {this, m_ == 1 ? 0u : p_}; }

// Ring-element protocol used by the generic containers.
inline FfElem zero_like(const FfElem &a) { return a.field()->zero(); }
inline FfElem one_like(const FfElem &a) { return a.field()->one(); }
inline bool is_zero(const FfElem &a) { return a.is_zero(); }
inline FfElem inverse(const FfElem &a) { return a.inverse(); }
inline std::string to_string(const FfElem &a) { return a.to_string(); }

/// a^{p^n}; ff_frobenius(ff_frobenius(a, n), -n) == a.
inline FfElem ff_frobenius(const FfElem &a, long long n) { return a.frobenius(n); }

/// Image of the subfield generator g_sub under the canonical embedding: the
/// root of sub's modulus in super with the least encoding.
inline FfElem ff_embedding_root(const GaloisField &sub, const GaloisField &super)
{
    if (sub.p() != super.p() || super.m() % sub.m() != 0) {
        throw std::invalid_argument("cannot embed " + sub.name() + " into " + super.name());
    }
    const auto &mod = sub.modulus();
    for (std::uint32_t r = 0; r < super.order(); ++r) {
        std::uint32_t acc = 0;
        for (std::size_t i = mod.size(); i-- > 0;) {
            acc = super.add(super.mul(acc, r), super.from_int(mod[i]));
        }
        if (acc == 0) {
            return super.element(r);
        }
    }
    throw std::logic_error("modulus has no root in the extension");
}

/// Canonical ring embedding F_{p^a} -> F_{p^b}, a | b.
inline FfElem ff_embed(const FfElem &a, const GaloisField &sub, const GaloisField &super)
{
    if (a.field() != &sub) {
        throw mismatch_error("element does not belong to the source field");
    }
    const FfElem root = ff_embedding_root(sub, super);
    const auto c = sub.decode(a.code());
    FfElem acc = super.zero();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * root + super.element(super.from_int(c[i]));
    }
    return acc;
}

} // namespace cmzv

#endif
