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

#ifndef CMZV_LAURENT_HPP
#define CMZV_LAURENT_HPP

/// @file laurent.hpp
/// Truncated Laurent series over F_{p^m} in the uniformizer z.
///
/// The series live at a level with constant field size q = p^l and model the
/// completion of F_q(theta) at infinity, extended by a fixed (q-1)-th root of
/// -theta. The uniformizer is fixed as z = (-theta)^{-1/(q-1)}, so that
///
///     theta = -z^{-(q-1)},   1/theta = -z^{q-1},   (-theta)^{1/(q-1)} = 1/z.
///
/// Every polynomial in theta is therefore an exact Laurent polynomial in z, and
/// |theta| = q corresponds to v_z(theta) = -(q-1).
///
/// A LaurentSeries is known modulo O(z^prec). Precision propagates by the
/// usual pessimistic rules: sums keep the smaller precision, products keep
/// min(v_a + prec_b, v_b + prec_a), and so on. The value kExact marks a
/// series with finitely many terms and no error term. "Zero to precision N"
/// (no known nonzero coefficient below N) is a different state from exact zero;
/// inverting the former raises precision_error, the latter std::domain_error.

#include <cmzv/error.hpp>
#include <cmzv/ffield.hpp>
#include <cmzv/polynomial.hpp>

#include <boost/rational.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmzv
{

/// Precision of a series with no error term.
inline constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

namespace detail
{

inline std::int64_t prec_add(std::int64_t a, std::int64_t b)
{
    if (a >= kExact || b >= kExact) {
        return kExact;
    }
    return std::min(a + b, kExact);
}

inline std::int64_t prec_scale(std::int64_t a, std::uint64_t k)
{
    if (a >= kExact) {
        return kExact;
    }
    const auto kk = static_cast<std::int64_t>(k);
    if (a > 0 && a > kExact / kk) {
        return kExact;
    }
    return a * kk;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --d;
    }
    return d;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

inline std::uint64_t ipow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= b;
    }
    return r;
}

} // namespace detail

using Rational = boost::rational<std::int64_t>;

/// A rational number or -infinity (the norm exponent of zero).
struct ExtRational {
    bool neg_inf = true;
    Rational value{0};

    static ExtRational minus_infinity() { return {}; }
    static ExtRational of(Rational r) { return {false, r}; }

    friend bool operator==(const ExtRational &a, const ExtRational &b)
    {
        return a.neg_inf == b.neg_inf && (a.neg_inf || a.value == b.value);
    }
    friend bool operator<(const ExtRational &a, const ExtRational &b)
    {
        if (a.neg_inf || b.neg_inf) {
            return a.neg_inf && !b.neg_inf;
        }
        return a.value < b.value;
    }
    friend ExtRational max(const ExtRational &a, const ExtRational &b) { return a < b ? b : a; }

    std::string to_string() const
    {
        if (neg_inf) {
            return "-inf";
        }
        if (value.denominator() == 1) {
            return std::to_string(value.numerator());
        }
        return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
    }
};

/// Outcome of comparing two series on their joint known range.
struct Comparison {
    enum class Kind { equal, unequal, incomparable };
    Kind kind = Kind::equal;
    /// First differing exponent when unequal, joint precision otherwise.
    std::int64_t exponent = 0;

    bool equal() const noexcept { return kind == Kind::equal; }
    std::string to_string() const
    {
        switch (kind) {
        case Kind::equal:
            return exponent >= kExact ? "equal (exact)" : "equal to precision " + std::to_string(exponent);
        case Kind::unequal:
            return "unequal at exponent " + std::to_string(exponent);
        case Kind::incomparable:
            return "incomparable precision (joint precision " + std::to_string(exponent) + ")";
        }
        return "";
    }
};

class LaurentSeries
{
public:
    LaurentSeries() = default;

    /// Zero known to precision prec (exact zero by default).
    static LaurentSeries zero(const GaloisField &f, std::uint64_t q, std::int64_t prec = kExact)
    {
        LaurentSeries r(&f, q);
        r.prec_ = prec;
        r.val_ = prec;
        return r;
    }
    static LaurentSeries one(const GaloisField &f, std::uint64_t q) { return monomial(f.one(), q, 0); }
    static LaurentSeries monomial(const FfElem &c, std::uint64_t q, std::int64_t k, std::int64_t prec = kExact)
    {
        LaurentSeries r(c.field(), q);
        r.prec_ = prec;
        r.val_ = prec;
        if (!c.is_zero() && k < prec) {
            r.val_ = k;
            r.c_.push_back(c.code());
        }
        return r;
    }
    /// Series with coefficients coeffs[i] at exponent val + i, known mod z^prec.
    static LaurentSeries from_codes(const GaloisField &f, std::uint64_t q, std::int64_t val,
                                    std::vector<std::uint32_t> coeffs, std::int64_t prec)
    {
        LaurentSeries r(&f, q);
        r.assign(val, std::move(coeffs), prec);
        return r;
    }

    /// theta = -z^{-(q-1)}.
    static LaurentSeries theta(const GaloisField &f, std::uint64_t q)
    {
        return monomial(-f.one(), q, -static_cast<std::int64_t>(q - 1));
    }

    /// Exact image of a polynomial in theta: theta^k = (-1)^k z^{-(q-1)k}.
    static LaurentSeries from_theta_poly(const ThetaPoly &f, std::uint64_t q)
    {
        const GaloisField &fld = *f.zero_coefficient().field();
        if (f.zero()) {
            return zero(fld, q);
        }
        const auto e = static_cast<std::int64_t>(q - 1);
        const auto deg = f.degree();
        std::vector<std::uint32_t> v(static_cast<std::size_t>(deg * e) + 1, 0);
        for (long k = 0; k <= deg; ++k) {
            FfElem c = f[static_cast<std::size_t>(k)];
            if (k % 2 == 1) {
                c = -c;
            }
            v[static_cast<std::size_t>((deg - k) * e)] = c.code();
        }
        return from_codes(fld, q, -deg * e, std::move(v), kExact);
    }

    const GaloisField &field() const noexcept { return *f_; }
    const GaloisField *field_ptr() const noexcept { return f_; }
    std::uint64_t q() const noexcept { return q_; }
    std::int64_t prec() const noexcept { return prec_; }
    bool exact() const noexcept { return prec_ >= kExact; }
    /// Zero to its known precision (or exactly zero).
    bool is_zero() const noexcept { return c_.empty(); }
    /// v_z of a nonzero series; the precision for a zero-to-precision one.
    std::int64_t val() const noexcept { return val_; }
    /// Exponent one past the last stored nonzero coefficient.
    std::int64_t support_end() const noexcept { return val_ + static_cast<std::int64_t>(c_.size()); }
    const std::vector<std::uint32_t> &codes() const noexcept { return c_; }

    /// Coefficient of z^k; throws precision_error above the known range.
    FfElem coeff(std::int64_t k) const
    {
        if (k >= prec_) {
            throw precision_error("coefficient of z^" + std::to_string(k) + " is below O(z^" +
                                  std::to_string(prec_) + ")");
        }
        if (k < val_ || k >= support_end()) {
            return f_->zero();
        }
        return {f_, c_[static_cast<std::size_t>(k - val_)]};
    }
    FfElem leading_coeff() const
    {
        if (c_.empty()) {
            throw precision_error("leading coefficient of a series that is zero to precision");
        }
        return {f_, c_.front()};
    }

    /// Same series known only modulo O(z^p) (no-op if already coarser).
    LaurentSeries truncated(std::int64_t p) const
    {
        if (p >= prec_) {
            return *this;
        }
        LaurentSeries r(*this);
        r.assign(val_, c_, p);
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b) { return combine(a, b, false); }
    friend LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b) { return combine(a, b, true); }
    LaurentSeries operator-() const
    {
        LaurentSeries r(*this);
        for (auto &c : r.c_) {
            c = f_->neg(c);
        }
        return r;
    }
    LaurentSeries &operator+=(const LaurentSeries &b) { return *this = *this + b; }
    LaurentSeries &operator-=(const LaurentSeries &b) { return *this = *this - b; }
    LaurentSeries &operator*=(const LaurentSeries &b) { return *this = *this * b; }

    friend LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b)
    {
        check(a, b);
        const std::int64_t p = std::min(detail::prec_add(a.val_, b.prec_), detail::prec_add(b.val_, a.prec_));
        if (a.c_.empty() || b.c_.empty()) {
            return zero(*a.f_, a.q_, p);
        }
        const std::int64_t v = a.val_ + b.val_;
        const auto full = static_cast<std::int64_t>(a.c_.size() + b.c_.size() - 1);
        const auto n = static_cast<std::size_t>(std::max<std::int64_t>(0, std::min(full, p - v)));
        std::vector<std::uint32_t> out(n, 0);
        const GaloisField &f = *a.f_;
        for (std::size_t i = 0; i < a.c_.size() && i < n; ++i) {
            const std::uint32_t ai = a.c_[i];
            if (ai == 0) {
                continue;
            }
            const std::size_t jmax = std::min(b.c_.size(), n - i);
            for (std::size_t j = 0; j < jmax; ++j) {
                if (b.c_[j] != 0) {
                    out[i + j] = f.add(out[i + j], f.mul(ai, b.c_[j]));
                }
            }
        }
        return from_codes(f, a.q_, v, std::move(out), p);
    }
    friend LaurentSeries operator*(const FfElem &s, const LaurentSeries &a)
    {
        if (s.field() != a.f_) {
            throw mismatch_error("scalar from a different field");
        }
        if (s.is_zero()) {
            return zero(*a.f_, a.q_);
        }
        LaurentSeries r(a);
        for (auto &c : r.c_) {
            c = a.f_->mul(s.code(), c);
        }
        return r;
    }

    /// Multiplication by z^k.
    LaurentSeries shifted(std::int64_t k) const
    {
        LaurentSeries r(*this);
        if (!exact()) {
            r.prec_ += k;
        }
        r.val_ = c_.empty() ? r.prec_ : val_ + k;
        return r;
    }

    /// Multiplicative inverse. For an exact non-monomial operand the result is
    /// an infinite series and is cut at absolute precision cap.
    LaurentSeries inverse(std::int64_t cap = kExact) const
    {
        if (c_.empty()) {
            if (exact()) {
                throw std::domain_error("inverse of exact zero");
            }
            throw precision_error("inverse of a series that is zero to precision O(z^" + std::to_string(prec_) + ")");
        }
        const std::int64_t v = val_;
        const GaloisField &f = *f_;
        if (exact() && c_.size() == 1) {
            return monomial({f_, f.inv(c_[0])}, q_, -v);
        }
        const std::int64_t p = std::min(exact() ? kExact : prec_ - 2 * v, cap);
        if (p >= kExact) {
            throw precision_error("inverse of a non-monomial exact series needs a precision cap");
        }
        const std::int64_t n = p + v; // number of coefficients from z^{-v}
        if (n <= 0) {
            return zero(f, q_, p);
        }
        const std::uint32_t u0inv = f.inv(c_[0]);
        const std::uint32_t neg_u0inv = f.neg(u0inv);
        std::vector<std::uint32_t> w(static_cast<std::size_t>(n), 0);
        w[0] = u0inv;
        for (std::size_t k = 1; k < w.size(); ++k) {
            std::uint32_t acc = 0;
            const std::size_t imax = std::min(k, c_.size() - 1);
            for (std::size_t i = 1; i <= imax; ++i) {
                if (c_[i] != 0 && w[k - i] != 0) {
                    acc = f.add(acc, f.mul(c_[i], w[k - i]));
                }
            }
            w[k] = f.mul(neg_u0inv, acc);
        }
        return from_codes(f, q_, -v, std::move(w), p);
    }

    /// f^e for e >= 0, computed as a product of twists along the base-p
    /// digits of e (f^{p^k} is the k-fold twist, which keeps full precision).
    LaurentSeries pow(std::uint64_t e) const
    {
        LaurentSeries r = one(*f_, q_);
        const std::uint64_t p = f_->p();
        unsigned k = 0;
        for (; e; e /= p, ++k) {
            const std::uint64_t digit = e % p;
            if (digit == 0) {
                continue;
            }
            const LaurentSeries tk = twist(k);
            for (std::uint64_t i = 0; i < digit; ++i) {
                r = r * tk;
            }
        }
        return r;
    }
    /// f^e for any integer e; negative exponents invert with the given cap.
    LaurentSeries pow(std::int64_t e, std::int64_t cap) const
    {
        if (e >= 0) {
            return pow(static_cast<std::uint64_t>(e));
        }
        return pow(static_cast<std::uint64_t>(-e)).inverse(cap);
    }

    /// n-fold twist: z^i -> z^{i p^n}, a -> a^{p^n}.
    LaurentSeries twist(unsigned n) const
    {
        if (n == 0) {
            return *this;
        }
        const std::uint64_t pn = detail::ipow(f_->p(), n);
        LaurentSeries r(f_, q_);
        r.prec_ = detail::prec_scale(prec_, pn);
        if (c_.empty()) {
            r.val_ = r.prec_;
            return r;
        }
        r.val_ = val_ * static_cast<std::int64_t>(pn);
        r.c_.assign((c_.size() - 1) * pn + 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r.c_[i * pn] = f_->frob(c_[i], n);
        }
        return r;
    }

    /// Inverse of twist(n). Every exponent in the support must be divisible
    /// by p^n; the result is known to precision ceil(prec / p^n).
    LaurentSeries inverse_twist(unsigned n) const
    {
        const std::uint64_t pn = detail::ipow(f_->p(), n);
        const auto ipn = static_cast<std::int64_t>(pn);
        LaurentSeries r(f_, q_);
        r.prec_ = exact() ? kExact : detail::ceil_div(prec_, ipn);
        if (c_.empty()) {
            r.val_ = r.prec_;
            return r;
        }
        std::vector<std::uint32_t> v;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) {
                continue;
            }
            const std::int64_t e = val_ + static_cast<std::int64_t>(i);
            if (e % ipn != 0) {
                throw std::domain_error("inverse twist: exponent " + std::to_string(e) + " is not divisible by " +
                                        std::to_string(pn));
            }
        }
        const std::int64_t v0 = val_ / ipn;
        v.assign((c_.size() - 1) / pn + 1, 0);
        for (std::size_t i = 0; i < c_.size(); i += pn) {
            v[i / pn] = f_->frob(c_[i], -static_cast<long long>(n));
        }
        r.assign(v0, std::move(v), r.prec_);
        return r;
    }

    /// Exponent of |f| in units of |theta|: -v_z(f)/(q-1); -inf for zero.
    ExtRational norm() const
    {
        if (c_.empty()) {
            return ExtRational::minus_infinity();
        }
        return ExtRational::of(Rational(-val_, static_cast<std::int64_t>(q_ - 1)));
    }

    /// Compares on the joint known range. If the operands agree there but the
    /// joint precision is below `required`, the result is incomparable.
    friend Comparison eq_to_prec(const LaurentSeries &a, const LaurentSeries &b,
                                 std::int64_t required = std::numeric_limits<std::int64_t>::min())
    {
        const LaurentSeries d = a - b;
        if (!d.is_zero()) {
            return {Comparison::Kind::unequal, d.val_};
        }
        if (d.prec_ < required) {
            return {Comparison::Kind::incomparable, d.prec_};
        }
        return {Comparison::Kind::equal, d.prec_};
    }

    /// Identical representation (same terms, same precision).
    friend bool operator==(const LaurentSeries &a, const LaurentSeries &b)
    {
        return a.f_ == b.f_ && a.q_ == b.q_ && a.prec_ == b.prec_ && a.val_ == b.val_ && a.c_ == b.c_;
    }

    /// Canonical text: "c*z^k + ... + O(z^N)".
    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) {
                continue;
            }
            if (!out.empty()) {
                out += " + ";
            }
            out += f_->to_string(c_[i]) + "*z^" + std::to_string(val_ + static_cast<std::int64_t>(i));
        }
        if (!exact()) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "O(z^" + std::to_string(prec_) + ")";
        }
        return out.empty() ? "0" : out;
    }

    /// Inverse of to_string for a known field and level.
    static LaurentSeries parse(const std::string &text, const GaloisField &f, std::uint64_t q)
    {
        std::int64_t prec = kExact;
        std::vector<std::pair<std::int64_t, std::uint32_t>> terms;
        std::string s = strip(text);
        if (s == "0") {
            return zero(f, q);
        }
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t next = s.find(" + ", pos);
            // A "+" inside a parenthesised coefficient is not a separator.
            while (next != std::string::npos && depth_at(s, next) != 0) {
                next = s.find(" + ", next + 3);
            }
            const std::string term = strip(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
            if (term.rfind("O(z^", 0) == 0) {
                if (term.back() != ')') {
                    throw std::invalid_argument("malformed precision term: " + term);
                }
                prec = std::stoll(term.substr(4, term.size() - 5));
            } else {
                const std::size_t star = term.rfind("*z^");
                if (star == std::string::npos) {
                    throw std::invalid_argument("malformed series term: " + term);
                }
                const std::int64_t k = std::stoll(term.substr(star + 3));
                terms.emplace_back(k, parse_coeff(term.substr(0, star), f));
            }
            if (next == std::string::npos) {
                break;
            }
            pos = next + 3;
        }
        if (terms.empty()) {
            return zero(f, q, prec);
        }
        std::sort(terms.begin(), terms.end());
        const std::int64_t lo = terms.front().first;
        std::vector<std::uint32_t> v(static_cast<std::size_t>(terms.back().first - lo + 1), 0);
        for (const auto &[k, c] : terms) {
            v[static_cast<std::size_t>(k - lo)] = f.add(v[static_cast<std::size_t>(k - lo)], c);
        }
        return from_codes(f, q, lo, std::move(v), prec);
    }

    /// Parses a coefficient printed by GaloisField::to_string.
    static std::uint32_t parse_coeff(std::string s, const GaloisField &f)
    {
        s = strip(s);
        if (!s.empty() && s.front() == '(' && s.back() == ')') {
            s = s.substr(1, s.size() - 2);
        }
        std::vector<std::uint32_t> digits(f.m(), 0);
        std::stringstream ss(s);
        std::string mono;
        while (std::getline(ss, mono, '+')) {
            mono = strip(mono);
            std::uint32_t c = 1;
            unsigned e = 0;
            const std::size_t g = mono.find('g');
            if (g == std::string::npos) {
                c = static_cast<std::uint32_t>(std::stoul(mono));
            } else {
                if (g > 0) {
                    c = static_cast<std::uint32_t>(std::stoul(mono.substr(0, g - 1)));
                }
                e = 1;
                if (g + 1 < mono.size()) {
                    e = static_cast<unsigned>(std::stoul(mono.substr(g + 2)));
                }
            }
            if (e >= f.m()) {
                throw std::invalid_argument("coefficient exponent out of range: " + mono);
            }
            digits[e] = (digits[e] + c) % f.p();
        }
        return f.encode(digits);
    }

private:
    LaurentSeries(const GaloisField *f, std::uint64_t q) : f_(f), q_(q) {}

    static std::string strip(const std::string &s)
    {
        std::size_t a = 0, b = s.size();
        while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
            ++a;
        }
        while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
            --b;
        }
        return s.substr(a, b - a);
    }
    static int depth_at(const std::string &s, std::size_t pos)
    {
        int d = 0;
        for (std::size_t i = 0; i < pos; ++i) {
            d += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
        }
        return d;
    }

    static void check(const LaurentSeries &a, const LaurentSeries &b)
    {
        if (a.f_ != b.f_ || a.q_ != b.q_) {
            throw mismatch_error("Laurent series over different fields or levels");
        }
    }

    // Stores coefficients for exponents val.. and normalizes: drops terms at
    // or above prec and trims zeros at both ends.
    void assign(std::int64_t val, std::vector<std::uint32_t> coeffs, std::int64_t prec)
    {
        prec_ = prec;
        if (val < prec && static_cast<std::int64_t>(coeffs.size()) > prec - val) {
            coeffs.resize(static_cast<std::size_t>(prec - val));
        } else if (val >= prec) {
            coeffs.clear();
        }
        while (!coeffs.empty() && coeffs.back() == 0) {
            coeffs.pop_back();
        }
        std::size_t lead = 0;
        while (lead < coeffs.size() && coeffs[lead] == 0) {
            ++lead;
        }
        if (lead == coeffs.size()) {
            c_.clear();
            val_ = prec;
            return;
        }
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
        c_ = std::move(coeffs);
        val_ = val + static_cast<std::int64_t>(lead);
    }

    static LaurentSeries combine(const LaurentSeries &a, const LaurentSeries &b, bool subtract)
    {
        check(a, b);
        const std::int64_t p = std::min(a.prec_, b.prec_);
        LaurentSeries r(a.f_, a.q_);
        if (a.c_.empty() && b.c_.empty()) {
            r.prec_ = p;
            r.val_ = p;
            return r;
        }
        std::int64_t lo = std::numeric_limits<std::int64_t>::max();
        std::int64_t hi = std::numeric_limits<std::int64_t>::min();
        for (const LaurentSeries *s : {&a, &b}) {
            if (!s->c_.empty()) {
                lo = std::min(lo, s->val_);
                hi = std::max(hi, s->support_end());
            }
        }
        hi = std::min(hi, p);
        if (lo >= hi) {
            r.prec_ = p;
            r.val_ = p;
            return r;
        }
        const GaloisField &f = *a.f_;
        std::vector<std::uint32_t> v(static_cast<std::size_t>(hi - lo), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            const std::int64_t e = a.val_ + static_cast<std::int64_t>(i);
            if (e < hi) {
                v[static_cast<std::size_t>(e - lo)] = a.c_[i];
            }
        }
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            const std::int64_t e = b.val_ + static_cast<std::int64_t>(i);
            if (e < hi) {
                auto &slot = v[static_cast<std::size_t>(e - lo)];
                slot = subtract ? f.sub(slot, b.c_[i]) : f.add(slot, b.c_[i]);
            }
        }
        r.assign(lo, std::move(v), p);
        return r;
    }

    const GaloisField *f_ = nullptr;
    std::uint64_t q_ = 2;
    std::int64_t val_ = kExact;
    std::vector<std::uint32_t> c_;
    std::int64_t prec_ = kExact;
};

inline LaurentSeries zero_like(const LaurentSeries &a) { return LaurentSeries::zero(a.field(), a.q()); }
inline LaurentSeries one_like(const LaurentSeries &a) { return LaurentSeries::one(a.field(), a.q()); }
inline bool is_zero(const LaurentSeries &a) { return a.is_zero(); }
inline std::string to_string(const LaurentSeries &a) { return a.to_string(); }
inline std::ostream &operator<<(std::ostream &os, const LaurentSeries &a) { return os << a.to_string(); }

/// v_z lower bound: the valuation if nonzero, else the known precision.
inline std::int64_t valuation_bound(const LaurentSeries &a) { return a.val(); }

/// Image of num/den in F_{p^m}((z)), known to absolute precision prec. The
/// result is exact when den is a constant.
inline LaurentSeries ls_embed_theta_rational(const ThetaPoly &num, const ThetaPoly &den, std::uint64_t q,
                                             std::int64_t prec)
{
    if (den.zero()) {
        throw std::domain_error("zero denominator");
    }
    const LaurentSeries n = LaurentSeries::from_theta_poly(num, q);
    const LaurentSeries d = LaurentSeries::from_theta_poly(den, q);
    if (d.codes().size() == 1) {
        const LaurentSeries r = n * d.inverse();
        return r.support_end() <= prec ? r : r.truncated(prec);
    }
    // n * d^{-1} loses v(n) digits of the inverse's precision; ask for more.
    const std::int64_t cap = n.is_zero() ? prec : prec - n.val();
    return (n * d.inverse(cap)).truncated(prec);
}

inline LaurentSeries ls_twist(const LaurentSeries &f, unsigned n) { return f.twist(n); }
inline LaurentSeries ls_inverse_twist(const LaurentSeries &f, unsigned n) { return f.inverse_twist(n); }
inline ExtRational ls_norm(const LaurentSeries &f) { return f.norm(); }

} // namespace cmzv

#endif
