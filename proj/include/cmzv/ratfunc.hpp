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

#ifndef CMZV_RATFUNC_HPP
#define CMZV_RATFUNC_HPP

#include <cmzv/ffield.hpp>
#include <cmzv/polynomial.hpp>

#include <stdexcept>
#include <string>

namespace cmzv
{

/// Element of F(t) for a finite field F, kept in lowest terms with a monic
/// denominator so that equal functions compare equal.
class RatFunc
{
public:
    using Poly = Polynomial<FfElem>;

    RatFunc() = default;
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(one_like(num_.zero_coefficient()))) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc zero(const GaloisField &f) { return RatFunc(Poly(f.zero())); }
    static RatFunc one(const GaloisField &f) { return RatFunc(Poly::constant(f.one())); }
    static RatFunc t(const GaloisField &f) { return RatFunc(Poly::x(f.zero())); }

    const Poly &numerator() const noexcept { return num_; }
    const Poly &denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.zero(); }
    const GaloisField &field() const { return *num_.zero_coefficient().field(); }

    friend RatFunc operator+(const RatFunc &a, const RatFunc &b)
    {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b)
    {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
    RatFunc operator-() const { return {Poly(num_.zero_coefficient()) - num_, den_}; }
    friend bool operator==(const RatFunc &a, const RatFunc &b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFunc inverse() const
    {
        if (is_zero()) {
            throw std::domain_error("inverse of the zero rational function");
        }
        return {den_, num_};
    }
    RatFunc pow(std::uint64_t e) const
    {
        return {num_.pow(e), den_.pow(e)};
    }

    std::string to_string() const
    {
        const std::string n = cmzv::to_string(num_, "t");
        if (den_.degree() == 0) {
            return n;
        }
        return "(" + n + ")/(" + cmzv::to_string(den_, "t") + ")";
    }

private:
    void normalize()
    {
        if (den_.zero()) {
            throw std::domain_error("rational function with zero denominator");
        }
        if (num_.zero()) {
            den_ = Poly::constant(one_like(num_.zero_coefficient()));
            return;
        }
        const Poly g = gcd(num_, den_);
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
        const FfElem lc = den_.leading().inverse();
        num_ = lc * num_;
        den_ = lc * den_;
    }

    Poly num_;
    Poly den_;
};

inline RatFunc zero_like(const RatFunc &a) { return RatFunc::zero(a.field()); }
inline RatFunc one_like(const RatFunc &a) { return RatFunc::one(a.field()); }
inline bool is_zero(const RatFunc &a) { return a.is_zero(); }
inline RatFunc inverse(const RatFunc &a) { return a.inverse(); }
inline std::string to_string(const RatFunc &a) { return a.to_string(); }

} // namespace cmzv

#endif
