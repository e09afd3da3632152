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

// Independent brute-force reference implementations used only by the tests.
// They share no code paths with the library beyond the element encodings.

#ifndef CMZV_TESTS_ORACLES_HPP
#define CMZV_TESTS_ORACLES_HPP

#include <cmzv/ffield.hpp>
#include <cmzv/laurent.hpp>
#include <cmzv/polynomial.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle
{

using Coeffs = std::vector<std::uint32_t>; // over F_p, low degree first

inline void trim(Coeffs &a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

// Schoolbook remainder over F_p by a monic divisor.
inline Coeffs rem_monic(Coeffs a, const Coeffs &m, std::uint32_t p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint32_t c = a.back();
        const std::size_t s = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[s + i] = (a[s + i] + (p - c) * m[i]) % p;
        }
        trim(a);
    }
    return a;
}

// All monic polynomials over F_p of the given degree.
inline std::vector<Coeffs> monics_fp(std::uint32_t p, unsigned deg)
{
    std::vector<Coeffs> out;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < deg; ++i) {
        count *= p;
    }
    for (std::uint64_t code = 0; code < count; ++code) {
        Coeffs f(deg + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < deg; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        f[deg] = 1;
        out.push_back(f);
    }
    return out;
}

// Irreducible iff no monic factor of degree 1..deg/2 divides it.
inline bool irreducible_by_trial_division(const Coeffs &f, std::uint32_t p)
{
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= n / 2; ++d) {
        for (const auto &g : monics_fp(p, d)) {
            if (rem_monic(f, g, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

// Product of two encoded elements by polynomial multiplication mod the modulus.
inline std::uint32_t naive_mul(const cmzv::GaloisField &f, std::uint32_t a, std::uint32_t b)
{
    const auto pa = f.decode(a), pb = f.decode(b);
    const std::uint32_t p = f.p();
    Coeffs prod(pa.size() + pb.size(), 0);
    for (std::size_t i = 0; i < pa.size(); ++i) {
        for (std::size_t j = 0; j < pb.size(); ++j) {
            prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
        }
    }
    auto r = rem_monic(prod, f.modulus(), p);
    r.resize(f.m(), 0);
    return f.encode(r);
}

// All monic polynomials in theta of degree d over the given field.
inline std::vector<cmzv::ThetaPoly> monics(const cmzv::GaloisField &f, unsigned d)
{
    std::vector<cmzv::ThetaPoly> out;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) {
        count *= f.order();
    }
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<cmzv::FfElem> c(d + 1, f.zero());
        std::uint64_t x = code;
        for (unsigned i = 0; i < d; ++i) {
            c[i] = f.element(static_cast<std::uint32_t>(x % f.order()));
            x /= f.order();
        }
        c[d] = f.one();
        out.emplace_back(f.zero(), c);
    }
    return out;
}

// D_i as the plain product of every monic polynomial of degree i.
inline cmzv::ThetaPoly carlitz_d_product(const cmzv::GaloisField &f, unsigned i)
{
    cmzv::ThetaPoly prod = cmzv::ThetaPoly::constant(f.one());
    for (const auto &a : monics(f, i)) {
        prod = prod * a;
    }
    return prod;
}

// Sum over all strictly decreasing degree tuples deg a_1 > ... > deg a_r with
// deg a_1 <= max_deg of prod a_i^{-s_i}, by full enumeration of the tuples.
inline cmzv::LaurentSeries mzv_enumerated(const cmzv::GaloisField &f, std::uint64_t q,
                                          const std::vector<int> &s, unsigned max_deg, std::int64_t prec)
{
    using cmzv::LaurentSeries;
    // Cache a^{-s} for every monic a of degree <= max_deg, computed by direct
    // long division of 1 by a and repeated multiplication.
    std::vector<std::vector<LaurentSeries>> inv(max_deg + 1);
    for (unsigned d = 0; d <= max_deg; ++d) {
        for (const auto &a : monics(f, d)) {
            inv[d].push_back(cmzv::ls_embed_theta_rational(cmzv::ThetaPoly::constant(f.one()), a, q, prec + 64));
        }
    }
    LaurentSeries total = LaurentSeries::zero(f, q, prec);
    std::function<void(std::size_t, int, LaurentSeries)> rec = [&](std::size_t pos, int below,
                                                                  LaurentSeries acc) {
        if (pos == s.size()) {
            total = total + acc;
            return;
        }
        for (int d = 0; d < below; ++d) {
            for (const auto &ai : inv[static_cast<std::size_t>(d)]) {
                LaurentSeries term = acc;
                for (int k = 0; k < s[pos]; ++k) {
                    term = term * ai;
                }
                rec(pos + 1, d, term);
            }
        }
    };
    rec(0, static_cast<int>(max_deg) + 1, LaurentSeries::one(f, q));
    return total.truncated(prec);
}

} // namespace oracle

#endif
