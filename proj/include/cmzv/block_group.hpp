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

#ifndef CMZV_BLOCK_GROUP_HPP
#define CMZV_BLOCK_GROUP_HPP

/// @file block_group.hpp
/// Block matrices (a) + X_{s_1} + ... + X_{s_j} over a field, for a
/// sub-closed index set I = {s_1, ..., s_j} listed by ascending depth. For
/// s = (s_1..s_d), X_s is the lower-triangular (d+1)x(d+1) matrix with
///
///     X_s(r, c) = a^{s_c + ... + s_d} x_{(s_c, ..., s_{r-1})}   r > c
///     X_s(c, c) = a^{s_c + ... + s_d},   X_s(d+1, d+1) = 1      (1-based)
///
/// so every proper window of s needs its own parameter. The checks here are
/// exact identities over a finite field (or F_p(t)), verified on random
/// samples.

#include <cmzv/error.hpp>
#include <cmzv/ffield.hpp>
#include <cmzv/index.hpp>
#include <cmzv/matrix.hpp>
#include <cmzv/ratfunc.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmzv
{

template <class S>
struct BlockShape {
    IndexSet I;             // sub-closed, depth-ascending
    S a;                    // nonzero
    std::map<Index, S> x;   // one parameter per member of I

    friend bool operator==(const BlockShape &p, const BlockShape &q)
    {
        return p.I == q.I && p.a == q.a && p.x == q.x;
    }
};

/// N_j = 1 + sum (dep(s_i) + 1).
inline std::size_t block_size(const IndexSet &I)
{
    std::size_t n = 1;
    for (const auto &s : I) {
        n += s.size() + 1;
    }
    return n;
}

inline void require_block_index_set(const IndexSet &I)
{
    if (!is_subclosed(I)) {
        const auto c = index_subclosure(I);
        for (const auto &w : c) {
            if (std::find(I.begin(), I.end(), w) == I.end()) {
                throw std::invalid_argument("index set is not sub-closed: missing parameter for window (" +
                                            to_string(w) + ")");
            }
        }
    }
    for (std::size_t i = 1; i < I.size(); ++i) {
        if (I[i - 1].size() > I[i].size()) {
            throw std::invalid_argument("index set must be listed by ascending depth");
        }
    }
}

template <class S>
Matrix<S> block_build(const BlockShape<S> &shape)
{
    require_block_index_set(shape.I);
    if (is_zero(shape.a)) {
        throw std::invalid_argument("block parameter a must be invertible");
    }
    for (const auto &s : shape.I) {
        if (!shape.x.count(s)) {
            throw std::invalid_argument("missing parameter x_(" + to_string(s) + ")");
        }
    }
    const S zero = zero_like(shape.a);
    Matrix<S> m(block_size(shape.I), block_size(shape.I), zero);
    m(0, 0) = shape.a;
    std::size_t off = 1;
    for (const auto &s : shape.I) {
        const std::size_t d = s.size();
        for (std::size_t c = 0; c <= d; ++c) {
            const S diag = shape.a.pow(static_cast<std::uint64_t>(tail_weight(s, c)));
            m(off + c, off + c) = diag;
            for (std::size_t r = c + 1; r <= d; ++r) {
                m(off + r, off + c) = diag * shape.x.at(window(s, c, r));
            }
        }
        off += d + 1;
    }
    return m;
}

/// Inverse of block_build: recovers (a, {x_s}) or explains why m has the
/// wrong shape (nonzero entry outside the blocks, wrong diagonal power, or two
/// blocks disagreeing on a shared window parameter).
template <class S>
std::optional<BlockShape<S>> block_parse(const Matrix<S> &m, const IndexSet &I, std::string *why = nullptr)
{
    auto fail = [&](const std::string &msg) -> std::optional<BlockShape<S>> {
        if (why) {
            *why = msg;
        }
        return std::nullopt;
    };
    const std::size_t n = block_size(I);
    if (m.rows() != n || m.cols() != n) {
        return fail("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }
    BlockShape<S> shape{I, m(0, 0), {}};
    if (is_zero(shape.a)) {
        return fail("a = 0");
    }
    // Block mask: entries that may be nonzero.
    std::vector<std::vector<bool>> inside(n, std::vector<bool>(n, false));
    inside[0][0] = true;
    std::size_t off = 1;
    for (const auto &s : I) {
        const std::size_t d = s.size();
        for (std::size_t c = 0; c <= d; ++c) {
            const S diag = shape.a.pow(static_cast<std::uint64_t>(tail_weight(s, c)));
            if (!(m(off + c, off + c) == diag)) {
                return fail("diagonal entry (" + std::to_string(off + c + 1) + "," + std::to_string(off + c + 1) +
                            ") is not a^" + std::to_string(tail_weight(s, c)));
            }
            inside[off + c][off + c] = true;
            const S diag_inv = inverse(diag);
            for (std::size_t r = c + 1; r <= d; ++r) {
                inside[off + r][off + c] = true;
                const Index w = window(s, c, r);
                const S val = m(off + r, off + c) * diag_inv;
                const auto it = shape.x.find(w);
                if (it == shape.x.end()) {
                    shape.x.emplace(w, val);
                } else if (!(it->second == val)) {
                    return fail("blocks disagree on x_(" + to_string(w) + ") at entry (" +
                                std::to_string(off + r + 1) + "," + std::to_string(off + c + 1) + ")");
                }
            }
        }
        off += d + 1;
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (!inside[r][c] && !is_zero(m(r, c))) {
                return fail("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                            ") lies outside the block pattern but is nonzero");
            }
        }
    }
    return shape;
}

template <class S>
Matrix<S> block_inverse(const Matrix<S> &m)
{
    return lower_triangular_inverse(m, [](const S &v) { return inverse(v); });
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// Where sample parameters live.
struct SampleField {
    enum class Kind { finite, rational_function };
    Kind kind = Kind::finite;
    std::uint32_t p = 3;
    unsigned m = 4;           // F_{p^m} for finite; F_p(t) ignores m
    unsigned max_degree = 3;  // numerator/denominator degree for rational functions

    std::string name() const
    {
        return kind == Kind::finite ? "F_" + std::to_string(p) + "^" + std::to_string(m)
                                    : "F_" + std::to_string(p) + "(t)";
    }
};

namespace detail
{

/// Portable uniform draw (std distributions differ between standard libraries).
inline std::uint64_t draw(std::mt19937_64 &rng, std::uint64_t n) { return rng() % n; }

inline FfElem random_ff(const GaloisField &f, std::mt19937_64 &rng, bool nonzero)
{
    const std::uint64_t n = f.order();
    return nonzero ? f.element(static_cast<std::uint32_t>(1 + draw(rng, n - 1)))
                   : f.element(static_cast<std::uint32_t>(draw(rng, n)));
}

inline RatFunc::Poly random_poly(const GaloisField &f, std::mt19937_64 &rng, unsigned deg)
{
    std::vector<FfElem> c;
    for (unsigned i = 0; i <= deg; ++i) {
        c.push_back(random_ff(f, rng, false));
    }
    return RatFunc::Poly(f.zero(), std::move(c));
}

inline RatFunc random_ratfunc(const GaloisField &f, std::mt19937_64 &rng, unsigned deg, bool nonzero)
{
    for (;;) {
        RatFunc::Poly num = random_poly(f, rng, deg);
        RatFunc::Poly den = random_poly(f, rng, deg);
        if (den.zero() || (nonzero && num.zero())) {
            continue;
        }
        return RatFunc(num, den);
    }
}

} // namespace detail

/// Report of a sampled exact identity check.
struct BlockReport {
    bool pass = true;
    std::size_t samples = 0;
    std::size_t failures = 0;
    std::string field;
    std::uint64_t field_size = 0;     // 0 for an infinite field
    std::uint64_t degree_bound = 0;   // total degree of the identities checked
    std::string first_failure;        // witness description
    IndexSet closure;                 // the index set actually used

    std::string describe() const
    {
        std::string out = std::to_string(samples - failures) + "/" + std::to_string(samples) +
                          " samples pass over " + field + " (identity degree <= " + std::to_string(degree_bound);
        if (field_size) {
            out += ", Schwartz-Zippel false-pass bound per sample " + std::to_string(degree_bound) + "/" +
                   std::to_string(field_size);
        }
        out += ")";
        if (!first_failure.empty()) {
            out += "; first failure: " + first_failure;
        }
        return out;
    }
};

/// Degree of the closure and commutator identities after clearing the
/// denominators a^{-wt}: products of two shapes have entries of degree at most
/// 2 wt in a, a' and 2 in the x's, and clearing adds 2 wt.
inline std::uint64_t block_identity_degree(const IndexSet &I)
{
    int wmax = 0;
    for (const auto &s : I) {
        wmax = std::max(wmax, weight(s));
    }
    return 4 * static_cast<std::uint64_t>(wmax) + 2;
}

namespace detail
{

template <class S, class Draw>
BlockShape<S> random_shape(const IndexSet &I, Draw &&draw_elem)
{
    BlockShape<S> sh{I, draw_elem(true), {}};
    for (const auto &s : I) {
        sh.x.emplace(s, draw_elem(false));
    }
    return sh;
}

template <class S>
std::string shape_to_string(const BlockShape<S> &sh)
{
    std::string out = "a=" + to_string(sh.a);
    for (const auto &[k, v] : sh.x) {
        out += ", x_(" + to_string(k) + ")=" + to_string(v);
    }
    return out;
}

template <class S, class Draw>
BlockReport closure_check_impl(const IndexSet &I, std::size_t samples, std::uint64_t seed, Draw &&draw_elem)
{
    BlockReport rep;
    rep.closure = I;
    rep.degree_bound = block_identity_degree(I);
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
        const auto g = random_shape<S>(I, [&](bool nz) { return draw_elem(rng, nz); });
        const auto h = random_shape<S>(I, [&](bool nz) { return draw_elem(rng, nz); });
        const Matrix<S> mg = block_build(g), mh = block_build(h);
        std::string why;
        bool ok = true;
        const auto prod = block_parse(mg * mh, I, &why);
        if (!prod) {
            ok = false;
            why = "product: " + why;
        } else if (!(prod->a == g.a * h.a)) {
            ok = false;
            why = "product a-parameter is not a*a'";
        } else if (!(block_build(*prod) == mg * mh)) {
            ok = false;
            why = "product does not rebuild";
        }
        if (ok) {
            const auto inv = block_parse(block_inverse(mg), I, &why);
            if (!inv) {
                ok = false;
                why = "inverse: " + why;
            } else if (!(block_build(*inv) * mg == Matrix<S>::identity(mg.rows(), g.a))) {
                ok = false;
                why = "inverse does not rebuild";
            }
        }
        ++rep.samples;
        if (!ok) {
            ++rep.failures;
            rep.pass = false;
            if (rep.first_failure.empty()) {
                rep.first_failure = "sample " + std::to_string(k) + " (" + shape_to_string(g) + " | " +
                                    shape_to_string(h) + "): " + why;
            }
        }
    }
    return rep;
}

/// V-hat element: a = 1 and every x zero except x_{s_j} = value.
template <class S>
BlockShape<S> vhat_element(const IndexSet &I, const Index &sj, const S &value)
{
    BlockShape<S> sh{I, one_like(value), {}};
    for (const auto &s : I) {
        sh.x.emplace(s, s == sj ? value : zero_like(value));
    }
    return sh;
}

template <class S>
BlockShape<S> scalar_element(const IndexSet &I, const S &b)
{
    BlockShape<S> sh{I, b, {}};
    for (const auto &s : I) {
        sh.x.emplace(s, zero_like(b));
    }
    return sh;
}

template <class S, class Draw>
BlockReport commutator_check_impl(const IndexSet &I, const Index &sj, std::size_t samples, std::uint64_t seed,
                                  Draw &&draw_elem)
{
    BlockReport rep;
    rep.closure = I;
    rep.degree_bound = block_identity_degree(I);
    const auto wt = static_cast<std::uint64_t>(weight(sj));
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
        const S a = draw_elem(rng, false);
        const S b = draw_elem(rng, true);
        const Matrix<S> R = block_build(vhat_element(I, sj, a));
        const Matrix<S> Q = block_build(scalar_element(I, b));
        const Matrix<S> Qi = block_inverse(Q), Ri = block_inverse(R);
        std::string why;
        bool ok = true;
        // Q^{-1} R Q = v_{a b^{wt}}
        const Matrix<S> conj = Qi * R * Q;
        if (!(conj == block_build(vhat_element(I, sj, a * b.pow(wt))))) {
            ok = false;
            why = "Q^{-1} R Q is not v_{a b^wt}";
        }
        // R Q R^{-1} Q^{-1} = v_{a (1 - b^{-wt})}
        const Matrix<S> comm = R * Q * Ri * Qi;
        const S expected = a * (one_like(a) - inverse(b).pow(wt));
        if (ok && !(comm == block_build(vhat_element(I, sj, expected)))) {
            ok = false;
            why = "commutator is not v_{a(1-b^{-wt})}";
        }
        ++rep.samples;
        if (!ok) {
            ++rep.failures;
            rep.pass = false;
            if (rep.first_failure.empty()) {
                rep.first_failure = "sample " + std::to_string(k) + " (a=" + to_string(a) + ", b=" + to_string(b) +
                                    "): " + why;
            }
        }
    }
    return rep;
}

} // namespace detail

/// Closure under products and inverses on `samples` random pairs.
/// I is replaced by its sub-closure.
inline BlockReport block_closure_check(const IndexSet &I, std::size_t samples, std::uint64_t seed,
                                       const SampleField &field = {})
{
    const IndexSet closure = index_subclosure(I);
    const FieldRef f = ff_create(field.p, field.kind == SampleField::Kind::finite ? field.m : 1);
    BlockReport rep;
    if (field.kind == SampleField::Kind::finite) {
        rep = detail::closure_check_impl<FfElem>(closure, samples, seed, [&](std::mt19937_64 &rng, bool nz) {
            return detail::random_ff(*f, rng, nz);
        });
        rep.field_size = f->order();
    } else {
        rep = detail::closure_check_impl<RatFunc>(closure, samples, seed, [&](std::mt19937_64 &rng, bool nz) {
            return detail::random_ratfunc(*f, rng, field.max_degree, nz);
        });
    }
    rep.field = field.name();
    return rep;
}

/// Conjugation and commutator identities for R in V-hat (only x_{s_j}
/// nonzero) and Q = (b) + diag(b-powers), inside Gamma-hat_j: the sub-closure
/// is cut after s_j, so no remaining block contains s_j as a proper window.
inline BlockReport block_commutator_check(const IndexSet &I, const Index &sj, std::size_t samples,
                                          std::uint64_t seed, const SampleField &field = {})
{
    IndexSet closure = index_subclosure(I);
    if (std::find(closure.begin(), closure.end(), sj) == closure.end()) {
        throw std::invalid_argument("s_j = (" + to_string(sj) + ") is not in the index set");
    }
    // Gamma-hat_j: keep the members up to and including s_j.
    closure.erase(std::find(closure.begin(), closure.end(), sj) + 1, closure.end());
    const FieldRef f = ff_create(field.p, field.kind == SampleField::Kind::finite ? field.m : 1);
    BlockReport rep;
    if (field.kind == SampleField::Kind::finite) {
        rep = detail::commutator_check_impl<FfElem>(closure, sj, samples, seed, [&](std::mt19937_64 &rng, bool nz) {
            return detail::random_ff(*f, rng, nz);
        });
        rep.field_size = f->order();
    } else {
        rep = detail::commutator_check_impl<RatFunc>(closure, sj, samples, seed, [&](std::mt19937_64 &rng, bool nz) {
            return detail::random_ratfunc(*f, rng, field.max_degree, nz);
        });
    }
    rep.field = field.name();
    return rep;
}

} // namespace cmzv

#endif
