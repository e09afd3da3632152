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

#ifndef CMZV_SUITE_HPP
#define CMZV_SUITE_HPP

/// @file suite.hpp
/// The verification suite shared by the command-line tool and the acceptance
/// runner. Check names start with a two-digit group number; results are always
/// reported sorted by name, whatever order the workers finish in.
///
/// Brute-force references (the plain product for D_i and tuple enumeration
/// for MZVs) are passed in through SuiteOracles so that the library itself
/// never checks against its own code.

#include <cmzv/block_group.hpp>
#include <cmzv/carlitz.hpp>
#include <cmzv/index.hpp>
#include <cmzv/motive.hpp>
#include <cmzv/parallel.hpp>
#include <cmzv/serialize.hpp>
#include <cmzv/special.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace cmzv
{

inline constexpr int kReportSchemaVersion = 1;

enum class CheckStatus { pass, incomparable, fail, error };

inline std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::incomparable:
        return "incomparable";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::error:
        return "error";
    }
    return "error";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
    double runtime_ms = 0;
};

/// Everything that may change a result. `workers` only changes scheduling and
/// is left out of the report, so reports compare equal across worker counts.
struct SuiteConfig {
    std::optional<std::int64_t> prec;   // overrides every check's working precision
    std::optional<std::size_t> tdeg;    // overrides every check's t-truncation
    std::uint64_t seed = 1;
    std::size_t samples = 100;
    unsigned workers = 1;
    std::optional<std::string> fixtures;  // golden-file directory; golden checks are skipped without it

    nlohmann::json to_json() const
    {
        nlohmann::json j;
        j["prec"] = prec ? nlohmann::json(*prec) : nlohmann::json("default");
        j["tdeg"] = tdeg ? nlohmann::json(*tdeg) : nlohmann::json("default");
        j["seed"] = seed;
        j["samples"] = samples;
        j["golden_files"] = fixtures.has_value();
        return j;
    }
};

struct SuiteOracles {
    std::function<ThetaPoly(const GaloisField &, unsigned)> carlitz_d;
    std::function<LaurentSeries(const GaloisField &, std::uint64_t, const Index &, unsigned, std::int64_t)> mzv;
};

/// The notes every report carries so that its numbers can be read without
/// the source.
inline nlohmann::json conventions_json()
{
    return {{"uniformizer", "z = (-theta)^(-1/(q-1)), so theta = -z^-(q-1); values are Laurent series in z "
                            "over F_q, written c*z^k with O(z^N) for the absolute precision"},
            {"at_slot", "H_s is Gamma_{s+1}(t) times the x^s coefficient of 1/(1 - sum_{i>=1} g_i x^(q^i)), "
                        "so H_s = 1 for 0 <= s <= q-1"},
            {"twist_form", "Frobenius equations are checked as Psi = Phi^(l) Psi^(l) with positive twists; "
                           "this is equivalent to Psi^(-l) = Phi Psi and keeps every coefficient in F_q((z))"}};
}

namespace detail
{

/// Worst status seen plus a list of notes, in the order they were added.
class Tally
{
public:
    void note(CheckStatus s, const std::string &msg)
    {
        status_ = std::max(status_, s);
        if (!msg.empty()) {
            notes_.push_back(msg);
        }
    }
    /// A comparison that agrees but below the required precision is
    /// incomparable, never a pass.
    void compare(const Comparison &c, std::int64_t required, const std::string &what)
    {
        if (c.kind == Comparison::Kind::unequal) {
            note(CheckStatus::fail, what + ": " + c.to_string());
        } else if (c.kind == Comparison::Kind::incomparable || c.exponent < required) {
            note(CheckStatus::incomparable,
                 what + ": incomparable precision (" + std::to_string(c.exponent) + " < " +
                     std::to_string(required) + ")");
        }
    }
    void residual(const ResidualReport &r, std::int64_t required, const std::string &what)
    {
        if (!r.zero) {
            note(CheckStatus::fail, what + ": " + r.describe());
        } else if (r.floor < required) {
            note(CheckStatus::incomparable, what + ": incomparable precision (zero to " + std::to_string(r.floor) +
                                                " < " + std::to_string(required) + ")");
        }
    }
    CheckStatus status() const { return status_; }
    /// Failure notes if any, else the summary.
    std::string detail(const std::string &summary) const
    {
        if (notes_.empty()) {
            return summary;
        }
        std::string out = summary;
        const std::size_t shown = std::min<std::size_t>(notes_.size(), 4);
        for (std::size_t i = 0; i < shown; ++i) {
            out += "; " + notes_[i];
        }
        if (notes_.size() > shown) {
            out += "; (" + std::to_string(notes_.size() - shown) + " more)";
        }
        return out;
    }

private:
    CheckStatus status_ = CheckStatus::pass;
    std::vector<std::string> notes_;
};

inline std::string level_tag(std::uint32_t p, unsigned l) { return "p" + std::to_string(p) + "l" + std::to_string(l); }

inline CarlitzContext suite_context(std::uint32_t p, unsigned l, const SuiteConfig &cfg)
{
    CarlitzContext ctx = make_context(p, l);
    ctx.workers = cfg.workers;
    return ctx;
}

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace detail

// ---------------------------------------------------------------------------
// Golden files
// ---------------------------------------------------------------------------

struct GoldenDocument {
    std::string file;
    std::function<nlohmann::json()> build;
};

/// Values stored in values.json, by name.
inline std::vector<std::pair<std::string, std::function<std::string()>>> golden_values()
{
    return {
        {"pi_tilde p=3 l=1 prec=20", [] { return pi_tilde(make_context(3, 1), 20).to_string(); }},
        {"pi_tilde p=2 l=2 prec=20", [] { return pi_tilde(make_context(2, 2), 20).to_string(); }},
        {"zeta(1) p=3 l=1 prec=30", [] { return mzv_direct(make_context(3, 1), {1}, 30).value.to_string(); }},
        {"zeta(2,1) p=2 l=1 prec=30",
         [] { return mzv_direct(make_context(2, 1), {2, 1}, 30).value.to_string(); }},
        {"zeta(3) p=2 l=2 prec=24", [] { return mzv_direct(make_context(2, 2), {3}, 24).value.to_string(); }},
        {"omega(theta) p=2 l=1 prec=20",
         [] { return te_eval_theta(omega_for_evaluation(make_context(2, 1), 20)).truncated(20).to_string(); }},
    };
}

/// The example system for {(1), (2), (1,2)} over F_2 at two distinct levels,
/// plus the stored values.
inline std::vector<GoldenDocument> golden_documents()
{
    std::vector<GoldenDocument> docs;
    for (unsigned l : {1u, 2u}) {
        const std::string tag = detail::level_tag(2, l);
        docs.push_back({"example_phi_" + tag + ".json", [l] {
                            return to_json(example_system(make_context(2, l), 1, 2, 4, 20).first);
                        }});
        docs.push_back({"example_psi_" + tag + ".json", [l] {
                            return to_json(example_system(make_context(2, l), 1, 2, 4, 20).second);
                        }});
    }
    docs.push_back({"values.json", [] {
                        nlohmann::json j;
                        j["schema_version"] = kMatrixSchemaVersion;
                        j["kind"] = "values";
                        for (const auto &[name, fn] : golden_values()) {
                            j["values"][name] = fn();
                        }
                        return j;
                    }});
    return docs;
}

/// Compares one stored document with a fresh computation.
inline GoldenDiff golden_compare(const nlohmann::json &expected, const nlohmann::json &actual)
{
    if (actual.value("kind", "") != "values") {
        return golden_diff(expected, actual);
    }
    for (const auto &[name, text] : actual.at("values").items()) {
        const auto &stored = expected.at("values");
        if (!stored.contains(name)) {
            GoldenDiff d;
            d.equal = false;
            d.where = "value '" + name + "' (missing)";
            return d;
        }
        GoldenDiff d = golden_value_diff(stored.at(name).get<std::string>(), text.get<std::string>());
        if (!d.equal) {
            d.where = "value '" + name + "'";
            return d;
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

struct CheckDef {
    std::string name;
    std::function<CheckResult(const SuiteConfig &)> run;
};

namespace detail
{

using Level = std::pair<std::uint32_t, unsigned>;

inline const std::vector<Level> &three_levels()
{
    static const std::vector<Level> v{{2, 1}, {3, 1}, {2, 2}};
    return v;
}

inline const std::vector<Level> &prime_levels()
{
    static const std::vector<Level> v{{2, 1}, {3, 1}};
    return v;
}

inline CheckResult finish(const std::string &name, const Tally &t, const std::string &summary)
{
    return {name, t.status(), t.detail(summary), 0};
}

inline CheckResult check_carlitz_tower(const SuiteConfig &cfg, const SuiteOracles &o)
{
    Tally t;
    std::size_t compared = 0;
    const auto start = std::chrono::steady_clock::now();
    for (auto [p, l] : three_levels()) {
        const auto ctx = suite_context(p, l, cfg);
        for (unsigned i = 0; i <= 3; ++i) {
            ++compared;
            if (!(carlitz_d(ctx, i) == o.carlitz_d(ctx.F(), i))) {
                t.note(CheckStatus::fail, "D_" + std::to_string(i) + " differs for q=" + std::to_string(ctx.q));
            }
        }
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ms > 1000.0) {
        t.note(CheckStatus::fail, "runtime budget of 1 s exceeded");
    }
    return finish("01.carlitz_tower", t,
                  "D_i recursion equals the product of all monic polynomials of degree i for i <= 3, q in {2,3,4} (" +
                      std::to_string(compared) + " cases, within 1 s)");
}

inline CheckResult check_omega(const SuiteConfig &cfg, std::uint32_t p, unsigned l)
{
    constexpr std::int64_t kRequired = 60;
    constexpr std::size_t kTdegRequired = 20;
    const std::int64_t prec = cfg.prec.value_or(kRequired);
    const std::size_t tdeg = cfg.tdeg.value_or(kTdegRequired);
    const auto ctx = suite_context(p, l, cfg);
    const unsigned factors = omega_factors_for(ctx, prec);
    Tally t;
    const TateElement om = omega_series(ctx, factors, tdeg, prec);
    if (om.coefficients().empty() || om.coefficients().front().is_zero()) {
        t.note(CheckStatus::incomparable, "Omega starts at z^" + std::to_string(ctx.q) +
                                              ", beyond precision " + std::to_string(prec));
        return finish("02.omega_functional_equation." + level_tag(p, l), t, "Omega not visible");
    }
    const auto r = omega_functional_residual(ctx, om);
    if (!r.sane) {
        t.note(CheckStatus::fail, "Omega failed the sanity test");
    }
    t.residual(r.residual, kRequired, "Omega^(l) (t - theta^q) - Omega");
    if (tdeg < kTdegRequired) {
        t.note(CheckStatus::incomparable, "t-truncation " + std::to_string(tdeg) + " below 20");
    }
    const auto broken = omega_functional_residual(ctx, omega_series(ctx, factors, tdeg, prec, 1u));
    std::string control;
    if (!broken.residual.zero) {
        control = "one-factor-dropped control fails at z^" + std::to_string(*broken.residual.exponent);
    } else if (broken.residual.floor < kRequired) {
        t.note(CheckStatus::incomparable, "negative control not visible at this precision");
    } else {
        t.note(CheckStatus::fail, "negative control with a dropped factor passed");
    }
    return finish("02.omega_functional_equation." + level_tag(p, l), t,
                  "residual " + r.residual.describe() + " with " + std::to_string(factors) + " factors, tdeg " +
                      std::to_string(tdeg) + "; " + control);
}

inline CheckResult check_pi_tilde(const SuiteConfig &cfg, std::uint32_t p, unsigned l)
{
    constexpr std::int64_t kRequired = 50;
    const std::int64_t prec = cfg.prec.value_or(60);
    const auto ctx = suite_context(p, l, cfg);
    const LaurentSeries pt = pi_tilde(ctx, prec);
    const LaurentSeries om = te_eval_theta(omega_for_evaluation(ctx, prec + static_cast<std::int64_t>(ctx.q)));
    const auto cmp = eq_to_prec(pt * om, ctx.one());
    Tally t;
    t.compare(cmp, kRequired, "pi_tilde * Omega(theta) - 1");
    return finish("03.pi_tilde_two_paths." + level_tag(p, l), t,
                  "product formula times Omega(theta): " + cmp.to_string());
}

inline CheckResult check_mzv_bruteforce(const SuiteConfig &cfg, const SuiteOracles &o)
{
    constexpr std::int64_t kRequired = 40;
    const std::int64_t prec = cfg.prec.value_or(kRequired);
    Tally t;
    std::size_t compared = 0, nonzero = 0;
    const auto start = std::chrono::steady_clock::now();
    for (auto [p, l] : prime_levels()) {
        const auto ctx = suite_context(p, l, cfg);
        const IndexSet indices = indices_up_to(6, 3);
        // one slot per (index, max degree), combined in order afterwards
        std::vector<std::pair<Comparison, bool>> slots(indices.size() * 4);
        parallel_for(slots.size(), cfg.workers, [&](std::size_t k) {
            const Index &s = indices[k / 4];
            const unsigned B = static_cast<unsigned>(k % 4);
            if (B + 1 < s.size()) {
                slots[k] = {{Comparison::Kind::equal, kExact}, false};
                return;
            }
            const LaurentSeries brute = o.mzv(ctx.F(), ctx.q, s, B, prec);
            slots[k] = {eq_to_prec(brute, mzv_partial(ctx, s, B, prec)), !brute.is_zero()};
        });
        for (std::size_t k = 0; k < slots.size(); ++k) {
            const Index &s = indices[k / 4];
            const unsigned B = static_cast<unsigned>(k % 4);
            if (B + 1 < s.size()) {
                continue;
            }
            ++compared;
            nonzero += slots[k].second ? 1 : 0;
            t.compare(slots[k].first, kRequired,
                      "q=" + std::to_string(ctx.q) + " s=(" + to_string(s) + ") degree <= " + std::to_string(B));
        }
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ms > 10000.0) {
        t.note(CheckStatus::fail, "runtime budget of 10 s exceeded");
    }
    return finish("04.mzv_bruteforce", t,
                  "partial sums equal tuple enumeration for q in {2,3}, wt <= 6, dep <= 3, max degree <= 3 (" +
                      std::to_string(compared) + " sums, " + std::to_string(nonzero) +
                      " nonzero, precision " + std::to_string(prec) + ", within 10 s)");
}

inline CheckResult check_period_identity(const SuiteConfig &cfg, std::uint32_t p, unsigned l)
{
    constexpr std::int64_t kRequired = 30;
    const std::int64_t digits = cfg.prec.value_or(kRequired);
    const auto ctx = suite_context(p, l, cfg);
    Tally t;
    const auto H = at_polynomials(ctx, static_cast<unsigned>(ctx.q - 1));
    const TPoly one = t_constant(ThetaPoly::constant(ctx.F().one()));
    for (std::size_t s = 0; s < ctx.q; ++s) {
        if (!(H[s] == one)) {
            t.note(CheckStatus::fail, "H_" + std::to_string(s) + " != 1");
        }
    }
    const IndexSet indices = indices_up_to(6, 3);
    std::vector<PeriodIdentityReport> plain(indices.size()), perturbed(indices.size());
    parallel_for(indices.size(), cfg.workers, [&](std::size_t k) {
        plain[k] = verify_period_identity(ctx, indices[k], digits);
        perturbed[k] = period_identity_control(ctx, indices[k], digits);
    });
    std::int64_t deepest = 0, farthest = 0;
    std::size_t killed = 0;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        const std::string what = "s=(" + to_string(indices[k]) + ")";
        if (plain[k].comparison.kind == Comparison::Kind::unequal) {
            t.note(CheckStatus::fail, what + ": " + plain[k].comparison.to_string());
        } else if (digits < kRequired) {
            t.note(CheckStatus::incomparable, what + ": only " + std::to_string(digits) + " digits");
        }
        deepest = std::max(deepest, plain[k].leading);
        if (perturbed[k].comparison.kind == Comparison::Kind::unequal) {
            ++killed;
            farthest = std::max(farthest, perturbed[k].comparison.exponent - perturbed[k].leading);
        } else {
            t.note(digits < kRequired ? CheckStatus::incomparable : CheckStatus::fail,
                   what + ": perturbed control not detected");
        }
    }
    return finish("05.period_identity." + level_tag(p, l), t,
                  "L(H)(theta) = Gamma*zeta on " + std::to_string(digits) + " z-digits past the leading term for " +
                      std::to_string(indices.size()) + " indices (wt <= 6, dep <= 3, leading exponents up to " +
                      std::to_string(deepest) + "); H_s = 1 for s < q; " + std::to_string(killed) + "/" +
                      std::to_string(indices.size()) +
                      " perturbed controls fail at a located exponent (at most " + std::to_string(farthest) +
                      " digits past the leading term)");
}

inline const IndexSet &motive_indices()
{
    static const IndexSet v{{1}, {2}, {1, 1}, {2, 1}, {1, 2}};
    return v;
}

inline TateElement bump_entry(const TateElement &e, const CarlitzContext &ctx)
{
    return e + TateElement::constant(LaurentSeries::monomial(ctx.F().one(), ctx.q, 1));
}

inline CheckResult check_trivialization(const SuiteConfig &cfg, std::uint32_t p, unsigned l)
{
    constexpr std::int64_t kRequired = 40;
    const std::int64_t prec = cfg.prec.value_or(kRequired);
    const std::size_t tdeg = cfg.tdeg.value_or(10);
    const auto ctx = suite_context(p, l, cfg);
    Tally t;
    std::size_t mutants = 0, killed = 0;
    for (const auto &s : motive_indices()) {
        const auto u = at_arguments(ctx, s);
        const auto phi = phi_build(ctx, u, s);
        const auto psi = psi_build(ctx, u, s, tdeg, prec);
        t.residual(frobenius_residual(phi, psi), kRequired, "s=(" + to_string(s) + ")");
        const std::size_t n = s.size() + 1;
        std::vector<char> dead(n * n, 0);
        parallel_for(n * n, cfg.workers, [&](std::size_t k) {
            PsiMatrix mutant = psi;
            mutant.entries(k / n, k % n) = bump_entry(mutant.entries(k / n, k % n), ctx);
            dead[k] = frobenius_residual(phi, mutant).zero ? 0 : 1;
        });
        for (std::size_t k = 0; k < n * n; ++k) {
            ++mutants;
            killed += static_cast<std::size_t>(dead[k]);
            if (!dead[k]) {
                t.note(prec < kRequired ? CheckStatus::incomparable : CheckStatus::fail,
                       "s=(" + to_string(s) + ") mutant (" + std::to_string(k / n + 1) + "," +
                           std::to_string(k % n + 1) + ") survived");
            }
        }
    }
    return finish("06.rigid_analytic_trivialization." + level_tag(p, l), t,
                  "Psi = Phi^(l) Psi^(l) to precision " + std::to_string(prec) + " for s in " +
                      to_string(motive_indices()) + " with u = AT polynomials; " + std::to_string(killed) + "/" +
                      std::to_string(mutants) + " single-entry mutants killed");
}

inline CheckResult check_derived(const SuiteConfig &cfg, std::uint32_t p)
{
    constexpr std::int64_t kRequired = 40;
    const std::int64_t prec = cfg.prec.value_or(kRequired);
    const std::size_t tdeg = cfg.tdeg.value_or(10);
    const auto ctx = suite_context(p, 1, cfg);
    Tally t;
    auto [cphi, cpsi] = carlitz_system(ctx, tdeg, prec);
    for (unsigned k : {2u, 3u}) {
        t.residual(frobenius_residual(derived_product(cphi, k), cpsi), kRequired,
                   "Carlitz motive, step " + std::to_string(k));
    }
    for (const auto &s : motive_indices()) {
        const auto u = at_arguments(ctx, s);
        const auto phi = phi_build(ctx, u, s);
        const auto psi = psi_build(ctx, u, s, tdeg, prec);
        for (unsigned k : {2u, 3u}) {
            t.residual(frobenius_residual(derived_product(phi, k), psi), kRequired,
                       "s=(" + to_string(s) + ") step " + std::to_string(k));
        }
    }
    return finish("07.derived_motives." + level_tag(p, 1), t,
                  "the same Psi satisfies Psi = (Phi')^(ks) Psi^(ks) for k in {2,3} for the Carlitz motive and s in " +
                      to_string(motive_indices()) + " to precision " + std::to_string(prec));
}

inline CheckResult check_block(const SuiteConfig &cfg, bool commutator)
{
    const IndexSet I{{1, 2}};
    const BlockReport rep = commutator ? block_commutator_check(I, {1, 2}, cfg.samples, cfg.seed)
                                       : block_closure_check(I, cfg.samples, cfg.seed);
    Tally t;
    if (!rep.pass) {
        t.note(CheckStatus::fail, "identity violated");
    }
    if (rep.samples <= rep.degree_bound) {
        t.note(CheckStatus::incomparable, "sample count does not exceed the degree bound");
    }
    const std::string what = commutator ? "commutator R Q R^-1 Q^-1 = v_{a(1-b^-3)} and conjugation for s_j=(1,2)"
                                        : "closure and inverse re-parse";
    return finish(std::string("08.block_group.") + (commutator ? "commutator" : "closure"), t,
                  what + " on I = {" + to_string(rep.closure) + "}, seed " + std::to_string(cfg.seed) + ": " +
                      rep.describe());
}

inline CheckResult check_telescoping(const SuiteConfig &cfg, std::uint32_t p)
{
    constexpr std::int64_t kRequired = 30;
    const std::int64_t prec = cfg.prec.value_or(kRequired);
    const auto ctx = suite_context(p, 1, cfg);
    const IndexSet indices = indices_up_to(4, 2);
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> jobs;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        for (std::size_t i = 1; i <= indices[k].size() + 1; ++i) {
            for (std::size_t j = 1; j < i; ++j) {
                jobs.emplace_back(k, i, j);
            }
        }
    }
    std::vector<TelescopeReport> reps(jobs.size());
    parallel_for(jobs.size(), cfg.workers, [&](std::size_t n) {
        const auto [k, i, j] = jobs[n];
        reps[n] = psi_tilde_component(ctx, indices[k], i, j, prec);
    });
    Tally t;
    std::int64_t worst = 0;
    for (std::size_t n = 0; n < jobs.size(); ++n) {
        const auto [k, i, j] = jobs[n];
        const std::string what = "s=(" + to_string(indices[k]) + ") (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")";
        t.compare(reps[n].comparison, kRequired, what);
        if (reps[n].comparison.equal() && reps[n].least_summand_val >= prec) {
            t.note(CheckStatus::incomparable, what + ": every summand is below the precision");
        }
        if (reps[n].least_summand_val < kExact) {
            worst = std::max(worst, reps[n].least_summand_val);
        }
    }
    return finish("09.psi_tilde_telescoping." + level_tag(p, 1), t,
                  "collapsed (i,j) components vanish to precision " + std::to_string(prec) + " for all i > j, " +
                      std::to_string(indices.size()) + " indices of dep <= 2 and wt <= 4 (" +
                      std::to_string(jobs.size()) + " components; " +
                      (worst > 0 ? "summands start by z^" + std::to_string(worst) : std::string("no summand visible")) +
                      ")");
}

inline CheckResult check_golden(const SuiteConfig &cfg, const GoldenDocument &doc)
{
    Tally t;
    const nlohmann::json expected = nlohmann::json::parse(read_file(*cfg.fixtures + "/" + doc.file));
    const GoldenDiff d = golden_compare(expected, doc.build());
    if (!d.equal) {
        t.note(CheckStatus::fail, d.describe());
    }
    return finish("golden." + doc.file.substr(0, doc.file.rfind('.')), t, doc.file + " " +
                                                                              (d.equal ? d.describe() : "differs"));
}

} // namespace detail

/// Every check except the determinism check, in name order.
inline std::vector<CheckDef> suite_checks(const SuiteConfig &cfg, const SuiteOracles &o)
{
    using namespace detail;
    std::vector<CheckDef> v;
    v.push_back({"01.carlitz_tower", [o](const SuiteConfig &c) { return check_carlitz_tower(c, o); }});
    for (auto [p, l] : three_levels()) {
        v.push_back({"02.omega_functional_equation." + level_tag(p, l),
                     [p, l](const SuiteConfig &c) { return check_omega(c, p, l); }});
        v.push_back({"03.pi_tilde_two_paths." + level_tag(p, l),
                     [p, l](const SuiteConfig &c) { return check_pi_tilde(c, p, l); }});
    }
    v.push_back({"04.mzv_bruteforce", [o](const SuiteConfig &c) { return check_mzv_bruteforce(c, o); }});
    for (auto [p, l] : prime_levels()) {
        v.push_back({"05.period_identity." + level_tag(p, l),
                     [p, l](const SuiteConfig &c) { return check_period_identity(c, p, l); }});
        v.push_back({"06.rigid_analytic_trivialization." + level_tag(p, l),
                     [p, l](const SuiteConfig &c) { return check_trivialization(c, p, l); }});
        v.push_back({"07.derived_motives." + level_tag(p, 1),
                     [p](const SuiteConfig &c) { return check_derived(c, p); }});
        v.push_back({"09.psi_tilde_telescoping." + level_tag(p, 1),
                     [p](const SuiteConfig &c) { return check_telescoping(c, p); }});
    }
    v.push_back({"08.block_group.closure", [](const SuiteConfig &c) { return check_block(c, false); }});
    v.push_back({"08.block_group.commutator", [](const SuiteConfig &c) { return check_block(c, true); }});
    if (cfg.fixtures) {
        for (const auto &doc : golden_documents()) {
            v.push_back({"golden." + doc.file.substr(0, doc.file.rfind('.')),
                         [doc](const SuiteConfig &c) { return check_golden(c, doc); }});
        }
    }
    std::sort(v.begin(), v.end(), [](const CheckDef &a, const CheckDef &b) { return a.name < b.name; });
    return v;
}

/// Runs the given checks on cfg.workers threads. A check that throws is
/// reported as an error with the exception text. Results are sorted by name.
inline std::vector<CheckResult> run_checks(const std::vector<CheckDef> &defs, const SuiteConfig &cfg)
{
    std::vector<CheckResult> out(defs.size());
    parallel_for(defs.size(), cfg.workers, [&](std::size_t k) {
        const auto start = std::chrono::steady_clock::now();
        try {
            out[k] = defs[k].run(cfg);
        } catch (const std::exception &e) {
            out[k] = {defs[k].name, CheckStatus::error, e.what(), 0};
        }
        out[k].name = defs[k].name;
        out[k].runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    });
    std::sort(out.begin(), out.end(), [](const CheckResult &a, const CheckResult &b) { return a.name < b.name; });
    return out;
}

/// Result lines without timings, the form compared for determinism.
inline std::string results_fingerprint(const std::vector<CheckResult> &results)
{
    std::string out;
    for (const auto &r : results) {
        out += r.name + "\t" + to_string(r.status) + "\t" + r.detail + "\n";
    }
    return out;
}

/// The whole suite. The determinism check reruns every other check with one
/// and with four workers and requires identical results.
inline std::vector<CheckResult> run_suite(const SuiteConfig &cfg, const SuiteOracles &o)
{
    const auto defs = suite_checks(cfg, o);
    auto results = run_checks(defs, cfg);

    const auto start = std::chrono::steady_clock::now();
    const std::string base = results_fingerprint(results);
    std::vector<std::string> mismatched;
    for (unsigned w : {1u, 4u}) {
        SuiteConfig c = cfg;
        c.workers = w;
        if (results_fingerprint(run_checks(defs, c)) != base) {
            mismatched.push_back(std::to_string(w));
        }
    }
    CheckResult det{"10.determinism", CheckStatus::pass, "", 0};
    if (mismatched.empty()) {
        det.detail = "all " + std::to_string(results.size()) + " results identical when rerun with 1 and 4 workers";
    } else {
        det.status = CheckStatus::fail;
        det.detail = "results differ when rerun with workers " + mismatched.front() +
                     (mismatched.size() > 1 ? " and " + mismatched.back() : "");
    }
    det.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    results.push_back(det);
    std::sort(results.begin(), results.end(),
              [](const CheckResult &a, const CheckResult &b) { return a.name < b.name; });
    return results;
}

/// Worst status in a result list.
inline CheckStatus overall_status(const std::vector<CheckResult> &results)
{
    CheckStatus s = CheckStatus::pass;
    for (const auto &r : results) {
        s = std::max(s, r.status);
    }
    return s;
}

/// {schema_version, command, config, conventions, checks, summary}.
inline nlohmann::json report_json(const std::string &command, const nlohmann::json &config,
                                  const std::vector<CheckResult> &results, bool timings)
{
    nlohmann::json checks = nlohmann::json::array();
    std::map<std::string, int> counts{{"pass", 0}, {"incomparable", 0}, {"fail", 0}, {"error", 0}};
    for (const auto &r : results) {
        nlohmann::json c{{"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}};
        if (timings) {
            c["runtime_ms"] = static_cast<std::int64_t>(r.runtime_ms + 0.5);
        }
        checks.push_back(std::move(c));
        ++counts[to_string(r.status)];
    }
    nlohmann::json summary(counts);
    summary["status"] = to_string(overall_status(results));
    return {{"schema_version", kReportSchemaVersion},
            {"command", command},
            {"config", config},
            {"conventions", conventions_json()},
            {"checks", checks},
            {"summary", summary}};
}

} // namespace cmzv

#endif
