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

// cmzv: compute multiple zeta values, Carlitz periods and polylogarithms over
// F_q[theta], and run the verification checks.
//
// Exit status: 0 on success, 1 when a verification fails, is only
// incomparable at the requested precision, or hits an internal error, and 2
// on a usage error or an exceeded budget cap.

#include "oracles.hpp"

#include <cmzv/cmzv.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

using namespace cmzv;
using nlohmann::json;

namespace
{

#ifndef CMZV_FIXTURE_DIR
#define CMZV_FIXTURE_DIR "fixtures"
#endif

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Option parsing helpers
// ---------------------------------------------------------------------------

bool is_prime(std::uint32_t p)
{
    if (p < 2) {
        return false;
    }
    for (std::uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

void require_prime(std::uint32_t p)
{
    if (!is_prime(p)) {
        throw UsageError("--p: p must be prime (got " + std::to_string(p) + ")");
    }
}

std::vector<unsigned> parse_levels(const std::string &text)
{
    std::vector<unsigned> out;
    std::set<unsigned> seen;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || std::stoul(item) == 0) {
            throw UsageError("--l: levels must be positive integers (got '" + text + "')");
        }
        const auto l = static_cast<unsigned>(std::stoul(item));
        if (!seen.insert(l).second) {
            throw UsageError("--l: levels must be distinct (got '" + text + "')");
        }
        out.push_back(l);
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

Index parse_index_flag(const std::string &flag, const std::string &text)
{
    if (text.empty()) {
        throw UsageError(flag + ": an index is required, e.g. " + flag + " 2,1");
    }
    try {
        return parse_index(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(flag + ": " + e.what());
    }
}

IndexSet parse_index_set_flag(const std::string &flag, const std::string &text)
{
    if (text.empty()) {
        throw UsageError(flag + ": at least one index is required, e.g. " + flag + " \"1,2;3\"");
    }
    try {
        return parse_index_set(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(flag + ": " + e.what());
    }
}

unsigned workers_from_env()
{
    const char *v = std::getenv("CMZV_WORKERS");
    if (!v || !*v) {
        return 1;
    }
    const std::string s(v);
    if (s.find_first_not_of("0123456789") != std::string::npos || std::stoul(s) == 0 || std::stoul(s) > 256) {
        throw UsageError("CMZV_WORKERS must be an integer between 1 and 256 (got '" + s + "')");
    }
    return static_cast<unsigned>(std::stoul(s));
}

CarlitzContext context_for(std::uint32_t p, unsigned l, unsigned workers)
{
    require_prime(p);
    try {
        CarlitzContext ctx = make_context(p, l);
        ctx.workers = workers;
        return ctx;
    } catch (const std::invalid_argument &e) {
        throw UsageError("--l: " + std::string(e.what()));
    }
}

/// Polynomials in t and theta with coefficients in F_p, e.g. "t^2 + 2*theta*t + 1".
TPoly parse_tpoly(const std::string &text, const CarlitzContext &ctx)
{
    const std::string flag = "--u";
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    if (s.empty()) {
        throw UsageError(flag + ": empty polynomial");
    }
    const TPoly one = t_constant(ThetaPoly::constant(ctx.F().one()));
    TPoly total = t_poly(ctx.field);
    std::size_t i = 0;
    auto read_uint = [&](const std::string &what) {
        const std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        if (start == i) {
            throw UsageError(flag + ": expected " + what + " at position " + std::to_string(start) + " in '" +
                             text + "'");
        }
        return std::stoull(s.substr(start, i - start));
    };
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        }
        TPoly term = one;
        bool first = true;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (!first) {
                if (s[i] != '*') {
                    throw UsageError(flag + ": expected '*' at position " + std::to_string(i) + " in '" + text + "'");
                }
                ++i;
            }
            first = false;
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                const auto c = read_uint("a coefficient") % ctx.p;
                term = term * t_constant(ThetaPoly::constant(ctx.F().element(static_cast<std::uint32_t>(c))));
                continue;
            }
            TPoly base = one;
            if (s.compare(i, 5, "theta") == 0) {
                base = t_constant(ctx.theta_poly());
                i += 5;
            } else if (s.compare(i, 1, "t") == 0) {
                base = t_var(ctx.field);
                i += 1;
            } else {
                throw UsageError(flag + ": unexpected '" + s.substr(i, 1) + "' in '" + text +
                                 "' (use integers, t and theta)");
            }
            std::uint64_t e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                e = read_uint("an exponent");
            }
            term = term * base.pow(e);
        }
        total = negative ? total - term : total + term;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

std::string text_of(const json &v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void emit(const json &doc, const std::string &format)
{
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    if (doc.contains("checks")) {
        for (const auto &c : doc["checks"]) {
            std::string status = c["status"].get<std::string>();
            for (auto &ch : status) {
                ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            }
            std::cout << status << "  " << c["name"].get<std::string>();
            if (c.contains("runtime_ms")) {
                std::cout << "  [" << c["runtime_ms"].get<std::int64_t>() << " ms]";
            }
            std::cout << "\n      " << c["detail"].get<std::string>() << "\n";
        }
        const auto &s = doc["summary"];
        std::cout << "summary: " << s["status"].get<std::string>() << " (" << s["pass"] << " pass, "
                  << s["incomparable"] << " incomparable, " << s["fail"] << " fail, " << s["error"]
                  << " error)\n";
        return;
    }
    auto print_fields = [](const json &obj, const std::string &indent) {
        for (const auto &[k, v] : obj.items()) {
            if (k == "schema_version" || k == "command" || k == "config" || k == "conventions" || k == "results" ||
                k == "l") {
                continue;
            }
            std::cout << indent << k << ": " << text_of(v) << "\n";
        }
    };
    if (doc.contains("results")) {
        for (const auto &r : doc["results"]) {
            std::cout << "[l=" << r["l"] << "]\n";
            print_fields(r, "  ");
        }
    } else {
        print_fields(doc, "");
    }
}

json header(const std::string &command, const json &config)
{
    return {{"schema_version", kReportSchemaVersion},
            {"command", command},
            {"config", config},
            {"conventions", conventions_json()}};
}

/// Merges one result per level: flat for a single level, a list otherwise.
json with_results(json doc, std::vector<json> per_level)
{
    if (per_level.size() == 1) {
        for (const auto &[k, v] : per_level.front().items()) {
            if (k != "l") {
                doc[k] = v;
            }
        }
        return doc;
    }
    doc["results"] = per_level;
    return doc;
}

int report_exit(const json &doc)
{
    return doc["summary"]["status"] == "pass" ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Shared options
// ---------------------------------------------------------------------------

struct Options {
    std::uint32_t p = 2;
    std::string levels = "1";
    std::optional<std::int64_t> prec;
    std::optional<std::size_t> tdeg;
    std::string index;
    std::string format = "json";
    bool timings = false;
    unsigned max_degree = 32;
    std::uint64_t seed = 1;
    std::size_t samples = 100;
};

void add_format(CLI::App *cmd, Options &o)
{
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

void add_field(CLI::App *cmd, Options &o)
{
    cmd->add_option("--p", o.p, "Characteristic p (prime)");
    cmd->add_option("--l", o.levels, "Level l, or a comma list of distinct levels; q = p^l");
}

std::int64_t prec_or(const Options &o, std::int64_t def)
{
    const std::int64_t v = o.prec.value_or(def);
    if (v < 1) {
        throw UsageError("--prec: precision must be at least 1");
    }
    return v;
}

json field_config(const Options &o, const std::vector<unsigned> &levels)
{
    return {{"p", o.p}, {"levels", levels}};
}

// ---------------------------------------------------------------------------
// Value commands
// ---------------------------------------------------------------------------

int cmd_mzv(const Options &o, unsigned workers)
{
    const auto levels = parse_levels(o.levels);
    const Index s = parse_index_flag("--index", o.index);
    const std::int64_t prec = prec_or(o, 40);
    json cfg = field_config(o, levels);
    cfg["index"] = to_string(s);
    cfg["prec"] = prec;
    std::vector<json> out;
    for (unsigned l : levels) {
        const auto ctx = context_for(o.p, l, workers);
        const unsigned need = mzv_degree_bound(ctx.q, s, prec);
        if (need > o.max_degree) {
            throw budget_error("--max-degree cap " + std::to_string(o.max_degree) + " hit: zeta(" + to_string(s) +
                               ") to precision " + std::to_string(prec) + " needs degrees below " +
                               std::to_string(need));
        }
        const auto r = mzv_direct(ctx, s, prec);
        out.push_back({{"l", l},
                       {"value", r.value.to_string()},
                       {"terms_used", r.terms},
                       {"degree_bound", r.degree_bound},
                       {"precision_achieved", r.value.prec()}});
    }
    emit(with_results(header("mzv", cfg), out), o.format);
    return 0;
}

int cmd_atpoly(const Options &o, unsigned s, unsigned workers)
{
    const auto levels = parse_levels(o.levels);
    json cfg = field_config(o, levels);
    cfg["s"] = s;
    std::vector<json> out;
    for (unsigned l : levels) {
        const auto ctx = context_for(o.p, l, workers);
        const auto H = at_polynomials(ctx, s);
        out.push_back({{"l", l}, {"value", to_string(H[s])}});
    }
    emit(with_results(header("atpoly", cfg), out), o.format);
    return 0;
}

int cmd_omega(const Options &o, unsigned workers)
{
    const auto levels = parse_levels(o.levels);
    const std::int64_t prec = prec_or(o, 40);
    const std::size_t tdeg = o.tdeg.value_or(10);
    json cfg = field_config(o, levels);
    cfg["prec"] = prec;
    cfg["tdeg"] = tdeg;
    std::vector<json> out;
    for (unsigned l : levels) {
        const auto ctx = context_for(o.p, l, workers);
        const unsigned factors = omega_factors_for(ctx, prec);
        const TateElement om = omega_series(ctx, factors, tdeg, prec);
        json r{{"l", l}, {"value", om.to_string()}, {"factors", factors}};
        if (om.certificate()) {
            r["tail_certificate"] = {{"slope", ExtRational::of(om.certificate()->slope).to_string()},
                                     {"offset", ExtRational::of(om.certificate()->offset).to_string()}};
        }
        out.push_back(r);
    }
    emit(with_results(header("omega", cfg), out), o.format);
    return 0;
}

int cmd_pitilde(const Options &o, unsigned workers)
{
    const auto levels = parse_levels(o.levels);
    const std::int64_t prec = prec_or(o, 40);
    json cfg = field_config(o, levels);
    cfg["prec"] = prec;
    std::vector<json> out;
    for (unsigned l : levels) {
        const auto ctx = context_for(o.p, l, workers);
        const LaurentSeries v = pi_tilde(ctx, prec);
        out.push_back({{"l", l}, {"value", v.to_string()}, {"precision_achieved", v.prec()}});
    }
    emit(with_results(header("pitilde", cfg), out), o.format);
    return 0;
}

int cmd_cmpl(const Options &o, const std::string &u_text, bool series, unsigned workers)
{
    const auto levels = parse_levels(o.levels);
    const Index s = parse_index_flag("--index", o.index);
    const std::int64_t prec = prec_or(o, 40);
    json cfg = field_config(o, levels);
    cfg["index"] = to_string(s);
    cfg["prec"] = prec;
    cfg["u"] = u_text.empty() ? std::string("AT polynomials H_{s_j-1}") : u_text;
    if (series) {
        cfg["tdeg"] = o.tdeg.value_or(10);
    }
    std::vector<json> out;
    for (unsigned l : levels) {
        const auto ctx = context_for(o.p, l, workers);
        CmplSpec spec{s, {}};
        if (u_text.empty()) {
            spec.u = at_arguments(ctx, s);
        } else {
            std::size_t pos = 0;
            while (true) {
                const std::size_t semi = u_text.find(';', pos);
                spec.u.push_back(parse_tpoly(u_text.substr(pos, semi == std::string::npos ? semi : semi - pos), ctx));
                if (semi == std::string::npos) {
                    break;
                }
                pos = semi + 1;
            }
            if (spec.u.size() != s.size()) {
                throw UsageError("--u: expected " + std::to_string(s.size()) + " polynomials separated by ';', got " +
                                 std::to_string(spec.u.size()));
            }
        }
        const auto conv = convergence_check(ctx, spec);
        if (!conv.pass) {
            throw UsageError("--u: " + conv.describe());
        }
        json r{{"l", l}};
        json args = json::array();
        for (const auto &u : spec.u) {
            args.push_back(to_string(u));
        }
        r["arguments"] = args;
        if (series) {
            r["value"] = cmpl_series(ctx, spec, o.tdeg.value_or(10), prec).to_string();
        } else {
            const LaurentSeries v = cmpl_value(ctx, spec, prec);
            r["value"] = v.to_string();
            r["precision_achieved"] = v.prec();
        }
        out.push_back(r);
    }
    emit(with_results(header("cmpl", cfg), out), o.format);
    return 0;
}

// ---------------------------------------------------------------------------
// Verification commands
// ---------------------------------------------------------------------------

json run_report(const std::string &command, const json &cfg, const std::vector<CheckDef> &defs, unsigned workers,
                bool timings)
{
    SuiteConfig sc;
    sc.workers = workers;
    return report_json(command, cfg, run_checks(defs, sc), timings);
}

std::string sname(const Index &s) { return "s=(" + to_string(s) + ")"; }

int cmd_verify_period(const Options &o, unsigned workers)
{
    const auto levels = parse_levels(o.levels);
    const IndexSet I = parse_index_set_flag("--index", o.index);
    const std::int64_t digits = prec_or(o, 30);
    json cfg = field_config(o, levels);
    cfg["index"] = to_string(I);
    cfg["prec"] = digits;
    std::vector<CheckDef> defs;
    for (unsigned l : levels) {
        const auto ctx = context_for(o.p, l, workers);
        const std::string tag = detail::level_tag(o.p, l);
        for (const auto &s : I) {
            defs.push_back({"period." + tag + "." + sname(s), [ctx, s, digits](const SuiteConfig &) {
                                const auto r = verify_period_identity(ctx, s, digits);
                                return CheckResult{"", r.pass() ? CheckStatus::pass : CheckStatus::fail,
                                                   r.describe(), 0};
                            }});
            defs.push_back({"period_control." + tag + "." + sname(s), [ctx, s, digits](const SuiteConfig &) {
                                const auto r = period_identity_control(ctx, s, digits);
                                const bool killed = r.comparison.kind == Comparison::Kind::unequal;
                                return CheckResult{"", killed ? CheckStatus::pass : CheckStatus::fail,
                                                   r.describe() + (killed ? "; control detected"
                                                                          : "; control NOT detected"),
                                                   0};
                            }});
        }
    }
    const json doc = run_report("verify-period", cfg, defs, workers, o.timings);
    emit(doc, o.format);
    return report_exit(doc);
}

int cmd_verify_rat(const Options &o, unsigned workers)
{
    const auto levels = parse_levels(o.levels);
    const IndexSet I = parse_index_set_flag("--index", o.index);
    const std::int64_t prec = prec_or(o, 40);
    const std::size_t tdeg = o.tdeg.value_or(10);
    json cfg = field_config(o, levels);
    cfg["index"] = to_string(I);
    cfg["prec"] = prec;
    cfg["tdeg"] = tdeg;
    std::vector<CheckDef> defs;
    for (unsigned l : levels) {
        const auto ctx = context_for(o.p, l, workers);
        const std::string tag = detail::level_tag(o.p, l);
        for (const auto &s : I) {
            defs.push_back({"rat." + tag + "." + sname(s), [ctx, s, prec, tdeg](const SuiteConfig &) {
                                const auto u = at_arguments(ctx, s);
                                const auto phi = phi_build(ctx, u, s);
                                const auto psi = psi_build(ctx, u, s, tdeg, prec);
                                const auto rep = frobenius_residual(phi, psi);
                                std::size_t killed = 0;
                                const std::size_t n = s.size() + 1;
                                for (std::size_t k = 0; k < n * n; ++k) {
                                    PsiMatrix m = psi;
                                    m.entries(k / n, k % n) = detail::bump_entry(m.entries(k / n, k % n), ctx);
                                    killed += frobenius_residual(phi, m).zero ? 0 : 1;
                                }
                                const bool ok = rep.passes(prec) && killed == n * n;
                                return CheckResult{"", ok ? CheckStatus::pass : CheckStatus::fail,
                                                   "residual " + rep.describe() + "; " + std::to_string(killed) +
                                                       "/" + std::to_string(n * n) + " single-entry mutants killed",
                                                   0};
                            }});
        }
    }
    const json doc = run_report("verify-rat", cfg, defs, workers, o.timings);
    emit(doc, o.format);
    return report_exit(doc);
}

int cmd_verify_derived(const Options &o, const std::string &steps_text, unsigned workers)
{
    const auto levels = parse_levels(o.levels);
    const IndexSet I = parse_index_set_flag("--index", o.index);
    const std::int64_t prec = prec_or(o, 40);
    const std::size_t tdeg = o.tdeg.value_or(10);
    std::vector<unsigned> steps;
    try {
        for (int k : parse_index(steps_text)) {
            steps.push_back(static_cast<unsigned>(k));
        }
    } catch (const std::invalid_argument &e) {
        throw UsageError("--steps: " + std::string(e.what()));
    }
    json cfg = field_config(o, levels);
    cfg["index"] = to_string(I);
    cfg["prec"] = prec;
    cfg["tdeg"] = tdeg;
    cfg["steps"] = steps;
    std::vector<CheckDef> defs;
    for (unsigned l : levels) {
        const auto ctx = context_for(o.p, l, workers);
        const std::string tag = detail::level_tag(o.p, l);
        for (const auto &s : I) {
            for (unsigned k : steps) {
                defs.push_back({"derived." + tag + "." + sname(s) + ".k=" + std::to_string(k),
                                [ctx, s, k, prec, tdeg](const SuiteConfig &) {
                                    const auto u = at_arguments(ctx, s);
                                    const auto rep = frobenius_residual(derived_product(phi_build(ctx, u, s), k),
                                                                        psi_build(ctx, u, s, tdeg, prec));
                                    return CheckResult{"", rep.passes(prec) ? CheckStatus::pass : CheckStatus::fail,
                                                       "same Psi, derived step " + std::to_string(k) + ": " +
                                                           rep.describe(),
                                                       0};
                                }});
            }
        }
    }
    const json doc = run_report("verify-derived", cfg, defs, workers, o.timings);
    emit(doc, o.format);
    return report_exit(doc);
}

SampleField sample_field(const Options &o, unsigned m, const std::string &kind, unsigned rf_degree)
{
    require_prime(o.p);
    SampleField f;
    f.p = o.p;
    f.m = m;
    f.max_degree = rf_degree;
    f.kind = kind == "ratfunc" ? SampleField::Kind::rational_function : SampleField::Kind::finite;
    if (f.kind == SampleField::Kind::finite) {
        try {
            ff_create(f.p, f.m);
        } catch (const std::invalid_argument &e) {
            throw UsageError("--m: " + std::string(e.what()));
        }
    }
    return f;
}

int cmd_group(const Options &o, bool commutator, unsigned m, const std::string &kind, unsigned rf_degree,
              const std::string &sj_text, unsigned workers)
{
    const IndexSet I = parse_index_set_flag("--index", o.index);
    const SampleField field = sample_field(o, m, kind, rf_degree);
    const IndexSet closure = index_subclosure(I);
    Index sj = closure.back();
    if (commutator && !sj_text.empty()) {
        sj = parse_index_flag("--sj", sj_text);
        if (std::find(closure.begin(), closure.end(), sj) == closure.end()) {
            throw UsageError("--sj: (" + to_string(sj) + ") is not in the sub-closure {" + to_string(closure) + "}");
        }
    }
    json cfg{{"index", to_string(I)},
             {"closure", to_string(closure)},
             {"field", field.name()},
             {"seed", o.seed},
             {"samples", o.samples}};
    if (commutator) {
        cfg["sj"] = to_string(sj);
    }
    const std::string name = commutator ? "group_commutator" : "group_closure";
    std::vector<CheckDef> defs{{name, [=](const SuiteConfig &) {
                                    const BlockReport rep =
                                        commutator ? block_commutator_check(I, sj, o.samples, o.seed, field)
                                                   : block_closure_check(I, o.samples, o.seed, field);
                                    CheckStatus st = rep.pass ? CheckStatus::pass : CheckStatus::fail;
                                    std::string detail = "I = {" + to_string(rep.closure) + "}: " + rep.describe();
                                    if (rep.pass && rep.samples <= rep.degree_bound) {
                                        st = CheckStatus::incomparable;
                                        detail += "; sample count does not exceed the degree bound";
                                    }
                                    return CheckResult{"", st, detail, 0};
                                }}};
    const json doc = run_report(commutator ? "group-commutator" : "group-closure", cfg, defs, workers, o.timings);
    emit(doc, o.format);
    return report_exit(doc);
}

SuiteOracles test_oracles()
{
    return {[](const GaloisField &f, unsigned i) { return oracle::carlitz_d_product(f, i); },
            [](const GaloisField &f, std::uint64_t q, const Index &s, unsigned B, std::int64_t prec) {
                return oracle::mzv_enumerated(f, q, s, B, prec);
            }};
}

int cmd_suite(const Options &o, const std::string &fixtures, bool no_golden, unsigned workers)
{
    SuiteConfig sc;
    sc.prec = o.prec;
    sc.tdeg = o.tdeg;
    sc.seed = o.seed;
    sc.samples = o.samples;
    sc.workers = workers;
    if (o.prec && *o.prec < 1) {
        throw UsageError("--prec: precision must be at least 1");
    }
    if (!no_golden) {
        sc.fixtures = fixtures;
    }
    const json doc = report_json("suite", sc.to_json(), run_suite(sc, test_oracles()), o.timings);
    emit(doc, o.format);
    return report_exit(doc);
}

int run(int argc, char **argv)
{
    CLI::App app{"Multiple zeta values in positive characteristic: values, periods and verification checks"};
    app.require_subcommand(1);
    Options o;
    unsigned s_at = 0;
    std::string u_text, steps = "2,3", kind = "finite", sj, fixtures = CMZV_FIXTURE_DIR;
    unsigned m_ext = 4, rf_degree = 3;
    std::uint32_t group_p = 3;
    bool series = false, no_golden = false;

    auto *mzv = app.add_subcommand("mzv", "Multiple zeta value zeta(s) as a Laurent series in z");
    add_field(mzv, o);
    mzv->add_option("--index", o.index, "Index s, e.g. 2,1")->required();
    mzv->add_option("--prec", o.prec, "Absolute z-precision");
    mzv->add_option("--max-degree", o.max_degree, "Budget cap on the summation degree");
    add_format(mzv, o);

    auto *at = app.add_subcommand("atpoly", "Anderson-Thakur polynomial H_s");
    add_field(at, o);
    at->add_option("--s", s_at, "Subscript s >= 0")->required();
    add_format(at, o);

    auto *om = app.add_subcommand("omega", "The series Omega in the Tate algebra");
    add_field(om, o);
    om->add_option("--prec", o.prec, "Absolute z-precision of each t-coefficient");
    om->add_option("--tdeg", o.tdeg, "t-truncation");
    add_format(om, o);

    auto *pt = app.add_subcommand("pitilde", "Carlitz period by its product formula");
    add_field(pt, o);
    pt->add_option("--prec", o.prec, "Absolute z-precision");
    add_format(pt, o);

    auto *cm = app.add_subcommand("cmpl", "Carlitz multiple polylogarithm at t = theta, or as a t-series");
    add_field(cm, o);
    cm->add_option("--index", o.index, "Index s, e.g. 2,1")->required();
    cm->add_option("--u", u_text, "Arguments u_1;...;u_d as polynomials in t, theta (default: H_{s_j-1})");
    cm->add_option("--prec", o.prec, "Absolute z-precision");
    cm->add_flag("--series", series, "Print the t-series instead of its value at t = theta");
    cm->add_option("--tdeg", o.tdeg, "t-truncation for --series");
    add_format(cm, o);

    auto *vp = app.add_subcommand("verify-period", "Check L(H)(theta) = Gamma*zeta with a perturbed control");
    add_field(vp, o);
    vp->add_option("--index", o.index, "Indices separated by ';', e.g. \"2;2,1\"")->required();
    vp->add_option("--prec", o.prec, "z-digits compared past the leading term");
    vp->add_flag("--timings", o.timings, "Include runtime_ms per check");
    add_format(vp, o);

    auto *vr = app.add_subcommand("verify-rat", "Check Psi = Phi^(l) Psi^(l) with mutation testing");
    add_field(vr, o);
    vr->add_option("--index", o.index, "Indices separated by ';'")->required();
    vr->add_option("--prec", o.prec, "Absolute z-precision");
    vr->add_option("--tdeg", o.tdeg, "t-truncation");
    vr->add_flag("--timings", o.timings, "Include runtime_ms per check");
    add_format(vr, o);

    auto *vd = app.add_subcommand("verify-derived", "Check the derived equations with the same Psi");
    add_field(vd, o);
    vd->add_option("--index", o.index, "Indices separated by ';'")->required();
    vd->add_option("--steps", steps, "Derived steps, e.g. 2,3");
    vd->add_option("--prec", o.prec, "Absolute z-precision");
    vd->add_option("--tdeg", o.tdeg, "t-truncation");
    vd->add_flag("--timings", o.timings, "Include runtime_ms per check");
    add_format(vd, o);

    CLI::App *groups[2];
    int gi = 0;
    for (const char *name : {"group-closure", "group-commutator"}) {
        auto *g = app.add_subcommand(name, gi == 0 ? "Sampled closure and inverse of the block group"
                                                   : "Sampled commutator identity in the block group");
        g->add_option("--index", o.index, "Indices separated by ';' (the sub-closure is taken)")->required();
        g->add_option("--p", group_p, "Characteristic of the sample field");
        g->add_option("--m", m_ext, "Extension degree of the finite sample field");
        g->add_option("--field", kind, "finite or ratfunc")->check(CLI::IsMember({"finite", "ratfunc"}));
        g->add_option("--rf-degree", rf_degree, "Numerator/denominator degree for ratfunc samples");
        g->add_option("--samples", o.samples, "Number of random samples");
        g->add_option("--seed", o.seed, "Random seed");
        g->add_flag("--timings", o.timings, "Include runtime_ms per check");
        if (gi == 1) {
            g->add_option("--sj", sj, "The index s_j carrying the V-hat parameter (default: deepest)");
        }
        add_format(g, o);
        groups[gi++] = g;
    }

    auto *su = app.add_subcommand("suite", "Run every acceptance check");
    su->add_option("--prec", o.prec, "Override every check's working precision");
    su->add_option("--tdeg", o.tdeg, "Override every check's t-truncation");
    su->add_option("--seed", o.seed, "Seed for sampled checks");
    su->add_option("--samples", o.samples, "Samples for the block group checks");
    su->add_option("--fixtures", fixtures, "Golden-file directory");
    su->add_flag("--no-golden", no_golden, "Skip the golden-file checks");
    su->add_flag("--timings", o.timings, "Include runtime_ms per check");
    add_format(su, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    const unsigned workers = workers_from_env();
    if (mzv->parsed()) {
        return cmd_mzv(o, workers);
    }
    if (at->parsed()) {
        return cmd_atpoly(o, s_at, workers);
    }
    if (om->parsed()) {
        return cmd_omega(o, workers);
    }
    if (pt->parsed()) {
        return cmd_pitilde(o, workers);
    }
    if (cm->parsed()) {
        return cmd_cmpl(o, u_text, series, workers);
    }
    if (vp->parsed()) {
        return cmd_verify_period(o, workers);
    }
    if (vr->parsed()) {
        return cmd_verify_rat(o, workers);
    }
    if (vd->parsed()) {
        return cmd_verify_derived(o, steps, workers);
    }
    if (groups[0]->parsed() || groups[1]->parsed()) {
        o.p = group_p;
    }
    if (groups[0]->parsed()) {
        return cmd_group(o, false, m_ext, kind, rf_degree, sj, workers);
    }
    if (groups[1]->parsed()) {
        return cmd_group(o, true, m_ext, kind, rf_degree, sj, workers);
    }
    return cmd_suite(o, fixtures, no_golden, workers);
}

} // namespace

int main(int argc, char **argv)
{
    try {
        return run(argc, argv);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error &e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
