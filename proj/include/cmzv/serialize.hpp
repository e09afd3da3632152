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

#ifndef CMZV_SERIALIZE_HPP
#define CMZV_SERIALIZE_HPP

/// @file serialize.hpp
/// JSON form of Phi and Psi matrices and a structural diff for golden files.
/// Entries are stored as their canonical text. The diff understands the two
/// layers of that text (t-terms whose coefficients are z-series), so a
/// mismatch is reported at the first differing t- and z-exponent rather than
/// as a raw string difference. Uses the single-header nlohmann json.

#include <cmzv/motive.hpp>

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cmzv
{

inline constexpr int kMatrixSchemaVersion = 1;

template <class T, class Fn>
nlohmann::json matrix_entries_json(const Matrix<T> &m, Fn &&text)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(text(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json to_json(const PhiMatrix &phi)
{
    return {{"schema_version", kMatrixSchemaVersion},
            {"kind", "phi_twisted"},
            {"level", phi.level},
            {"size", phi.twisted.rows()},
            {"entries", matrix_entries_json(phi.twisted, [](const TPoly &f) { return to_string(f); })}};
}

inline nlohmann::json to_json(const PsiMatrix &psi)
{
    return {{"schema_version", kMatrixSchemaVersion},
            {"kind", "psi"},
            {"level", psi.level},
            {"size", psi.entries.rows()},
            {"entries", matrix_entries_json(psi.entries, [](const TateElement &e) { return e.to_string(); })}};
}

namespace detail
{

inline int paren_depth_at(const std::string &s, std::size_t pos)
{
    int d = 0;
    for (std::size_t i = 0; i < pos; ++i) {
        d += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
    }
    return d;
}

/// Top-level " + " separated terms.
inline std::vector<std::string> split_terms(const std::string &s)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(" + ", pos);
        while (next != std::string::npos && paren_depth_at(s, next) != 0) {
            next = s.find(" + ", next + 3);
        }
        out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos) {
            return out;
        }
        pos = next + 3;
    }
}

/// Groups terms by the exponent of `var` appearing at top level, so
/// "c*z^5" has key 5, "(..)*t^2" key 2, "t" key 1 and a bare constant key 0.
/// The precision term O(var^N) gets key N.
inline std::map<std::int64_t, std::string> terms_by_exponent(const std::string &s, char var)
{
    std::map<std::int64_t, std::string> out;
    if (s == "0") {
        return out;
    }
    const std::string big_o = std::string("O(") + var + "^";
    for (const auto &term : split_terms(s)) {
        std::int64_t key = 0;
        if (term.rfind(big_o, 0) == 0) {
            key = std::stoll(term.substr(big_o.size()));
        } else {
            // last top-level occurrence of var (not inside a coefficient)
            for (std::size_t i = term.size(); i-- > 0;) {
                const bool boundary = i == 0 || term[i - 1] == '*';
                const bool ends = i + 1 == term.size() || term[i + 1] == '^';
                if (term[i] == var && boundary && ends && paren_depth_at(term, i) == 0) {
                    key = i + 1 == term.size() ? 1 : std::stoll(term.substr(i + 2));
                    break;
                }
            }
        }
        auto &slot = out[key];
        slot += (slot.empty() ? "" : " + ") + term;
    }
    return out;
}

inline std::optional<std::int64_t> first_differing_key(const std::map<std::int64_t, std::string> &a,
                                                       const std::map<std::int64_t, std::string> &b)
{
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ia == a.end()) {
            return ib->first;
        }
        if (ib == b.end()) {
            return ia->first;
        }
        if (ia->first != ib->first) {
            return std::min(ia->first, ib->first);
        }
        if (ia->second != ib->second) {
            return ia->first;
        }
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

/// Coefficient text of a "(series)*t^k" term.
inline std::string t_coefficient_text(const std::string &grouped)
{
    const std::size_t star = grouped.rfind(")*t");
    if (grouped.empty() || grouped.front() != '(' || star == std::string::npos) {
        return grouped;
    }
    return grouped.substr(1, star - 1);
}

} // namespace detail

/// Result of comparing a fresh matrix against a stored one.
struct GoldenDiff {
    bool equal = true;
    std::string where;                  // "(r,c)" 1-based, or the header field
    std::optional<std::int64_t> t_exponent;
    std::optional<std::int64_t> z_exponent;
    std::string expected;
    std::string actual;

    std::string describe() const
    {
        if (equal) {
            return "matches golden file";
        }
        std::string out = "differs at " + where;
        if (t_exponent) {
            out += ", t^" + std::to_string(*t_exponent);
        }
        if (z_exponent) {
            out += ", first differing exponent z^" + std::to_string(*z_exponent);
        }
        return out;
    }
};

/// Locates the first difference of two entry texts. Psi entries are t-series
/// of z-series; Phi entries are polynomials in t, reported by t-exponent.
inline void locate_entry_difference(const std::string &kind, const std::string &expected,
                                    const std::string &actual, GoldenDiff &diff)
{
    const auto te = detail::terms_by_exponent(expected, 't');
    const auto ta = detail::terms_by_exponent(actual, 't');
    diff.t_exponent = detail::first_differing_key(te, ta);
    if (kind != "psi" || !diff.t_exponent) {
        return;
    }
    auto coeff = [&](const std::map<std::int64_t, std::string> &m) -> std::string {
        const auto it = m.find(*diff.t_exponent);
        return it == m.end() ? std::string("0") : detail::t_coefficient_text(it->second);
    };
    diff.z_exponent = detail::first_differing_key(detail::terms_by_exponent(coeff(te), 'z'),
                                                  detail::terms_by_exponent(coeff(ta), 'z'));
}

inline GoldenDiff golden_diff(const nlohmann::json &expected, const nlohmann::json &actual)
{
    GoldenDiff d;
    for (const char *key : {"schema_version", "kind", "level", "size"}) {
        if (expected.value(key, nlohmann::json()) != actual.value(key, nlohmann::json())) {
            d.equal = false;
            d.where = key;
            d.expected = expected.value(key, nlohmann::json()).dump();
            d.actual = actual.value(key, nlohmann::json()).dump();
            return d;
        }
    }
    const auto &ee = expected.at("entries");
    const auto &ea = actual.at("entries");
    const std::string kind = expected.at("kind").get<std::string>();
    for (std::size_t r = 0; r < ea.size(); ++r) {
        for (std::size_t c = 0; c < ea[r].size(); ++c) {
            const std::string x = ee.at(r).at(c).get<std::string>();
            const std::string y = ea[r][c].get<std::string>();
            if (x != y) {
                d.equal = false;
                d.where = "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
                d.expected = x;
                d.actual = y;
                locate_entry_difference(kind, x, y, d);
                return d;
            }
        }
    }
    return d;
}

/// First differing exponent of two canonical series texts (for stored values).
inline GoldenDiff golden_value_diff(const std::string &expected, const std::string &actual)
{
    GoldenDiff d;
    if (expected == actual) {
        return d;
    }
    d.equal = false;
    d.where = "value";
    d.expected = expected;
    d.actual = actual;
    d.z_exponent = detail::first_differing_key(detail::terms_by_exponent(expected, 'z'),
                                               detail::terms_by_exponent(actual, 'z'));
    return d;
}

} // namespace cmzv

#endif
