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

#include <cmzv/suite.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace cmzv;
using nlohmann::json;

namespace
{

const std::string kFixtures = CMZV_FIXTURE_DIR;

json load(const std::string &file)
{
    return json::parse(detail::read_file(kFixtures + "/" + file));
}

const GoldenDocument &document(const std::string &file)
{
    static const auto docs = golden_documents();
    for (const auto &d : docs) {
        if (d.file == file) {
            return d;
        }
    }
    throw std::logic_error("no golden document " + file);
}

/// A scratch copy of the fixture directory, removed on destruction.
struct ScratchFixtures {
    std::filesystem::path dir;

    explicit ScratchFixtures(const std::string &name)
        : dir(std::filesystem::temp_directory_path() / ("cmzv_golden_" + name))
    {
        std::filesystem::remove_all(dir);
        std::filesystem::copy(kFixtures, dir);
    }
    ~ScratchFixtures() { std::filesystem::remove_all(dir); }

    void write(const std::string &file, const json &j) const { std::ofstream(dir / file) << j.dump(2) << "\n"; }
};

} // namespace

TEST(Golden, TermSplittingIgnoresNestedSums)
{
    const auto terms = detail::split_terms("(1*z^2 + O(z^5))*t^0 + (O(z^5))*t^1 + O(t^2)");
    ASSERT_EQ(terms.size(), 3u);
    EXPECT_EQ(terms[0], "(1*z^2 + O(z^5))*t^0");
    EXPECT_EQ(terms[2], "O(t^2)");
}

TEST(Golden, TermsAreKeyedByTopLevelExponent)
{
    const auto byt = detail::terms_by_exponent("t^2 + theta*t + theta^3", 't');
    EXPECT_EQ(byt.size(), 3u);
    EXPECT_EQ(byt.at(2), "t^2");
    EXPECT_EQ(byt.at(1), "theta*t");
    EXPECT_EQ(byt.at(0), "theta^3");

    const auto byz = detail::terms_by_exponent("1*z^-3 + 2*z^0 + O(z^7)", 'z');
    EXPECT_EQ(byz.at(-3), "1*z^-3");
    EXPECT_EQ(byz.at(7), "O(z^7)");
}

TEST(Golden, StoredFilesMatchFreshComputation)
{
    for (const auto &doc : golden_documents()) {
        const GoldenDiff d = golden_compare(load(doc.file), doc.build());
        EXPECT_TRUE(d.equal) << doc.file << ": " << d.describe();
    }
}

TEST(Golden, TamperedPsiEntryReportsFirstDifferingExponent)
{
    json stored = load("example_psi_p2l1.json");
    std::string entry = stored["entries"][1][1].get<std::string>();
    // t^1 coefficient of (2,2) starts 1*z^4 + 1*z^6; move the second term.
    const std::size_t at = entry.find("1*z^6");
    ASSERT_NE(at, std::string::npos);
    entry.replace(at, 5, "1*z^7");
    stored["entries"][1][1] = entry;

    const GoldenDiff d = golden_compare(stored, document("example_psi_p2l1.json").build());
    EXPECT_FALSE(d.equal);
    EXPECT_EQ(d.where, "(2,2)");
    EXPECT_EQ(d.t_exponent, 1);
    EXPECT_EQ(d.z_exponent, 6);
    EXPECT_EQ(d.describe(), "differs at (2,2), t^1, first differing exponent z^6");
}

TEST(Golden, TamperedPhiEntryReportsTExponent)
{
    json stored = load("example_phi_p2l2.json");
    const auto &fresh = document("example_phi_p2l2.json").build();
    ASSERT_EQ(stored["entries"][1][1], "t + theta^4");
    stored["entries"][1][1] = "t^7 + t + theta^4";
    const GoldenDiff d = golden_compare(stored, fresh);
    EXPECT_FALSE(d.equal);
    EXPECT_EQ(d.where, "(2,2)");
    EXPECT_EQ(d.t_exponent, 7);
}

TEST(Golden, TamperedHeaderIsNamed)
{
    json stored = load("example_phi_p2l1.json");
    stored["level"] = 3;
    const GoldenDiff d = golden_compare(stored, document("example_phi_p2l1.json").build());
    EXPECT_FALSE(d.equal);
    EXPECT_EQ(d.where, "level");
}

TEST(Golden, TamperedValueReportsExponent)
{
    json stored = load("values.json");
    std::string v = stored["values"]["zeta(2,1) p=2 l=1 prec=30"].get<std::string>();
    const std::size_t big_o = v.find("O(z^30)");
    ASSERT_NE(big_o, std::string::npos);
    v.insert(big_o, "1*z^29 + ");
    stored["values"]["zeta(2,1) p=2 l=1 prec=30"] = v;
    const GoldenDiff d = golden_compare(stored, document("values.json").build());
    EXPECT_FALSE(d.equal);
    EXPECT_EQ(d.where, "value 'zeta(2,1) p=2 l=1 prec=30'");
    EXPECT_EQ(d.z_exponent, 29);
}

TEST(Golden, SuiteCheckFailsOnTamperedDirectory)
{
    ScratchFixtures scratch("suite");
    json stored = load("example_psi_p2l2.json");
    std::string entry = stored["entries"][1][1].get<std::string>();
    const std::size_t plus = entry.find(" + ");
    ASSERT_NE(plus, std::string::npos);
    entry.insert(plus, " + 1*z^1");
    stored["entries"][1][1] = entry;
    scratch.write("example_psi_p2l2.json", stored);

    SuiteConfig cfg;
    cfg.fixtures = scratch.dir.string();
    const auto r = detail::check_golden(cfg, document("example_psi_p2l2.json"));
    EXPECT_EQ(r.status, CheckStatus::fail);
    EXPECT_NE(r.detail.find("first differing exponent z^1"), std::string::npos) << r.detail;

    const auto ok = detail::check_golden(cfg, document("example_phi_p2l2.json"));
    EXPECT_EQ(ok.status, CheckStatus::pass) << ok.detail;
}
