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

// Runs the cmzv executable as a subprocess and checks exit codes and reports.

#include <cmzv/cmzv.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace cmzv;
using nlohmann::json;

namespace
{

struct CliRun {
    int code;
    std::string out;  // stdout, then stderr
};

CliRun cli(const std::string &args, const std::string &env = "")
{
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" CMZV_CLI "' " + args + " 2>&1";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return {-1, "popen failed"};
    }
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json report(const CliRun &r)
{
    return json::parse(r.out);
}

} // namespace

TEST(Cli, MzvValueMatchesLibrary)
{
    const CliRun r = cli("mzv --p 3 --l 1 --index 2,1 --prec 40");
    ASSERT_EQ(r.code, 0) << r.out;
    const json j = report(r);
    const auto lib = mzv_direct(make_context(3, 1), {2, 1}, 40);
    EXPECT_EQ(j["value"], lib.value.to_string());
    EXPECT_EQ(j["terms_used"], lib.terms);
    EXPECT_EQ(j["precision_achieved"], 40);
    EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
    EXPECT_TRUE(j["conventions"].contains("uniformizer"));
    EXPECT_TRUE(j["conventions"].contains("at_slot"));
    EXPECT_TRUE(j["conventions"].contains("twist_form"));
}

TEST(Cli, SeveralLevelsGiveOneResultEach)
{
    const CliRun r = cli("pitilde --p 2 --l 1,2,3 --prec 12");
    ASSERT_EQ(r.code, 0) << r.out;
    const json j = report(r);
    ASSERT_EQ(j["results"].size(), 3u);
    EXPECT_EQ(j["results"][2]["l"], 3);
    EXPECT_EQ(j["results"][1]["value"], pi_tilde(make_context(2, 2), 12).to_string());
}

TEST(Cli, VerifyPeriodPasses)
{
    const CliRun r = cli("verify-period --p 2 --l 1 --index 2 --prec 30");
    ASSERT_EQ(r.code, 0) << r.out;
    const json j = report(r);
    EXPECT_EQ(j["summary"]["status"], "pass");
    EXPECT_EQ(j["checks"].size(), 2u);  // identity and its perturbed control
    for (const auto &c : j["checks"]) {
        EXPECT_FALSE(c.contains("runtime_ms"));
    }
}

TEST(Cli, TimingsAreOptIn)
{
    const json j = report(cli("verify-rat --p 3 --index 1 --timings"));
    EXPECT_TRUE(j["checks"][0].contains("runtime_ms"));
}

TEST(Cli, UsageErrorsExitTwoAndNameTheFlag)
{
    struct Case {
        const char *args;
        const char *needle;
    };
    const Case cases[] = {
        {"mzv --p 4 --index 1", "p must be prime"},
        {"mzv --l 1,1 --index 1", "--l"},
        {"mzv --index 0,1", "--index"},
        {"mzv --index 1 --prec 0", "--prec"},
        {"mzv --index 1 --frobnicate", "frobnicate"},
        {"cmpl --index 1 --u theta^3", "--u"},
        {"cmpl --index 1,1 --u t", "--u"},
        {"verify-derived --index 1 --steps x", "--steps"},
        {"group-commutator --index 1,2 --sj 4", "--sj"},
        {"group-closure --index 1 --m 0", "--m"},
        {"", "subcommand"},
    };
    for (const auto &c : cases) {
        const CliRun r = cli(c.args);
        EXPECT_EQ(r.code, 2) << c.args << "\n" << r.out;
        EXPECT_NE(r.out.find(c.needle), std::string::npos) << c.args << "\n" << r.out;
    }
}

TEST(Cli, BudgetExceedanceNamesTheCap)
{
    const CliRun r = cli("mzv --index 3 --prec 2000 --max-degree 3");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("--max-degree cap 3"), std::string::npos) << r.out;
}

TEST(Cli, InvalidWorkerCountIsAUsageError)
{
    const CliRun r = cli("pitilde", "CMZV_WORKERS=zero");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("CMZV_WORKERS"), std::string::npos);
}

TEST(Cli, GroupCommandsListTheClosure)
{
    const CliRun r = cli("group-closure --index \"2,1;3\" --samples 30");
    ASSERT_EQ(r.code, 0) << r.out;
    const json j = report(r);
    EXPECT_EQ(j["config"]["closure"], "1;2;3;2,1");
    EXPECT_EQ(j["config"]["field"], "F_3^4");

    const CliRun few = cli("group-commutator --index 1,2 --samples 3");
    EXPECT_EQ(few.code, 1) << few.out;
    EXPECT_EQ(report(few)["summary"]["status"], "incomparable");
}

TEST(Cli, SuiteIsByteIdenticalAcrossWorkerCounts)
{
    const CliRun one = cli("suite", "CMZV_WORKERS=1");
    const CliRun four = cli("suite", "CMZV_WORKERS=4");
    const CliRun again = cli("suite", "CMZV_WORKERS=4");
    ASSERT_EQ(one.code, 0) << one.out;
    EXPECT_EQ(one.out, four.out);
    EXPECT_EQ(four.out, again.out);
    const json j = report(one);
    EXPECT_EQ(j["summary"]["status"], "pass");
    EXPECT_EQ(j["summary"]["fail"], 0);
}

TEST(Cli, SuiteAtPrecisionOneIsIncomparableNotFailed)
{
    const CliRun r = cli("suite --prec 1 --no-golden");
    const json j = report(r);
    EXPECT_GT(j["summary"]["incomparable"].get<int>(), 0);
    EXPECT_EQ(j["summary"]["fail"], 0) << r.out;
    EXPECT_EQ(j["summary"]["error"], 0) << r.out;
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, SuiteReportsTamperedGoldenFile)
{
    const auto dir = std::filesystem::temp_directory_path() / "cmzv_cli_fixtures";
    std::filesystem::remove_all(dir);
    std::filesystem::copy(CMZV_FIXTURE_DIR, dir);
    json stored = json::parse(std::ifstream(dir / "values.json"));
    std::string v = stored["values"]["zeta(1) p=3 l=1 prec=30"].get<std::string>();
    const std::size_t at = v.find("1*z^6");
    ASSERT_NE(at, std::string::npos);
    v.replace(at, 1, "2");
    stored["values"]["zeta(1) p=3 l=1 prec=30"] = v;
    std::ofstream(dir / "values.json") << stored.dump(2);

    const CliRun r = cli("suite --fixtures '" + dir.string() + "'");
    std::filesystem::remove_all(dir);
    EXPECT_EQ(r.code, 1);
    const json j = report(r);
    bool found = false;
    for (const auto &c : j["checks"]) {
        if (c["name"] == "golden.values") {
            found = true;
            EXPECT_EQ(c["status"], "fail");
            EXPECT_NE(c["detail"].get<std::string>().find("first differing exponent z^6"), std::string::npos)
                << c["detail"];
        }
    }
    EXPECT_TRUE(found);
}

TEST(Cli, TextFormatSummarizes)
{
    const CliRun r = cli("verify-derived --p 3 --index 2,1 --format text");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("summary: pass (2 pass"), std::string::npos) << r.out;
}
