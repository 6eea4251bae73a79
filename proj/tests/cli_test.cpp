#include "seifert/cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using seifert::cli::Json;
using seifert::cli::run;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json json_of(const seifert::cli::CommandResult& r)
{
    return Json::parse(r.output);
}

} // namespace

TEST(Cli, ClassifyText)
{
    const auto r = run({"classify", "(0,o1|(2,1),(2,1),(2,1),(2,1),(1,-2))"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("geometry: E3"), std::string::npos) << r.output;
    EXPECT_NE(r.output.find("case: 2a"), std::string::npos);
    EXPECT_NE(r.output.find("chi_orb: 0/1"), std::string::npos);
}

TEST(Cli, ClassifyJson)
{
    const auto r = run({"--json", "classify", "(0,o1|(2,1),(2,1),(1,-1))"});
    ASSERT_EQ(r.exit_code, 0);
    const Json j = json_of(r);
    EXPECT_EQ(j.begin().key(), "schema");
    EXPECT_EQ(j["schema"], "1");
    EXPECT_EQ(j["geometry"], "S2xR");
    EXPECT_EQ(j["case"], "1b");
    EXPECT_EQ(j["euler_number"], "0/1");
    EXPECT_EQ(j["chi_orb"], "1/1");
}

TEST(Cli, ClassifyNonCoprimeIsDomainError)
{
    const auto r = run({"classify", "(0,o1|(2,2))"});
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.message.find("position"), std::string::npos);
}

TEST(Cli, ClassifyNonOrientableHasNoCase)
{
    const auto r = run({"--json", "classify", "(2,n1|)"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_TRUE(json_of(r)["case"].is_null());
    EXPECT_EQ(json_of(r)["geometry"], "Other");
}

TEST(Cli, Admissible)
{
    const auto r = run({"admissible", "(0,o1|(3,1),(3,1),(3,1),(1,-1))"});
    ASSERT_EQ(r.exit_code, 0);
    const Json j = json_of(r);
    EXPECT_FALSE(j["admissible"].get<bool>());
    EXPECT_EQ(j["violations"], Json::array({"OrderGreaterThanTwo"}));
    EXPECT_TRUE(j["case_label"].is_null());
}

TEST(Cli, EnumerateMatchesGolden)
{
    const auto r = run({"enumerate", "--gmax", "3", "--nmax", "8"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.output, read_file(SEIFERT_TEST_DATA_DIR "/golden/enumerate_g3_n8.txt"));
}

TEST(Cli, EnumerateJsonCount)
{
    const auto r = run({"--json", "enumerate", "--gmax", "1", "--nmax", "4"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(json_of(r)["descriptors"].size(), 6u);
}

TEST(Cli, MatrixArgumentsWithLeadingMinus)
{
    auto r = run({"mcg", "class", "-1,0;0,1"});
    ASSERT_EQ(r.exit_code, 0) << r.output;
    EXPECT_EQ(r.output, "ReflType\n");

    r = run({"mcg", "class", "1,0;-1,-1"});
    EXPECT_EQ(r.output, "AntiType\n");

    r = run({"mcg", "conjugate", "1,0;-1,-1", "0,1;1,0", "--bound", "3"});
    ASSERT_EQ(r.exit_code, 0) << r.output;
    EXPECT_NE(r.output.find("conjugator: "), std::string::npos);
}

TEST(Cli, MatrixNotInvolution)
{
    EXPECT_EQ(run({"mcg", "class", "0,-1;1,0"}).exit_code, 1);
    EXPECT_EQ(run({"mcg", "class", "2,0;0,1"}).exit_code, 1);
    EXPECT_EQ(run({"mcg", "class", "1,2;3"}).exit_code, 1);
}

TEST(Cli, Extend)
{
    auto r = run({"extend", "--slope", "1,2", "--matrix", "1,-1;0,-1"});
    ASSERT_EQ(r.exit_code, 0) << r.output;
    EXPECT_EQ(r.output.substr(0, 5), "true\n");

    r = run({"--json", "extend", "--slope", "3,1", "--matrix", "1,0;0,-1"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_FALSE(json_of(r)["extends"].get<bool>());
    EXPECT_EQ(json_of(r)["allowed"], Json::array({"1,-6;0,-1", "-1,6;0,1"}));

    EXPECT_EQ(run({"extend", "--slope", "3,2", "--matrix", "1,0;0,-1"}).exit_code, 1);
    EXPECT_EQ(run({"extend", "--slope", "2,4", "--matrix", "1,0;0,-1"}).exit_code, 1);
}

TEST(Cli, VerifyV221)
{
    const auto r = run({"verify-v221"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("result: pass"), std::string::npos) << r.output;
    const auto j = run({"--json", "verify-v221"});
    EXPECT_TRUE(json_of(j)["passed"].get<bool>());
}

TEST(Cli, SurfaceClasses)
{
    const auto r = run({"surface-classes", "--genus", "1"});
    ASSERT_EQ(r.exit_code, 0);
    const Json j = json_of(r);
    EXPECT_EQ(j["classes"].size(), 6u);
    EXPECT_EQ(j["counts"]["preserving"], 3);
    EXPECT_EQ(j["counts"]["reversing"], 3);

    const auto p = run({"surface-classes", "--genus", "2", "--filter", "preserving"});
    EXPECT_EQ(json_of(p)["classes"].size(), 3u);
    EXPECT_EQ(run({"surface-classes", "--genus", "2", "--filter", "odd"}).exit_code, 2);
}

TEST(Cli, Census)
{
    const auto r = run({"--json", "census", "(0,o1|(2,1),(2,1),(2,1),(2,1),(1,-2))"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(json_of(r)["count"], 6);
    EXPECT_EQ(run({"census", "(1,o1|)"}).exit_code, 1);
}

TEST(Cli, Lift)
{
    const auto r = run({"--json", "lift", "(2,n1|)"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(json_of(r)["cover"], "(1,o1|)");
    EXPECT_TRUE(json_of(r)["chi_doubles"].get<bool>());
    EXPECT_EQ(run({"lift", "(1,o1|)"}).exit_code, 1);
}

TEST(Cli, PsiCheckSeedPrecedence)
{
    const char* m = "(0,o1|(2,1),(2,1),(2,1),(2,1),(1,-2))";
    auto r = run({"--json", "psi-check", m, "--trials", "5"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(json_of(r)["seed"], 20190101u);

    r = run({"--json", "psi-check", m, "--trials", "5"}, "42");
    EXPECT_EQ(json_of(r)["seed"], 42u);

    r = run({"--json", "psi-check", m, "--trials", "5", "--seed", "7"}, "42");
    EXPECT_EQ(json_of(r)["seed"], 7u);

    EXPECT_EQ(run({"psi-check", m}, "not-a-number").exit_code, 2);
}

TEST(Cli, Deterministic)
{
    const std::vector<std::string> args{"--json", "psi-check", "(0,o1|(2,1),(2,1),(1,-1))", "--seed", "3"};
    EXPECT_EQ(run(args).output, run(args).output);
    EXPECT_EQ(run({"enumerate", "--gmax", "2", "--nmax", "4"}).output,
              run({"enumerate", "--gmax", "2", "--nmax", "4"}).output);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).exit_code, 2);
    EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
    EXPECT_EQ(run({"classify"}).exit_code, 2);
    EXPECT_EQ(run({"enumerate", "--gmax", "x", "--nmax", "1"}).exit_code, 2);
    EXPECT_EQ(run({"enumerate", "--gmax", "1"}).exit_code, 2);
}

TEST(Cli, HelpIsNotAnError)
{
    const auto r = run({"--help"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("classify"), std::string::npos);
}
