#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

namespace {

const std::string kTool = RRBTOOL_PATH;
const std::filesystem::path kFixtures = RRBKIT_FIXTURE_DIR;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + kTool + "' " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& rel) { return "'" + (kFixtures / rel).string() + "'"; }

nlohmann::json json_of(const CliRun& r) { return nlohmann::json::parse(r.out); }

TEST(Validate, ValidGroup) {
  const CliRun r = run("validate " + fx("groups/z4.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order 4"), std::string::npos);
}

TEST(Validate, BrokenTableNamesWitness) {
  const CliRun r = run("--format json validate " + fx("groups/broken.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json_of(r).at("error"), "NoInverse(1)");
}

TEST(Validate, CorruptedOperatorNamesPair) {
  const CliRun r = run("--format json validate " + fx("rrb/z3_z2_inversion_corrupt.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json_of(r).at("kind"), "RRBAxiomFails");
  EXPECT_EQ(json_of(r).at("witness").size(), 2u);
}

TEST(Validate, ExtensionAndModule) {
  EXPECT_EQ(run("validate " + fx("extensions/s3-sign.json")).code, 0);
  EXPECT_EQ(run("validate " + fx("modules/klein-swap.json")).code, 0);
}

TEST(Validate, ParseErrors) {
  EXPECT_EQ(run("validate " + fx("does-not-exist.json")).code, 1);
  EXPECT_EQ(run("validate " + fx("actions/z2_on_z2_trivial.json")).code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("--format yaml validate " + fx("groups/z4.json")).code, 1);
}

TEST(Enumerate, TrivialActionGivesHomomorphisms) {
  const CliRun r = run("--format json enumerate " + fx("groups/z2.json") + " " + fx("groups/z2.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r).at("count"), 2);
  EXPECT_EQ(json_of(r).at("operators").at(0), nlohmann::json({0, 0}));
}

TEST(Enumerate, InversionFamily) {
  const CliRun r = run("--format json enumerate " + fx("groups/z3.json") + " " + fx("groups/z2.json") +
                    " " + fx("actions/z2_on_z3_inversion.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r).at("count"), 1);
}

TEST(Enumerate, BudgetExceeded) {
  const std::string args = "enumerate " + fx("groups/z3.json") + " " + fx("groups/z2.json") + " " +
                           fx("actions/z2_on_z3_inversion.json");
  EXPECT_EQ(run("--budget 2 " + args).code, 3);
  EXPECT_EQ(run(args, "RRB_BUDGET=2").code, 3);
  EXPECT_EQ(run("--budget 1000 " + args, "RRB_BUDGET=2").code, 0);
}

TEST(Cohomology, TrivialZ2Module) {
  const CliRun r = run("--format json cohomology " + fx("modules/z2-trivial.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r).at("h2"), nlohmann::json({2, 2, 2, 2}));
  EXPECT_FALSE(json_of(r).contains("witnesses"));
  const CliRun reps = run("--format json cohomology --representatives " + fx("modules/z2-trivial.json"));
  EXPECT_EQ(json_of(reps).at("witnesses").at("h2_generators").size(), 4u);
}

TEST(Wells, DirectProductFixture) {
  const CliRun r = run("--format json wells " + fx("extensions/z2-z3-mu-sigma-split.json"));
  EXPECT_EQ(r.code, 0);
  const auto j = json_of(r);
  for (const auto& [name, ok] : j.at("exactness").items()) EXPECT_TRUE(ok.get<bool>()) << name;
  for (const auto& p : j.at("pairs")) {
    if (p.at("in_C").get<bool>()) {
      EXPECT_TRUE(p.at("inducible").get<bool>());
    }
  }
}

TEST(Wells, OrderCapExitsWithThree) {
  EXPECT_EQ(run("--max-order 2 wells " + fx("extensions/s3-sign.json")).code, 3);
}

TEST(Inducible, IdentityPair) {
  const CliRun r = run("--format json inducible " + fx("extensions/z2-trivial-nontrivial.json") + " " +
                    fx("pairs/z2-trivial-identity.json"));
  EXPECT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_TRUE(j.at("inducible").get<bool>());
  EXPECT_TRUE(j.at("agree").get<bool>());
  EXPECT_EQ(j.at("witness").at("psi"), nlohmann::json({0, 1, 2, 3}));
}

TEST(Build, ProducesLoadableExtension) {
  const CliRun r = run("--format json build " + fx("modules/z2-f.json") + " " +
                    fx("factor_systems/z2-f.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json_of(r).contains("total"));
  EXPECT_EQ(run("build " + fx("modules/klein-classical.json") + " " + fx("factor_systems/z2-f.json")).code,
            2);
}

TEST(Determinism, RepeatedRunsAreIdentical) {
  const std::string args = "--format json wells " + fx("extensions/klein-classical-nontrivial.json");
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
