#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "edgering_cli/cli.hpp"

namespace {

struct Result {
  int status = 0;
  std::string out;
  std::string err;
  nlohmann::json doc;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.status = edgering::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  if (!r.out.empty() && r.out.front() == '{') r.doc = nlohmann::json::parse(r.out);
  return r;
}

bool has_float(const nlohmann::json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured()) {
    for (const auto& item : j) {
      if (has_float(item)) return true;
    }
  }
  return false;
}

}  // namespace

TEST(Cli, ClassGroupOfK222) {
  const Result r = run({"classgroup", "--parts", "2,2,2"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.doc["free_rank"], 3);
  EXPECT_EQ(r.doc["torsion"], nlohmann::json::array());
  EXPECT_EQ(r.doc["inputs"]["parts"], nlohmann::json({2, 2, 2}));
  EXPECT_EQ(r.doc["routes"]["class_matrix"]["free_rank"], 3);
}

TEST(Cli, ConicPointCount) {
  const Result r = run({"conic", "--parts", "1,1,1,1"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.doc["point_count"], 25);
  EXPECT_EQ(r.doc["points"].size(), 25u);
}

TEST(Cli, NccrReplayK222) {
  const Result r = run({"nccr-replay", "--instance", "k222"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.doc["certificate"]["step_count"], 19);
  EXPECT_EQ(r.doc["certificate"]["steps"].size(), 19u);
  EXPECT_TRUE(r.doc["passed"].get<bool>());
  EXPECT_FALSE(r.doc["certificate"]["assumptions"].empty());
}

TEST(Cli, NccrReplayK4ReportsVerificationFailure) {
  const Result r = run({"nccr-replay", "--instance", "k4"});
  EXPECT_EQ(r.status, 1);
  EXPECT_FALSE(r.doc["passed"].get<bool>());
  EXPECT_EQ(r.doc["failure"]["step_index"], 13);
  EXPECT_EQ(r.doc["diagnosis"]["reachable_count"], 20);
}

TEST(Cli, NccrSearch) {
  const Result r = run({"nccr-search", "--instance", "k222", "--bound", "2"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.doc["certificate"]["complete"].get<bool>());
  EXPECT_EQ(r.doc["inputs"]["bound"], 2);
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run({"graph-info", "--parts", "2,2,2"}).doc["fundamental_sets"].size(), 3u);
  EXPECT_EQ(run({"facets", "--parts", "2,2,2"}).doc["facet_count"], 9);
  EXPECT_TRUE(run({"gorenstein", "--parts", "1,1,1,1"}).doc["gorenstein"].get<bool>());
  EXPECT_FALSE(run({"gorenstein", "--parts", "2,2,3"}).doc["gorenstein"].get<bool>());
  const Result hibi = run({"hibi", "--parts", "2,3", "--variant", "one-singleton"});
  EXPECT_EQ(hibi.status, 0);
  EXPECT_EQ(hibi.doc["reports"].size(), 1u);
  const Result verify = run({"conic-verify", "--parts", "2,2,2", "--margin", "1"});
  EXPECT_EQ(verify.status, 0);
  EXPECT_TRUE(verify.doc["passed"].get<bool>());
  const Result vf = run({"classgroup", "--parts", "1,1,1,1", "--convention", "vertex-first"});
  EXPECT_EQ(vf.doc["convention"], "vertex-first");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"classgroup"}).status, 2);
  EXPECT_EQ(run({"classgroup", "--parts", "2,x"}).status, 2);
  EXPECT_EQ(run({"classgroup", "--parts", "3,2,2"}).status, 2);
  EXPECT_EQ(run({"classgroup", "--parts", "2,3"}).status, 2);
  EXPECT_EQ(run({"nccr-replay", "--instance", "k5"}).status, 2);
  EXPECT_EQ(run({"hibi", "--parts", "2,3,4"}).status, 2);
  EXPECT_EQ(run({"conic", "--parts", "2,2,2", "--margin", "1"}).status, 2);
  const Result r = run({"classgroup", "--parts", "1,2,3"});
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).status, 0); }

TEST(Cli, OutputIsDeterministicAndExact) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"classgroup", "--parts", "2,2,3"},
                                                                 {"conic", "--parts", "2,2,2"},
                                                                 {"facets", "--parts", "1,1,1,1"},
                                                                 {"nccr-replay", "--instance", "k222"}}) {
    const Result a = run(args);
    const Result b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(has_float(a.doc)) << args.front();
  }
}

TEST(Cli, WritesToOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "edgering_cli_test.json";
  std::filesystem::remove(path);
  const Result r = run({"gorenstein", "--parts", "2,2,2", "--out", path.string()});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const nlohmann::json doc = nlohmann::json::parse(in);
  EXPECT_TRUE(doc["gorenstein"].get<bool>());
  std::filesystem::remove(path);
  EXPECT_EQ(run({"gorenstein", "--parts", "2,2,2", "--out", "/nonexistent/dir/x.json"}).status, 2);
}
