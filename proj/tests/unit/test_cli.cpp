#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace hldecomp;
using namespace hldecomp::cli;

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("hldecomp-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

const std::vector<std::string> kExample58{"oracle", "--n",      "2",     "--xi",
                                          "1-1:2,2-2:2,1-2:2", "--lambda", "7,5", "--gamma",
                                          "2,1"};

}  // namespace

TEST(ParseArgs, DecomposeJob) {
  const auto r = parse_args({"decompose", "--n", "2", "--pi", "1:0,2:3"});
  ASSERT_TRUE(r.job.has_value());
  EXPECT_EQ(r.job->command, Command::Decompose);
  EXPECT_EQ(r.job->word->to_string(), "1:0,2:3");
  EXPECT_FALSE(r.job->gamma.has_value());
}

TEST(ParseArgs, SpacingViolationNamesFlag) {
  const auto r = parse_args({"decompose", "--n", "2", "--pi", "1:0,2:1"});
  EXPECT_FALSE(r.job.has_value());
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.message.find("--pi"), std::string::npos);
  EXPECT_NE(r.message.find("must be +-3"), std::string::npos);
}

TEST(ParseArgs, ExampleOracleJob) {
  const auto r = parse_args(kExample58);
  ASSERT_TRUE(r.job.has_value()) << r.message;
  EXPECT_EQ(r.job->mode, OracleMode::FullXi);
  EXPECT_EQ(r.job->xi->at(1, 2), 2);
  EXPECT_EQ(*r.job->lambda, (Weight{7, 5}));
  EXPECT_EQ(*r.job->gamma, (RootLatticeElement{2, 1}));
}

TEST(ParseArgs, FlagErrorsExitTwo) {
  const std::vector<std::vector<std::string>> bad{
      {"decompose", "--n", "2"},
      {"decompose", "--n", "2", "--pi", "1:0", "--kappa", "0,1", "--interval", "1:1"},
      {"decompose", "--n", "2", "--kappa", "0,1"},
      {"decompose", "--n", "2", "--kappa", "0,0", "--interval", "1:2"},
      {"decompose", "--n", "2", "--pi", "1:0", "--gamma", "0,1"},
      {"oracle", "--n", "2", "--xi", "1-1:2,2-2:2", "--lambda", "1,1"},
      {"oracle", "--n", "2", "--xi", "1-1:2,2-2:2,1-2:2", "--lambda", "1,-1"},
      {"oracle", "--n", "2", "--mode", "full", "--pi", "1:0"},
      {"decompose", "--n", "2", "--pi", "1:0", "--format", "xml"},
      {"frobnicate", "--n", "2"},
      {"character", "--n", "2"},
  };
  const std::vector<std::string> flag{"--pi",    "--pi",     "--interval", "--kappa",
                                      "--gamma", "--xi",     "--lambda",   "--pi",
                                      "--format", "command", "--lambda"};
  for (std::size_t t = 0; t < bad.size(); ++t) {
    const auto r = parse_args(bad[t]);
    EXPECT_EQ(r.exit_code, 2) << t;
    EXPECT_NE(r.message.find(flag[t]), std::string::npos) << t << ": " << r.message;
  }
}

TEST(ParseArgs, KappaIntervalGivesWord) {
  const auto r = parse_args({"decompose", "--n", "4", "--kappa", "0,1,2,1", "--interval", "1:4"});
  ASSERT_TRUE(r.job.has_value()) << r.message;
  EXPECT_EQ(r.job->word->to_string(), "1:0,3:4,4:1");
}

TEST(Run, LatexReportOfWorkedExample) {
  const auto o = call({"decompose", "--n", "8", "--pi", "2:0,3:3,4:0,5:3,7:-1", "--gamma",
                       "1,3,4,4,3,2,1,0", "--format", "latex"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("2q^4+q^5"), std::string::npos);
  EXPECT_NE(o.out.find("2q^{4}+q^{5}"), std::string::npos);
}

TEST(Run, ExampleOracleJson) {
  auto args = kExample58;
  args.insert(args.end(), {"--format", "json"});
  const auto o = call(args);
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("\"poly\":{\"2\":1,\"3\":1}"), std::string::npos) << o.out;
  EXPECT_EQ(decomposition_from_json(o.out).at(RootLatticeElement{2, 1}).to_plain(), "q^2+q^3");
}

TEST(Run, CrosscheckIrreduciblePair) {
  const auto o = call({"crosscheck", "--n", "2", "--pi", "1:0,2:3"});
  EXPECT_EQ(o.code, 0) << o.out << o.err;
}

TEST(Run, HlInfoAndCharacter) {
  auto o = call({"hl-info", "--n", "4", "--kappa", "0,1,2,1", "--interval", "1:4"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("sinks: 1,4"), std::string::npos);
  EXPECT_NE(o.out.find("sources: 3"), std::string::npos);
  o = call({"character", "--n", "2", "--lambda", "1,1"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("dim 8"), std::string::npos);
  o = call({"character", "--n", "2", "--lambda", "1,0", "--power", "2"});
  EXPECT_NE(o.out.find("1 x V(0,1)"), std::string::npos);
}

TEST(Run, JsonIsDeterministic) {
  const std::vector<std::string> args{"decompose", "--n", "3", "--pi", "1:0,2:3,3:0",
                                      "--format", "json"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Cache, StoreThenLookup) {
  TempDir dir;
  const auto job = *parse_args({"decompose", "--n", "3", "--pi", "1:0,2:3,3:0"}).job;
  const auto dec = graded_decomposition(*job.word);
  std::ostringstream warn;
  ASSERT_TRUE(cache_store(dir.str(), cache_key(job), dec, warn));
  const auto hit = cache_lookup(dir.str(), cache_key(job), warn);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(*hit, dec);
  EXPECT_TRUE(warn.str().empty());
}

TEST(Cache, KeyIncludesFlags) {
  TempDir dir;
  auto job = *parse_args({"decompose", "--n", "3", "--pi", "1:0,2:3,3:0"}).job;
  std::ostringstream warn;
  cache_store(dir.str(), cache_key(job), graded_decomposition(*job.word), warn);
  job.relaxed_empty_groups = true;
  EXPECT_FALSE(cache_lookup(dir.str(), cache_key(job), warn).has_value());
}

TEST(Cache, TruncatedFileIsIgnoredWithWarning) {
  TempDir dir;
  const std::vector<std::string> args{"decompose", "--n", "3", "--pi", "1:0,2:3,3:0",
                                      "--format", "json", "--cache", dir.str()};
  const auto first = call(args);
  ASSERT_EQ(first.code, 0);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir.str())) {
    ++files;
    const auto size = fs::file_size(entry.path());
    fs::resize_file(entry.path(), size / 2);
  }
  ASSERT_EQ(files, 1u);
  const auto second = call(args);
  EXPECT_EQ(second.code, 0);
  EXPECT_NE(second.err.find("warning"), std::string::npos);
  EXPECT_EQ(second.out, first.out);
}

TEST(Cache, TransparentAndHonoursEnvironment) {
  TempDir dir;
  const std::vector<std::string> base{"oracle", "--n", "2", "--pi", "1:0,2:3", "--format", "json"};
  const auto plain = call(base);
  auto with_cache = base;
  with_cache.insert(with_cache.end(), {"--cache", dir.str() + "/unused"});
  ::setenv("HLDECOMP_CACHE", dir.str().c_str(), 1);
  const auto a = call(with_cache);
  const auto b = call(with_cache);
  ::unsetenv("HLDECOMP_CACHE");
  EXPECT_EQ(a.out, plain.out);
  EXPECT_EQ(b.out, plain.out);
  EXPECT_FALSE(fs::exists(dir.str() + "/unused"));
  EXPECT_FALSE(fs::is_empty(dir.str()));
}

TEST(Binary, ExitCodes) {
  const std::string exe = HLDECOMP_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("decompose --n 2 --pi 1:0,2:3"), 0);
  EXPECT_EQ(status("decompose --n 2 --pi 1:0,2:1"), 2);
  EXPECT_EQ(status("crosscheck --n 2 --pi 1:0,2:3"), 0);
}
