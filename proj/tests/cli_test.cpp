#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string tmp_path(const std::string& name) {
  return (std::filesystem::path(::testing::TempDir()) / ("ohic_cli_" + name)).string();
}

Run run(const std::string& args, const std::string& env = "") {
  std::string err_path = tmp_path("stderr.txt");
  std::string cmd = env + (env.empty() ? "" : " ") + OHIC_CLI_PATH + " " + args + " 2>" + err_path;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  return r;
}

long lines(const std::string& s) { return static_cast<long>(std::count(s.begin(), s.end(), '\n')); }

std::string strip_timing(const std::string& s) {
  return std::regex_replace(s, std::regex("\"elapsed_ms\": [0-9]+"), "\"elapsed_ms\": 0");
}

TEST(CliList, Rows) {
  auto all = run("list");
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(lines(all.out), 58 + 1);
  auto ints = run("list --kind int");
  EXPECT_EQ(ints.code, 0);
  EXPECT_EQ(lines(ints.out), 3 + 1);
  EXPECT_EQ(run("list --kind INT").code, 0);
  auto bogus = run("list --kind bogus");
  EXPECT_EQ(bogus.code, 2);
  EXPECT_NE(bogus.err.find("bogus"), std::string::npos);
}

TEST(CliExitCodes, Matrix) {
  struct Case {
    std::string args;
    int code;
  };
  const std::vector<Case> cases = {
      {"", 2},
      {"frobnicate", 2},
      {"verify --id SER-03 --order 64", 0},
      {"verify --id SER-03 --order 8", 0},
      {"verify --id SER-03 --order 7", 2},
      {"verify --id SER-03 --order 257", 2},
      {"verify --id SER-99", 2},
      {"verify --id SER-03 --kind comb", 2},
      {"verify --kind bogus", 2},
      {"verify --id NUM-01 --prec 63", 2},
      {"verify --id NUM-01 --prec 1025", 2},
      {"verify --id NUM-01 --tol -1e-5", 2},
      {"verify --id NUM-01 --tol 0", 2},
      {"verify --id NUM-01 --tol abc", 2},
      {"verify --id NUM-01 --format xml", 2},
      {"verify --id NUM-01 --jobs 0", 2},
      {"verify --id NUM-01", 0},
      {"verify --id NUM-01 --prec 64 --tol 1e-60", 1},
      {"verify --id INT-01 --tol 1e-25", 0},
      {"verify --id NUM-15", 0},
      {"verify --id NUM-15 --tol 1e-60 --prec 64", 0},
      {"eval alpha", 0},
      {"eval 'ln(0)'", 2},
      {"eval 'add(1,'", 2},
      {"eval", 2},
  };
  for (const auto& c : cases) EXPECT_EQ(run(c.args).code, c.code) << c.args;
}

TEST(CliVerify, JsonReportToFile) {
  std::string path = tmp_path("comb.json");
  auto r = run("verify --kind comb --format json --out " + path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  auto j = nlohmann::json::parse(slurp(path));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 20u);
  for (const auto& x : j) {
    for (const char* key : {"id", "kind", "params", "status", "elapsed_ms"}) EXPECT_TRUE(x.contains(key)) << key;
    EXPECT_EQ(x["status"], "pass");
    EXPECT_EQ(x["kind"], "COMB");
  }
}

TEST(CliVerify, SuspectPrintedAsResidual) {
  auto r = run("verify --id NUM-15");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("suspect-residual"), std::string::npos);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["expected_status"], "suspect");
  EXPECT_TRUE(j[0].contains("residual_mid"));
  EXPECT_EQ(j[0]["readings"].size(), 2u);
}

TEST(CliVerify, FormatsCarrySameRecords) {
  auto csv = run("verify --kind int --format csv");
  auto md = run("verify --kind int --format md");
  ASSERT_EQ(csv.code, 0);
  ASSERT_EQ(md.code, 0);
  EXPECT_EQ(lines(csv.out), 4);
  for (const char* id : {"INT-01", "INT-02", "INT-03"}) {
    EXPECT_NE(csv.out.find(id), std::string::npos);
    EXPECT_NE(md.out.find(id), std::string::npos);
  }
}

TEST(CliVerify, JobCountDoesNotChangeReport) {
  auto a = run("verify --kind ser --order 32 --jobs 1");
  auto b = run("verify --kind ser --order 32 --jobs 8");
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(strip_timing(a.out), strip_timing(b.out));
  auto c = run("verify --kind comb --order 32 --jobs 1");
  auto d = run("verify --kind comb --order 32 --jobs 8");
  EXPECT_EQ(strip_timing(c.out), strip_timing(d.out));
}

TEST(CliVerify, PrecisionFromEnvironment) {
  auto r = run("verify --id NUM-01 --tol 1e-20", "OHIC_PRECISION_BITS=96");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("prec=96"), std::string::npos);
  auto flag = run("verify --id NUM-01 --prec 128 --tol 1e-20", "OHIC_PRECISION_BITS=96");
  EXPECT_NE(flag.out.find("prec=128"), std::string::npos);
  EXPECT_EQ(run("verify --id NUM-01", "OHIC_PRECISION_BITS=12").code, 2);
  EXPECT_EQ(run("verify --id NUM-01", "OHIC_PRECISION_BITS=lots").code, 2);
}

TEST(CliEval, Values) {
  auto a = run("eval alpha");
  EXPECT_EQ(a.out.rfind("1.61803398874989484", 0), 0u) << a.out;
  EXPECT_NE(a.out.find("+-"), std::string::npos);
  auto v = run("eval 'neg(div(ln(2),mul(2,sqrt(2))))'");
  // mpmath: -ln2/(2 sqrt2) = -0.24506453586713679792...
  EXPECT_EQ(v.out.rfind("-0.24506453586713679792", 0), 0u) << v.out;
  auto bad = run("eval 'ln(0)'");
  EXPECT_NE(bad.err.find("domain"), std::string::npos);
  auto parse = run("eval 'add(1,'");
  EXPECT_NE(parse.err.find("position"), std::string::npos);
}

}  // namespace
