#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "marked/cli.hpp"
#include "support.hpp"

using namespace marked;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kSquare = "1,x1,x2,x1*x2";

std::string fixture_path(const std::string& name) {
  return std::string(MARKED_FIXTURES) + "/" + name;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, Border) {
  const auto r = run({"border", "-n", "2", "-O", kSquare});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("border: x1^2,x2^2,x1^2*x2,x1*x2^2"), std::string::npos);
  EXPECT_NE(r.out.find("pommaret: x1^2,x2^2,x1^2*x2"), std::string::npos);
  EXPECT_NE(r.out.find("b4 = x1*x2^2\n"), std::string::npos);

  const auto j = json::parse(run({"border", "-n", "2", "-O", kSquare, "--format", "json"}).out);
  EXPECT_EQ(j["border"].size(), 4u);
  EXPECT_EQ(j["border"][3]["pommaret"], false);
  EXPECT_EQ(j["pommaret"].size(), 3u);
}

TEST(Cli, Index) {
  auto r = run({"index", "-n", "2", "-O", kSquare, "--term", "x1^3*x2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "2\n");
  EXPECT_EQ(run({"index", "-n", "2", "-O", kSquare, "--term", "x1*x2"}).out, "0\n");
}

TEST(Cli, Reduce) {
  const auto r = run({"reduce", "-n", "2", "-O", kSquare, "--structure", "pommaret", "--set",
                      fixture_path("square_e11.mset"), "--poly", "x1^2*x2^2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, "3*x1*x2 + 12*x2\n");

  const auto j = json::parse(run({"reduce", "-n", "2", "-O", kSquare, "--set",
                                  fixture_path("square_e11.mset"), "--poly", "x1^2*x2^2",
                                  "--trace", "--format", "json"})
                                 .out);
  std::vector<std::size_t> labels;
  for (const auto& s : j["trace"]) labels.push_back(s["label"]);
  EXPECT_EQ(labels, (std::vector<std::size_t>{4, 3, 1}));
}

TEST(Cli, CheckBasis) {
  const auto ok = run({"check-basis", "-n", "2", "-O", kSquare, "--set",
                       fixture_path("square_e30.mset")});
  EXPECT_EQ(ok.code, cli::kOk);
  EXPECT_EQ(lines(ok.out).front(), "basis: true");
  for (const std::string crit : {"neighbour", "nonmult", "viapommaret"}) {
    const auto j = json::parse(run({"check-basis", "-n", "2", "-O", kSquare, "--set",
                                    fixture_path("square_e11.mset"), "--criterion", crit,
                                    "--format", "json"})
                                   .out);
    EXPECT_EQ(j["basis"], false) << crit;
  }
}

TEST(Cli, SchemeJson) {
  const auto r = run({"scheme", "-n", "2", "-O", kSquare, "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["generators"].size(), 12u);
  std::vector<ParamPoly> parsed;
  for (const auto& g : j["generators"]) parsed.push_back(parse_param(g["poly"].get<std::string>()));
  EXPECT_EQ(parsed, border_scheme_ideal(fixture::square()).polys());
  EXPECT_EQ(j["generators"][0]["provenance"]["source"], "S(b1,b3)");

  const auto e = json::parse(
      run({"scheme", "-n", "2", "-O", kSquare, "--kind", "elimination", "--format", "json"}).out);
  ASSERT_EQ(e["substitution"].size(), 4u);
  const auto images = fixture::reference_phi_images();
  for (std::size_t k = 0; k < 4; ++k)
    EXPECT_EQ(parse_param(e["substitution"][k]["image"].get<std::string>()), images[k]);
}

TEST(Cli, TextAndJsonAgree) {
  for (const std::string kind : {"border", "pommaret", "elimination"}) {
    const auto text = lines(run({"scheme", "-n", "2", "-O", kSquare, "--kind", kind}).out);
    const auto j = json::parse(
        run({"scheme", "-n", "2", "-O", kSquare, "--kind", kind, "--format", "json"}).out);
    ASSERT_EQ(text.size(), j["generators"].size() + 1) << kind;
    for (std::size_t k = 0; k < j["generators"].size(); ++k) {
      const std::string line = text[k + 1];
      EXPECT_EQ(line.substr(0, line.find("  #")), j["generators"][k]["poly"]) << kind;
    }
  }
}

TEST(Cli, Phi) {
  EXPECT_EQ(run({"phi", "-n", "2", "-O", kSquare, "--param", "C[4,1]"}).out,
            "C[1,1]*C[2,2] + C[2,4]*C[3,1]\n");
  EXPECT_EQ(run({"phi", "-n", "2", "-O", kSquare, "--param", "C[1,1]"}).out, "C[1,1]\n");
}

TEST(Cli, PointsAndEnumerate) {
  const auto p = run({"points", "-n", "2", "-O", kSquare, "--points", "0,0;1,0;0,1;1,1"});
  ASSERT_EQ(p.code, cli::kOk) << p.err;
  EXPECT_EQ(lines(p.out).front(), "x1^2 := x1^2 - x1");
  EXPECT_EQ(run({"points", "-n", "2", "-O", kSquare, "--points", "0,0;0,0;1,0;1,1"}).code,
            cli::kDomainError);

  const auto e = run({"enumerate", "-n", "2", "-m", "3"});
  EXPECT_EQ(lines(e.out).size(), 3u);
}

TEST(Cli, Couples) {
  const auto dot = run({"couples", "-n", "2", "-O", kSquare, "--type", "neighbour", "--emit-graph",
                        "dot"});
  ASSERT_EQ(dot.code, cli::kOk);
  EXPECT_EQ(dot.out.rfind("graph", 0), 0u);
  const auto j = json::parse(
      run({"couples", "-n", "2", "-O", kSquare, "--structure", "pommaret", "--format", "json"})
          .out);
  for (const auto& c : j["couples"]) {
    EXPECT_TRUE(c.contains("left_var"));
    EXPECT_TRUE(c.contains("delta"));
  }
}

TEST(Cli, VerifyAndDemo) {
  const auto v = run({"verify", "-n", "2", "-O", kSquare, "--trials", "5"});
  EXPECT_EQ(v.code, cli::kOk);
  for (const auto& line : lines(v.out)) EXPECT_EQ(line.rfind("PASS", 0), 0u) << line;
  const auto d = run({"demo-loop"});
  EXPECT_EQ(d.code, cli::kOk);
  EXPECT_NE(d.out.find("x1*x2^2"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"border", "-n", "2", "-O", "x1"}).code, cli::kDomainError);
  EXPECT_EQ(run({"reduce", "-n", "2", "-O", kSquare, "--set", "/nonexistent", "--poly", "x1"}).code,
            cli::kDomainError);
  EXPECT_EQ(run({"border", "-n", "2", "-O", "1,x1+"}).code, cli::kParseError);
  EXPECT_EQ(run({"reduce", "-n", "2", "-O", kSquare, "--set", fixture_path("square_e11.mset"),
                 "--poly", "x1 + $"})
                .code,
            cli::kParseError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kParseError);
  EXPECT_EQ(run({}).code, cli::kParseError);
  const auto bad = run({"border", "-n", "2", "-O", "x1"});
  EXPECT_TRUE(bad.out.empty());
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"scheme", "-n", "3", "-O", "1,x1,x2,x3,x2*x3", "--kind", "pommaret", "--format", "json"},
      {"verify", "-n", "2", "-O", kSquare, "--trials", "10", "--seed", "3"},
      {"couples", "-n", "2", "-O", kSquare, "--format", "dot"},
  };
  for (const auto& c : commands) EXPECT_EQ(run(c).out, run(c).out);
}
