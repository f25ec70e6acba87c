#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gtm/cli.hpp"

using gtm::Json;
using gtm::Rational;
using gtm::Scalar;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = gtm::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("gtm_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string family_file(const std::string& name, const std::string& label, int N) {
  CliRun r = run({"family", label, "--dim", std::to_string(N)});
  EXPECT_EQ(r.code, 0) << r.err;
  return write_temp(name, r.out);
}

}  // namespace

TEST(Io, RoundTripWithSurds) {
  std::mt19937 g(7);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9), pick(0, 2);
  for (long d : {0L, 2L, 19L, 21L, 61L}) {
    for (int trial = 0; trial < 20; ++trial) {
      const int N = 3 + trial % 9;
      auto draw = [&] {
        Rational a(num(g), den(g));
        if (d == 0 || pick(g) == 0) return Scalar(a);
        return Scalar(a, Rational(num(g), den(g)), d);
      };
      std::vector<Scalar> alpha, b;
      for (int i = 0; i < N - 1; ++i) alpha.push_back(draw());
      for (int i = 0; i < N - 2; ++i) b.push_back(draw());
      gtm::ModuleDocument doc{gtm::DefiningSet(N, trial % 2 ? gtm::Convention::Tilde : gtm::Convention::Standard, alpha, b),
                              std::nullopt};
      const std::string text = gtm::print_document(doc);
      gtm::ModuleDocument back = gtm::parse_document(text);
      EXPECT_EQ(back.ds.alpha, doc.ds.alpha);
      EXPECT_EQ(back.ds.b, doc.ds.b);
      EXPECT_EQ(back.ds.convention, doc.ds.convention);
      EXPECT_EQ(gtm::print_document(back), text);
    }
  }
}

TEST(Io, ParseErrorsNameTheField) {
  const std::string good =
      R"({"schema_version":1,"n_plus_1":4,"convention":"tilde","field_d":0,"alpha":["1","1","1"],"b_or_beta":["1","2"]})";
  EXPECT_NO_THROW(gtm::parse_document(good));
  auto message = [](const std::string& text) {
    try {
      gtm::parse_document(text);
    } catch (const gtm::ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  std::string bad = good;
  bad.replace(bad.find("\"2\""), 3, "\"3//4\"");
  EXPECT_THROW(gtm::parse_document(bad), gtm::ParseError);
  EXPECT_NE(message(bad).find("b_or_beta[1]"), std::string::npos);
  EXPECT_NE(message("{\n\"schema_version\": 1,\n  oops\n}").find("line 3"), std::string::npos);
  std::string surd = good;
  surd.replace(surd.find("\"2\""), 3, "\"sqrt(5)\"");
  EXPECT_NE(message(surd).find("field_d is 0"), std::string::npos);
  std::string shortb = good;
  shortb.replace(shortb.find("[\"1\",\"2\"]"), 9, "[\"1\"]");
  EXPECT_NE(message(shortb).find("b_or_beta has 1 entries"), std::string::npos);
  std::string conv = good;
  conv.replace(conv.find("tilde"), 5, "other");
  EXPECT_NE(message(conv).find("convention"), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
  const std::string path = family_file("v23.json", "Vdef(base=Vlm(-2,-3),t=5)", 12);
  CliRun ok = run({"verify", path});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(Json::parse(ok.out)["status"], "ok");

  Json doc = Json::parse(std::ifstream(path));
  doc["b_or_beta"][2] = "3";
  CliRun bad = run({"verify", write_temp("v23_bad.json", doc.dump())});
  EXPECT_EQ(bad.code, 1);
  Json rep = Json::parse(bad.out);
  EXPECT_EQ(rep["status"], "residuals_nonzero");
  ASSERT_FALSE(rep["benoist"]["nonzero"].empty());
  EXPECT_EQ(rep["benoist"]["nonzero"][0]["relation"], "R5");
  EXPECT_EQ(rep["benoist"]["nonzero"][0]["index"], 1);

  doc["b_or_beta"][2] = "3//4";
  CliRun parse = run({"verify", write_temp("v23_parse.json", doc.dump())});
  EXPECT_EQ(parse.code, gtm::exit_code::data);
  EXPECT_NE(parse.err.find("ParseError"), std::string::npos);
  EXPECT_EQ(run({"verify", "/nonexistent/doc.json"}).code, gtm::exit_code::no_input);
}

TEST(Cli, ClassifyReportsFamilyAndParams) {
  CliRun r = run({"classify", family_file("r4.json", "Rk(k=4)", 12)});
  EXPECT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "classified");
  EXPECT_EQ(j["family"], "Rk");
  EXPECT_EQ(j["params"], Json({{"k", 4}}));
  EXPECT_EQ(j["witness"].size(), 12u);
  EXPECT_EQ(r.out, run({"classify", family_file("r4.json", "Rk(k=4)", 12)}).out);

  CliRun below = run({"classify", family_file("c7.json", "C(x=2)", 7)});
  EXPECT_EQ(Json::parse(below.out)["status"], "classified");
  EXPECT_EQ(Json::parse(below.out)["note"], "below stated threshold");
  EXPECT_EQ(gtm::classification_exit(gtm::Status::BelowThreshold), gtm::exit_code::below_threshold);
  EXPECT_EQ(gtm::classification_exit(gtm::Status::Decomposable), gtm::exit_code::decomposable);
  EXPECT_EQ(gtm::classification_exit(gtm::Status::NotAModule), gtm::exit_code::failed);
}

TEST(Cli, DualTwiceIsIdentity) {
  for (const auto& [label, N] : std::vector<std::pair<std::string, int>>{{"Rk(k=4)", 12},
                                                                         {"C(x=3/2)", 12},
                                                                         {"Vlm(lambda=-2,mu=-3)", 12},
                                                                         {"Vdef(base=Vlm(0,-k),k=3,t=2)", 16},
                                                                         {"TildeV(base=Vlm(-2,-3))", 12}}) {
    const std::string f = family_file("d0.json", label, N);
    CliRun d1 = run({"dual", f});
    ASSERT_EQ(d1.code, 0) << label << d1.err;
    CliRun d2 = run({"dual", write_temp("d1.json", d1.out)});
    std::ifstream in(f);
    std::string original((std::istreambuf_iterator<char>(in)), {});
    EXPECT_EQ(d2.out, original) << label;
  }
  // Labels without an involutive stated dual are dropped once; from then on
  // dualizing twice is the identity.
  for (const auto& [label, N] : std::vector<std::pair<std::string, int>>{{"TildeV(base=Vlm(-1,-2))", 12}, {"M(4,+,t=1/3)", 8}}) {
    CliRun d1 = run({"dual", family_file("d0.json", label, N)});
    EXPECT_FALSE(Json::parse(d1.out).contains("label")) << label;
    CliRun d3 = run({"dual", write_temp("d2.json", run({"dual", write_temp("d1.json", d1.out)}).out)});
    EXPECT_EQ(d3.out, d1.out) << label;
  }
}

TEST(Cli, ExtendAndFamilyErrors) {
  const std::string f = family_file("r4e.json", "Rk(k=4)", 12);
  CliRun r = run({"extend", f, "--dir", "right"});
  EXPECT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  ASSERT_EQ(j["status"], "unique");
  CliRun v = run({"verify", write_temp("r4e_ext.json", j["document"].dump())});
  EXPECT_EQ(v.code, 0);

  EXPECT_EQ(run({"family", "Nope(k=1)", "--dim", "10"}).code, gtm::exit_code::data);
  EXPECT_EQ(run({"extend", f, "--dir", "up"}).code, gtm::exit_code::usage);
  EXPECT_EQ(run({}).code, gtm::exit_code::usage);
  EXPECT_EQ(run({"audit", "8", "typeD"}).code, gtm::exit_code::usage);
}

TEST(Cli, QuietAndJsonFlags) {
  CliRun q = run({"--quiet", "eliminant"});
  EXPECT_EQ(q.code, 0);
  EXPECT_TRUE(q.out.empty());
  CliRun text = run({"eliminant"});
  EXPECT_NE(text.out.find("eliminant identity=yes degree=5"), std::string::npos);
  CliRun js = run({"eliminant", "--json"});
  EXPECT_EQ(Json::parse(js.out)["identity"], true);
}

TEST(Cli, AuditIsDeterministic) {
  CliRun a = run({"audit", "12", "typeC", "--seed", "5"});
  CliRun b = run({"--seed", "5", "audit", "12", "typeC"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed=5"), std::string::npos);
  CliRun j = run({"--json", "audit", "12", "typeC"});
  Json rep = Json::parse(j.out);
  EXPECT_EQ(rep["status"], "reproduced");
  EXPECT_EQ(rep["typec"].size(), 10u);
}
