#include <jacder/cli/expr.hpp>
#include <jacder/cli/run.hpp>
#include <jacder/cli/serialize.hpp>
#include <jacder/error.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "cli_fixtures.hpp"
#include "json_schema.hpp"
#include "random_poly.hpp"

namespace jacder::cli {
namespace {

using nlohmann::json;

const BivarPoly X = BivarPoly::x();
const BivarPoly Y = BivarPoly::y();

json run_json(std::vector<std::string> args, int expected_exit = 0) {
  args.push_back("--json");
  const RunResult r = run_cli(args);
  EXPECT_EQ(r.exit_code, expected_exit) << r.out << r.err;
  return json::parse(r.out);
}

ErrorCode parse_error_code(std::string_view src) {
  try {
    (void)parse_poly(src);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << src;
  return ErrorCode::UsageError;
}

TEST(Parse, Examples) {
  EXPECT_EQ(parse_poly("x^2*y - x*y"), X * X * Y - X * Y);
  const BivarPoly q = X * X + Y;
  EXPECT_EQ(parse_poly("(x^2+y)^3"),
            X * X * X * X * X * X + scale(X * X * X * X * Y, 3) + scale(X * X * Y * Y, 3) + Y * Y * Y);
  EXPECT_EQ(parse_poly("(x^2+y)^3"), q * q * q);
  EXPECT_EQ(parse_error_code("3/2*x + y^-1"), ErrorCode::ParseError);
}

TEST(Parse, GrammarDetails) {
  EXPECT_EQ(parse_poly("-x"), -X);
  EXPECT_EQ(parse_poly(" 3 / 2 * x "), scale(X, make_rational(3, 2)));
  EXPECT_EQ(parse_poly("-(x-y)*2"), scale(Y - X, 2));
  EXPECT_EQ(parse_poly("x^0"), BivarPoly(1));
  EXPECT_EQ(parse_poly("0"), BivarPoly());
  EXPECT_EQ(parse_poly("x-y-x+y"), BivarPoly());
  for (const char* bad : {"", "x y", "2x", "x^", "(x", "x)", "z", "x^1.5", "x**2", "3/0", "2^3", "--x", "x+"}) {
    EXPECT_EQ(parse_error_code(bad), ErrorCode::ParseError) << bad;
  }
}

TEST(Parse, ErrorCarriesPosition) {
  try {
    (void)parse_poly("x + y^-1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("column 7"), std::string::npos) << e.what();
  }
}

TEST(Parse, UnivariateVariable) {
  EXPECT_EQ(parse_univar("t^2-3*t+1"), UnivarPoly(std::vector<Rational>{1, -3, 1}));
  EXPECT_THROW(parse_univar("x"), Error);
}

TEST(Serialize, Examples) {
  EXPECT_EQ(to_text(X * X * Y - X * Y), "x^2*y-x*y");
  EXPECT_EQ(to_text(BivarPoly()), "0");
  EXPECT_EQ(to_text(scale(X, make_rational(-3, 2)) + BivarPoly(1)), "-3/2*x+1");
  EXPECT_EQ(to_text(UnivarPoly(std::vector<Rational>{1, -3, 2})), "2*t^2-3*t+1");
  EXPECT_EQ(to_text(UnivarPoly()), "0");
  EXPECT_EQ(to_text(make_rational(-4, 6)), "-2/3");
}

TEST(Serialize, RoundTrip) {
  testing::PolyGen gen(61);
  for (int i = 0; i < 200; ++i) {
    const BivarPoly p = gen.poly(gen.uniform(0, 6));
    const std::string text = to_text(p);
    EXPECT_EQ(parse_poly(text), p) << text;
    EXPECT_EQ(to_text(parse_poly(text)), text);
    const UnivarPoly u = gen.univar(gen.uniform(0, 5));
    EXPECT_EQ(parse_univar(to_text(u)), u);
  }
}

TEST(Serialize, CanonicalizesInput) {
  EXPECT_EQ(to_text(parse_poly("y*x - x*y + 2*y*x^2 + x")), "2*x^2*y+x");
  EXPECT_EQ(to_text(parse_poly("(x+1)*(x-1)")), "x^2-1");
}

TEST(Run, SpecExamples) {
  EXPECT_EQ(run_json({"jac", "-f", "x^3*(x-1)*y^2"}),
            json::parse(R"({"P":"-2*x^4*y+2*x^3*y","Q":"4*x^3*y^2-3*x^2*y^2"})"));
  EXPECT_EQ(run_json({"commute", "-T.P", "1", "-T.Q", "0", "-f", "x"}), json::parse(R"({"commutes":true})"));
  EXPECT_EQ(run_json({"decompose", "-f", "(x^2+y)^3"}), json::parse(R"({"p":"x^2+y","theta":"t^3"})"));
}

TEST(Run, CommandOutputs) {
  EXPECT_EQ(run_json({"apply", "-f", "x*(x-1)*y", "-h", "x^2*y"})["result"], "x^2*y");
  EXPECT_EQ(run_json({"potential", "--T.P", "-2*y", "--T.Q", "2*x"})["potential"], "x^2+y^2");
  EXPECT_EQ(run_json({"member", "-h", "(x^2+y)^2+3*(x^2+y)", "-f", "x^2+y"})["psi"], "t^2+3*t");
  EXPECT_EQ(run_json({"bracket", "--T.P", "1", "--T.Q", "0", "-f", "x^2*y"}),
            json::parse(R"({"P":"-2*x","Q":"2*y"})"));

  const json c = run_json({"centralizer", "-f", "x"});
  EXPECT_EQ(c["rank"], 2);
  EXPECT_EQ(c["degree_bound"], 2);
  EXPECT_EQ(c["generator_t0"], json::parse(R"({"P":"1","Q":"0"})"));
  EXPECT_EQ(c["generator_dp"], json::parse(R"({"P":"0","Q":"1"})"));

  const json e = run_json({"eigen", "-f", "x*(x-1)*y", "--bound", "6"});
  bool found = false;
  for (const auto& pair : e["pairs"]) found = found || (pair["g"] == "x^4*y^2-x^3*y^2" && pair["lambda"] == "1");
  EXPECT_TRUE(found);

  const json o = run_json({"ode", "-f", "x^3*(x-1)*y^2"});
  EXPECT_EQ(o["dx_dt"], "-2*x^4*y+2*x^3*y");
  EXPECT_EQ(o["dy_dt"], "4*x^3*y^2-3*x^2*y^2");
}

TEST(Run, TextOutput) {
  const RunResult r = run_cli({"decompose", "-f", "(x^2+y)^3"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "p: x^2+y\ntheta: t^3\n");
  const RunResult bad = run_cli({"kernel", "-f", "5"});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_EQ(bad.err.rfind("error: ConstantInput: ", 0), 0u) << bad.err;
}

TEST(Run, Help) {
  const RunResult r = run_cli({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("centralizer"), std::string::npos);
  EXPECT_EQ(run_cli({"eigen", "--help"}).exit_code, 0);
}

TEST(ExitCodes, ContractIsExhaustive) {
  std::set<std::string> names;
  for (ErrorCode code : kAllErrorCodes) {
    const std::string name(error_name(code));
    EXPECT_TRUE(names.insert(name).second) << name;
    const int expected = (code == ErrorCode::ParseError || code == ErrorCode::UsageError) ? 2 : 1;
    EXPECT_EQ(exit_code(code), expected) << name;
  }
  const auto schema = testing::SchemaValidator::from_file(JACDER_SCHEMA_FILE);
  std::set<std::string> schema_names;
  for (const auto& n : schema.definition("error")["properties"]["error"]["enum"]) schema_names.insert(n);
  EXPECT_EQ(names, schema_names);
}

TEST(ExitCodes, ErrorFixtures) {
  for (const auto& fx : testing::cli_error_fixtures()) {
    const json j = run_json(fx.args, fx.exit_code);
    EXPECT_EQ(j["error"], fx.error) << j.dump();
    const RunResult text = run_cli(fx.args);
    EXPECT_EQ(text.exit_code, fx.exit_code);
    EXPECT_NE(text.err.find(fx.error), std::string::npos) << text.err;
  }
}

TEST(Run, FileIndirection) {
  const auto path = std::filesystem::temp_directory_path() / "jacder_cli_test_input.txt";
  {
    std::ofstream out(path);
    out << "(x^2+y)^3\n";
  }
  EXPECT_EQ(run_json({"decompose", "-f", "@" + path.string()})["p"], "x^2+y");
  std::filesystem::remove(path);
  EXPECT_EQ(run_json({"decompose", "-f", "@" + path.string()}, 2)["error"], "UsageError");
}

class MaxDegreeEnv : public ::testing::Test {
 protected:
  void TearDown() override { unsetenv("JACDER_MAX_DEGREE"); }
};

TEST_F(MaxDegreeEnv, CapsBounds) {
  EXPECT_EQ(max_degree_cap(), 32);
  setenv("JACDER_MAX_DEGREE", "3", 1);
  EXPECT_EQ(max_degree_cap(), 3);
  // Default bound 2*deg f = 4 is clamped to the cap.
  EXPECT_EQ(run_json({"eigen", "-f", "x*y"})["degree_bound"], 3);
  EXPECT_EQ(run_json({"eigen", "-f", "x*y", "--bound", "4"}, 2)["error"], "UsageError");
  setenv("JACDER_MAX_DEGREE", "abc", 1);
  EXPECT_EQ(run_json({"eigen", "-f", "x*y"}, 2)["error"], "UsageError");
}

TEST(Schema, EveryCommandValidates) {
  const auto schema = testing::SchemaValidator::from_file(JACDER_SCHEMA_FILE);
  std::set<std::string> covered;
  for (const auto& fx : testing::cli_success_fixtures()) {
    std::vector<std::string> args{fx.command};
    args.insert(args.end(), fx.args.begin(), fx.args.end());
    const json j = run_json(args);
    for (const auto& err : schema.validate(j, fx.command)) ADD_FAILURE() << fx.command << ": " << err;
    covered.insert(fx.command);
  }
  for (auto name : kCommands) EXPECT_TRUE(covered.count(std::string(name))) << name;
  for (const auto& fx : testing::cli_error_fixtures()) {
    const json j = run_json(fx.args, fx.exit_code);
    for (const auto& err : schema.validate(j, "error")) ADD_FAILURE() << err;
  }
}

TEST(Schema, ValidatorRejectsMalformedOutput) {
  const auto schema = testing::SchemaValidator::from_file(JACDER_SCHEMA_FILE);
  EXPECT_FALSE(schema.validate(json::parse(R"({"P":"x"})"), "jac").empty());
  EXPECT_FALSE(schema.validate(json::parse(R"({"commutes":"yes"})"), "commute").empty());
  EXPECT_FALSE(schema.validate(json::parse(R"({"p":"x","theta":"t","extra":1})"), "decompose").empty());
  EXPECT_TRUE(schema.validate(json::parse(R"({"p":"x","theta":"t"})"), "decompose").empty());
}

}  // namespace
}  // namespace jacder::cli
