#include <dtoric/cli.hpp>

#include <gtest/gtest.h>

using namespace dtoric::cli;

namespace {

const char* kCurve = R"({"matrix": [[1, 1, 1], [0, 1, 2]]})";
const char* kCubic = R"({"matrix": [[1, 1, 1, 1], [0, 1, 2, 3]], "degree": [-1, -1]})";
const char* kPyramid = R"({"matrix": [[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1]]})";

const char* kGlued = R"({
  "complex": {
    "dim": 3,
    "cones": [
      {"name": "sigma", "generators": [[1, 1, 1], [0, 1, 2], [0, 0, 0]]},
      {"name": "tau", "generators": [[1, 1, 1], [0, 0, 0], [0, 1, 2]]},
      {"name": "ray", "generators": [[1], [0], [0]]}
    ],
    "containments": [["ray", "sigma"], ["ray", "tau"]]
  })";

std::string glued_with(const std::string& tuple) { return std::string(kGlued) + ", \"tuple\": " + tuple + "}"; }

Options with_degree(const std::string& m) {
  Options o;
  o.degree = m;
  return o;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST(Cli, FacetsOfCurve) {
  auto o = run_command("facets", kCurve, {});
  EXPECT_EQ(o.exit_code, kOk);
  EXPECT_EQ(o.output.substr(0, o.output.find('\n')), "F1 = t2, F2 = 2t1 - t2");
}

TEST(Cli, FacetsOfPyramid) {
  auto o = run_command("facets", kPyramid, {});
  EXPECT_EQ(o.exit_code, kOk);
  EXPECT_TRUE(contains(o.output, "F1 = t3, F2 = t2, F3 = t1 - t2, F4 = t1 - t3"));
}

TEST(Cli, NotPointed) {
  auto o = run_command("facets", R"({"matrix": [[1, -1]]})", {});
  EXPECT_EQ(o.exit_code, kValidation);
  EXPECT_TRUE(contains(o.output, "cone not pointed"));
}

TEST(Cli, UnknownFieldsRejected) {
  EXPECT_EQ(run_command("facets", R"({"matrix": [[1]], "colour": 1})", {}).exit_code, kValidation);
  auto bad = glued_with(R"({"sigma": [{"b": [0, 0, 0], "q": {"terms": [], "extra": 1}}]})");
  EXPECT_EQ(run_command("tfr-verify", bad, {}).exit_code, kValidation);
}

TEST(Cli, MalformedJson) { EXPECT_EQ(run_command("facets", "{", {}).exit_code, kValidation); }

TEST(Cli, UnknownCommand) { EXPECT_EQ(run_command("nope", kCurve, {}).exit_code, kValidation); }

TEST(Cli, DPieceAtZero) {
  auto o = run_command("dpiece", kCurve, with_degree("0,0"));
  EXPECT_EQ(o.exit_code, kOk);
  EXPECT_TRUE(contains(o.output, "⟨1⟩"));
}

TEST(Cli, DegreeRequired) { EXPECT_EQ(run_command("dpiece", kCurve, {}).exit_code, kValidation); }

TEST(Cli, DegreeWrongLength) { EXPECT_EQ(run_command("dpiece", kCurve, with_degree("1,2,3")).exit_code, kValidation); }

TEST(Cli, QuotientOfCubic) {
  auto o = run_command("quotient", kCubic, {});
  EXPECT_TRUE(contains(o.output, "nonzero: false"));
  EXPECT_EQ(o.exit_code, kNegative);
}

TEST(Cli, QuotientSingleFacetAtZero) {
  auto o = run_command("quotient", R"({"matrix": [[1, 1, 1], [0, 1, 2]], "ideal": [[1]]})", with_degree("0,0"));
  EXPECT_EQ(o.exit_code, kOk);
  EXPECT_TRUE(contains(o.output, "nonzero: true"));
  EXPECT_TRUE(contains(o.output, "witness: 1"));
}

TEST(Cli, CurveQuotientAtMinusOne) {
  auto o = run_command("quotient", R"({"matrix": [[1, 1, 1], [0, 1, 2]], "ideal": "omega"})", with_degree("-1,-1"));
  EXPECT_TRUE(contains(o.output, "nonzero: false"));
}

TEST(Cli, Gorenstein) {
  Options small;
  small.box = "-1:1";
  auto a = run_command("gorenstein", kCurve, small);
  EXPECT_EQ(a.exit_code, kOk);
  EXPECT_TRUE(contains(a.output, "Gorenstein: c = (1,1)"));
  auto b = run_command("gorenstein", kCubic, small);
  EXPECT_EQ(b.exit_code, kNegative);
  EXPECT_TRUE(contains(b.output, "not Gorenstein"));
  auto c = run_command("gorenstein", R"({"matrix": [[1, 0], [0, 1]]})", small);
  EXPECT_EQ(c.exit_code, kOk);
  EXPECT_TRUE(contains(c.output, "Gorenstein: c = (1,1)"));
}

TEST(Cli, StrictNormalityOff) {
  Options o = with_degree("0,0");
  o.strict_normality = false;
  auto r = run_command("dpiece", kCurve, o);
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_TRUE(contains(r.output, "warning: normality not checked"));
}

TEST(Cli, TfrVerify) {
  auto accepted = glued_with(R"({
    "sigma": [{"b": [-1, 0, 0], "q": {"factors": [{"form": [2, -1, 0], "count": 2}]}}],
    "tau": [{"b": [-1, 0, 0], "q": {"factors": [{"form": [2, 0, -1], "count": 2}]}}]})");
  EXPECT_EQ(run_command("tfr-verify", accepted, {}).exit_code, kOk);
  auto half = glued_with(R"({"sigma": [{"b": [-1, 0, 0], "q": {"factors": [{"form": [2, -1, 0], "count": 2}]}}]})");
  auto r = run_command("tfr-verify", half, {});
  EXPECT_EQ(r.exit_code, kNegative);
  EXPECT_TRUE(contains(r.output, "condition (a), agreement on shared faces: fail"));
  EXPECT_EQ(run_command("tfr-verify", glued_with("{}"), {}).exit_code, kOk);
}

TEST(Cli, PolynomialFormsAgree) {
  // 4 t1^2 - 2 t1 t2 ... entered both ways: (2t1 - t2)(2t1 - t2 - 1)
  auto factored = glued_with(R"({
    "sigma": [{"b": [-1, 0, 0], "q": {"factors": [{"form": [2, -1, 0]}, {"form": [2, -1, 0], "shift": 1}]}}],
    "tau": [{"b": [-1, 0, 0], "q": {"factors": [{"form": [2, 0, -1], "count": 2}]}}]})");
  auto terms = glued_with(R"({
    "sigma": [{"b": [-1, 0, 0], "q": {"terms": [
      {"exponent": [2, 0, 0], "coefficient": 4}, {"exponent": [1, 1, 0], "coefficient": -4},
      {"exponent": [0, 2, 0], "coefficient": 1}, {"exponent": [1, 0, 0], "coefficient": -2},
      {"exponent": [0, 1, 0], "coefficient": "1"}]}}],
    "tau": [{"b": [-1, 0, 0], "q": {"factors": [{"form": [2, 0, -1], "count": 2}]}}]})");
  EXPECT_EQ(run_command("tfr-verify", factored, {}).output, run_command("tfr-verify", terms, {}).output);
  EXPECT_EQ(run_command("tfr-verify", terms, {}).exit_code, kOk);
}

TEST(Cli, StanleyReisner) {
  const char* dx = R"({"simplicial": {"vertices": 2, "facets": [[1], [2]]}, "operator": {"a": [0, 0], "b": [1, 0]}})";
  auto r = run_command("sr", dx, {});
  EXPECT_EQ(r.exit_code, kNegative);
  EXPECT_TRUE(contains(r.output, "d1: rejected"));
  EXPECT_TRUE(contains(r.output, "kills"));
  const char* xdx = R"({"simplicial": {"vertices": 2, "facets": [[1], [2]]}, "operator": {"a": [1, 0], "b": [1, 0]}})";
  EXPECT_EQ(run_command("sr", xdx, {}).exit_code, kOk);
}

TEST(Cli, OracleWindowTooSmall) {
  Options o = with_degree("-3,-3");
  o.bound = 4;
  auto r = run_command("oracle", kCubic, o);
  EXPECT_EQ(r.exit_code, kResource);
  EXPECT_TRUE(contains(r.output, "window too small"));
}

TEST(Cli, OracleAgrees) {
  auto r = run_command("oracle", R"({"matrix": [[1, 1, 1], [0, 1, 2]], "ideal": "omega"})", with_degree("-1,-1"));
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_TRUE(contains(r.output, "oracle: agrees"));
}

TEST(Cli, JsonRoundTripIsStable) {
  Options o = with_degree("-1,-1");
  o.json = true;
  for (const char* cmd : {"facets", "dpiece", "quotient", "gorenstein"}) {
    Options oo = o;
    if (std::string(cmd) == "gorenstein") oo.box = "0:0";
    auto first = run_command(cmd, kCubic, oo);
    ASSERT_LT(first.exit_code, kValidation) << first.output;
    auto second = run_command(cmd, first.output, oo);
    EXPECT_EQ(first.output, second.output) << cmd;
    EXPECT_TRUE(contains(first.output, "\"result\""));
  }
}

TEST(Cli, DeterministicOutput) {
  Options o;
  o.box = "-1:1";
  EXPECT_EQ(run_command("gorenstein", kCubic, o).output, run_command("gorenstein", kCubic, o).output);
}
