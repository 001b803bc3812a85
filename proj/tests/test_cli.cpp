#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "galinv/calculus/power.hpp"
#include "galinv/cli/run.hpp"
#include "galinv/io/json.hpp"
#include "support.hpp"

namespace galinv {
namespace {

using testing::RandomExact;

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

RunConfig config(Command c, Format f) {
  RunConfig cfg;
  cfg.command = c;
  cfg.format = f;
  return cfg;
}

TEST(Json, DiffOpRoundTrip) {
  RandomExact rnd(7);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = t % 2 ? 2 : 4;
    DiffOp op(n);
    for (const auto& mi : multi_indices_of_order(t % 3)) op.set(mi, rnd.matrix(n, n, 0.5));
    EXPECT_EQ(io::diffop_from_json(io::to_json(op)), op);
  }
  const DiffOp L = levy_leblond_operator(Rational(3, 2));
  EXPECT_EQ(io::diffop_from_json(io::Json::parse(io::to_json(L).dump())), L);
}

TEST(Json, ScalarEncoding) {
  EXPECT_EQ(io::to_json(Rational(-3, 2)).get<std::string>(), "-3/2");
  const ComplexRational z(Rational(1, 3), Rational(-2));
  EXPECT_EQ(io::complex_from_json(io::to_json(z)), z);
}

TEST(Json, MalformedInputThrows) {
  EXPECT_THROW(io::diffop_from_json(io::Json::parse(R"({"terms": []})")), std::invalid_argument);
  EXPECT_THROW(io::diffop_from_json(io::Json::parse(R"({"ncomp": 2, "terms": [{"dt": 1}]})")), std::invalid_argument);
  EXPECT_THROW(io::matrix_from_json(io::Json::parse(R"([[["1","0"]],[["1","0"],["0","0"]]])")), std::invalid_argument);
}

TEST(Json, AtomicWriteLeavesOnlyTarget) {
  const auto dir = std::filesystem::temp_directory_path() / "galinv_atomic_test";
  std::filesystem::remove_all(dir);
  io::write_atomic(dir / "a.json", "first\n");
  io::write_atomic(dir / "a.json", "second\n");
  std::ifstream in(dir / "a.json");
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "second\n");
  EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}), 1);
  std::filesystem::remove_all(dir);
}

TEST(RunConfig, Parsing) {
  EXPECT_EQ(parse_command("prop-suite"), Command::PropSuite);
  EXPECT_EQ(parse_format("latex"), Format::Latex);
  EXPECT_EQ(parse_mass("3/2"), Rational(3, 2));
  EXPECT_THROW(parse_command("solve"), ConfigError);
  EXPECT_THROW(parse_format("xml"), ConfigError);
  EXPECT_THROW(parse_mass("0"), ConfigError);
  EXPECT_THROW(parse_mass("-1/2"), ConfigError);
  EXPECT_THROW(parse_mass("one"), ConfigError);
}

TEST(RunConfig, Validation) {
  RunConfig c = config(Command::Derive, Format::Json);
  c.ncomp = 3;
  EXPECT_THROW(validate(c), ConfigError);
  c.ncomp = 2;
  c.order = 0;
  EXPECT_THROW(validate(c), ConfigError);
  RunConfig p = config(Command::Power, Format::Json);
  p.N = 0;
  EXPECT_THROW(validate(p), ConfigError);
  p.N = 2;
  p.ncomp = 2;
  EXPECT_THROW(validate(p), ConfigError);
}

TEST(Run, DeriveTwoComponentIsEmpty) {
  RunConfig c = config(Command::Derive, Format::Text);
  c.ncomp = 2;
  const RunResult r = run(c);
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_TRUE(contains(r.report, "family dimension: 0"));
}

TEST(Run, DeriveFourComponentJson) {
  const RunResult r = run(config(Command::Derive, Format::Json));
  EXPECT_EQ(r.status, kExitOk);
  const io::Json j = io::Json::parse(r.report);
  EXPECT_EQ(j["schema"], io::kSchema);
  EXPECT_EQ(j["report"]["family_dimension"], 1);
  EXPECT_EQ(io::diffop_from_json(j["report"]["family"][0]), levy_leblond_operator(Rational(1)));
  ASSERT_EQ(j["cascade"]["stages"].size(), 5u);
  for (const auto& st : j["cascade"]["stages"]) EXPECT_TRUE(st["printed_equal_modulo_degenerate"].get<bool>());
}

TEST(Run, DeriveFourComponentText) {
  const RunResult r = run(config(Command::Derive, Format::Text));
  EXPECT_TRUE(contains(r.report, "family dimension: 1"));
  EXPECT_TRUE(contains(r.report, "cascade:"));
  const RunResult tex = run(config(Command::Derive, Format::Latex));
  EXPECT_TRUE(contains(tex.report, "\\begin{pmatrix}"));
  EXPECT_TRUE(contains(tex.report, "\\partial_{t}"));
}

TEST(Run, PowerTwoIsSchrodinger) {
  const RunResult r = run(config(Command::Power, Format::Text));
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_TRUE(contains(r.report, "equals Schrödinger operator (projective)"));
  EXPECT_TRUE(contains(r.report, "mixed terms: 0"));
}

TEST(Run, PowerThreeHasMixedTerms) {
  RunConfig c = config(Command::Power, Format::Json);
  c.N = 3;
  const RunResult r = run(c);
  EXPECT_EQ(r.status, kExitOk);
  const io::Json j = io::Json::parse(r.report);
  EXPECT_TRUE(j["invariance"]["invariant"].get<bool>());
  EXPECT_FALSE(j["invariance"]["mixed_terms"].empty());
  EXPECT_TRUE(j["factorization"]["holds"].get<bool>());
}

TEST(Run, PlaneWaveScan) {
  RunConfig c = config(Command::PlaneWave, Format::Text);
  c.mass = Rational(3, 2);
  const RunResult r = run(c);
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.report.rfind("k1,k2,k3,omega,on_shell,nullity\n", 0), 0u);
  EXPECT_TRUE(contains(r.report, "derived sign 1"));
}

TEST(Run, CoupleTranscript) {
  const RunResult tex = run(config(Command::Couple, Format::Latex));
  EXPECT_EQ(tex.status, kExitOk);
  EXPECT_TRUE(contains(tex.report, "\\begin{align}"));
  EXPECT_TRUE(contains(tex.report, "\\text{spin term}"));
  const io::Json j = io::Json::parse(run(config(Command::Couple, Format::Json)).report);
  EXPECT_TRUE(j["derivation"]["matches_reference"].get<bool>());
}

TEST(Run, ReportsAreByteStable) {
  for (Command cmd : {Command::Derive, Command::Power, Command::PlaneWave, Command::Couple}) {
    for (Format f : {Format::Json, Format::Latex, Format::Text}) {
      RunConfig c = config(cmd, f);
      c.mass = Rational(2, 3);
      EXPECT_EQ(run(c).report, run(c).report) << command_name(cmd) << " " << extension(f);
    }
  }
}

}  // namespace
}  // namespace galinv
