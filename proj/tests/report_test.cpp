#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

#include "padic/errors.hpp"
#include "report/commands.hpp"

using report::ExitCode;
using report::Json;

namespace {

report::ClassifyOptions classify_opts(long p, long q, const char* rho, const char* exp_of = nullptr) {
  report::ClassifyOptions o;
  o.model.p = p;
  o.model.q = q;
  if (rho) o.model.rho = rho;
  if (exp_of) o.model.exp_of = exp_of;
  return o;
}

struct CliRun {
  int status;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(POTTS_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe.release());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Json, NormsAreExponentsNeverFloats) {
  EXPECT_EQ(report::norm_json(padic::Norm::power(-3)).dump(), R"({"exp":-3})");
  EXPECT_EQ(report::norm_json(padic::Norm::zero()).dump(), R"({"zero":true})");
}

TEST(Classify, RecordShapeAndSmallRhoVerdict) {
  const auto r = report::classify(classify_opts(7, 8, "343"));
  EXPECT_EQ(r.code, ExitCode::Ok);
  const Json& j = r.record;
  EXPECT_EQ(j["schema_version"], report::kSchemaVersion);
  EXPECT_EQ(j["command"], "classify");
  EXPECT_EQ(j["params"]["p"], 7);
  EXPECT_EQ(j["verdict"]["regime"], "small_rho_near1_q");
  EXPECT_EQ(j["catalog"]["count"], 4);
  EXPECT_EQ(j["transition"]["kind"], "strong");
  EXPECT_TRUE(j["witness"]["common"]["holds"].get<bool>());
  EXPECT_EQ(j["catalog"]["measures"][0]["denom_norm"]["exp"], -1);
}

TEST(Classify, QuasiTransition) {
  const auto r = report::classify(classify_opts(11, 121, "121"));
  EXPECT_EQ(r.code, ExitCode::Ok);
  EXPECT_EQ(r.record["transition"]["kind"], "quasi");
  EXPECT_TRUE(r.record["prediction"]["agrees"].get<bool>());
}

TEST(Classify, UncoveredExitsThree) {
  const auto r = report::classify(classify_opts(5, 3, "2"));
  EXPECT_EQ(r.code, ExitCode::Uncovered);
  EXPECT_EQ(r.record["verdict"]["regime"], "uncovered");
}

TEST(Classify, DisagreeingPredictionIsReportedNotFatal) {
  const auto r = report::classify(classify_opts(5, 7, nullptr, "125"));
  EXPECT_EQ(r.code, ExitCode::Ok);
  EXPECT_FALSE(r.record["prediction"]["agrees"].get<bool>());
  EXPECT_EQ(r.record["params"]["rho_source"], "exp_of");
}

TEST(Classify, RhoAndCouplingAreExclusive) {
  auto both = classify_opts(5, 7, "126", "125");
  EXPECT_THROW(report::classify(both), padic::ParseError);
  auto neither = classify_opts(5, 7, nullptr);
  EXPECT_THROW(report::classify(neither), padic::ParseError);
}

TEST(Classify, RecordIsDeterministic) {
  const auto a = report::classify(classify_opts(7, 8, "343"));
  const auto b = report::classify(classify_opts(7, 8, "343"));
  EXPECT_EQ(a.record.dump(), b.record.dump());
}

TEST(Roots, ExamplesWithOracle) {
  report::RootsOptions o{7, "1", "2", 20, 6};
  auto r = report::roots(o);
  EXPECT_EQ(r.code, ExitCode::Ok);
  EXPECT_EQ(r.record["report"]["count"], 1);
  EXPECT_TRUE(r.record["oracle"]["agrees"].get<bool>());
  ASSERT_EQ(r.record["roots"].size(), 1u);
  EXPECT_EQ(r.record["roots"][0]["valuation"], 0);

  o = {5, "4", "2", 20, 6};
  EXPECT_EQ(report::roots(o).record["report"]["count"], 0);

  o = {7, "1/7", "1/7", 20, 5};
  r = report::roots(o);
  EXPECT_EQ(r.record["report"]["norm_class"], "pole_coefficients");
  EXPECT_EQ(r.record["report"]["count"], 1);
}

TEST(Simulate, FiniteVolumeChecksPass) {
  report::SimulateOptions o;
  o.model = {5, 3, std::string("5"), std::nullopt, 20};
  o.n = 1;
  for (auto check : {report::SimulateCheck::Compatibility, report::SimulateCheck::Recursion, report::SimulateCheck::Norms}) {
    o.check = check;
    const auto r = report::simulate(o);
    EXPECT_EQ(r.code, ExitCode::Ok);
    for (const auto& e : r.record["results"]) EXPECT_TRUE(e["pass"].get<bool>());
  }
  o.check = report::SimulateCheck::Norms;
  const auto norms = report::simulate(o);
  EXPECT_EQ(norms.record["results"][0]["report"]["configurations"], 81);
  for (const auto& row : norms.record["results"][1]["table"]) EXPECT_EQ(row["enumerated"], row["closed_form"]);
}

TEST(Simulate, UnknownMeasureLabel) {
  report::SimulateOptions o;
  o.model = {5, 3, std::string("5"), std::nullopt, 20};
  o.measure = "mu9";
  EXPECT_THROW(report::simulate(o), padic::DomainError);
}

TEST(Scan, RowsInOrderWithSummary) {
  report::ScanOptions o{5, 3, 12, std::string("126"), std::nullopt, 20};
  const auto r = report::scan(o);
  EXPECT_EQ(r.code, ExitCode::Ok);
  ASSERT_EQ(r.record["rows"].size(), 10u);
  for (long i = 0; i < 10; ++i) EXPECT_EQ(r.record["rows"][static_cast<std::size_t>(i)]["q"], 3 + i);
  EXPECT_EQ(r.record["summary"]["points"], 10);
}

TEST(Scan, EmptyGrid) {
  report::ScanOptions o{5, 4, 3, std::string("126"), std::nullopt, 20};
  const auto r = report::scan(o);
  EXPECT_EQ(r.code, ExitCode::Ok);
  EXPECT_TRUE(r.record["rows"].empty());
}

TEST(Scan, SingularPointRecordedInline) {
  // rho = 1 - q makes x = 1 singular at q = 6 only.
  report::ScanOptions o{5, 5, 7, std::string("-5"), std::nullopt, 20};
  const auto r = report::scan(o);
  EXPECT_EQ(r.code, ExitCode::Ok);
  EXPECT_EQ(r.record["rows"][1]["error"]["kind"], "singularity");
  EXPECT_EQ(r.record["summary"]["errors"], 1);
}

TEST(Cli, ExitCodeContract) {
  EXPECT_EQ(run_cli("classify --p 7 --q 8 --rho 343").status, 0);
  EXPECT_EQ(run_cli("classify --p 5 --q 3 --rho 2").status, 3);
  EXPECT_EQ(run_cli("classify --p 5 --q 3 --rho 1/x").status, 1);
  EXPECT_EQ(run_cli("classify --p 5 --q 3").status, 1);
  EXPECT_EQ(run_cli("classify --p 5 --q 3 --rho 5 --exp 5").status, 1);
  EXPECT_EQ(run_cli("classify --p 4 --q 3 --rho 2").status, 2);
  EXPECT_EQ(run_cli("classify --p 5 --q 6 --rho -5").status, 2);
  EXPECT_EQ(run_cli("roots --p 7 --a 0 --b 7").status, 2);
  EXPECT_EQ(run_cli("simulate --p 5 --q 3 --rho 5 --n 3").status, 5);
}

TEST(Cli, JsonOnStdoutIsByteIdentical) {
  const CliRun a = run_cli("classify --p 11 --q 121 --rho 121");
  const CliRun b = run_cli("classify --p 11 --q 121 --rho 121");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["schema_version"], report::kSchemaVersion);
}

TEST(Cli, TextSummary) {
  const CliRun r = run_cli("classify --p 11 --q 121 --rho 121 --text");
  EXPECT_NE(r.out.find("transition quasi"), std::string::npos);
}
