#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "qmm/baselines.hpp"
#include "qmm/report.hpp"
#include "qmm/suite.hpp"
#include "qmm/version.hpp"

using namespace qmm;

namespace {

// a fast configuration exercising every suite section
SuiteConfig tiny_config(const std::string& baselines_path) {
  SuiteConfig cfg;
  cfg.gs = {2, 3};
  cfg.n_max = 3;
  cfg.iteration_exhaustive_n = 2;
  cfg.iteration_sample_count = 10;
  cfg.iteration_sample_n = 3;
  cfg.unit_primes = {2, 3};
  cfg.unit_m_max = 1;
  cfg.count_cases = {{1, 2, 2, 0}, {2, 2, 2, 0}};
  cfg.fixed_cases = {{2, 2, 2, 1}, {2, 2, 2, 2}};
  cfg.ratio_primes = {2, 3};
  cfg.mustata_m_max = 0;
  cfg.groups = {{2, 2, MatrixGroupKind::general_linear}};
  cfg.group_gs = {1, 2};
  cfg.baselines_path = baselines_path;
  return cfg;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& p) : path(p) { std::remove(path.c_str()); }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("baseline store round trip") {
  TempFile tmp("test_baselines_roundtrip.txt");
  Baselines b;
  CHECK(b.size() == 0);
  b.set("p2.m0.q1:0>0.d2", BigInt(88));
  b.set("other", BigInt("123456789012345678901234567890"));
  b.save(tmp.path);

  const Baselines loaded = Baselines::load(tmp.path);
  CHECK(loaded.size() == 2);
  CHECK(loaded.compare("p2.m0.q1:0>0.d2", BigInt(88)) == Baselines::Status::match);
  CHECK(loaded.compare("p2.m0.q1:0>0.d2", BigInt(89)) == Baselines::Status::mismatch);
  CHECK(loaded.compare("absent", BigInt(1)) == Baselines::Status::missing);
  CHECK(*loaded.find("other") == BigInt("123456789012345678901234567890"));
}

TEST_CASE("missing baseline file loads empty") {
  CHECK(Baselines::load("definitely_missing_file.txt").size() == 0);
}

TEST_CASE("report rendering") {
  SuiteReport rep;
  rep.version = kVersion;

  // an empty report is still a valid document
  const std::string empty_json = render_report(rep, ReportFormat::json);
  CHECK(Json::parse(empty_json).at("checks").size() == 0);
  CHECK(render_report(rep, ReportFormat::text).find("0 pass, 0 fail") != std::string::npos);

  CheckRecord c;
  c.name = "sample";
  c.tag = StatementTag::nilpotent_fiber_bound;
  c.outcome = Outcome::pass;
  c.data = Json{{"value", 1}};
  rep.checks.push_back(c);
  c.outcome = Outcome::fail;
  rep.checks.push_back(c);

  CHECK_FALSE(rep.all_pass());
  CHECK(rep.count(Outcome::pass) == 1);
  CHECK(rep.count(Outcome::fail) == 1);

  const Json parsed = Json::parse(render_report(rep, ReportFormat::json));
  CHECK(parsed.at("checks").at(0).at("statement_tag") == "nilpotent-fiber-bound");
  CHECK(parsed.at("checks").at(1).at("outcome") == "fail");

  // byte-stable rendering
  CHECK(render_report(rep, ReportFormat::json) == render_report(rep, ReportFormat::json));
  CHECK(render_report(rep, ReportFormat::text) == render_report(rep, ReportFormat::text));

  CHECK_THROWS_AS(parse_report_format("yaml"), std::invalid_argument);
}

TEST_CASE("suite config json round trip") {
  SuiteConfig cfg = tiny_config("x.txt");
  cfg.freeze = true;
  cfg.budget = BigInt(12345);
  const SuiteConfig back = suite_config_from_json(suite_config_to_json(cfg));
  CHECK(suite_config_to_json(back) == suite_config_to_json(cfg));

  CHECK_THROWS_AS(suite_config_from_json(Json{{"gs", "nonsense"}}), std::invalid_argument);
}

TEST_CASE("suite runs green on the tiny configuration") {
  TempFile tmp("test_suite_baselines.txt");

  // first pass freezes the derived counts
  SuiteConfig freeze_cfg = tiny_config(tmp.path);
  freeze_cfg.freeze = true;
  const SuiteReport frozen = run_suite(freeze_cfg);
  CHECK(frozen.all_pass());

  // second pass compares against them and must be fully green
  const SuiteConfig cfg = tiny_config(tmp.path);
  const SuiteReport rep = run_suite(cfg);
  CHECK(rep.all_pass());
  CHECK(rep.count(Outcome::pass) > 5);

  // the mandated findings are present with their literal values
  const Json j = Json::parse(render_report(rep, ReportFormat::json));
  bool found_edge = false, found_gap = false, found_convention = false;
  for (const Json& c : j.at("checks")) {
    if (c.at("name") == "final-inequality-edge-cases") {
      found_edge = true;
      CHECK(c.at("data").at("equality_at_r2").at("lhs") == 4);
      CHECK(c.at("data").at("equality_at_r2").at("rhs") == 4);
      CHECK(c.at("data").at("equality_at_r2").at("strict") == false);
      CHECK(c.at("data").at("failure_at_r1_beta1").at("strict") == false);
    }
    if (c.at("name") == "target-form-gap") {
      found_gap = true;
      CHECK(c.at("data").at("example").at("closed_form") == 4);
      CHECK(c.at("data").at("example").at("p_value_form") == 2);
    }
    if (c.at("name") == "cross-arrow-convention") {
      found_convention = true;
      CHECK(c.at("data").at("chosen_preserves_p") == true);
      CHECK(c.at("data").at("alternative_preserves_p") == false);
    }
  }
  CHECK(found_edge);
  CHECK(found_gap);
  CHECK(found_convention);

  // reports are reproducible byte for byte
  const SuiteReport again = run_suite(cfg);
  CHECK(render_report(rep, ReportFormat::json) == render_report(again, ReportFormat::json));
}

TEST_CASE("suite completes when the excluded type is forced in") {
  TempFile tmp("test_suite_baselines2.txt");
  SuiteConfig cfg = tiny_config(tmp.path);
  cfg.freeze = true;
  cfg.include_excluded_type = true;
  const SuiteReport rep = run_suite(cfg);
  bool saw_excluded_error = false;
  for (const CheckRecord& c : rep.checks)
    if (c.tag == StatementTag::excluded_simple_type && c.data.contains("error"))
      saw_excluded_error = true;
  CHECK(saw_excluded_error);
  CHECK(rep.all_pass());
}

TEST_CASE("suite turns budget overruns into info records") {
  TempFile tmp("test_suite_baselines3.txt");
  SuiteConfig cfg = tiny_config(tmp.path);
  cfg.freeze = true;
  cfg.budget = 4;  // below every counting case
  const SuiteReport rep = run_suite(cfg);
  int budget_infos = 0;
  for (const CheckRecord& c : rep.checks)
    if (c.tag == StatementTag::budget && c.outcome == Outcome::info) ++budget_infos;
  CHECK(budget_infos > 0);
}

TEST_CASE("emit report writes files") {
  TempFile tmp("test_report_out.json");
  SuiteReport rep;
  rep.version = kVersion;
  emit_report(rep, ReportFormat::json, tmp.path);
  std::ifstream f(tmp.path);
  REQUIRE(f.good());
  Json j;
  f >> j;
  CHECK(j.at("version") == kVersion);
}

TEST_CASE("a poisoned baseline fails the suite") {
  TempFile tmp("test_suite_baselines4.txt");
  {
    Baselines b;
    b.set("p2.m0.q1:0>0.d2", BigInt(87));  // wrong on purpose
    b.save(tmp.path);
  }
  SuiteConfig cfg = tiny_config(tmp.path);
  cfg.count_cases = {{1, 2, 2, 0}};
  const SuiteReport rep = run_suite(cfg);
  CHECK_FALSE(rep.all_pass());
  bool saw_diff = false;
  for (const Json& d : rep.baseline_diffs)
    if (d.at("action") == "mismatch") saw_diff = true;
  CHECK(saw_diff);
}
