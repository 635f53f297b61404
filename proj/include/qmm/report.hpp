#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qmm {

using Json = nlohmann::ordered_json;

// Fixed enumeration of the statements the suite exercises; every check
// record carries one of these tags.
enum class StatementTag {
  euler_pairing,
  class_c_construction,
  cross_arrow_convention,
  local_p_invariance,
  iteration_consistency,
  top_type_bound,
  nilpotent_fiber_bound,
  target_form_gap,
  excluded_simple_type,
  fixed_locus_bound,
  final_inequality_edge,
  moment_count,
  jet_count,
  fixed_jet_product,
  count_ratio_diagnostic,
  group_mass_conservation,
  commuting_pair_identity,
  relation_fiber_spread,
  baseline_regression,
  determinism,
  budget,
};

const char* statement_tag_name(StatementTag tag);

enum class Outcome { pass, fail, info };

const char* outcome_name(Outcome o);

struct CheckRecord {
  std::string name;
  StatementTag tag = StatementTag::euler_pairing;
  Json inputs = Json::object();
  Outcome outcome = Outcome::info;
  Json data = Json::object();
};

struct SuiteReport {
  std::string version;
  Json parameters = Json::object();
  std::vector<CheckRecord> checks;
  Json baseline_diffs = Json::array();

  bool all_pass() const;
  int count(Outcome o) const;
};

enum class ReportFormat { json, text };

ReportFormat parse_report_format(const std::string& name);  // "json" | "text"

std::string render_report(const SuiteReport& r, ReportFormat format);

// path "-" writes to stdout.
void emit_report(const SuiteReport& r, ReportFormat format, const std::string& path);

}  // namespace qmm
