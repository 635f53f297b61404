#include "qmm/report.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace qmm {

const char* statement_tag_name(StatementTag tag) {
  switch (tag) {
    case StatementTag::euler_pairing: return "euler-pairing";
    case StatementTag::class_c_construction: return "class-c-construction";
    case StatementTag::cross_arrow_convention: return "cross-arrow-convention";
    case StatementTag::local_p_invariance: return "local-p-invariance";
    case StatementTag::iteration_consistency: return "iteration-consistency";
    case StatementTag::top_type_bound: return "top-type-bound";
    case StatementTag::nilpotent_fiber_bound: return "nilpotent-fiber-bound";
    case StatementTag::target_form_gap: return "target-form-gap";
    case StatementTag::excluded_simple_type: return "excluded-simple-type";
    case StatementTag::fixed_locus_bound: return "fixed-locus-bound";
    case StatementTag::final_inequality_edge: return "final-inequality-edge";
    case StatementTag::moment_count: return "moment-count";
    case StatementTag::jet_count: return "jet-count";
    case StatementTag::fixed_jet_product: return "fixed-jet-product";
    case StatementTag::count_ratio_diagnostic: return "count-ratio-diagnostic";
    case StatementTag::group_mass_conservation: return "group-mass-conservation";
    case StatementTag::commuting_pair_identity: return "commuting-pair-identity";
    case StatementTag::relation_fiber_spread: return "relation-fiber-spread";
    case StatementTag::baseline_regression: return "baseline-regression";
    case StatementTag::determinism: return "determinism";
    case StatementTag::budget: return "budget";
  }
  return "unknown";
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::info: return "info";
  }
  return "unknown";
}

bool SuiteReport::all_pass() const { return count(Outcome::fail) == 0; }

int SuiteReport::count(Outcome o) const {
  int n = 0;
  for (const CheckRecord& c : checks)
    if (c.outcome == o) ++n;
  return n;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "text") return ReportFormat::text;
  throw std::invalid_argument("unknown report format: " + name);
}

namespace {

std::string render_json(const SuiteReport& r) {
  Json j;
  j["version"] = r.version;
  j["parameters"] = r.parameters;
  j["checks"] = Json::array();
  for (const CheckRecord& c : r.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["statement_tag"] = statement_tag_name(c.tag);
    jc["inputs"] = c.inputs;
    jc["outcome"] = outcome_name(c.outcome);
    jc["data"] = c.data;
    j["checks"].push_back(std::move(jc));
  }
  j["baseline_diffs"] = r.baseline_diffs;
  j["summary"] = Json{{"pass", r.count(Outcome::pass)},
                      {"fail", r.count(Outcome::fail)},
                      {"info", r.count(Outcome::info)}};
  return j.dump(2) + "\n";
}

std::string render_text(const SuiteReport& r) {
  std::string out;
  out += "suite report, version " + r.version + "\n";
  out += "parameters: " + r.parameters.dump() + "\n";
  for (const CheckRecord& c : r.checks) {
    out += "[";
    out += outcome_name(c.outcome);
    out += "] ";
    out += c.name;
    out += " (";
    out += statement_tag_name(c.tag);
    out += ")";
    if (!c.inputs.empty()) out += " inputs=" + c.inputs.dump();
    if (!c.data.empty()) out += " data=" + c.data.dump();
    out += "\n";
  }
  if (!r.baseline_diffs.empty()) out += "baseline diffs: " + r.baseline_diffs.dump() + "\n";
  out += "summary: " + std::to_string(r.count(Outcome::pass)) + " pass, " +
         std::to_string(r.count(Outcome::fail)) + " fail, " +
         std::to_string(r.count(Outcome::info)) + " info\n";
  return out;
}

}  // namespace

std::string render_report(const SuiteReport& r, ReportFormat format) {
  return format == ReportFormat::json ? render_json(r) : render_text(r);
}

void emit_report(const SuiteReport& r, ReportFormat format, const std::string& path) {
  const std::string text = render_report(r, format);
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace qmm
