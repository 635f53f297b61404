// Command-line front end: pairing arithmetic, type enumeration, bound
// checks, equation-system export, exact counting, and the full check suite.

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <string>

#include "qmm/baselines.hpp"
#include "qmm/errors.hpp"
#include "qmm/fq_counter.hpp"
#include "qmm/group_counter.hpp"
#include "qmm/rep_types.hpp"
#include "qmm/report.hpp"
#include "qmm/strata_bounds.hpp"
#include "qmm/suite.hpp"
#include "qmm/version.hpp"

namespace {

using namespace qmm;

std::string default_baselines_path() {
  if (const char* env = std::getenv("QMM_BASELINES")) return env;
  return "baselines.txt";
}

MatrixGroupKind parse_variant(std::string name) {
  for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (name == "sl") return MatrixGroupKind::special_linear;
  if (name == "gl") return MatrixGroupKind::general_linear;
  throw std::invalid_argument("variant must be gl or sl, got: " + name);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << text;
}

std::vector<std::vector<int64_t>> parse_rhs(const std::string& text, int n) {
  std::vector<std::vector<int64_t>> rhs(n, std::vector<int64_t>(n, 0));
  if (text.empty()) {
    for (int i = 0; i < n; ++i) rhs[i][i] = 1;
    return rhs;
  }
  std::vector<int64_t> entries;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    entries.push_back(std::stoll(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (entries.size() != size_t(n) * n)
    throw std::invalid_argument("rhs needs n*n comma-separated entries");
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) rhs[r][c] = entries[size_t(r) * n + c];
  return rhs;
}

int run_forms(int g, int n, const std::string& betas_text) {
  if (!betas_text.empty()) {
    std::vector<int> betas;
    size_t pos = 0;
    while (pos < betas_text.size()) {
      size_t comma = betas_text.find(',', pos);
      if (comma == std::string::npos) comma = betas_text.size();
      betas.push_back(std::stoi(betas_text.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    const Quiver q = build_class_c_quiver(g, betas);
    std::cout << "class-C quiver for g=" << g << ", betas=";
    for (size_t i = 0; i < betas.size(); ++i) std::cout << (i ? "," : "") << betas[i];
    std::cout << "\nvertices: " << q.vertex_count << "\narrows: " << q.arrows.size() << "\n";
    for (int i = 0; i < q.vertex_count; ++i) {
      int loops = 0;
      for (const Arrow& a : q.arrows)
        if (a.tail == i && a.head == i) ++loops;
      std::cout << "loops at " << i << ": " << loops << "\n";
    }
    const DimVector ones(betas.size(), 1);
    std::cout << "p(1,...,1) = " << p_value(q, ones) << "\n";
    return 0;
  }
  const Quiver q = loop_quiver(g);
  const DimVector a{n};
  std::cout << "quiver: 1 vertex, " << g << " loops, n=" << n << "\n";
  std::cout << "euler <n,n> = " << euler_form(q, a, a) << "\n";
  std::cout << "sym (n,n) = " << sym_form(q, a, a) << "\n";
  std::cout << "p(n) = " << p_value(q, a) << "\n";
  std::cout << "dim Rep(double) = " << rep_space_dim(double_quiver(q), a) << "\n";
  std::cout << "expected dim of the zero locus = " << dot(a, a) - 1 + 2 * p_value(q, a) << "\n";
  return 0;
}

int run_types(int g, int n) {
  for (const RepType& tau : enumerate_rep_types(g, n)) std::cout << format_tau(tau) << "\n";
  return 0;
}

int run_local_quiver(int g, int n, const std::string& tau_text) {
  const RepType tau = parse_tau(tau_text);
  if (tau.weighted_dim_sum() != DimVector{n})
    throw std::invalid_argument("type does not sum to n");
  const Quiver q = loop_quiver(g);
  const LocalQuiverData lq = local_quiver(q, tau);
  std::cout << "local quiver of tau=" << format_tau(tau) << " on g=" << g << ", n=" << n << "\n";
  std::cout << "vertices: " << lq.quiver.vertex_count << "\n";
  const std::vector<std::vector<int>> adj = double_adjacency(lq.quiver);
  for (int i = 0; i < lq.quiver.vertex_count; ++i) {
    std::cout << "vertex " << i << ": label=" << format_dim_vector(lq.vertex_labels[i])
              << " e=" << lq.dims[i] << " loops=" << adj[i][i] / 2 << "\n";
  }
  for (int i = 0; i < lq.quiver.vertex_count; ++i)
    for (int j = i + 1; j < lq.quiver.vertex_count; ++j)
      if (adj[i][j]) std::cout << "arrows " << i << "--" << j << ": " << adj[i][j] << "\n";
  std::cout << "p(e) = " << p_value(lq.quiver, lq.dims) << " (ambient p(n) = "
            << p_value(q, DimVector{n}) << ")\n";
  return 0;
}

int run_check_bounds(int g, int n, const std::string& tau_text, int top_budget) {
  if (!tau_text.empty()) {
    const BoundReport r = check_prop_nil(g, n, parse_tau(tau_text), top_budget);
    std::cout << "tau=" << format_tau(r.tau) << " max_bound=" << r.max_bound
              << " target=" << r.target << (r.pass ? " strict" : " NOT strict") << "\n";
    return r.pass ? 0 : 1;
  }
  bool all = true;
  for (const RepType& tau : enumerate_rep_types(g, n)) {
    if (tau.is_full_simple()) {
      std::cout << "tau=" << format_tau(tau) << " excluded (simple type)\n";
      continue;
    }
    const BoundReport r = check_prop_nil(g, n, tau, top_budget);
    all = all && r.pass;
    std::cout << "tau=" << format_tau(r.tau) << " max_bound=" << r.max_bound
              << " target=" << r.target << (r.pass ? " strict" : " NOT strict") << "\n";
  }
  return all ? 0 : 1;
}

int run_jets_export(int g, int n, int m, const std::string& out, bool multiplicative,
                    const std::string& variant, const std::string& rhs_text) {
  PolySystem ps;
  if (multiplicative) {
    ps = multiplicative_system(g, n, parse_variant(variant), parse_rhs(rhs_text, n));
  } else {
    ps = jet_system(loop_quiver(g), DimVector{n}, m);
  }
  write_output(render_system(ps), out);
  return 0;
}

int run_count(int g, int n, uint32_t p, int m, bool fixed_locus, const std::string& budget,
              bool freeze, const std::string& format, const std::string& out) {
  CountOptions opts;
  if (!budget.empty()) opts.budget = BigInt(budget);
  const Quiver q = loop_quiver(g);
  const CountResult r = fixed_locus ? count_jets_over_fixed(q, DimVector{n}, p, m, opts)
                                    : count_jet_points(q, DimVector{n}, p, m, opts);

  const std::string path = default_baselines_path();
  Baselines baselines = Baselines::load(path);
  std::string baseline_status;
  int rc = 0;
  if (freeze) {
    baselines.set(r.key(), r.count);
    baselines.save(path);
    baseline_status = "frozen";
  } else {
    switch (baselines.compare(r.key(), r.count)) {
      case Baselines::Status::match: baseline_status = "match"; break;
      case Baselines::Status::missing: baseline_status = "missing"; break;
      case Baselines::Status::mismatch:
        baseline_status = "mismatch (stored " + baselines.find(r.key())->str() + ")";
        rc = 1;
        break;
    }
  }

  if (parse_report_format(format) == ReportFormat::json) {
    Json j{{"key", r.key()},
           {"count", r.count.str()},
           {"expected_exponent", r.expected_exponent},
           {"ratio", r.ratio()},
           {"baseline", baseline_status}};
    write_output(j.dump(2) + "\n", out);
  } else {
    std::string text;
    text += "key " + r.key() + "\n";
    text += "count " + r.count.str() + "\n";
    if (!r.over_fixed) {
      text += "expected exponent " + std::to_string(r.expected_exponent) + "\n";
      text += "ratio " + std::to_string(r.ratio()) + "\n";
    }
    text += "baseline " + baseline_status + "\n";
    write_output(text, out);
  }
  return rc;
}

int run_count_group(uint32_t p, int n, const std::string& variant, int g, uint64_t cap,
                    const std::string& dump, const std::string& format,
                    const std::string& out) {
  const FiniteMatrixGroup G = enumerate_group(p, n, parse_variant(variant), cap);
  const FiberReport r = fiber_report(G, g);

  if (!dump.empty()) {
    const ClassFunctionTable c = commutator_distribution(G);
    write_output(render_class_function(convolve_power(c, g, G)), dump);
  }

  if (parse_report_format(format) == ReportFormat::json) {
    Json rows = Json::array();
    for (const FiberClassRow& row : r.rows)
      rows.push_back(Json{{"class", row.class_id},
                          {"size", row.class_size},
                          {"count", row.count},
                          {"ratio", row.ratio}});
    Json j{{"group", std::string(variant) + std::to_string(n) + "(F" + std::to_string(p) + ")"},
           {"order", r.order},
           {"classes", r.class_count},
           {"g", g},
           {"total", r.total},
           {"mass_ok", r.mass_ok},
           {"identity_fiber", r.identity_fiber},
           {"min_ratio", r.min_ratio},
           {"max_ratio", r.max_ratio},
           {"fibers", rows}};
    write_output(j.dump(2) + "\n", out);
  } else {
    std::string text;
    text += "group " + variant + std::to_string(n) + "(F" + std::to_string(p) + ") order " +
            std::to_string(r.order) + ", " + std::to_string(r.class_count) + " classes\n";
    text += "g " + std::to_string(g) + "\n";
    text += "total " + r.total + (r.mass_ok ? " (mass ok)" : " (MASS MISMATCH)") + "\n";
    text += "identity fiber " + r.identity_fiber + "\n";
    for (const FiberClassRow& row : r.rows)
      text += "class " + std::to_string(row.class_id) + " size " +
              std::to_string(row.class_size) + " count " + row.count + " ratio " +
              std::to_string(row.ratio) + "\n";
    write_output(text, out);
  }
  return r.mass_ok ? 0 : 1;
}

int run_suite_cmd(const std::string& config_path, const std::string& format,
                  const std::string& out, bool freeze, const std::string& budget) {
  SuiteConfig cfg;
  if (!config_path.empty()) {
    std::ifstream f(config_path);
    if (!f) throw std::invalid_argument("cannot read config: " + config_path);
    Json j;
    try {
      f >> j;
    } catch (const Json::exception& e) {
      throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    cfg = suite_config_from_json(j);
  }
  if (freeze) cfg.freeze = true;
  if (!budget.empty()) cfg.budget = BigInt(budget);
  const SuiteReport rep = run_suite(cfg);
  emit_report(rep, parse_report_format(format), out);
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiver moment-map bound checking and exact counting"};
  app.set_help_flag("--help", "print usage");
  app.set_help_all_flag("--help-all", "print usage for every subcommand");
  app.set_version_flag("--version", qmm::kVersion);
  app.require_subcommand(1);

  int g = 2, n = 2, m = 0, top_budget = 12, group_g = 2;
  uint32_t prime = 2;
  uint64_t group_cap = 2000;
  std::string tau, betas, out = "-", format = "text", budget, config_path, variant = "sl";
  std::string rhs_text, dump;
  bool fixed_locus = false, freeze = false, multiplicative = false;

  CLI::App* forms = app.add_subcommand("forms", "pairing and dimension arithmetic");
  forms->add_option("--g", g, "loop count")->required();
  forms->add_option("--n", n, "dimension");
  forms->add_option("--betas", betas, "build the class-C quiver for these betas");

  CLI::App* types = app.add_subcommand("types", "enumerate representation types");
  types->add_option("--g", g)->required();
  types->add_option("--n", n)->required();

  CLI::App* local = app.add_subcommand("local-quiver", "local quiver of a type");
  local->add_option("--g", g)->required();
  local->add_option("--n", n)->required();
  local->add_option("--tau", tau, "type, e.g. 2x1,1x3")->required();

  CLI::App* bounds = app.add_subcommand("check-bounds", "nilpotent fiber bound checks");
  bounds->add_option("--g", g)->required();
  bounds->add_option("--n", n)->required();
  bounds->add_option("--tau", tau, "single type; default checks every non-simple type");
  bounds->add_option("--top-budget", top_budget, "cap on sum(e) for top-type enumeration");

  CLI::App* jets = app.add_subcommand("jets", "equation systems");
  CLI::App* jets_export = jets->add_subcommand("export", "write a system in the text format");
  jets_export->add_option("--g", g)->required();
  jets_export->add_option("--n", n)->required();
  jets_export->add_option("--jet-order", m, "jet order (additive systems)");
  jets_export->add_option("--out", out, "output path, - for stdout");
  jets_export->add_flag("--multiplicative", multiplicative, "surface-group relation system");
  jets_export->add_option("--variant", variant, "gl or sl (multiplicative)");
  jets_export->add_option("--rhs", rhs_text, "n*n entries for the relation right-hand side");

  CLI::App* count = app.add_subcommand("count", "exact point counts over a prime field");
  count->add_option("--g", g)->required();
  count->add_option("--n", n)->required();
  count->add_option("--prime", prime)->required();
  count->add_option("--jet-order", m);
  count->add_flag("--fixed-locus", fixed_locus, "count jets based in the fixed locus");
  count->add_option("--budget", budget, "forward tuple cap");
  count->add_flag("--freeze", freeze, "record the result as the baseline");
  count->add_option("--format", format, "text or json");
  count->add_option("--out", out);

  CLI::App* cgroup = app.add_subcommand("count-group", "relation fibers in a finite matrix group");
  cgroup->add_option("--prime", prime)->required();
  cgroup->add_option("--n", n)->required();
  cgroup->add_option("--variant", variant, "gl or sl")->required();
  cgroup->add_option("--g", group_g, "number of commutator factors");
  cgroup->add_option("--cap", group_cap, "group order cap");
  cgroup->add_option("--dump", dump, "write the fiber table as 'index count' lines");
  cgroup->add_option("--format", format, "text or json");
  cgroup->add_option("--out", out);

  CLI::App* suite = app.add_subcommand("suite", "run the full check suite");
  suite->add_option("--config", config_path, "JSON config; defaults used when absent");
  suite->add_option("--format", format, "text or json");
  suite->add_option("--out", out, "report path, - for stdout");
  suite->add_flag("--freeze", freeze, "record derived counts as baselines");
  suite->add_option("--budget", budget, "forward tuple cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*forms) return run_forms(g, n, betas);
    if (*types) return run_types(g, n);
    if (*local) return run_local_quiver(g, n, tau);
    if (*bounds) return run_check_bounds(g, n, tau, top_budget);
    if (*jets_export) return run_jets_export(g, n, m, out, multiplicative, variant, rhs_text);
    if (*count) return run_count(g, n, prime, m, fixed_locus, budget, freeze, format, out);
    if (*cgroup)
      return run_count_group(prime, n, variant, group_g, group_cap, dump, format, out);
    if (*suite) return run_suite_cmd(config_path, format, out, freeze, budget);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
