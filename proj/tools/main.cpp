// Command line front end: reproducible experiments over the library with
// machine-readable output.

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <json.hpp>

#include "ssk3/json_io.hpp"

using namespace ssk3;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "ssk3/1";

struct RunConfig {
  u64 p = 0;
  unsigned sigma = 1;
  std::string pattern;
  bool special = false;
  u64 N = 0;
  u64 budget = 0;
  u64 seed = 0;
  std::string format = "json";
  unsigned working_degree = 0;
  bool timing = false;
};

void emit(const json& j, const RunConfig& cfg) {
  if (cfg.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump(2) << "\n";
}

int fail(const std::string& type, const std::string& message) {
  json err{{"schema", kSchema}, {"error", {{"type", type}, {"message", message}}}};
  std::cout << err.dump(2) << "\n";
  return 1;
}

discform::DiscSpacePtr build_space(const RunConfig& cfg) {
  discform::DiscOptions opts;
  opts.working_degree = cfg.working_degree;
  return discform::DiscSpace::build(cfg.p, cfg.sigma, opts);
}

charspace::CharSubspace construct_subspace(const RunConfig& cfg, json& meta) {
  auto space = build_space(cfg);
  if (cfg.special || cfg.pattern.empty()) {
    meta["construction"] = "special";
    return charspace::CharSubspace::special(space);
  }
  meta["construction"] = "search";
  auto pattern = strata::ZeroPattern::parse(cfg.sigma, cfg.pattern);
  charspace::SearchOptions sopts;
  sopts.seed = cfg.seed;
  if (cfg.budget) sopts.budget = cfg.budget;
  auto K = charspace::search_subspace(space, pattern, sopts);
  if (!K) throw std::runtime_error("search exhausted its candidate space without a match");
  return *K;
}

json table_json(const strata::Table& table, std::optional<u64> p) {
  json rows = json::array();
  for (const auto& [sigma, strata_list] : table)
    rows.push_back(json{{"sigma", sigma}, {"strata", strata_list}});
  json out{{"schema", kSchema}, {"rows", std::move(rows)}};
  if (p)
    out["p"] = *p;
  else
    out["p"] = nullptr;
  return out;
}

int cmd_table(const RunConfig& cfg) {
  std::optional<u64> p = cfg.p ? std::optional<u64>(cfg.p) : std::nullopt;
  auto table = strata::table1(p);
  if (cfg.format == "text") {
    std::cout << strata::render_table_text(table);
    return 0;
  }
  emit(table_json(table, p), cfg);
  return 0;
}

int cmd_index(const RunConfig& cfg) {
  auto pattern = cfg.pattern.empty() ? strata::ZeroPattern::all_zero(cfg.sigma)
                                     : strata::ZeroPattern::parse(cfg.sigma, cfg.pattern);
  auto r = strata::nonsymplectic_index(cfg.p, cfg.sigma, pattern);
  json out{{"schema", kSchema},
           {"result", r},
           {"pattern", pattern},
           {"dimension", strata::stratum_dimension(cfg.sigma, r.m)}};
  emit(out, cfg);
  return 0;
}

int cmd_oracle(const RunConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  json out{{"schema", kSchema}};
  auto K = construct_subspace(cfg, out);
  auto r = cfg.budget ? oracle::enumerate_index(K, cfg.budget) : oracle::enumerate_index(K);
  auto criterion = strata::nonsymplectic_index(cfg.p, cfg.sigma, K.zero_pattern());
  out["oracle"] = r;
  out["criterion_index"] = criterion.index;
  out["agrees"] = criterion.index == r.index;
  out["pattern"] = K.zero_pattern();
  out["psi"] = K.psi();
  if (cfg.timing) {
    out["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
  }
  emit(out, cfg);
  return 0;
}

int cmd_psi(const RunConfig& cfg) {
  json out{{"schema", kSchema}};
  auto K = construct_subspace(cfg, out);
  out["psi"] = K.psi();
  out["pattern"] = K.zero_pattern();
  out["subspace"] = K;
  emit(out, cfg);
  return 0;
}

int cmd_search(const RunConfig& cfg) {
  auto space = build_space(cfg);
  auto pattern = strata::ZeroPattern::parse(cfg.sigma, cfg.pattern);
  charspace::SearchOptions sopts;
  sopts.seed = cfg.seed;
  if (cfg.budget) sopts.budget = cfg.budget;
  auto K = charspace::search_subspace(space, pattern, sopts);
  json out{{"schema", kSchema}, {"found", K.has_value()}};
  if (K) {
    out["subspace"] = *K;
    out["psi"] = K->psi();
  }
  emit(out, cfg);
  return 0;
}

int cmd_classify(const RunConfig& cfg, bool all_residues) {
  json out{{"schema", kSchema}};
  if (all_residues) {
    out["partition"] = arith::residue_partition(cfg.N);
  } else {
    out["reduction"] = arith::classify_reduction(cfg.N, cfg.p);
  }
  emit(out, cfg);
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, unsigned d, bool quick) {
  std::vector<verify::SuiteReport> reports;
  if (suite == "fields")
    reports.push_back(verify::verify_fields(cfg.p ? cfg.p : 5, d, quick ? 40 : 200, cfg.seed + 2026));
  else if (suite == "discform")
    reports.push_back(verify::verify_discform(cfg.p ? cfg.p : 5, cfg.sigma));
  else if (suite == "charspace")
    reports.push_back(verify::verify_charspace(cfg.p ? cfg.p : 5, cfg.sigma, quick));
  else if (suite == "oracle")
    reports.push_back(verify::verify_oracle(cfg.p ? cfg.p : 5, cfg.sigma));
  else if (suite == "lattices")
    reports.push_back(verify::verify_lattices());
  else if (suite == "arith")
    reports.push_back(verify::verify_arith());
  else if (suite == "all")
    reports = verify::verify_all(quick);
  else
    return fail("usage", "unknown suite: " + suite);

  bool pass = true;
  u64 checks = 0;
  for (const auto& r : reports) {
    pass = pass && r.pass();
    checks += r.checks.size();
  }
  json out{{"schema", kSchema}, {"pass", pass}, {"checks_run", checks}, {"suites", reports}};
  emit(out, cfg);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supersingular K3 non-symplectic index toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool with_field_opts) {
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    if (with_field_opts) {
      sub->add_option("--budget", cfg.budget, "enumeration budget override");
      sub->add_option("--seed", cfg.seed, "search seed");
      sub->add_option("--working-degree", cfg.working_degree, "working field degree (multiple of 2*sigma)");
    }
  };

  auto* table = app.add_subcommand("table", "print the classification table");
  table->add_option("--p", cfg.p, "specialize to a numeric characteristic");
  add_common(table, false);

  auto* index = app.add_subcommand("index", "non-symplectic index from the divisor criterion");
  index->add_option("--p", cfg.p)->required();
  index->add_option("--sigma", cfg.sigma)->required();
  index->add_option("--pattern", cfg.pattern, "comma list of 0/1 markers for nonzero moduli slots");
  add_common(index, false);

  auto* orc = app.add_subcommand("oracle", "recompute the index by eigenvalue enumeration");
  orc->add_option("--p", cfg.p)->required();
  orc->add_option("--sigma", cfg.sigma)->required();
  orc->add_option("--pattern", cfg.pattern);
  orc->add_flag("--special", cfg.special, "use the all-zero-coordinates subspace");
  orc->add_flag("--timing", cfg.timing, "include elapsed_ms in the output");
  add_common(orc, true);

  auto* psi = app.add_subcommand("psi", "moduli coordinates of a constructed subspace");
  psi->add_option("--p", cfg.p)->required();
  psi->add_option("--sigma", cfg.sigma)->required();
  psi->add_option("--pattern", cfg.pattern);
  psi->add_flag("--special", cfg.special);
  add_common(psi, true);

  auto* search = app.add_subcommand("search", "scan for a subspace matching a zero pattern");
  search->add_option("--p", cfg.p)->required();
  search->add_option("--sigma", cfg.sigma)->required();
  search->add_option("--pattern", cfg.pattern)->required();
  add_common(search, true);

  auto* classify = app.add_subcommand("classify", "reduction type from congruence arithmetic");
  classify->add_option("--N", cfg.N, "non-symplectic index of the complex surface")->required();
  classify->add_option("--p", cfg.p, "residue characteristic");
  bool all_residues = false;
  classify->add_flag("--all-residues", all_residues, "classify every residue class mod N");
  add_common(classify, false);

  auto* ver = app.add_subcommand("verify", "run invariant suites");
  std::string suite;
  unsigned vd = 4;
  bool quick = false;
  ver->add_option("suite", suite, "fields|discform|charspace|oracle|lattices|arith|all")->required();
  ver->add_option("--p", cfg.p);
  ver->add_option("--sigma", cfg.sigma);
  ver->add_option("--d", vd, "extension degree for the fields suite");
  ver->add_flag("--quick", quick);
  ver->add_option("--seed", cfg.seed);
  add_common(ver, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (table->parsed()) return cmd_table(cfg);
    if (index->parsed()) return cmd_index(cfg);
    if (orc->parsed()) return cmd_oracle(cfg);
    if (psi->parsed()) return cmd_psi(cfg);
    if (search->parsed()) return cmd_search(cfg);
    if (classify->parsed()) {
      if (!all_residues && cfg.p == 0) return fail("usage", "classify needs --p or --all-residues");
      return cmd_classify(cfg, all_residues);
    }
    if (ver->parsed()) return cmd_verify(cfg, suite, vd, quick);
  } catch (const BudgetError& e) {
    return fail("budget", e.what());
  } catch (const UnrepresentableError& e) {
    return fail("unrepresentable", e.what());
  } catch (const SelfCheckError& e) {
    return fail("self_check", e.what());
  } catch (const std::invalid_argument& e) {
    return fail("invalid_argument", e.what());
  } catch (const std::exception& e) {
    return fail("error", e.what());
  }
  return fail("usage", "no subcommand");
}
