#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

#include "warpmech/scenario.hpp"

// Scenario-driven front end. Exit codes: 0 all enabled checks passed,
// 1 at least one check failed, 2 configuration or usage error.

namespace {

struct Options {
  std::string config;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double tol_scale = 0.0;
  bool tol_set = false;
};

std::string joined(const std::string& dir, const std::string& file) {
  if (dir.empty() || file.empty() || file.front() == '/') return file;
  return dir + "/" + file;
}

warpmech::ScenarioConfig load(const Options& opt) {
  warpmech::ScenarioConfig cfg = warpmech::load_scenario(opt.config);
  if (opt.seed_set) cfg.seed = opt.seed;
  if (opt.tol_set) cfg.tol_scale = opt.tol_scale;
  cfg.trajectory_path = joined(opt.out_dir, cfg.trajectory_path);
  cfg.report_path = joined(opt.out_dir, cfg.report_path);
  for (const std::string& p : {cfg.trajectory_path, cfg.report_path}) {
    auto dir = std::filesystem::path(p).parent_path();
    if (!dir.empty()) std::filesystem::create_directories(dir);
  }
  return cfg;
}

int run_check_suite(const Options& opt, const std::string& which, bool with_trajectory) {
  warpmech::ScenarioConfig cfg = load(opt);
  warpmech::Report rep = warpmech::run_checks(cfg, which);
  if (with_trajectory) {
    warpmech::Trajectory traj = warpmech::run_integration(cfg);
    warpmech::emit_plotdata(traj, cfg.trajectory_path);
  }
  if (which == "master" || which == "all") {
    auto rows = warpmech::master_relation_table(cfg);
    warpmech::write_master_table(rows, joined(opt.out_dir, "master-relations.csv"));
  }
  warpmech::write_report(rep, cfg.report_path);
  int failed = 0;
  for (const auto& c : rep.checks) {
    std::printf("%-6s %-42s residual=%.3e", c.pass ? "PASS" : "FAIL", c.id.c_str(),
                c.residual);
    if (!c.informational)
      std::printf(" tol%s%.3e", c.comparator.c_str(), c.tolerance);
    else
      std::printf(" (informational)");
    if (!c.note.empty()) std::printf("  [%s]", c.note.c_str());
    std::printf("\n");
    if (!c.pass) ++failed;
  }
  for (const auto& w : rep.warnings) std::printf("warning: %s\n", w.c_str());
  std::printf("%d/%zu checks passed; report: %s\n", int(rep.checks.size()) - failed,
              rep.checks.size(), cfg.report_path.c_str());
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian dynamics in warp and rotating spacetimes"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options after the subcommand name

  Options opt;
  app.add_option("--config", opt.config, "scenario configuration (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--out", opt.out_dir, "directory for output files");
  auto* seed_opt = app.add_option("--seed", opt.seed, "override the scenario seed");
  auto* tol_opt =
      app.add_option("--tol-scale", opt.tol_scale, "scale all default tolerances");

  auto* integrate = app.add_subcommand("integrate", "integrate the configured trajectory");
  auto* transform =
      app.add_subcommand("transform", "apply the configured canonical map to points");
  auto* torsion = app.add_subcommand("check-torsion", "recursion-operator torsion suite");
  auto* invariants =
      app.add_subcommand("check-invariants", "metric, flow and canonical-map suite");
  auto* master = app.add_subcommand("check-master", "master-symmetry hierarchy suite");
  auto* all = app.add_subcommand("check-all", "every suite plus trajectory export");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opt.seed_set = seed_opt->count() > 0;
  opt.tol_set = tol_opt->count() > 0;

  try {
    if (integrate->parsed()) {
      warpmech::ScenarioConfig cfg = load(opt);
      warpmech::Trajectory traj = warpmech::run_integration(cfg);
      warpmech::emit_plotdata(traj, cfg.trajectory_path);
      warpmech::Report rep;
      rep.seed = cfg.seed;
      warpmech::Drift d = warpmech::drift_report(traj, "H");
      warpmech::CheckResult r{"flow.summary", "trajectory integrated", d.relative, 0.0};
      r.informational = true;
      r.note = std::to_string(traj.states.size()) + " samples";
      rep.checks.push_back(r);
      warpmech::write_report(rep, cfg.report_path);
      std::printf("wrote %s (%zu samples), relative H drift %.3e\n",
                  cfg.trajectory_path.c_str(), traj.times.size(), d.relative);
      return 0;
    }
    if (transform->parsed()) {
      warpmech::ScenarioConfig cfg = load(opt);
      std::string text;
      int rc = warpmech::run_transform(cfg, text);
      if (!text.empty()) std::fputs(text.c_str(), stdout);
      return rc;
    }
    if (torsion->parsed()) return run_check_suite(opt, "torsion", false);
    if (invariants->parsed()) return run_check_suite(opt, "invariants", false);
    if (master->parsed()) return run_check_suite(opt, "master", false);
    if (all->parsed()) return run_check_suite(opt, "all", true);
  } catch (const warpmech::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const warpmech::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
