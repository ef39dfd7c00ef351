#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "warpmech/canonical.hpp"
#include "warpmech/flow.hpp"
#include "warpmech/metrics.hpp"

namespace warpmech {

// One verification entry. `comparator` is "<" for residual-below-tolerance
// checks and ">" for detector-validity checks that must exceed a floor.
// Informational entries always pass and carry their number in `residual`.
struct CheckResult {
  std::string id;
  std::string statement;  // the mathematical statement being verified
  double residual = 0.0;
  double tolerance = 0.0;
  std::string comparator = "<";
  bool pass = true;
  bool informational = false;
  std::string note;
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
  std::vector<CheckResult> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct CheckRequest {
  std::string name;                 // check id or id prefix
  std::optional<double> tolerance;  // overrides the default
};

struct TransformSpec {
  std::string direction = "to_action";  // or "from_action"
  std::optional<Vec8d> point;
  std::string csv_in;
  std::string csv_out;
  double degenerate_q1 = 0.0;  // q1 supplied to the degenerate inverse map
};

struct SampleBox {
  double q_lo = 0.5, q_hi = 3.0;   // action-coordinate Q box
  double p_lo = -2.0, p_hi = 2.0;  // conjugate momenta
};

struct ScenarioConfig {
  MetricModel model;
  Vec8d initial_state{};
  IntegratorSpec integrator;
  double t0 = 0.0, t1 = 10.0;
  std::optional<BranchSpec> branch;
  std::vector<CheckRequest> checks;  // empty: run the full applicable set
  std::uint64_t seed = 1;
  double tol_scale = 1.0;
  SampleBox box;
  std::string trajectory_path = "trajectory.csv";
  std::string report_path = "report.json";
  std::optional<TransformSpec> transform;
};

// Throws ConfigError naming the offending field.
ScenarioConfig load_scenario(const std::string& path);

// Check suites. `which` selects "torsion", "invariants", "master" or "all".
Report run_checks(const ScenarioConfig& cfg, const std::string& which);

// Integrates the configured scenario with its standard monitors (H plus the
// action-coordinate trace monitors when a branch is configured).
Trajectory run_integration(const ScenarioConfig& cfg);

// Trajectory CSV: header t,q1..q4,p1..p4,<monitors>, full double precision,
// byte deterministic for fixed input.
void emit_plotdata(const Trajectory& traj, const std::string& path);

void write_report(const Report& rep, const std::string& path);

// check-master table: one row per scaling relation and (h, l) pair, written
// as CSV "relation,h,l,max_residual,pass".
struct MasterRelationRow {
  std::string relation;
  int h = 0;
  int l = 0;
  double residual = 0.0;
  bool pass = true;
};
std::vector<MasterRelationRow> master_relation_table(const ScenarioConfig& cfg,
                                                     double tolerance = 1e-7);
void write_master_table(const std::vector<MasterRelationRow>& rows,
                        const std::string& path);

// Canonical-map front end for single points and CSV batches.
int run_transform(const ScenarioConfig& cfg, std::string& out_text);

}  // namespace warpmech
