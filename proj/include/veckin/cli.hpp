#pragma once

#include <optional>
#include <random>

#include "veckin/cases.hpp"
#include "veckin/reports.hpp"

namespace veckin {

struct RunManifest {
  enum class Mode { Run, Eoc, Audit };
  Mode mode = Mode::Run;
  std::string case_name;
  std::optional<SchemeKind> scheme;
  std::optional<int> nx, ny;
  std::optional<double> cfl, t_end;
  LambdaPolicy lambda_policy = LambdaPolicy::PerStep;
  double lambda_safety = 1.5;
  std::string out_dir = "out";
  int report_every = 1;
  bool audit = false;
  std::vector<int> grids;      // eoc mode
  bool scaled_norm = false;    // eoc csv: volume-weighted (default) or 2-norm/N
  int audit_pairs = 10000;
};

// Throws usage_error on malformed input (including unknown flags).
RunManifest parse_args(const std::vector<std::string>& args);

// Applies CLI overrides on top of the case defaults.
StepConfig step_config(const CaseConfig& c, const RunManifest& m);

// Drives one case end to end on the given grid.
RunResult run_case(const CaseConfig& c, const Grid& g, const StepConfig& cfg);

// Reference solution on g at time t (exact cases only).
Field exact_reference(const CaseConfig& c, const Grid& g, double t);

struct EocResult {
  EocTable volume;  // spec norm: sqrt(sum e^2 * vol)
  EocTable scaled;  // 2-norm / cell count
};
EocResult run_eoc(const CaseConfig& c, const std::vector<int>& grids,
                  const StepConfig& cfg);

// Randomized invariant audits for one model (EC condition, moments, sign
// property, consistency); thresholds baked in, rows report max deviations.
std::vector<AuditRow> run_audits(const CaseConfig& c, int npairs, unsigned seed = 12345);

// Full manifest driver; returns the process exit code (0 ok, 1 runtime failure).
int run_manifest(const RunManifest& m);

}  // namespace veckin
