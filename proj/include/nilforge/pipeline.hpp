#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nilforge/config.hpp"
#include "nilforge/frame.hpp"
#include "nilforge/isometry.hpp"
#include "nilforge/potential.hpp"
#include "nilforge/sym.hpp"

namespace nilforge {

enum class Comparison { below, above, at_most };

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::below;
  bool pass = false;
};

class Report {
 public:
  explicit Report(std::string scenario = "") : scenario_(std::move(scenario)) {}

  /// Residual checks pass when value < tolerance (NaN fails).
  const CheckResult& add(const std::string& name, double value, double tolerance);
  /// Witness checks pass when value > threshold.
  const CheckResult& add_witness(const std::string& name, double value, double threshold);
  /// Count checks pass when value <= tolerance.
  const CheckResult& add_count(const std::string& name, double value, double tolerance);

  const std::vector<CheckResult>& checks() const { return checks_; }
  bool all_pass() const;
  const CheckResult* first_failure() const;
  const CheckResult* find(const std::string& name) const;
  std::string to_json() const;

 private:
  std::string scenario_;
  std::vector<CheckResult> checks_;
};

PotentialField build_potential(const ScenarioConfig& cfg, std::optional<NewtonReport>* newton = nullptr);

FrameOptions frame_options(const ScenarioConfig& cfg);

/// Loop of motions for one transform entry.
LoopJet transform_loop(const TransformSpec& t, const LoopSampleSet& loops);

/// Every boost parameter pair named by the family spec, grid first.
std::vector<std::pair<double, cplx>> family_parameters(const FamilySpec& f);

struct FamilyOutcome {
  std::vector<FamilyRow> rows;
  std::vector<SurfaceField> surfaces;  // lambda = 1 Nil surface per member
};

/// Transports the frame along each boost and evaluates graph checks at every
/// loop sample, the support residual and phi3 at the basepoint.
FamilyOutcome evaluate_family(const ScenarioConfig& cfg, const PotentialField& P,
                              const FrameField& FF,
                              const std::vector<std::pair<double, cplx>>& params);

/// Full invariant suite on an integrated frame.
Report run_checks(const ScenarioConfig& cfg, const PotentialField& P, const FrameField& FF,
                  const std::optional<NewtonReport>& newton, FamilyOutcome* family = nullptr);

/// Wavefront OBJ with quad faces from grid adjacency, 9 significant digits.
void write_obj(const std::string& path, const SurfaceField& s, const std::string& object_name);

// Command entry points. Return the process exit code: 0 success, 2 config
// error, 3 numerical failure, 4 failed check (named on err).
struct CommandOptions {
  std::string config_path;
  std::string frame_cache;
  std::string output_dir;  // overrides the config when set
  int alpha_steps = 0, beta_steps = 0;
};

int cmd_run(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_family(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_export(const CommandOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace nilforge
