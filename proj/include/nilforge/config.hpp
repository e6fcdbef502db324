#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilforge/algebra.hpp"
#include "nilforge/frame.hpp"
#include "nilforge/grid.hpp"

namespace nilforge {

struct PotentialSpec {
  enum class Kind { vacuum, solve, file } kind = Kind::vacuum;
  cplx B0 = 0.25;
  std::vector<cplx> coefficients;              // solve: B = sum c_k z^k
  std::optional<double> boundary_constant;     // solve: v on the perimeter; log|B| if unset
  double tol = 1e-10;
  int max_iterations = 12;
  bool richardson = false;                     // solve: also solve at half spacing and extrapolate
  std::string path;                            // file
};

struct TransformSpec {
  enum class Kind { rotation, boost, translation } kind = Kind::rotation;
  double phi = 0.0;                 // rotation
  double alpha = 1.0;               // boost
  cplx beta = 0.0;
  double c = 0.0, d = 0.0, e = 0.0; // translation loop amplitudes
};

struct FamilySpec {
  int alpha_steps = 0, beta_steps = 0;
  double alpha_max = 2.0;
  std::vector<std::pair<double, cplx>> members;
};

struct ScenarioConfig {
  std::string name = "scenario";
  PotentialSpec potential;
  std::optional<DomainGrid> grid;  // absent only for file potentials
  int loops = 16;
  std::optional<GridNode> basepoint;
  SpineOrder spine = SpineOrder::row_first;
  int stencil_order = 6;
  int frame_substeps = 2;
  std::vector<TransformSpec> transforms;
  std::optional<FamilySpec> family;
  std::string output_dir = "out";
  std::map<std::string, double> tolerances;
  bool dump = false;
  int threads = 0;

  double tolerance(const std::string& check) const;
};

/// Default tolerance of every named check; config overrides must use these names.
const std::map<std::string, double>& default_tolerances();

/// Throws SchemaError on malformed input, unknown keys or invalid values.
/// A relative potential file path is resolved against base_dir; output_dir
/// is taken as given.
ScenarioConfig parse_config(const std::string& text, const std::string& base_dir = ".");
ScenarioConfig load_config(const std::string& path);

}  // namespace nilforge
