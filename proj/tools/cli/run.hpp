#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "liecurv/algebra.hpp"
#include "liecurv/format.hpp"
#include "liecurv/geodesic.hpp"
#include "liecurv/sampling.hpp"

namespace liecurv::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kNumericalFailure = 2, kConfigError = 3 };

struct RunConfig {
  std::string task;  // validate | curvature | scan | geodesic
  /// Builtin algebra (`so3:1,2,3`, `torus:vol`, ...).
  std::string algebra;
  /// Builtin semidirect product (`conjugation:so3`, `torus:mhd`, ...).
  std::string semidirect;
  /// Inline algebra spec file with [algebra], or [g] + [h] + [action].
  std::string spec_file;
  std::string plane_file;
  /// Initial state: "u coords; alpha coords" for finite targets, or a file with a [state] section.
  std::string initial;

  std::optional<std::uint64_t> seed;
  std::size_t count = 100;
  PlaneFamily family = PlaneFamily::Any;
  int sample_band = 2;

  IntegratorConfig integrator;
  bool dt_set = false;
  bool steps_set = false;
  int support_cap = 16;

  std::string output;  // empty: standard output
  OutputFormat format = OutputFormat::Csv;
  Tolerances tolerances;
  double zero_tol = 1e-12;
  unsigned threads = 1;
};

/// Applies a [run] section (keys mirror the long flag names) from a configuration file.
void apply_config_file(RunConfig& config, const std::string& path);

/// Executes one task. Results go to `config.output` (or `out`), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace liecurv::cli
