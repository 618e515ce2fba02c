#include <iostream>

#include <CLI11.hpp>

#include "cli/run.hpp"

using liecurv::cli::RunConfig;

namespace {

void add_target_options(CLI::App* app, RunConfig& c) {
  app->add_option("--algebra", c.algebra, "Builtin metric algebra: so3, so3:I1,I2,I3, abelian:N, random:SEED:DIM, torus:vol, torus:full");
  app->add_option("--semidirect", c.semidirect,
                  "Builtin semidirect product: conjugation:ALG, magnetic:ALG, euclidean, random:SEED, torus:passive, "
                  "torus:compressible, torus:mhd");
  app->add_option("--spec", c.spec_file, "Algebra file with [algebra], or [g], [h] and [action] sections");
  app->add_option("--jacobi-tol", c.tolerances.jacobi, "Relative Jacobi identity tolerance");
  app->add_option("--adjoint-tol", c.tolerances.adjoint, "Gram symmetry tolerance");
  app->add_option("--action-tol", c.tolerances.action, "Derivation and homomorphism tolerance");
}

void add_output_options(CLI::App* app, RunConfig& c) {
  app->add_option("--output,-o", c.output, "Output file (default: standard output)");
  app->add_option_function<std::string>(
      "--format", [&c](const std::string& v) { c.format = liecurv::parse_format(v); }, "csv or jsonl");
  app->add_option("--zero-tol", c.zero_tol, "Curvatures with |K| below this are reported as zero");
  app->add_option("--threads", c.threads, "Worker threads for plane evaluation")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  std::string config_file;

  CLI::App app{"Sectional curvature of right-invariant metrics on Lie groups and semidirect products"};
  app.require_subcommand(1);
  app.add_option("--config", config_file, "File with a [run] section; command-line flags take precedence");

  auto* validate = app.add_subcommand("validate", "Check structure constants, Gram matrix and action");
  add_target_options(validate, config);

  auto* curvature = app.add_subcommand("curvature", "Curvature breakdown for planes read from a file");
  add_target_options(curvature, config);
  add_output_options(curvature, config);
  curvature->add_option("--plane-file", config.plane_file, "File with one [plane] section per plane");

  auto* scan = app.add_subcommand("scan", "Curvature breakdown for random planes");
  add_target_options(scan, config);
  add_output_options(scan, config);
  scan->add_option("--seed", config.seed, "PRNG seed");
  scan->add_option("--count", config.count, "Number of planes");
  scan->add_option_function<std::string>(
      "--family", [&config](const std::string& v) { config.family = liecurv::parse_family(v); },
      "Plane family for semidirect products: any, gg, gh, hh, contains-h");
  scan->add_option("--sample-band", config.sample_band, "Fourier band for torus sampling");

  auto* geodesic = app.add_subcommand("geodesic", "Integrate the geodesic equation");
  add_target_options(geodesic, config);
  add_output_options(geodesic, config);
  geodesic->add_option("--initial", config.initial, "'u ...; alpha ...' or a file with a [state] section (torus)");
  geodesic->add_option_function<double>(
      "--dt", [&config](double v) { config.integrator.dt = v; config.dt_set = true; }, "Time step");
  geodesic->add_option_function<std::size_t>(
      "--steps", [&config](std::size_t v) { config.integrator.steps = v; config.steps_set = true; }, "Step count");
  geodesic->add_option_function<std::string>(
      "--scheme", [&config](const std::string& v) { config.integrator.scheme = liecurv::parse_scheme(v); },
      "rk4 or implicit_midpoint");
  geodesic->add_option("--support-cap", config.support_cap, "Fourier truncation |k|_inf for torus flows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : liecurv::cli::kConfigError;
  } catch (const liecurv::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return liecurv::cli::kConfigError;
  }

  config.task = app.get_subcommands().front()->get_name();
  if (!config_file.empty()) {
    // Re-parse so command-line flags override the file.
    RunConfig merged;
    try {
      liecurv::cli::apply_config_file(merged, config_file);
    } catch (const liecurv::ConfigError& e) {
      std::cerr << "configuration error: " << e.what() << '\n';
      return liecurv::cli::kConfigError;
    }
    RunConfig defaults;
    auto pick = [](auto& dst, const auto& cli, const auto& def, const auto& file) { dst = cli != def ? cli : file; };
    RunConfig out = merged;
    out.task = config.task;
    pick(out.algebra, config.algebra, defaults.algebra, merged.algebra);
    pick(out.semidirect, config.semidirect, defaults.semidirect, merged.semidirect);
    pick(out.spec_file, config.spec_file, defaults.spec_file, merged.spec_file);
    pick(out.plane_file, config.plane_file, defaults.plane_file, merged.plane_file);
    pick(out.initial, config.initial, defaults.initial, merged.initial);
    if (config.seed) out.seed = config.seed;
    pick(out.count, config.count, defaults.count, merged.count);
    pick(out.family, config.family, defaults.family, merged.family);
    pick(out.sample_band, config.sample_band, defaults.sample_band, merged.sample_band);
    if (config.dt_set) { out.integrator.dt = config.integrator.dt; out.dt_set = true; }
    if (config.steps_set) { out.integrator.steps = config.integrator.steps; out.steps_set = true; }
    pick(out.integrator.scheme, config.integrator.scheme, defaults.integrator.scheme, merged.integrator.scheme);
    pick(out.support_cap, config.support_cap, defaults.support_cap, merged.support_cap);
    pick(out.output, config.output, defaults.output, merged.output);
    pick(out.format, config.format, defaults.format, merged.format);
    pick(out.tolerances.jacobi, config.tolerances.jacobi, defaults.tolerances.jacobi, merged.tolerances.jacobi);
    pick(out.tolerances.adjoint, config.tolerances.adjoint, defaults.tolerances.adjoint, merged.tolerances.adjoint);
    pick(out.tolerances.action, config.tolerances.action, defaults.tolerances.action, merged.tolerances.action);
    pick(out.zero_tol, config.zero_tol, defaults.zero_tol, merged.zero_tol);
    pick(out.threads, config.threads, defaults.threads, merged.threads);
    config = out;
  }
  return liecurv::cli::run(config, std::cout, std::cerr);
}
