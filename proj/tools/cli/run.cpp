#include "cli/run.hpp"

#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <variant>
#include <vector>

#include "liecurv/builtins.hpp"
#include "liecurv/config.hpp"
#include "liecurv/curvature.hpp"
#include "liecurv/torus.hpp"

namespace liecurv::cli {

namespace {

enum class TorusKind { Volume, Full, Passive, Compressible, Mhd };

using Target = std::variant<MetricAlgebra, SemidirectAlgebra, TorusKind>;

std::string torus_name(TorusKind k) {
  switch (k) {
    case TorusKind::Volume: return "torus:vol";
    case TorusKind::Full: return "torus:full";
    case TorusKind::Passive: return "torus:passive";
    case TorusKind::Compressible: return "torus:compressible";
    case TorusKind::Mhd: return "torus:mhd";
  }
  return "torus";
}

bool is_torus_semidirect(TorusKind k) { return k != TorusKind::Volume && k != TorusKind::Full; }

Target resolve_target(const RunConfig& config) {
  const int chosen = !config.algebra.empty() + !config.semidirect.empty() + !config.spec_file.empty();
  if (chosen != 1) throw ConfigError("exactly one of --algebra, --semidirect, --spec is required");

  if (!config.spec_file.empty()) {
    const ConfigFile file = read_config_file(config.spec_file);
    if (const auto* a = file.first("algebra")) return MetricAlgebra(parse_algebra_section(*a), config.tolerances);
    const auto* g = file.first("g");
    const auto* h = file.first("h");
    if (!g || !h) throw ConfigError("spec file needs [algebra], or [g] and [h] (with optional [action])");
    MetricAlgebra ga(parse_algebra_section(*g), config.tolerances);
    MetricAlgebra ha(parse_algebra_section(*h), config.tolerances);
    const auto* act = file.first("action");
    ActionSpec action = act ? parse_action_section(*act, ga.dim(), ha.dim())
                            : action_from_entries(ga.dim(), ha.dim(), {});
    return SemidirectAlgebra(std::move(ga), std::move(ha), std::move(action), config.spec_file);
  }
  if (!config.algebra.empty()) {
    if (config.algebra == "torus:vol") return TorusKind::Volume;
    if (config.algebra == "torus:full") return TorusKind::Full;
    return builtins::resolve_algebra(config.algebra);
  }
  if (config.semidirect == "torus:passive") return TorusKind::Passive;
  if (config.semidirect == "torus:compressible") return TorusKind::Compressible;
  if (config.semidirect == "torus:mhd") return TorusKind::Mhd;
  return builtins::resolve_semidirect(config.semidirect);
}

/// Runs f(i) for i in [0, n) on `threads` workers; results are written by index, so the
/// outcome does not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, unsigned threads, const F& f) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < n; i += threads) {
          try {
            f(i);
          } catch (...) {
            std::lock_guard lock(mutex);
            if (!failure) failure = std::current_exception();
            return;
          }
        }
      });
  }
  if (failure) std::rethrow_exception(failure);
}

class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit_report(const RunConfig& config, std::vector<CurvatureBreakdown> rows, std::ostream& out,
                 std::ostream& err) {
  const ScanReport report = make_scan_report(std::move(rows), config.zero_tol);
  OutputSink sink(config.output, out);
  if (config.format == OutputFormat::Csv)
    write_csv(sink.get(), report);
  else
    write_jsonl(sink.get(), report);
  // The summary is part of the JSON-lines stream; for CSV it goes to the diagnostic stream.
  if (config.format == OutputFormat::Csv) write_summary(config.output.empty() ? err : out, report.summary);
}

// ---- plane sources -----------------------------------------------------------------------

template <class G, class H, class DrawG, class DrawH>
auto pair_draw(PlaneFamily family, DrawG draw_g, DrawH draw_h, G zero_g, H zero_h) {
  return [=](Rng& rng, bool first) {
    Pair<G, H> p{draw_g(rng), draw_h(rng)};
    const bool keep_g = family == PlaneFamily::Any || family == PlaneFamily::GG ||
                        (family == PlaneFamily::GH && first) || (family == PlaneFamily::ContainsH && !first);
    const bool keep_h = family == PlaneFamily::Any || family == PlaneFamily::HH ||
                        (family == PlaneFamily::GH && !first) || family == PlaneFamily::ContainsH;
    if (!keep_g) p.first = zero_g;
    if (!keep_h) p.second = zero_h;
    return p;
  };
}

Vector read_coords(const ConfigSection& s, const std::string& key, std::size_t dim) {
  const auto v = parse_vector(s.get(key));
  if (v.size() != dim)
    throw ConfigError("plane key '" + key + "' needs " + std::to_string(dim) + " coordinates, got " +
                      std::to_string(v.size()));
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<const ConfigSection*> plane_sections(const RunConfig& config) {
  if (config.plane_file.empty()) throw ConfigError("curvature needs --plane-file");
  static thread_local ConfigFile file;
  file = read_config_file(config.plane_file);
  auto planes = file.all("plane");
  if (planes.empty()) throw ConfigError("plane file has no [plane] sections");
  return planes;
}

template <MetricAlgebraBackend B>
void require_nondegenerate(const B& b, const typename B::Element& x, const typename B::Element& y, std::size_t id) {
  if (is_degenerate(b, x, y)) throw DegeneratePlane("DegeneratePlane: plane " + std::to_string(id) + " is degenerate");
}

torus::TrigVectorField field_or_zero(const ConfigSection& s, const std::string& key) {
  auto v = s.find(key);
  return v ? parse_trig_field(*v) : torus::TrigVectorField{};
}

torus::TrigFunction function_or_zero(const ConfigSection& s, const std::string& key) {
  auto v = s.find(key);
  return v ? parse_trig_function(*v) : torus::TrigFunction{};
}

// ---- curvature evaluation per target ------------------------------------------------------

struct Evaluator {
  const RunConfig& config;

  std::vector<CurvatureBreakdown> operator()(const MetricAlgebra& a) const {
    std::vector<Plane<Vector>> planes;
    if (config.task == "scan") {
      planes = sample_planes(a, *config.seed, config.count);
    } else {
      for (const auto* s : plane_sections(config))
        planes.push_back({read_coords(*s, "x", a.dim()), read_coords(*s, "y", a.dim())});
      for (std::size_t i = 0; i < planes.size(); ++i) require_nondegenerate(a, planes[i].x, planes[i].y, i);
    }
    std::vector<CurvatureBreakdown> rows(planes.size());
    parallel_for(planes.size(), config.threads,
                 [&](std::size_t i) { rows[i] = curvature_numerator_generic(a, planes[i].x, planes[i].y); });
    return rows;
  }

  std::vector<CurvatureBreakdown> operator()(const SemidirectAlgebra& sd) const {
    std::vector<Plane<Vector>> planes;
    const auto& p = sd.product();
    if (config.task == "scan") {
      planes = sample_product_planes(p, sd.dim_g(), config.family, *config.seed, config.count);
    } else {
      for (const auto* s : plane_sections(config))
        planes.push_back({read_coords(*s, "x", p.dim()), read_coords(*s, "y", p.dim())});
      for (std::size_t i = 0; i < planes.size(); ++i) require_nondegenerate(p, planes[i].x, planes[i].y, i);
    }
    std::vector<CurvatureBreakdown> rows(planes.size());
    parallel_for(planes.size(), config.threads, [&](std::size_t i) {
      rows[i] = curvature_numerator_semidirect(sd, sd.split(planes[i].x), sd.split(planes[i].y));
    });
    return rows;
  }

  std::vector<CurvatureBreakdown> operator()(TorusKind kind) const {
    switch (kind) {
      case TorusKind::Volume:
        return torus_algebra(torus::volume_backend(), [](Rng& r, int band) { return torus::random_divergence_free(r, band); });
      case TorusKind::Full:
        return torus_algebra(torus::FullFieldBackend{}, [](Rng& r, int band) { return torus::random_field(r, band); });
      case TorusKind::Passive:
        return torus_semidirect(torus::passive_scalar_backend(),
                                [](Rng& r, int band) { return torus::random_divergence_free(r, band); },
                                [](Rng& r, int band) { return torus::random_function(r, band); });
      case TorusKind::Compressible:
        return torus_semidirect(torus::compressible_scalar_backend(),
                                [](Rng& r, int band) { return torus::random_field(r, band); },
                                [](Rng& r, int band) { return torus::random_function(r, band); });
      case TorusKind::Mhd:
        return torus_semidirect(torus::mhd_backend(),
                                [](Rng& r, int band) { return torus::random_divergence_free(r, band); },
                                [](Rng& r, int band) { return torus::random_divergence_free(r, band); });
    }
    return {};
  }

  template <class B, class Draw>
  std::vector<CurvatureBreakdown> torus_algebra(const B& b, Draw draw) const {
    using E = typename B::Element;
    std::vector<Plane<E>> planes;
    if (config.task == "scan") {
      const int band = config.sample_band;
      planes = sample_planes(b, [&](Rng& r, bool) { return draw(r, band); }, *config.seed, config.count);
    } else {
      for (const auto* s : plane_sections(config)) planes.push_back({parse_trig_field(s->get("x")), parse_trig_field(s->get("y"))});
      for (std::size_t i = 0; i < planes.size(); ++i) require_nondegenerate(b, planes[i].x, planes[i].y, i);
    }
    std::vector<CurvatureBreakdown> rows(planes.size());
    parallel_for(planes.size(), config.threads,
                 [&](std::size_t i) { rows[i] = curvature_numerator_generic(b, planes[i].x, planes[i].y); });
    return rows;
  }

  template <class S, class DrawG, class DrawH>
  std::vector<CurvatureBreakdown> torus_semidirect(const S& sd, DrawG draw_g, DrawH draw_h) const {
    using G = typename S::GElement;
    using H = typename S::HElement;
    using P = Pair<G, H>;
    const SemidirectProduct<S> product(sd);
    std::vector<Plane<P>> planes;
    if (config.task == "scan") {
      const int band = config.sample_band;
      auto draw = pair_draw<G, H>(
          config.family, [=](Rng& r) { return draw_g(r, band); }, [=](Rng& r) { return draw_h(r, band); }, G{}, H{});
      planes = sample_planes(product, draw, *config.seed, config.count);
    } else {
      auto read_h = [](const ConfigSection& s, const std::string& key) {
        if constexpr (std::is_same_v<H, torus::TrigFunction>)
          return function_or_zero(s, key);
        else
          return field_or_zero(s, key);
      };
      for (const auto* s : plane_sections(config))
        planes.push_back({P{field_or_zero(*s, "x.g"), read_h(*s, "x.h")}, P{field_or_zero(*s, "y.g"), read_h(*s, "y.h")}});
      for (std::size_t i = 0; i < planes.size(); ++i) require_nondegenerate(product, planes[i].x, planes[i].y, i);
    }
    std::vector<CurvatureBreakdown> rows(planes.size());
    parallel_for(planes.size(), config.threads,
                 [&](std::size_t i) { rows[i] = curvature_numerator_semidirect(sd, planes[i].x, planes[i].y); });
    return rows;
  }
};

// ---- validate -----------------------------------------------------------------------------

int run_validate(const RunConfig& config, std::ostream& out) {
  if (!config.spec_file.empty()) {
    const ConfigFile file = read_config_file(config.spec_file);
    if (const auto* a = file.first("algebra")) {
      const auto report = validate(parse_algebra_section(*a), config.tolerances);
      out << report.summary() << '\n';
      return report.passed() ? kOk : kValidationFailure;
    }
    const auto* g = file.first("g");
    const auto* h = file.first("h");
    if (!g || !h) throw ConfigError("spec file needs [algebra], or [g] and [h] (with optional [action])");
    const auto gspec = parse_algebra_section(*g);
    const auto hspec = parse_algebra_section(*h);
    const auto gr = validate(gspec, config.tolerances);
    const auto hr = validate(hspec, config.tolerances);
    if (!gr.passed() || !hr.passed()) {
      out << "g: " << gr.summary() << "\nh: " << hr.summary() << '\n';
      return kValidationFailure;
    }
    MetricAlgebra ga(gspec, config.tolerances);
    MetricAlgebra ha(hspec, config.tolerances);
    const auto* act = file.first("action");
    const ActionSpec action = act ? parse_action_section(*act, ga.dim(), ha.dim())
                                  : action_from_entries(ga.dim(), ha.dim(), {});
    const auto ar = validate_action(ga, ha, action, config.tolerances);
    out << ar.summary() << '\n';
    return ar.passed() ? kOk : kValidationFailure;
  }

  const Target target = resolve_target(config);
  if (const auto* a = std::get_if<MetricAlgebra>(&target)) {
    out << "pass\n" << a->name() << " dim " << a->dim() << '\n';
  } else if (const auto* sd = std::get_if<SemidirectAlgebra>(&target)) {
    out << "pass\n"
        << sd->name() << " dim " << sd->dim_g() << "+" << sd->dim_h()
        << " isometric " << (sd->is_isometric() ? "true" : "false") << '\n';
  } else {
    const TorusKind kind = std::get<TorusKind>(target);
    // Adjointness spot check of ad^T on low modes.
    Rng rng(0);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const bool full = kind == TorusKind::Full || kind == TorusKind::Compressible;
      auto draw = [&] { return full ? torus::random_field(rng, 1) : torus::random_divergence_free(rng, 1); };
      const auto x = draw();
      const auto y = draw();
      const auto z = draw();
      const double lhs = torus::inner(torus::algebra_bracket(x, z), y);
      const double rhs = torus::inner(z, full ? torus::ad_transpose_full(x, y) : torus::ad_transpose_vol(x, y));
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs) + std::abs(rhs)));
    }
    const bool ok = worst <= 1e-12;
    out << (ok ? "pass" : "fail") << '\n'
        << torus_name(kind) << " adjointness residual " << format_number(worst) << '\n';
    return ok ? kOk : kValidationFailure;
  }
  return kOk;
}

// ---- geodesic -----------------------------------------------------------------------------

std::pair<Vector, Vector> parse_initial(const std::string& text, std::size_t dim_u, std::size_t dim_alpha) {
  const auto entries = parse_entries(text);
  std::vector<double> u;
  std::vector<double> a;
  if (dim_alpha == 0) {
    for (const auto& e : entries)
      for (const auto& item : e) u.push_back(parse_double(item));
  } else {
    if (entries.size() != 2) throw ConfigError("--initial needs 'u coords; alpha coords'");
    for (const auto& item : entries[0]) u.push_back(parse_double(item));
    for (const auto& item : entries[1]) a.push_back(parse_double(item));
  }
  if (u.size() != dim_u || a.size() != dim_alpha)
    throw ConfigError("--initial has wrong dimensions (expected " + std::to_string(dim_u) + " and " +
                      std::to_string(dim_alpha) + ")");
  return {Eigen::Map<const Vector>(u.data(), Eigen::Index(u.size())),
          Eigen::Map<const Vector>(a.data(), Eigen::Index(a.size()))};
}

void write_trajectory(const RunConfig& config, const Trajectory<GeodesicState>& traj, std::ostream& out) {
  OutputSink sink(config.output, out);
  auto& o = sink.get();
  const auto nu = traj.states.front().first.size();
  const auto na = traj.states.front().second.size();
  if (config.format == OutputFormat::Csv) {
    o << "t";
    for (Eigen::Index i = 0; i < nu; ++i) o << ",u" << i + 1;
    for (Eigen::Index i = 0; i < na; ++i) o << ",alpha" << i + 1;
    o << ",energy\n";
    for (std::size_t n = 0; n < traj.times.size(); ++n) {
      o << format_number(traj.times[n]);
      for (Eigen::Index i = 0; i < nu; ++i) o << ',' << format_number(traj.states[n].first[i]);
      for (Eigen::Index i = 0; i < na; ++i) o << ',' << format_number(traj.states[n].second[i]);
      o << ',' << format_number(traj.energy[n]) << '\n';
    }
  } else {
    for (std::size_t n = 0; n < traj.times.size(); ++n) {
      o << "{\"t\":" << format_number(traj.times[n]) << ",\"u\":[";
      for (Eigen::Index i = 0; i < nu; ++i) o << (i ? "," : "") << format_number(traj.states[n].first[i]);
      o << "],\"alpha\":[";
      for (Eigen::Index i = 0; i < na; ++i) o << (i ? "," : "") << format_number(traj.states[n].second[i]);
      o << "],\"energy\":" << format_number(traj.energy[n]) << "}\n";
    }
  }
}

template <class State, class Radius>
void write_torus_trajectory(const RunConfig& config, const Trajectory<State>& traj, const Radius& radius,
                            std::ostream& out) {
  OutputSink sink(config.output, out);
  auto& o = sink.get();
  const std::string status = "experimental";
  if (config.format == OutputFormat::Csv) o << "t,energy,u_radius,alpha_radius,status\n";
  for (std::size_t n = 0; n < traj.times.size(); ++n) {
    const auto [ru, ra] = radius(traj.states[n]);
    if (config.format == OutputFormat::Csv) {
      o << format_number(traj.times[n]) << ',' << format_number(traj.energy[n]) << ',' << ru << ',' << ra << ','
        << status << '\n';
    } else {
      o << "{\"t\":" << format_number(traj.times[n]) << ",\"energy\":" << format_number(traj.energy[n])
        << ",\"u_radius\":" << ru << ",\"alpha_radius\":" << ra << ",\"status\":\"" << status
        << "\",\"support_cap\":" << config.support_cap << "}\n";
    }
  }
}

ConfigSection state_section(const std::string& path) {
  static thread_local ConfigFile file;
  file = read_config_file(path);
  const auto* s = file.first("state");
  if (!s) throw ConfigError("initial state file needs a [state] section");
  return *s;
}

int run_geodesic(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.dt_set || !config.steps_set) throw ConfigError("geodesic needs --dt and --steps");
  if (config.initial.empty()) throw ConfigError("geodesic needs --initial");
  const Target target = resolve_target(config);

  if (const auto* a = std::get_if<MetricAlgebra>(&target)) {
    const auto [u0, unused] = parse_initial(config.initial, a->dim(), 0);
    const auto traj = integrate_geodesic(*a, u0, config.integrator);
    Trajectory<GeodesicState> full{traj.times, {}, traj.energy};
    for (const auto& u : traj.states) full.states.push_back({u, Vector()});
    write_trajectory(config, full, out);
    return kOk;
  }
  if (const auto* sd = std::get_if<SemidirectAlgebra>(&target)) {
    const auto [u0, a0] = parse_initial(config.initial, sd->dim_g(), sd->dim_h());
    write_trajectory(config, integrate_semidirect(*sd, GeodesicState{u0, a0}, config.integrator), out);
    return kOk;
  }

  const TorusKind kind = std::get<TorusKind>(target);
  const ConfigSection s = state_section(config.initial);
  const int cap = config.support_cap;
  err << "note: torus geodesic integration truncates Fourier support at |k|_inf <= " << cap
      << "; the truncated flow is experimental and not claimed to be a geodesic\n";

  using torus::TrigFunction;
  using torus::TrigVectorField;
  auto integrate_pair = [&](const auto& sd, auto u0, auto a0) {
    using P = Pair<decltype(u0), decltype(a0)>;
    auto energy = [&sd](const P& p) { return sd.g().inner(p.first, p.first) + sd.h().inner(p.second, p.second); };
    auto traj = integrate([&sd](const P& p) { return rhs_semidirect(sd, p.first, p.second); }, P{u0, a0},
                          config.integrator, energy, [energy](const P& p) { return std::sqrt(energy(p)); },
                          [cap](P p) { return P{p.first.truncated(cap), p.second.truncated(cap)}; });
    write_torus_trajectory(config, traj, [](const P& p) { return std::pair{p.first.radius(), p.second.radius()}; }, out);
  };

  switch (kind) {
    case TorusKind::Volume:
    case TorusKind::Full: {
      const TrigVectorField u0 = parse_trig_field(s.get("u"));
      auto run_algebra = [&](const auto& b) {
        auto traj = integrate([&b](const TrigVectorField& u) { return rhs_generic(b, u); }, u0, config.integrator,
                              [&b](const TrigVectorField& u) { return b.inner(u, u); },
                              [&b](const TrigVectorField& u) { return std::sqrt(b.inner(u, u)); },
                              [cap](TrigVectorField u) { return u.truncated(cap); });
        write_torus_trajectory(config, traj, [](const TrigVectorField& u) { return std::pair{u.radius(), 0}; }, out);
      };
      if (kind == TorusKind::Volume)
        run_algebra(torus::volume_backend());
      else
        run_algebra(torus::FullFieldBackend{});
      break;
    }
    case TorusKind::Passive:
      integrate_pair(torus::passive_scalar_backend(), parse_trig_field(s.get("u")), function_or_zero(s, "alpha"));
      break;
    case TorusKind::Compressible:
      integrate_pair(torus::compressible_scalar_backend(), parse_trig_field(s.get("u")), function_or_zero(s, "alpha"));
      break;
    case TorusKind::Mhd: {
      const auto mhd = torus::mhd_backend();
      integrate_pair(mhd, parse_trig_field(s.get("u")), field_or_zero(s, "alpha"));
      break;
    }
  }
  return kOk;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.task == "validate") return run_validate(config, out);
  if (config.task == "curvature" || config.task == "scan") {
    if (config.task == "scan" && !config.seed) throw ConfigError("scan needs --seed");
    const Target target = resolve_target(config);
    emit_report(config, std::visit(Evaluator{config}, target), out, err);
    return kOk;
  }
  if (config.task == "geodesic") return run_geodesic(config, out, err);
  throw ConfigError("unknown task '" + config.task + "' (expected validate, curvature, scan or geodesic)");
}

}  // namespace

void apply_config_file(RunConfig& config, const std::string& path) {
  const ConfigFile file = read_config_file(path);
  const auto* s = file.first("run");
  if (!s) throw ConfigError("configuration file has no [run] section");
  for (const auto& [key, value] : s->entries) {
    if (key == "task") config.task = value;
    else if (key == "algebra") config.algebra = value;
    else if (key == "semidirect") config.semidirect = value;
    else if (key == "spec") config.spec_file = value;
    else if (key == "plane-file") config.plane_file = value;
    else if (key == "initial") config.initial = value;
    else if (key == "seed") config.seed = static_cast<std::uint64_t>(parse_integer(value));
    else if (key == "count") config.count = static_cast<std::size_t>(parse_integer(value));
    else if (key == "family") config.family = parse_family(value);
    else if (key == "sample-band") config.sample_band = int(parse_integer(value));
    else if (key == "dt") { config.integrator.dt = parse_double(value); config.dt_set = true; }
    else if (key == "steps") { config.integrator.steps = static_cast<std::size_t>(parse_integer(value)); config.steps_set = true; }
    else if (key == "scheme") config.integrator.scheme = parse_scheme(value);
    else if (key == "midpoint-tol") config.integrator.midpoint_tol = parse_double(value);
    else if (key == "midpoint-max-iter") config.integrator.midpoint_max_iter = int(parse_integer(value));
    else if (key == "support-cap") config.support_cap = int(parse_integer(value));
    else if (key == "output") config.output = value;
    else if (key == "format") config.format = parse_format(value);
    else if (key == "jacobi-tol") config.tolerances.jacobi = parse_double(value);
    else if (key == "adjoint-tol") config.tolerances.adjoint = parse_double(value);
    else if (key == "action-tol") config.tolerances.action = parse_double(value);
    else if (key == "zero-tol") config.zero_tol = parse_double(value);
    else if (key == "threads") config.threads = static_cast<unsigned>(parse_integer(value));
    else throw ConfigError("unknown [run] key '" + key + "'");
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out, err);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ValidationError& e) {
    err << "validation failure: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const DegeneratePlane& e) {
    err << e.what() << '\n';
    return kValidationFailure;
  } catch (const NotIsometric& e) {
    err << "validation failure: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const DimensionMismatch& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

}  // namespace liecurv::cli
