#include "halfspace/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "halfspace/continuous.hpp"
#include "halfspace/errors.hpp"
#include "halfspace/parallel.hpp"

namespace halfspace {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kBoundSlack = 1e-9;

// Runs fn, maps library failures onto short status codes. The value slot
// receives the best available estimate (NaN if none).
template <typename Fn>
double guarded(Fn&& fn, std::string& status) {
  auto record = [&](const char* code) {
    if (status == "ok") status = code;
  };
  try {
    return fn();
  } catch (const AccuracyError& e) {
    record("unconverged");
    return e.estimate().real();
  } catch (const SingularityError&) {
    record("singular");
  } catch (const DegenerateChannelError&) {
    record("degenerate");
  } catch (const UnsupportedDomainError&) {
    record("domain");
  } catch (const FitError&) {
    record("fit");
  } catch (const std::exception&) {
    record("error");
  }
  return kNaN;
}

void check_bounds(const ScenarioConfig& p, EdofResult& r) {
  const double cap = std::min(p.M, p.N) * (1.0 + kBoundSlack);
  const auto xi_ok = [&](double xi) { return std::isnan(xi) || (xi >= 1.0 - kBoundSlack && xi <= cap); };
  const auto l_ok = [&](double l) { return std::isnan(l) || l >= 1.0 - kBoundSlack; };
  if (r.status == "ok" && !(xi_ok(r.xi_half) && xi_ok(r.xi_free) && l_ok(r.L_half) && l_ok(r.L_free))) {
    r.status = "bound";
  }
}

std::vector<double> linspace(double from, double to, int count) {
  if (count == 1) return {from};
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = from + (to - from) * i / (count - 1);
  return out;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (value == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

SweepVariable parse_sweep_variable(std::string_view text) {
  if (text == "M") return SweepVariable::M;
  if (text == "rho") return SweepVariable::rho;
  if (text == "zr" || text == "z_r") return SweepVariable::z_r;
  throw ConfigError("sweep variable must be M, rho or zr (got '" + std::string(text) + "')");
}

std::string_view sweep_variable_keyword(SweepVariable v) noexcept {
  switch (v) {
    case SweepVariable::M: return "M";
    case SweepVariable::rho: return "rho";
    case SweepVariable::z_r: return "z_r";
  }
  return "M";
}

SweepSpec SweepSpec::range(SweepVariable variable, double from, double to, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw ConfigError("sweep step must be positive");
  if (!(to >= from)) throw ConfigError("sweep range needs to >= from");
  SweepSpec s{variable, {}};
  const auto count = static_cast<long>(std::floor((to - from) / step + 1e-9)) + 1;
  if (count > 1000000) throw ConfigError("sweep range has too many points");
  for (long i = 0; i < count; ++i) s.values.push_back(from + static_cast<double>(i) * step);
  return s;
}

void SweepSpec::validate() const {
  if (values.empty()) throw ConfigError("sweep has no values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || !(values[i] > 0.0)) throw ConfigError("sweep values must be positive");
    if (i > 0 && !(values[i] > values[i - 1])) throw ConfigError("sweep values must be strictly increasing");
    if (variable == SweepVariable::M && values[i] != std::floor(values[i])) {
      throw ConfigError("antenna-count sweep values must be integers");
    }
  }
}

namespace {

const ScenarioConfig& validated(const ScenarioConfig& c) {
  c.validate();
  return c;
}

}  // namespace

ScenarioEngine::ScenarioEngine(const ScenarioConfig& base)
    : base_(validated(base)), expansion_(ImageExpansion::zero(base_.ground(), base_.contour.Q)) {
  if (base_.green_mode == GreenMode::half_space_closed) {
    expansion_ = fit_image_expansion(base_.ground(), base_.contour);
  }
}

GreensEvaluator ScenarioEngine::half_evaluator() const {
  if (base_.green_mode == GreenMode::half_space_oracle) {
    return GreensEvaluator::half_space_oracle(base_.ground(), base_.quad);
  }
  return GreensEvaluator::half_space(base_.ground(), expansion_);
}

GreensEvaluator ScenarioEngine::free_evaluator() const { return GreensEvaluator::free_space(base_.ground()); }

EdofResult ScenarioEngine::evaluate(const ScenarioConfig& p) const {
  EdofResult r;
  std::string status = "ok";
  const LinkGeometry link = p.link();
  const LineQuadrature line(p.line_order);
  const GreensEvaluator free = free_evaluator();

  r.xi_free = guarded([&] { return edof_discrete(build_channel_matrix(link, p.N, p.M, free)); }, status);
  r.L_free = guarded([&] { return edof_continuous_checked(link, free, line).value; }, status);
  if (base_.green_mode == GreenMode::free_space) {
    r.xi_half = kNaN;
    r.L_half = kNaN;
  } else {
    const GreensEvaluator half = half_evaluator();
    r.xi_half = guarded([&] { return edof_discrete(build_channel_matrix(link, p.N, p.M, half)); }, status);
    r.L_half = guarded([&] { return edof_continuous_checked(link, half, line).value; }, status);
  }
  r.status = status;
  check_bounds(p, r);
  return r;
}

EdofResult compute_edof(const ScenarioConfig& config) { return ScenarioEngine(config).evaluate(config); }

std::vector<SweepRow> run_sweep(const ScenarioConfig& config, const SweepSpec& sweep) {
  sweep.validate();
  const ScenarioEngine engine(config);
  std::vector<SweepRow> rows(sweep.values.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].value = sweep.values[i];
    rows[i].point = config;
    switch (sweep.variable) {
      case SweepVariable::M:
        rows[i].point.M = rows[i].point.N = static_cast<int>(sweep.values[i]);
        break;
      case SweepVariable::rho: rows[i].point.rho = sweep.values[i]; break;
      case SweepVariable::z_r: rows[i].point.z_r = sweep.values[i]; break;
    }
    rows[i].point.validate();
  }
  parallel_for(rows.size(), [&](std::size_t i) { rows[i].result = engine.evaluate(rows[i].point); });
  return rows;
}

namespace {

void write_result_fields(std::ostream& out, const ScenarioConfig& p, const EdofResult& r) {
  out << p.M << ',' << p.N << ',' << format_number(p.rho) << ',' << format_number(p.z_r) << ','
      << format_number(p.z_s) << ',' << format_number(r.xi_half) << ',' << format_number(r.xi_free)
      << ',' << format_number(r.L_half) << ',' << format_number(r.L_free) << ',' << r.status << '\n';
}

constexpr const char* kResultHeader = "M,N,rho,z_r,z_s,xi_half,xi_free,L_half,L_free,status";

}  // namespace

void write_edof_csv(std::ostream& out, const ScenarioConfig& config, const EdofResult& r) {
  out << kResultHeader << '\n';
  write_result_fields(out, config, r);
}

void write_sweep_csv(std::ostream& out, const SweepSpec& sweep, const std::vector<SweepRow>& rows) {
  out << "value_" << sweep_variable_keyword(sweep.variable) << ',' << kResultHeader << '\n';
  for (const auto& row : rows) {
    out << format_number(row.value) << ',';
    write_result_fields(out, row.point, row.result);
  }
}

void PlaneSpec::validate() const {
  if (fixed_axis != 'x' && fixed_axis != 'y' && fixed_axis != 'z') {
    throw ConfigError("plane axis must be x, y or z");
  }
  if (u_count < 1 || v_count < 1) throw ConfigError("grid resolution must be >= 1 in both directions");
  if (!(u_to >= u_from) || !(v_to >= v_from)) throw ConfigError("grid ranges must be increasing");
  if (source.z < 0.0) throw ConfigError("source lies below the ground");
}

namespace {

Point3 plane_point(const PlaneSpec& plane, double u, double v) {
  switch (plane.fixed_axis) {
    case 'x': return {plane.at, u, v};
    case 'y': return {u, plane.at, v};
    default: return {u, v, plane.at};
  }
}

}  // namespace

std::vector<GridSample> dump_green_grid(const ScenarioConfig& config, const PlaneSpec& plane) {
  plane.validate();
  const auto us = linspace(plane.u_from, plane.u_to, plane.u_count);
  const auto vs = linspace(plane.v_from, plane.v_to, plane.v_count);
  std::vector<GridSample> grid;
  grid.reserve(us.size() * vs.size());
  for (double u : us) {
    for (double v : vs) {
      if (plane_point(plane, u, v).z < 0.0) throw ConfigError("grid point below the ground (z < 0)");
      grid.push_back({u, v, {}});
    }
  }

  const ScenarioEngine engine(config);
  const GreensEvaluator green = config.green_mode == GreenMode::free_space ? engine.free_evaluator()
                                                                         : engine.half_evaluator();
  parallel_for(grid.size(), [&](std::size_t i) {
    grid[i].g = green(plane_point(plane, grid[i].u, grid[i].v), plane.source);
  });
  return grid;
}

void write_grid_csv(std::ostream& out, const PlaneSpec& plane, const std::vector<GridSample>& grid) {
  const char* axes = plane.fixed_axis == 'x' ? "y,z" : plane.fixed_axis == 'y' ? "x,z" : "x,y";
  out << axes << ",re_g,im_g\n";
  for (const auto& s : grid) {
    out << format_number(s.u) << ',' << format_number(s.v) << ',' << format_number(s.g.real()) << ','
        << format_number(s.g.imag()) << '\n';
  }
}

void dump_fit(std::ostream& out, const ScenarioConfig& config) {
  config.validate();
  const GroundModel ground = config.ground();
  const auto samples = sample_reflection(ground, config.contour);
  const ExponentialFit fit = fit_exponentials(samples, config.contour.Q);
  const ImageExpansion images = to_image_coefficients(fit, ground);

  out << "n,A_re,A_im,B_re,B_im,a_re,a_im,b_re,b_im\n";
  for (int n = 0; n < fit.order(); ++n) {
    const cplx A = fit.amplitudes()[n];
    const cplx B = fit.exponents()[n];
    out << n + 1 << ',' << format_number(A.real()) << ',' << format_number(A.imag()) << ','
        << format_number(B.real()) << ',' << format_number(B.imag()) << ','
        << format_number(images.a[n].real()) << ',' << format_number(images.a[n].imag()) << ','
        << format_number(images.b[n].real()) << ',' << format_number(images.b[n].imag()) << '\n';
  }
  out << "# residual=" << format_number(fit.residual()) << '\n';
}

}  // namespace halfspace
