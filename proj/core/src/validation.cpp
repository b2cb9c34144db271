#include "halfspace/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "halfspace/channel.hpp"
#include "halfspace/continuous.hpp"
#include "halfspace/errors.hpp"
#include "halfspace/parallel.hpp"
#include "halfspace/prony.hpp"
#include "halfspace/scenario.hpp"
#include "halfspace/sommerfeld.hpp"

namespace halfspace {

namespace {

double tol_or(const ValidationOptions& o, double fallback) { return o.tolerance.value_or(fallback); }

CheckResult finish(std::string name, double measured, double tol, std::string detail) {
  return {std::move(name), measured <= tol, measured, tol, std::move(detail)};
}

std::vector<double> even_grid(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

CheckResult check_identity(const ScenarioConfig& c, const ValidationOptions& o) {
  const double k0 = c.ground().k0();
  const auto axis = even_grid(0.1, 5.0, 5);
  std::vector<double> errors(axis.size() * axis.size());
  parallel_for(errors.size(), [&](std::size_t i) {
    const double rho = axis[i / axis.size()];
    const double zeta = axis[i % axis.size()];
    const double r = std::hypot(rho, zeta);
    const cplx exact = std::exp(cplx{0.0, k0 * r}) / r;
    errors[i] = std::abs(sommerfeld_identity_rhs(rho, zeta, k0, c.quad) - exact) / std::abs(exact);
  });
  return finish("identity", *std::max_element(errors.begin(), errors.end()), tol_or(o, 1e-6),
                "5x5 grid rho, zeta in [0.1, 5] m");
}

CheckResult check_image(const ScenarioConfig& c, const ValidationOptions& o) {
  const GroundModel perfect = GroundModel::from_admittance(c.wavelength, 0.0);
  const auto expansion = fit_image_expansion(perfect, c.contour);
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> horiz(-20.0, 20.0);
  std::uniform_real_distribution<double> height(0.1, 20.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Point3 r_r{horiz(rng), horiz(rng), height(rng)};
    const Point3 r_s{horiz(rng), horiz(rng), height(rng)};
    const cplx expected = g_free(r_r, r_s, perfect.k0()) + g_free(r_r, mirror(r_s), perfect.k0());
    worst = std::max(worst, std::abs(g_half_closed(r_r, r_s, expansion) - expected) / std::abs(expected));
  }
  return finish("image", worst, tol_or(o, 1e-10), "beta = 0, 20 random geometries");
}

CheckResult check_dcim(const ScenarioConfig& c, const ValidationOptions& o) {
  const GroundModel ground = c.ground();
  const auto expansion = fit_image_expansion(ground, c.contour);
  const std::vector<double> rhos{1, 2, 5, 10, 20, 50};
  const std::vector<double> sums{2, 6, 11, 20, 40, 60};
  std::vector<double> errors(rhos.size() * sums.size());
  parallel_for(errors.size(), [&](std::size_t i) {
    const double rho = rhos[i / sums.size()];
    const double h = 0.5 * sums[i % sums.size()];
    const Point3 r_s{0.0, 0.0, h};
    const Point3 r_r{rho, 0.0, h};
    const cplx oracle = g_half_oracle(r_r, r_s, ground, c.quad);
    errors[i] = std::abs(g_half_closed(r_r, r_s, expansion) - oracle) / std::abs(oracle);
  });
  const auto worst = std::max_element(errors.begin(), errors.end());
  const auto at = static_cast<std::size_t>(worst - errors.begin());
  std::ostringstream detail;
  detail << "6x6 grid, z_r = z_s = z_sum/2; worst at rho=" << rhos[at / sums.size()]
         << " z_sum=" << sums[at % sums.size()];
  return finish("dcim", *worst, tol_or(o, 1e-2), detail.str());
}

CheckResult check_prony(const ScenarioConfig& c, const ValidationOptions& o) {
  // Synthetic single exponential on the default contour.
  const cplx A{1.5, 0.0};
  const cplx B{-0.2, 0.1};
  ReflectionSamples synth{ContourSpec{10.0, 10, 1}, std::vector<cplx>(10)};
  for (int w = 1; w <= 10; ++w) synth.values[w - 1] = A * std::exp(B * synth.xi(w));
  const auto fit = fit_exponentials(synth, 1);
  const double roundtrip =
      std::max(std::abs(fit.amplitudes()[0] - A), std::abs(fit.exponents()[0] - B));

  const auto samples = sample_reflection(c.ground(), c.contour);
  const double residual = fit_exponentials(samples, c.contour.Q).residual();

  const double round_tol = tol_or(o, 1e-10);
  const double resid_tol = tol_or(o, 1e-3);
  std::ostringstream detail;
  detail << "round-trip error " << format_number(roundtrip) << " (tol " << format_number(round_tol)
         << "), fit residual " << format_number(residual) << " (tol " << format_number(resid_tol) << ")";
  return {"prony", roundtrip <= round_tol && residual <= resid_tol, roundtrip, round_tol,
          detail.str()};
}

CheckResult check_edof(const ScenarioConfig&, const ValidationOptions& o) {
  const ChannelMatrix identity = ChannelMatrix::Identity(4, 4);
  Eigen::VectorXcd u(3), v(5);
  u << cplx{1, 2}, cplx{-0.5, 0.3}, cplx{2, 0};
  v << cplx{0.1, 0}, cplx{1, -1}, cplx{0, 3}, cplx{-2, 0.5}, cplx{0.7, 0.7};
  const ChannelMatrix rank_one = u * v.adjoint();
  ChannelMatrix diag = ChannelMatrix::Zero(2, 2);
  diag(0, 0) = std::sqrt(2.0);
  const double worst = std::max({std::abs(edof_discrete(identity) - 4.0),
                                 std::abs(edof_discrete(rank_one) - 1.0),
                                 std::abs(edof_discrete(diag) - 1.0)});
  return finish("edof", worst, tol_or(o, 1e-12), "identity(4) = 4, rank-1 = 1, diag(sqrt2, 0) = 1");
}

CheckResult check_convergence(const ScenarioConfig& c, const ValidationOptions& o) {
  ScenarioConfig half = c;
  if (half.green_mode == GreenMode::free_space) half.green_mode = GreenMode::half_space_closed;
  const ScenarioEngine engine(half);
  const GreensEvaluator green = engine.half_evaluator();
  const LinkGeometry link = c.link();
  const double L = edof_continuous(link, green, LineQuadrature(c.line_order));
  double previous = std::numeric_limits<double>::infinity();
  bool decreasing = true;
  double gap = 0.0;
  std::ostringstream detail;
  detail << "L=" << format_number(L) << " |Xi-L|:";
  for (int m : {16, 32, 64, 128}) {
    gap = std::abs(edof_discrete(build_channel_matrix(link, m, m, green)) - L);
    detail << ' ' << m << ':' << format_number(gap);
    decreasing = decreasing && gap < previous;
    previous = gap;
  }
  const double tol = tol_or(o, 0.05);
  const double relative = gap / L;
  if (!decreasing) detail << " (not decreasing)";
  return {"convergence", decreasing && relative <= tol, relative, tol, detail.str()};
}

using CheckFn = CheckResult (*)(const ScenarioConfig&, const ValidationOptions&);

struct NamedCheck {
  const char* name;
  CheckFn fn;
};

constexpr NamedCheck kChecks[] = {
    {"identity", check_identity}, {"image", check_image}, {"dcim", check_dcim},
    {"prony", check_prony},       {"edof", check_edof},   {"convergence", check_convergence},
};

}  // namespace

const std::vector<std::string>& validation_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& c : kChecks) v.emplace_back(c.name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_validation(const ScenarioConfig& config, const ValidationOptions& options) {
  config.validate();
  if (options.only) {
    const auto& names = validation_check_names();
    if (std::find(names.begin(), names.end(), *options.only) == names.end()) {
      throw ConfigError("unknown validation check '" + *options.only + "'");
    }
  }
  std::vector<CheckResult> results;
  for (const auto& check : kChecks) {
    if (options.only && *options.only != check.name) continue;
    try {
      results.push_back(check.fn(config, options));
    } catch (const std::exception& e) {
      results.push_back({check.name, false, std::numeric_limits<double>::infinity(),
                         tol_or(options, 0.0), std::string("error: ") + e.what()});
    }
  }
  return results;
}

void write_validation_report(std::ostream& out, const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " measured=" << format_number(r.measured)
        << " tol=" << format_number(r.tolerance) << "  " << r.detail << '\n';
  }
}

bool all_passed(const std::vector<CheckResult>& results) {
  return !results.empty() &&
         std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace halfspace
