#pragma once

// Scenario-level drivers behind the command-line tool: single-point EDoF,
// parameter sweeps, Green's-function plane dumps and coefficient dumps.
// CSV output: comma separated, LF line endings, header row, 12 significant
// digits.

#include <iosfwd>
#include <string>
#include <vector>

#include "halfspace/config.hpp"
#include "halfspace/prony.hpp"

namespace halfspace {

enum class SweepVariable { M, rho, z_r };

SweepVariable parse_sweep_variable(std::string_view text);
std::string_view sweep_variable_keyword(SweepVariable v) noexcept;

struct SweepSpec {
  SweepVariable variable = SweepVariable::M;
  std::vector<double> values;

  /// Inclusive range; the end point is kept when it lies within 1e-9 step.
  static SweepSpec range(SweepVariable variable, double from, double to, double step);
  /// Throws ConfigError unless non-empty and strictly increasing (and
  /// integral for M).
  void validate() const;
};

/// The four EDoF numbers at one scenario point. NaN marks a quantity that
/// was not computed; status is "ok" or a short failure code.
struct EdofResult {
  double xi_half = 0.0;
  double xi_free = 0.0;
  double L_half = 0.0;
  double L_free = 0.0;
  std::string status = "ok";
};

/// Precomputed state shared across points with the same ground and contour.
class ScenarioEngine {
 public:
  explicit ScenarioEngine(const ScenarioConfig& base);

  const ImageExpansion& expansion() const noexcept { return expansion_; }
  GreensEvaluator half_evaluator() const;
  GreensEvaluator free_evaluator() const;

  /// Never throws for numerical failures; they are folded into status.
  EdofResult evaluate(const ScenarioConfig& point) const;

 private:
  ScenarioConfig base_;
  ImageExpansion expansion_;
};

EdofResult compute_edof(const ScenarioConfig& config);

struct SweepRow {
  double value = 0.0;
  ScenarioConfig point;
  EdofResult result;
};

/// Points are evaluated concurrently; rows come back in sweep order.
std::vector<SweepRow> run_sweep(const ScenarioConfig& config, const SweepSpec& sweep);

void write_edof_csv(std::ostream& out, const ScenarioConfig& config, const EdofResult& r);
void write_sweep_csv(std::ostream& out, const SweepSpec& sweep, const std::vector<SweepRow>& rows);

/// A rectangular grid on the plane `fixed_axis = at`. (u, v) are the two
/// remaining axes in x, y, z order.
struct PlaneSpec {
  char fixed_axis = 'x';
  double at = 10.0;
  double u_from = -10.0;
  double u_to = 10.0;
  double v_from = 0.0;
  double v_to = 10.0;
  int u_count = 101;
  int v_count = 101;
  Point3 source{0.0, 0.0, 5.0};

  void validate() const;
};

struct GridSample {
  double u = 0.0;
  double v = 0.0;
  cplx g;
};

/// G(point, source) over the plane with the config's green_mode. Throws
/// ConfigError for points below the ground.
std::vector<GridSample> dump_green_grid(const ScenarioConfig& config, const PlaneSpec& plane);
void write_grid_csv(std::ostream& out, const PlaneSpec& plane, const std::vector<GridSample>& grid);

/// Q rows of n, A_n, B_n, a_n, b_n followed by a "# residual=" footer.
void dump_fit(std::ostream& out, const ScenarioConfig& config);

/// Shortest text that round-trips to 12 significant digits.
std::string format_number(double value);

}  // namespace halfspace
