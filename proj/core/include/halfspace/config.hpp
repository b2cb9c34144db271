#pragma once

// Flat key = value scenario files. '#' starts a comment; blank lines are
// ignored; complex numbers are written a+bi (e.g. 0.3-0.1i, 2i, -1.5).
//
//   wavelength = 0.1
//   eta        = 0.3-0.1i      # or: beta = 3+1i   (beta = 0: perfect image)
//   T = 10
//   W = 10
//   Q = 5
//   L_s = 12
//   L_r = 4
//   z_s = 10
//   z_r = 1
//   rho = 10
//   M = 50
//   N = 50
//   green_mode = half          # free | half | oracle
//   line_order = 64
//   panel_nodes = 32
//   path_panels = 64
//   tail_rel_tol = 1e-10
//   max_tail_panels = 256

#include <iosfwd>
#include <string>
#include <string_view>

#include "halfspace/channel.hpp"
#include "halfspace/greens.hpp"
#include "halfspace/sommerfeld.hpp"
#include "halfspace/spectral.hpp"

namespace halfspace {

struct ScenarioConfig {
  double wavelength = 0.1;
  cplx beta{3.0, 1.0};  ///< canonical; eta = 1/beta
  ContourSpec contour;
  double L_s = 12.0;
  double L_r = 4.0;
  double z_s = 10.0;
  double z_r = 1.0;
  double rho = 10.0;
  int M = 50;
  int N = 50;
  GreenMode green_mode = GreenMode::half_space_closed;
  int line_order = 64;
  QuadratureSpec quad;

  /// Throws ConfigError describing the first invalid field.
  void validate() const;

  GroundModel ground() const;
  LinkGeometry link() const;
};

/// Parses "a+bi" style complex literals. Throws ConfigError.
cplx parse_complex(std::string_view text);
std::string format_complex(cplx value);

GreenMode parse_green_mode(std::string_view text);
std::string_view green_mode_keyword(GreenMode mode) noexcept;

/// Sets one key. Throws ConfigError for unknown keys or malformed values.
void apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value);

/// Named parameter sets, z_s = 10 m (or 50 m with the -zs50 suffix):
///   array-size  rho = 10, z_r = 1; for sweeps over M
///   distance    z_r = 1, M = N = 50; for sweeps over rho
///   rx-height   rho = 25, M = N = 50; for sweeps over z_r
void apply_preset(ScenarioConfig& config, std::string_view name);

ScenarioConfig parse_config(std::istream& in);
ScenarioConfig load_config(const std::string& path);
std::string to_config_text(const ScenarioConfig& config);

}  // namespace halfspace
