#include "halfspace/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "halfspace/errors.hpp"

namespace halfspace {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text, std::string_view key) {
  const std::string s(trim(text));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || !std::isfinite(v)) {
    throw ConfigError("invalid number for '" + std::string(key) + "': '" + s + "'");
  }
  return v;
}

int parse_int(std::string_view text, std::string_view key) {
  const auto s = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("invalid integer for '" + std::string(key) + "': '" + std::string(s) + "'");
  }
  return v;
}

// Shortest text that parses back to the same double.
std::string shortest(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

cplx parse_complex(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto fail = [&] { return ConfigError("invalid complex number: '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, "complex"), 0.0};

  s.pop_back();
  // Split at the last sign that is not the leading sign or part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  try {
    return {parse_real(re, "complex"), parse_real(im, "complex")};
  } catch (const ConfigError&) {
    throw fail();
  }
}

std::string format_complex(cplx value) {
  std::string out = shortest(value.real());
  const double im = value.imag();
  out += (std::signbit(im) ? "-" : "+");
  out += shortest(std::abs(im));
  out += "i";
  return out;
}

GreenMode parse_green_mode(std::string_view text) {
  const auto t = trim(text);
  if (t == "free" || t == "free_space") return GreenMode::free_space;
  if (t == "half" || t == "half_space_closed") return GreenMode::half_space_closed;
  if (t == "oracle" || t == "half_space_oracle") return GreenMode::half_space_oracle;
  throw ConfigError("green mode must be free, half or oracle (got '" + std::string(t) + "')");
}

std::string_view green_mode_keyword(GreenMode mode) noexcept {
  switch (mode) {
    case GreenMode::free_space: return "free";
    case GreenMode::half_space_closed: return "half";
    case GreenMode::half_space_oracle: return "oracle";
  }
  return "half";
}

void apply_setting(ScenarioConfig& c, std::string_view raw_key, std::string_view value) {
  const auto key = trim(raw_key);
  if (key == "wavelength") c.wavelength = parse_real(value, key);
  else if (key == "eta") {
    const cplx eta = parse_complex(value);
    if (eta == cplx{0.0, 0.0}) throw ConfigError("eta must be nonzero (use beta = 0 for a perfect image)");
    c.beta = 1.0 / eta;
  } else if (key == "beta") c.beta = parse_complex(value);
  else if (key == "T") c.contour.T = parse_real(value, key);
  else if (key == "W") c.contour.W = parse_int(value, key);
  else if (key == "Q") c.contour.Q = parse_int(value, key);
  else if (key == "L_s") c.L_s = parse_real(value, key);
  else if (key == "L_r") c.L_r = parse_real(value, key);
  else if (key == "z_s") c.z_s = parse_real(value, key);
  else if (key == "z_r") c.z_r = parse_real(value, key);
  else if (key == "rho") c.rho = parse_real(value, key);
  else if (key == "M") c.M = parse_int(value, key);
  else if (key == "N") c.N = parse_int(value, key);
  else if (key == "green_mode") c.green_mode = parse_green_mode(value);
  else if (key == "line_order") c.line_order = parse_int(value, key);
  else if (key == "panel_nodes") c.quad.panel_nodes = parse_int(value, key);
  else if (key == "path_panels") c.quad.path_panels = parse_int(value, key);
  else if (key == "tail_rel_tol") c.quad.tail_rel_tol = parse_real(value, key);
  else if (key == "max_tail_panels") c.quad.max_tail_panels = parse_int(value, key);
  else throw ConfigError("unknown configuration key '" + std::string(key) + "'");
}

void apply_preset(ScenarioConfig& c, std::string_view name) {
  const bool high = name.size() > 5 && name.substr(name.size() - 5) == "-zs50";
  const auto base = high ? name.substr(0, name.size() - 5) : name;
  if (base == "array-size") {
    c.z_r = 1.0;
    c.rho = 10.0;
  } else if (base == "distance") {
    c.z_r = 1.0;
    c.M = c.N = 50;
  } else if (base == "rx-height") {
    c.rho = 25.0;
    c.M = c.N = 50;
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  }
  c.z_s = high ? 50.0 : 10.0;
}

void ScenarioConfig::validate() const {
  const auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(name) + " must be positive");
  };
  positive(wavelength, "wavelength");
  positive(L_s, "L_s");
  positive(L_r, "L_r");
  positive(z_s, "z_s");
  positive(z_r, "z_r");
  positive(rho, "rho");
  if (M < 1 || N < 1) throw ConfigError("M and N must be >= 1");
  if (line_order < 1) throw ConfigError("line_order must be >= 1");
  if (beta.real() < 0.0) throw ConfigError("ground must be passive: Re(beta) >= 0");
  try {
    contour.validate();
    quad.validate();
    require_pole_clear(ground(), contour);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

GroundModel ScenarioConfig::ground() const { return GroundModel::from_admittance(wavelength, beta); }

LinkGeometry ScenarioConfig::link() const { return LinkGeometry(L_s, z_s, L_r, z_r, rho); }

ScenarioConfig parse_config(std::istream& in) {
  ScenarioConfig c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    try {
      apply_setting(c, view.substr(0, eq), view.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::string to_config_text(const ScenarioConfig& c) {
  std::ostringstream out;
  out << "wavelength = " << shortest(c.wavelength) << '\n';
  out << "beta = " << format_complex(c.beta) << '\n';
  out << "T = " << shortest(c.contour.T) << '\n';
  out << "W = " << c.contour.W << '\n';
  out << "Q = " << c.contour.Q << '\n';
  out << "L_s = " << shortest(c.L_s) << '\n';
  out << "L_r = " << shortest(c.L_r) << '\n';
  out << "z_s = " << shortest(c.z_s) << '\n';
  out << "z_r = " << shortest(c.z_r) << '\n';
  out << "rho = " << shortest(c.rho) << '\n';
  out << "M = " << c.M << '\n';
  out << "N = " << c.N << '\n';
  out << "green_mode = " << green_mode_keyword(c.green_mode) << '\n';
  out << "line_order = " << c.line_order << '\n';
  out << "panel_nodes = " << c.quad.panel_nodes << '\n';
  out << "path_panels = " << c.quad.path_panels << '\n';
  out << "tail_rel_tol = " << shortest(c.quad.tail_rel_tol) << '\n';
  out << "max_tail_panels = " << c.quad.max_tail_panels << '\n';
  return out.str();
}

}  // namespace halfspace
