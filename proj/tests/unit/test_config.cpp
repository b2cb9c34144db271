#include <sstream>

#include <gtest/gtest.h>

#include "halfspace/config.hpp"
#include "halfspace/errors.hpp"

using namespace halfspace;

TEST(ComplexLiteral, Forms) {
  EXPECT_EQ(parse_complex("0.3-0.1i"), cplx(0.3, -0.1));
  EXPECT_EQ(parse_complex(" 3 + 1i "), cplx(3.0, 1.0));
  EXPECT_EQ(parse_complex("2i"), cplx(0.0, 2.0));
  EXPECT_EQ(parse_complex("-i"), cplx(0.0, -1.0));
  EXPECT_EQ(parse_complex("i"), cplx(0.0, 1.0));
  EXPECT_EQ(parse_complex("-1.5"), cplx(-1.5, 0.0));
  EXPECT_EQ(parse_complex("1e-3+2.5E+2i"), cplx(1e-3, 250.0));
  EXPECT_EQ(parse_complex("-2e-1-3e-2j"), cplx(-0.2, -0.03));
}

TEST(ComplexLiteral, Malformed) {
  for (const char* bad : {"", "abc", "1+", "3+xi", "1..2", "i2"}) {
    EXPECT_THROW(parse_complex(bad), ConfigError) << bad;
  }
}

TEST(ComplexLiteral, RoundTrip) {
  for (cplx v : {cplx(3.0, 1.0), cplx(0.1, -1e-17), cplx(-2.5, 0.0), cplx(1.0 / 3.0, -2.0 / 7.0)}) {
    EXPECT_EQ(parse_complex(format_complex(v)), v);
  }
}

TEST(Config, Defaults) {
  const ScenarioConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_NEAR(std::abs(c.ground().eta() - cplx(0.3, -0.1)), 0.0, 1e-15);
  EXPECT_EQ(c.M, 50);
  EXPECT_EQ(c.green_mode, GreenMode::half_space_closed);
}

TEST(Config, ParseFile) {
  std::istringstream in(
      "# scenario\n"
      "wavelength = 0.2\n"
      "eta = 0.5+0.5i   # impedance\n"
      "\n"
      "M = 16\n"
      "N=8\n"
      "green_mode = oracle\n"
      "tail_rel_tol = 1e-8\n");
  const auto c = parse_config(in);
  EXPECT_EQ(c.wavelength, 0.2);
  EXPECT_NEAR(std::abs(c.beta - cplx(1.0, -1.0)), 0.0, 1e-15);
  EXPECT_EQ(c.M, 16);
  EXPECT_EQ(c.N, 8);
  EXPECT_EQ(c.green_mode, GreenMode::half_space_oracle);
  EXPECT_EQ(c.quad.tail_rel_tol, 1e-8);
}

TEST(Config, TextRoundTrip) {
  ScenarioConfig c;
  apply_setting(c, "beta", "0");
  apply_setting(c, "rho", "33.25");
  apply_setting(c, "green_mode", "free");
  std::istringstream in(to_config_text(c));
  const auto back = parse_config(in);
  EXPECT_EQ(to_config_text(back), to_config_text(c));
  EXPECT_TRUE(back.ground().is_perfect_image());
}

TEST(Config, ErrorsCarryLineNumbers) {
  std::istringstream in("M = 5\nQ = three\n");
  try {
    parse_config(in);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  std::istringstream no_eq("rho 5\n");
  EXPECT_THROW(parse_config(no_eq), ConfigError);
}

TEST(Config, RejectsUnknownKeysAndValues) {
  ScenarioConfig c;
  EXPECT_THROW(apply_setting(c, "colour", "blue"), ConfigError);
  EXPECT_THROW(apply_setting(c, "M", "2.5"), ConfigError);
  EXPECT_THROW(apply_setting(c, "rho", "far"), ConfigError);
  EXPECT_THROW(apply_setting(c, "eta", "0"), ConfigError);
  EXPECT_THROW(apply_setting(c, "green_mode", "sideways"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/scenario.cfg"), ConfigError);
}

TEST(Config, ValidationFailures) {
  const auto invalid = [](const char* key, const char* value) {
    ScenarioConfig c;
    apply_setting(c, key, value);
    EXPECT_THROW(c.validate(), ConfigError) << key << "=" << value;
  };
  invalid("rho", "0");
  invalid("z_r", "-1");
  invalid("M", "0");
  invalid("W", "8");
  invalid("beta", "-1+2i");
  invalid("panel_nodes", "2");
  invalid("wavelength", "0");
}

TEST(Config, GreenModeKeywords) {
  for (auto m : {GreenMode::free_space, GreenMode::half_space_closed, GreenMode::half_space_oracle}) {
    EXPECT_EQ(parse_green_mode(green_mode_keyword(m)), m);
  }
  EXPECT_EQ(parse_green_mode("half_space_closed"), GreenMode::half_space_closed);
}

TEST(Presets, NamedScenarios) {
  ScenarioConfig c;
  apply_preset(c, "array-size");
  EXPECT_EQ(c.z_r, 1.0);
  EXPECT_EQ(c.rho, 10.0);
  EXPECT_EQ(c.z_s, 10.0);
  apply_preset(c, "rx-height-zs50");
  EXPECT_EQ(c.rho, 25.0);
  EXPECT_EQ(c.z_s, 50.0);
  EXPECT_EQ(c.M, 50);
  apply_preset(c, "distance");
  EXPECT_EQ(c.z_s, 10.0);
  EXPECT_EQ(c.z_r, 1.0);
  EXPECT_THROW(apply_preset(c, "suburban"), ConfigError);
  EXPECT_THROW(apply_preset(c, "-zs50"), ConfigError);
}
