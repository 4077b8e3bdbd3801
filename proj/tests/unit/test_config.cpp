#include <gtest/gtest.h>

#include <algorithm>

#include "asrc/config.hpp"
#include "asrc/errors.hpp"

namespace asrc {
namespace {

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
  return std::any_of(v.begin(), v.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

TEST(ControllerConfig, DefaultsPass) {
  const ControllerConfig cfg;
  EXPECT_TRUE(cfg.omega.isIdentity());
  EXPECT_TRUE(cfg.g.isIdentity());
  EXPECT_EQ(cfg.varpi, 0.5);
  EXPECT_EQ(cfg.beta, 0.1);
  EXPECT_EQ(cfg.varsigma, 10.0);
  EXPECT_EQ(cfg.gamma_init, 20.0);
  EXPECT_TRUE(validate(cfg).empty());
}

TEST(ControllerConfig, GammaAtBetaIsViolation) {
  ControllerConfig cfg;
  cfg.gamma_init = cfg.beta;
  const auto v = validate(cfg);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_TRUE(mentions(v, "gamma"));
}

TEST(ControllerConfig, IndefiniteOmegaIsViolation) {
  ControllerConfig cfg;
  cfg.omega(1, 1) = -1.0;
  EXPECT_TRUE(mentions(validate(cfg), "Omega"));
}

TEST(ControllerConfig, NonPositiveScalarsAreViolations) {
  ControllerConfig cfg;
  cfg.varpi = 0.0;
  cfg.alpha[2] = -1.0;
  cfg.theta_init[0] = 0.0;
  EXPECT_GE(validate(cfg).size(), 3u);
}

TEST(ControllerConfig, TwoTermIgnoresThirdThetaInit) {
  ControllerConfig cfg;
  cfg.theta_init[2] = 0.0;
  EXPECT_TRUE(validate(cfg).empty());
  cfg.order = RegressorOrder::ThreeTerm;
  EXPECT_FALSE(validate(cfg).empty());
}

TEST(ControllerConfig, DimensionMismatchIsViolation) {
  ControllerConfig cfg;
  cfg.g = Mat::Identity(3, 3);
  EXPECT_FALSE(validate(cfg).empty());
}

TEST(RegressorOrder, StringRoundTrip) {
  for (RegressorOrder o : {RegressorOrder::TwoTerm, RegressorOrder::ThreeTerm})
    EXPECT_EQ(regressor_order_from_string(to_string(o)), o);
  EXPECT_THROW(regressor_order_from_string("four_term"), ConfigError);
  EXPECT_EQ(regressor_size(RegressorOrder::TwoTerm), 2u);
  EXPECT_EQ(regressor_size(RegressorOrder::ThreeTerm), 3u);
}

}  // namespace
}  // namespace asrc
