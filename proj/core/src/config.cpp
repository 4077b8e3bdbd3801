#include "asrc/config.hpp"

#include <cmath>

#include "asrc/errors.hpp"

namespace asrc {

std::string_view to_string(RegressorOrder order) {
  return order == RegressorOrder::TwoTerm ? "two_term" : "three_term";
}

RegressorOrder regressor_order_from_string(std::string_view s) {
  if (s == "two_term") return RegressorOrder::TwoTerm;
  if (s == "three_term") return RegressorOrder::ThreeTerm;
  throw ConfigError("unknown regressor order '" + std::string(s) +
                    "' (expected two_term or three_term)");
}

std::vector<std::string> validate(const ControllerConfig& cfg) {
  std::vector<std::string> out;
  const auto n = cfg.omega.rows();

  if (cfg.omega.rows() != cfg.omega.cols()) out.push_back("Omega must be square");
  else if (!is_positive_definite(cfg.omega)) out.push_back("Omega must be symmetric positive definite");

  if (cfg.g.rows() != cfg.g.cols() || cfg.g.rows() != n)
    out.push_back("G must be square with the same size as Omega");
  else if (!is_positive_definite(cfg.g)) out.push_back("G must be symmetric positive definite");

  if (!(cfg.varpi > 0.0)) out.push_back("varpi must be > 0");
  for (std::size_t i = 0; i < cfg.alpha.size(); ++i) {
    if (!(cfg.alpha[i] > 0.0)) out.push_back("alpha_" + std::to_string(i) + " must be > 0");
  }
  if (!(cfg.beta > 0.0)) out.push_back("beta must be > 0");
  if (!(cfg.varsigma > 0.0)) out.push_back("varsigma must be > 0");

  for (std::size_t i = 0; i < regressor_size(cfg.order); ++i) {
    if (!(cfg.theta_init[i] > 0.0))
      out.push_back("theta_hat_" + std::to_string(i) + "(t0) must be > 0");
  }
  if (!(cfg.gamma_init > cfg.beta)) out.push_back("gamma(t0) must be > beta");
  return out;
}

}  // namespace asrc
