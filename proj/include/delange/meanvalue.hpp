#pragma once

// Short-interval main term, remainder envelope, admissible exponents and
// exact-vs-predicted experiments.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "delange/families.hpp"
#include "delange/power_series.hpp"
#include "delange/sieve.hpp"

namespace delange {

enum class ThetaRegimeTag { unconditional_huxley, zero_density_hypothesis, lindelof_halasz_turan };

struct ThetaRegime {
  ThetaRegimeTag tag = ThetaRegimeTag::unconditional_huxley;
  double eta1 = 1.0 / 3.0;
  double epsilon = 0.01;

  void validate() const;
};

enum class ThetaBranch { case1, case2, lindelof };

const char* theta_regime_name(ThetaRegimeTag tag) noexcept;
ThetaRegimeTag parse_theta_regime(const std::string& name);
const char* theta_branch_name(ThetaBranch branch) noexcept;

struct ThetaResult {
  double value = 0.0;
  ThetaBranch branch = ThetaBranch::case1;
  // kappa at which the regime switches branches (infinite for Lindelof).
  double kappa_split = 0.0;
};

ThetaResult theta(double kappa, double delta, const ThetaRegime& regime, double bound = kDefaultParameterBound);

// The earlier exponent (5k + 15d + 21)/(5k + 15d + 36).
double prior_theta_bound(double kappa, double delta);

struct RemainderParams {
  double a1 = 1.0;
  double a2 = 0.5;
  double M = 1.0;

  void validate() const;
};

// y (log x)^{kappa-1} sum_{l<=N} lambda_l (log x)^{-l}
Complex predict(const ExpansionCoefficients& coeffs, const Window& win, int N);

double remainder_bound(const ExpansionCoefficients& coeffs, const Window& win, int N, const RemainderParams& rp = {});

struct ExperimentRecord {
  std::string family;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  int N = 0;
  Complex exact = 0.0;
  Complex predicted = 0.0;
  double remainder_bound = 0.0;
  double rel_error = 0.0;
};

struct ExperimentOptions {
  RemainderParams remainder{};
  int order = kDefaultSeriesOrder;
  SieveOptions sieve{};
};

// One record per grid point with y = ceil(x^theta_exponent), in grid order.
std::vector<ExperimentRecord> run_experiment(const ArithmeticFamily& family, std::span<const std::uint64_t> x_grid,
                                             double theta_exponent, int N, const ExperimentOptions& opts = {});

// ceil(x^e) with exact integer correction.
std::uint64_t window_length(std::uint64_t x, double exponent);

}  // namespace delange
