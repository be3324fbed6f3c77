#include "delange/meanvalue.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace delange {

void ThetaRegime::validate() const {
  if (!(eta1 > 0.0 && eta1 <= 1.0 / 3.0 + 1e-15))
    fail(ErrorCode::ParameterOutOfRange, "eta1 must lie in (0, 1/3]");
  if (!(epsilon > 0.0 && epsilon <= 0.05)) fail(ErrorCode::ParameterOutOfRange, "epsilon must lie in (0, 0.05]");
}

const char* theta_regime_name(ThetaRegimeTag tag) noexcept {
  switch (tag) {
    case ThetaRegimeTag::unconditional_huxley: return "unconditional_huxley";
    case ThetaRegimeTag::zero_density_hypothesis: return "zero_density_hypothesis";
    case ThetaRegimeTag::lindelof_halasz_turan: return "lindelof_halasz_turan";
  }
  return "unknown";
}

ThetaRegimeTag parse_theta_regime(const std::string& name) {
  if (name == "unconditional" || name == "unconditional_huxley" || name == "huxley")
    return ThetaRegimeTag::unconditional_huxley;
  if (name == "zdh" || name == "zero_density" || name == "zero_density_hypothesis")
    return ThetaRegimeTag::zero_density_hypothesis;
  if (name == "lindelof" || name == "lindelof_halasz_turan") return ThetaRegimeTag::lindelof_halasz_turan;
  fail(ErrorCode::ParameterOutOfRange, "unknown theta regime '" + name + "'");
}

const char* theta_branch_name(ThetaBranch branch) noexcept {
  switch (branch) {
    case ThetaBranch::case1: return "case1";
    case ThetaBranch::case2: return "case2";
    case ThetaBranch::lindelof: return "lindelof";
  }
  return "unknown";
}

ThetaResult theta(double kappa, double delta, const ThetaRegime& regime, double bound) {
  regime.validate();
  if (!(kappa > 0.0 && kappa <= bound)) fail(ErrorCode::ParameterOutOfRange, "kappa must lie in (0, B]");
  if (!(delta >= 0.0)) fail(ErrorCode::ParameterOutOfRange, "delta must be nonnegative");
  const double e = regime.epsilon;
  const double h = regime.eta1;
  auto case2 = [&] { return (h * kappa + delta - 1.0 + 11.0 * e) / (h * kappa + delta + e); };

  ThetaResult out;
  switch (regime.tag) {
    case ThetaRegimeTag::unconditional_huxley:
      out.kappa_split = 12.0 / (5.0 * h);
      if (kappa <= out.kappa_split) {
        out.branch = ThetaBranch::case1;
        out.value = (5.0 * delta + 55.0 * e + 7.0) / (5.0 * delta + 5.0 * e + 12.0);
      } else {
        out.branch = ThetaBranch::case2;
        out.value = case2();
      }
      break;
    case ThetaRegimeTag::zero_density_hypothesis:
      out.kappa_split = 2.0 / h;
      if (kappa <= out.kappa_split) {
        out.branch = ThetaBranch::case1;
        out.value = (1.0 + delta + 11.0 * e) / (2.0 + delta + e);
      } else {
        out.branch = ThetaBranch::case2;
        out.value = case2();
      }
      break;
    case ThetaRegimeTag::lindelof_halasz_turan:
      if (!(delta > 1.0)) fail(ErrorCode::LindelofRequiresDeltaAboveOne, "the Lindelof exponent needs delta > 1");
      out.kappa_split = std::numeric_limits<double>::infinity();
      out.branch = ThetaBranch::lindelof;
      out.value = (delta - 1.0 + 2.0 * kappa * e + 13.0 * e) / (delta + 2.0 * kappa * e + 3.0 * e);
      break;
  }
  return out;
}

double prior_theta_bound(double kappa, double delta) {
  return (5.0 * kappa + 15.0 * delta + 21.0) / (5.0 * kappa + 15.0 * delta + 36.0);
}

void RemainderParams::validate() const {
  if (!(a1 > 0.0 && a2 > 0.0 && M > 0.0)) fail(ErrorCode::ParameterOutOfRange, "a1, a2 and M must be positive");
}

namespace {

double checked_log(const ExpansionCoefficients& coeffs, const Window& win, int N) {
  if (N < 0) fail(ErrorCode::ParameterOutOfRange, "N must be nonnegative");
  if (N > coeffs.order) {
    std::ostringstream msg;
    msg << "N = " << N << " exceeds the coefficient order " << coeffs.order;
    fail(ErrorCode::OrderExceedsCoefficients, msg.str());
  }
  if (win.y == 0) fail(ErrorCode::InvalidWindow, "window length y must be at least 1");
  const double L = std::log(double(win.x));
  if (!(L > N + 1.0)) {
    std::ostringstream msg;
    msg << "log x = " << L << " must exceed N + 1 = " << N + 1;
    fail(ErrorCode::ParameterOutOfRange, msg.str());
  }
  return L;
}

}  // namespace

Complex predict(const ExpansionCoefficients& coeffs, const Window& win, int N) {
  const double L = checked_log(coeffs, win, N);
  Complex acc = 0.0;
  double scale = 1.0;
  for (int l = 0; l <= N; ++l) {
    acc += coeffs.lambda_l[l] * scale;
    scale /= L;
  }
  return double(win.y) * std::pow(L, coeffs.kappa - 1.0) * acc;
}

double remainder_bound(const ExpansionCoefficients& coeffs, const Window& win, int N, const RemainderParams& rp) {
  rp.validate();
  const double L = checked_log(coeffs, win, N);
  const double x = double(win.x);
  double first = 0.0;
  for (int l = 1; l <= N + 1; ++l) first += l * std::abs(coeffs.lambda_l[l - 1]) / std::pow(L, l);
  first *= double(win.y) / x;
  const double a = rp.a1 * N + 1.0;
  const double second = std::pow(a, N + 1) / std::sqrt(x);
  const double third = rp.M * (std::pow(a / L, N + 1) + std::exp(-rp.a2 * L / std::log(L)));
  return first + second + third;
}

std::uint64_t window_length(std::uint64_t x, double exponent) {
  const double target = std::pow(double(x), exponent);
  if (!(target < 9.2e18)) fail(ErrorCode::WindowTooLarge, "x^theta is too large");
  auto y = std::uint64_t(std::ceil(target));
  const long double exact = std::pow((long double)x, (long double)exponent);
  while (y > 1 && (long double)(y - 1) >= exact) --y;
  while ((long double)y < exact) ++y;
  return std::max<std::uint64_t>(y, 1);
}

std::vector<ExperimentRecord> run_experiment(const ArithmeticFamily& family, std::span<const std::uint64_t> x_grid,
                                             double theta_exponent, int N, const ExperimentOptions& opts) {
  if (!(theta_exponent > 0.0 && theta_exponent <= 1.0))
    fail(ErrorCode::ParameterOutOfRange, "theta exponent must lie in (0, 1]");
  const ExpansionCoefficients coeffs = g_lambda_coeffs(family, opts.order);
  std::vector<ExperimentRecord> out;
  out.reserve(x_grid.size());
  for (std::uint64_t x : x_grid) {
    Window win{x, window_length(x, theta_exponent)};
    if (win.y < 2 || win.y > win.x)
      fail(ErrorCode::InvalidWindow, "experiment windows need 2 <= y <= x");
    win.validate();
    ExperimentRecord rec;
    rec.family = family.spec();
    rec.x = win.x;
    rec.y = win.y;
    rec.N = N;
    rec.predicted = predict(coeffs, win, N);
    rec.remainder_bound = remainder_bound(coeffs, win, N, opts.remainder);
    rec.exact = exact_sum(family, win, opts.sieve);
    rec.rel_error = rec.predicted == Complex(0.0) ? std::numeric_limits<double>::infinity()
                                                  : std::abs(rec.exact - rec.predicted) / std::abs(rec.predicted);
    out.push_back(rec);
  }
  return out;
}

}  // namespace delange
