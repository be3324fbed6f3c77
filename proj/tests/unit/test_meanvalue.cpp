#include <cmath>
#include <numbers>
#include <functional>

#include "doctest.h"
#include "delange/families.hpp"
#include "delange/meanvalue.hpp"

using namespace delange;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode(0);
}

const double kKappaGrid[] = {0.5, 1, 2, 5, 7.2, 10, 20};
const double kDeltaGrid[] = {0, 1, 2, 5};

}  // namespace

TEST_CASE("theta: spot values") {
  const ThetaRegime unc{ThetaRegimeTag::unconditional_huxley, 1.0 / 3.0, 0.01};
  const ThetaResult r = theta(1.0, 0.0, unc);
  CHECK(std::abs(r.value - 7.55 / 12.05) < 1e-12);
  CHECK(r.branch == ThetaBranch::case1);
  CHECK(std::abs(r.kappa_split - 7.2) < 1e-12);
  const ThetaRegime tiny{ThetaRegimeTag::unconditional_huxley, 1.0 / 3.0, 1e-12};
  const ThetaResult c2 = theta(10.0, 0.0, tiny);
  CHECK(c2.branch == ThetaBranch::case2);
  CHECK(std::abs(c2.value - 0.7) < 1e-10);
  CHECK(std::abs(prior_theta_bound(1.0, 0.0) - 26.0 / 41.0) < 1e-15);
}

TEST_CASE("theta: branch boundaries and regimes") {
  const ThetaRegime unc{ThetaRegimeTag::unconditional_huxley, 1.0 / 3.0, 0.01};
  CHECK(theta(12.0 / (5.0 / 3.0), 0.0, unc).branch == ThetaBranch::case1);
  CHECK(theta(7.2000001, 0.0, unc).branch == ThetaBranch::case2);
  const ThetaRegime zdh{ThetaRegimeTag::zero_density_hypothesis, 1.0 / 3.0, 0.01};
  const ThetaResult z = theta(1.0, 0.0, zdh);
  CHECK(z.branch == ThetaBranch::case1);
  CHECK(std::abs(z.value - 1.11 / 2.01) < 1e-12);
  CHECK(theta(6.5, 0.0, zdh).branch == ThetaBranch::case2);
  const ThetaRegime lin{ThetaRegimeTag::lindelof_halasz_turan, 1.0 / 3.0, 0.01};
  CHECK(code_of([&] { theta(1.0, 1.0, lin); }) == ErrorCode::LindelofRequiresDeltaAboveOne);
  const ThetaResult l = theta(1.0, 2.0, lin);
  CHECK(l.branch == ThetaBranch::lindelof);
  CHECK(std::abs(l.value - (1.0 + 0.02 + 0.13) / (2.0 + 0.02 + 0.03)) < 1e-12);
  CHECK(code_of([] { ThetaRegime{ThetaRegimeTag::unconditional_huxley, 0.5, 0.01}.validate(); }) ==
        ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { ThetaRegime{ThetaRegimeTag::unconditional_huxley, 0.3, 0.06}.validate(); }) ==
        ErrorCode::ParameterOutOfRange);
  CHECK(parse_theta_regime("zdh") == ThetaRegimeTag::zero_density_hypothesis);
  CHECK(parse_theta_regime("huxley") == ThetaRegimeTag::unconditional_huxley);
  CHECK(code_of([] { parse_theta_regime("riemann"); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("theta: monotone and admissible") {
  for (auto tag : {ThetaRegimeTag::unconditional_huxley, ThetaRegimeTag::zero_density_hypothesis}) {
    const ThetaRegime reg{tag, 1.0 / 3.0, 0.01};
    for (double k : kKappaGrid) {
      double prev = -1.0;
      for (double d : kDeltaGrid) {
        const double v = theta(k, d, reg).value;
        CHECK(v > 0.0);
        CHECK(v < 1.0);
        CHECK(v >= prev);
        prev = v;
      }
    }
    for (double d : kDeltaGrid) {
      double prev = -1.0;
      for (double k = 7.3; k <= 20.0; k += 0.5) {
        const ThetaResult r = theta(k, d, reg);
        if (r.branch != ThetaBranch::case2) continue;
        CHECK(r.value >= prev);
        prev = r.value;
      }
    }
  }
  const ThetaRegime lin{ThetaRegimeTag::lindelof_halasz_turan, 1.0 / 3.0, 0.01};
  double prev = -1.0;
  for (double d : {1.5, 2.0, 5.0}) {
    const double v = theta(2.0, d, lin).value;
    CHECK(v > prev);
    CHECK(v < 1.0);
    prev = v;
  }
}

TEST_CASE("theta improvement over the prior bound in the epsilon -> 0 limit") {
  // at epsilon = 0.01 some cells do not improve; the limit statement holds
  const ThetaRegime reg{ThetaRegimeTag::unconditional_huxley, 1.0 / 3.0, 1e-9};
  for (double k : kKappaGrid)
    for (double d : kDeltaGrid) {
      CAPTURE(k);
      CAPTURE(d);
      CHECK(theta(k, d, reg).value < prior_theta_bound(k, d));
    }
}

TEST_CASE("predict examples") {
  const auto one = g_lambda_coeffs(parse_family("one"));
  for (int N = 0; N <= 5; ++N) CHECK(predict(one, Window{123456789, 4321}, N) == Complex(4321.0));
  const auto d = g_lambda_coeffs(parse_family("divisor:2"));
  const Window w7{10000000, 100000};
  const double expect = 1e5 * (std::log(1e7) + 2.0 * stieltjes(0));
  CHECK(std::abs(predict(d, w7, 1).real() - expect) < 1e-6);
  CHECK(std::abs(predict(d, w7, 1).real() - 1.72725e6) < 10.0);
  for (int N = 2; N <= 10; ++N) CHECK(predict(d, w7, N) == predict(d, w7, 1));
  const auto mu2 = g_lambda_coeffs(parse_family("sqfree"));
  CHECK(std::abs(predict(mu2, Window{1000000, 10000}, 0).real() - 6079.271018540) < 1e-6);
  CHECK(code_of([&] { predict(d, w7, 30); }) == ErrorCode::OrderExceedsCoefficients);
  CHECK(code_of([&] { predict(d, Window{100, 10}, 4); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("remainder bound examples") {
  const auto one = g_lambda_coeffs(parse_family("one"));
  const double x = std::exp(10.0);
  const auto xi = std::uint64_t(std::llround(x));
  const Window w{xi, xi};
  RemainderParams rp{1.0, 1.0, 1.0};
  const double L = std::log(double(xi));
  const double expect =
      1.0 / L + 1.0 / std::sqrt(double(xi)) + 1.0 / L + std::exp(-L / std::log(L));
  CHECK(std::abs(remainder_bound(one, w, 0, rp) - expect) < 1e-12);
  CHECK(std::abs(expect - (0.1 + std::exp(-5.0) + 0.1 + std::exp(-10.0 / std::log(10.0)))) < 1e-4);

  const auto d = g_lambda_coeffs(parse_family("divisor:2"));
  double prev = 1e300;
  for (double lx = 20; lx <= 40; lx += 2) {
    const auto xx = std::uint64_t(std::exp(lx));
    const double b = remainder_bound(d, Window{xx, 1000}, 1, {});
    CHECK(b < prev);
    prev = b;
  }
  RemainderParams tinyM{1.0, 0.5, 1e-300};
  const double isolated = remainder_bound(d, Window{1000000000000ull, 1}, 1, tinyM);
  CHECK(std::abs(isolated - 4.0 / 1e6) / (4.0 / 1e6) < 1e-3);
  CHECK(code_of([&] { remainder_bound(d, w, 0, RemainderParams{0.0, 1.0, 1.0}); }) ==
        ErrorCode::ParameterOutOfRange);
}

TEST_CASE("window_length") {
  CHECK(window_length(10000000, 0.8) == 398108);
  CHECK(window_length(100, 0.5) == 10);
  CHECK(window_length(1000000, 1.0 / 3.0) == 100);
}

TEST_CASE("run_experiment examples") {
  const std::uint64_t grid1[] = {10000, 1000000};
  const auto recs = run_experiment(parse_family("one"), grid1, 0.7, 0);
  REQUIRE(recs.size() == 2);
  for (const auto& r : recs) CHECK(r.rel_error <= 1.0 / double(r.y));
  CHECK(recs[0].x == 10000);
  CHECK(recs[1].x == 1000000);

  const std::uint64_t grid2[] = {10000000};
  const auto d = parse_family("divisor:2");
  const auto n0 = run_experiment(d, grid2, 0.8, 0);
  const auto n1 = run_experiment(d, grid2, 0.8, 1);
  CHECK(n1[0].rel_error < n0[0].rel_error);
  CHECK(n1[0].exact == n0[0].exact);

  const std::uint64_t grid3[] = {1000000};
  const auto m = run_experiment(parse_family("sqfree"), grid3, 0.8, 0);
  CHECK(m[0].rel_error <= 0.01);
  CHECK(m[0].family == "sqfree");

  const std::uint64_t bad[] = {1000000000000000000ull};
  CHECK(code_of([&] { run_experiment(d, bad, 0.9, 0); }) == ErrorCode::WindowTooLarge);
}

TEST_CASE("remainder dominance envelope on the divisor family") {
  const std::uint64_t grid[] = {100000, 1000000, 10000000};
  const auto d = parse_family("divisor:2");
  for (int N : {0, 1}) {
    for (const auto& r : run_experiment(d, grid, 0.8, N)) {
      const double scale = double(r.y) * std::log(double(r.x));
      CAPTURE(r.x);
      CAPTURE(N);
      CHECK(std::abs(r.exact - r.predicted) / scale <= 50.0 * r.remainder_bound);
    }
  }
}
