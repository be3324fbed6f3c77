#include <cmath>
#include <numbers>
#include <random>
#include <functional>

#include "doctest.h"
#include "delange/families.hpp"
#include "delange/power_series.hpp"
#include "frozen.hpp"

using namespace delange;

namespace {

PowerSeries random_series(std::mt19937_64& rng, int order) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PowerSeries a(order);
  for (int k = 0; k <= order; ++k) a[k] = Complex(u(rng), u(rng)) / double(k + 1);
  a[0] += 2.0;
  return a;
}

double max_diff(const PowerSeries& a, const PowerSeries& b) {
  double m = 0.0;
  for (int k = 0; k <= a.order(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace

TEST_CASE("ps_mul examples") {
  const PowerSeries a(2, {1.0, 1.0}), b(2, {1.0, -1.0});
  const PowerSeries p = a * b;
  CHECK(p[0] == Complex(1.0));
  CHECK(p[1] == Complex(0.0));
  CHECK(p[2] == Complex(-1.0));
  const PowerSeries one = PowerSeries::constant(2, 1.0);
  CHECK(max_diff(a * one, a) == 0.0);
  const PowerSeries c(2, {1.0, 1.0, 0.5});
  const PowerSeries sq = c * c;
  CHECK(sq[0] == Complex(1.0));
  CHECK(sq[1] == Complex(2.0));
  CHECK(sq[2] == Complex(2.0));
  try {
    ps_mul(PowerSeries(2), PowerSeries(3));
    FAIL("expected TruncationMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TruncationMismatch);
  }
}

TEST_CASE("ps_exp and ps_log examples") {
  const PowerSeries e0 = ps_exp(PowerSeries(4));
  CHECK(e0[0] == Complex(1.0));
  for (int k = 1; k <= 4; ++k) CHECK(e0[k] == Complex(0.0));
  const PowerSeries ex = ps_exp(PowerSeries::linear(4, 0.0, 1.0));
  const double fact[] = {1, 1, 2, 6, 24};
  for (int k = 0; k <= 4; ++k) CHECK(std::abs(ex[k] - 1.0 / fact[k]) < 1e-15);
  const PowerSeries lg = ps_log(PowerSeries::linear(3, 1.0, 1.0));
  CHECK(std::abs(lg[0]) < 1e-15);
  CHECK(std::abs(lg[1] - 1.0) < 1e-15);
  CHECK(std::abs(lg[2] + 0.5) < 1e-15);
  CHECK(std::abs(lg[3] - 1.0 / 3.0) < 1e-15);
  try {
    ps_log(PowerSeries::linear(3, 0.0, 1.0));
    FAIL("expected LogOfZeroConstantTerm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LogOfZeroConstantTerm);
  }
}

TEST_CASE("exp/log round trips") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const PowerSeries a = random_series(rng, 24);
    CHECK(max_diff(ps_exp(ps_log(a)), a) < 1e-12);
    PowerSeries b = a;
    b[0] = Complex(0.3, -0.2);
    CHECK(max_diff(ps_log(ps_exp(b)), b) < 1e-12);
  }
}

TEST_CASE("ps_reciprocal and ps_pow") {
  std::mt19937_64 rng(9);
  const PowerSeries a = random_series(rng, 16);
  const PowerSeries prod = a * ps_reciprocal(a);
  CHECK(std::abs(prod[0] - 1.0) < 1e-14);
  for (int k = 1; k <= 16; ++k) CHECK(std::abs(prod[k]) < 1e-13);
  CHECK(max_diff(ps_pow(a, 2.0), a * a) < 1e-12);
  CHECK(max_diff(ps_pow(ps_pow(a, 0.5), 2.0), a) < 1e-12);
}

TEST_CASE("shifted_zeta_series") {
  const PowerSeries z = shifted_zeta_series(10);
  CHECK(z[0] == Complex(1.0));
  CHECK(std::abs(z[1] - 0.5772156649015329) < 1e-13);
  CHECK(std::abs(z[2] - 0.0728158454836767) < 1e-13);
  double fact = 1.0;
  for (int j = 1; j <= 10; ++j) {
    if (j > 1) fact *= j - 1;
    const double expect = ((j - 1) % 2 ? -1.0 : 1.0) * stieltjes(j - 1) / fact;
    CHECK(std::abs(z[j] - expect) < 1e-15);
  }
  CHECK_THROWS_AS(shifted_zeta_series(kMaxSeriesOrder + 1), Error);
}

TEST_CASE("z_coeffs examples and oracle") {
  const PowerSeries z0 = z_coeffs(0.0, 12);
  CHECK(z0[0] == Complex(1.0));
  for (int j = 1; j <= 12; ++j) CHECK(std::abs(z0[j]) < 1e-15);
  CHECK(max_diff(z_coeffs(1.0, 12), shifted_zeta_series(12)) < 1e-13);
  CHECK(std::abs(z_coeffs(2.0, 6)[1] - 1.1544313298030657) < 1e-12);
  for (const auto& ref : frozen::kZCoeffs) {
    const PowerSeries z = z_coeffs(Complex(ref.z_re, ref.z_im), 6);
    CHECK(z[0] == Complex(1.0));
    for (int j = 0; j <= 6; ++j) {
      CAPTURE(j);
      CHECK(std::abs(z[j] - Complex(ref.re[j], ref.im[j])) < 1e-12);
    }
  }
  CHECK_THROWS_AS(z_coeffs(25.0, 6), Error);
}

TEST_CASE("z_coeffs homomorphism") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int t = 0; t < 20; ++t) {
    const Complex z1(u(rng), u(rng)), z2(u(rng), u(rng));
    CHECK(max_diff(z_coeffs(z1 + z2, 30), z_coeffs(z1, 30) * z_coeffs(z2, 30)) < 1e-10);
  }
}

TEST_CASE("z_coeffs growth bound") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> r(0.0, 2.0), a(-std::numbers::pi, std::numbers::pi);
  double fitted = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Complex z = std::polar(r(rng), a(rng));
    const PowerSeries s = z_coeffs(z, 60);
    for (int j = 0; j <= 60; ++j) fitted = std::max(fitted, std::abs(s[j]) / std::pow(1.25, j));
  }
  CHECK(fitted <= 10.0);
}

TEST_CASE("g_lambda_coeffs: built-in families") {
  const auto one = g_lambda_coeffs(parse_family("one"), 20);
  CHECK(one.lambda_l[0] == Complex(1.0));
  for (int l = 1; l <= 20; ++l) CHECK(one.lambda_l[l] == Complex(0.0));

  const auto d = g_lambda_coeffs(parse_family("divisor:2"));
  CHECK(std::abs(d.lambda_l[0] - 1.0) < 1e-10);
  CHECK(std::abs(d.lambda_l[1] - 2.0 * stieltjes(0)) < 1e-10);
  for (int l = 2; l <= d.order; ++l) CHECK(d.lambda_l[l] == Complex(0.0));

  const auto mu2 = g_lambda_coeffs(parse_family("sqfree"));
  CHECK(std::abs(mu2.lambda_l[0] - 6.0 / (std::numbers::pi * std::numbers::pi)) < 1e-6);
  for (int l = 0; l < 7; ++l) CHECK(std::abs(mu2.g_l[l] - frozen::kSqfreeG[l]) < 1e-10);

  for (int m = 1; m <= 3; ++m) {
    const auto c = g_lambda_coeffs(builtin_family("divisor_kappa", double(m)), 12);
    for (int l = m; l <= 12; ++l) CHECK(c.lambda_l[l] == Complex(0.0));
  }
}

TEST_CASE("expansion invariant: lambda = g * recip_gamma(kappa - l)") {
  const auto c = g_lambda_coeffs(parse_family("divisor:0.5"), 16);
  for (int l = 0; l <= 16; ++l) {
    const Complex expect = c.g_l[l] * recip_gamma(Complex(0.5 - l, 0.0));
    CHECK(std::abs(c.lambda_l[l] - expect) <= 1e-15 * std::max(1.0, std::abs(expect)));
  }
  CHECK(int(c.gamma_j.size()) == 17);
  CHECK(int(c.g_l.size()) == 17);
}
