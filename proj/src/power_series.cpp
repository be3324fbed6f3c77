#include "delange/power_series.hpp"

#include <algorithm>
#include <sstream>

#include "delange/families.hpp"
#include "delange/zeta.hpp"

namespace delange {

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) {
    std::ostringstream msg;
    msg << "truncation orders differ: " << a.order() << " vs " << b.order();
    fail(ErrorCode::TruncationMismatch, msg.str());
  }
}

}  // namespace

PowerSeries::PowerSeries(int order) {
  if (order < 0) fail(ErrorCode::ParameterOutOfRange, "series order must be nonnegative");
  coeffs_.assign(std::size_t(order) + 1, Complex(0.0));
}

PowerSeries::PowerSeries(int order, std::span<const Complex> coeffs) : PowerSeries(order) {
  std::size_t n = std::min(coeffs.size(), coeffs_.size());
  std::copy_n(coeffs.begin(), n, coeffs_.begin());
}

PowerSeries::PowerSeries(int order, std::initializer_list<Complex> coeffs)
    : PowerSeries(order, std::span<const Complex>(coeffs.begin(), coeffs.size())) {}

PowerSeries PowerSeries::constant(int order, Complex c) {
  PowerSeries out(order);
  out.coeffs_[0] = c;
  return out;
}

PowerSeries PowerSeries::linear(int order, Complex c0, Complex c1) {
  PowerSeries out(order);
  out.coeffs_[0] = c0;
  if (order >= 1) out.coeffs_[1] = c1;
  return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(Complex scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  const int J = a.order();
  PowerSeries out(J);
  for (int k = 0; k <= J; ++k) {
    Complex acc = 0.0;
    for (int i = 0; i <= k; ++i) acc += a[i] * b[k - i];
    out[k] = acc;
  }
  return out;
}

// b = exp(a)  <=>  b' = a' b, so k b_k = sum_{j=1..k} j a_j b_{k-j}.
PowerSeries ps_exp(const PowerSeries& a) {
  const int J = a.order();
  PowerSeries b(J);
  b[0] = std::exp(a[0]);
  for (int k = 1; k <= J; ++k) {
    Complex acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += double(j) * a[j] * b[k - j];
    b[k] = acc / double(k);
  }
  return b;
}

// b = log(a)  <=>  a b' = a', so k a_0 b_k = k a_k - sum_{j=1..k-1} j b_j a_{k-j}.
PowerSeries ps_log(const PowerSeries& a) {
  if (a[0] == Complex(0.0)) fail(ErrorCode::LogOfZeroConstantTerm, "log of a series with zero constant term");
  const int J = a.order();
  PowerSeries b(J);
  b[0] = std::log(a[0]);
  for (int k = 1; k <= J; ++k) {
    Complex acc = double(k) * a[k];
    for (int j = 1; j < k; ++j) acc -= double(j) * b[j] * a[k - j];
    b[k] = acc / (double(k) * a[0]);
  }
  return b;
}

PowerSeries ps_reciprocal(const PowerSeries& a) {
  if (a[0] == Complex(0.0)) fail(ErrorCode::LogOfZeroConstantTerm, "reciprocal of a series with zero constant term");
  const int J = a.order();
  PowerSeries b(J);
  b[0] = 1.0 / a[0];
  for (int k = 1; k <= J; ++k) {
    Complex acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = -acc / a[0];
  }
  return b;
}

PowerSeries ps_pow(const PowerSeries& a, Complex p) {
  PowerSeries out = ps_exp(p * ps_log(a));
  if (a[0] == Complex(1.0)) out[0] = 1.0;
  return out;
}

PowerSeries shifted_zeta_series(int order) {
  if (order < 0 || order > kMaxSeriesOrder) {
    std::ostringstream msg;
    msg << "shifted zeta series is available up to order " << kMaxSeriesOrder << ", got " << order;
    fail(ErrorCode::OrderTooHigh, msg.str());
  }
  auto c = detail::laurent_regular_coefficients();
  PowerSeries out(order);
  out[0] = 1.0;
  for (int j = 1; j <= order; ++j) out[j] = c[j - 1];
  return out;
}

PowerSeries z_coeffs(Complex z, int order, double bound) {
  if (!(std::abs(z) <= bound)) {
    std::ostringstream msg;
    msg << "|z| = " << std::abs(z) << " exceeds the parameter bound " << bound;
    fail(ErrorCode::ParameterOutOfRange, msg.str());
  }
  PowerSeries out = ps_exp(z * ps_log(shifted_zeta_series(order)));
  out[0] = 1.0;
  return out;
}

ExpansionCoefficients expansion_from_series(double kappa, Complex w, const PowerSeries& g_times_zeta2s,
                                            double bound) {
  if (!(kappa > 0.0 && kappa <= bound)) fail(ErrorCode::ParameterOutOfRange, "kappa must lie in (0, B]");
  if (!(std::abs(w) <= bound)) fail(ErrorCode::ParameterOutOfRange, "|w| must not exceed B");
  const int J = g_times_zeta2s.order();
  PowerSeries z = z_coeffs(kappa, J, bound);
  PowerSeries g = ps_mul(g_times_zeta2s, z);

  ExpansionCoefficients out;
  out.kappa = kappa;
  out.w = w;
  out.order = J;
  out.gamma_j.assign(z.coeffs().begin(), z.coeffs().end());
  out.g_l.assign(g.coeffs().begin(), g.coeffs().end());
  out.lambda_l.resize(out.g_l.size());
  for (int l = 0; l <= J; ++l) {
    Complex rg = recip_gamma(Complex(kappa - l, 0.0));
    out.lambda_l[l] = (rg == Complex(0.0)) ? Complex(0.0) : out.g_l[l] * rg;
  }
  return out;
}

ExpansionCoefficients g_lambda_coeffs(const ArithmeticFamily& family, int order) {
  const auto& p = family.params();
  ExpansionCoefficients out = expansion_from_series(p.kappa, p.w, family.g_times_zeta2s_series(order), p.B);
  if (family.real_valued() && p.w.imag() == 0.0) {
    // real coefficients; drop quadrature noise in the imaginary parts
    for (auto* v : {&out.gamma_j, &out.g_l, &out.lambda_l})
      for (Complex& c : *v) c = c.real();
  }
  return out;
}

}  // namespace delange
