#pragma once

// Truncated power series in X = s - 1 and the Selberg-Delange expansion
// coefficients built from them.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "delange/error.hpp"

namespace delange {

class PowerSeries {
 public:
  // The zero series of truncation order J (J + 1 coefficients).
  explicit PowerSeries(int order);
  PowerSeries(int order, std::span<const Complex> coeffs);
  PowerSeries(int order, std::initializer_list<Complex> coeffs);

  static PowerSeries constant(int order, Complex c);
  // c0 + c1 X
  static PowerSeries linear(int order, Complex c0, Complex c1);

  int order() const noexcept { return int(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t k) const { return coeffs_.at(k); }
  Complex& operator[](std::size_t k) { return coeffs_.at(k); }

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(Complex scalar);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, Complex c) { return a *= c; }
  friend PowerSeries operator*(Complex c, PowerSeries a) { return a *= c; }

 private:
  std::vector<Complex> coeffs_;
};

// Cauchy product truncated at the common order.
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return ps_mul(a, b); }

PowerSeries ps_exp(const PowerSeries& a);
// Principal log of the constant term; throws LogOfZeroConstantTerm.
PowerSeries ps_log(const PowerSeries& a);
PowerSeries ps_reciprocal(const PowerSeries& a);
// exp(p * log a) with the principal branch at the constant term.
PowerSeries ps_pow(const PowerSeries& a, Complex p);

// Taylor coefficients of f about center from a trapezoid rule on a circle.
template <class F>
PowerSeries taylor_by_cauchy(F&& f, Complex center, double radius, int order, int nodes = 256);

// (s-1) zeta(s) about s = 1: entry 0 is 1, entry j is (-1)^{j-1} gamma_{j-1}/(j-1)!.
PowerSeries shifted_zeta_series(int order);

inline constexpr double kDefaultParameterBound = 20.0;

// Z(s; z) = ((s-1) zeta(s))^z about s = 1; entry j is gamma_j(z)/j!.
PowerSeries z_coeffs(Complex z, int order, double bound = kDefaultParameterBound);

struct ExpansionCoefficients {
  double kappa = 0.0;
  Complex w = 0.0;
  int order = 0;
  std::vector<Complex> gamma_j;   // gamma_j(kappa) / j!
  std::vector<Complex> g_l;
  std::vector<Complex> lambda_l;  // g_l / Gamma(kappa - l)
};

class ArithmeticFamily;

inline constexpr int kDefaultSeriesOrder = 24;

ExpansionCoefficients g_lambda_coeffs(const ArithmeticFamily& family, int order = kDefaultSeriesOrder);

// Assembles the coefficient arrays from an explicit G(s) zeta(2s)^{-w} series.
ExpansionCoefficients expansion_from_series(double kappa, Complex w, const PowerSeries& g_times_zeta2s,
                                            double bound = kDefaultParameterBound);

}  // namespace delange

#include "delange/power_series_impl.hpp"
