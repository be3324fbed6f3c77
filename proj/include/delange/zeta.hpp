#pragma once

// Numeric substrate: zeta, reciprocal gamma, Stieltjes constants and the
// principal-branch power used by every other module.

#include <span>

#include "delange/error.hpp"

namespace delange {

struct EvalPrecision {
  // Number of Bernoulli corrections in the Euler-Maclaurin tail.
  int euler_maclaurin_terms = 20;
  // Minimum length of the directly summed head; the evaluator lengthens it
  // as |s| grows until the last correction falls below target_abs_error.
  int tail_cutoff = 16;
  double target_abs_error = 1e-12;

  void validate() const;
};

// Validated box for the public evaluator: Re(s) > -1, |Im(s)| <= 1e5.
inline constexpr double kZetaMinRe = -1.0;
inline constexpr double kZetaMaxIm = 1e5;

Complex zeta(Complex s, const EvalPrecision& prec = {});

// log zeta(s) on the branch that is real at s = 2, continued along the
// vertical 2 -> 2+it and then horizontally to s. Throws if the horizontal
// path passes too close to a zero.
Complex log_zeta(Complex s, const EvalPrecision& prec = {});

inline constexpr int kMaxStieltjesOrder = 40;
// Orders available to the series engine (beyond the public Stieltjes range).
inline constexpr int kMaxSeriesOrder = 64;

double stieltjes(int n);

// Entire 1/Gamma; exactly 0 at z = 0, -1, -2, ...
Complex recip_gamma(Complex z);
Complex gamma(Complex z);
Complex log_gamma(Complex z);

// exp(exponent * Log(base)) with the principal Log.
Complex principal_pow(Complex base, Complex exponent);

// exp(z) - 1 without cancellation for small |z|.
Complex expm1(Complex z);

namespace detail {

// Euler-Maclaurin / functional-equation evaluator without the range checks.
Complex zeta_unchecked(Complex s, const EvalPrecision& prec);

// zeta(s) - 1/(s-1), an entire function, evaluated without cancellation near
// s = 1.
Complex zeta_minus_pole(Complex s, const EvalPrecision& prec);

// Taylor coefficients c_n of zeta(s) - 1/(s-1) about s = 1, n < kMaxSeriesOrder.
// c_n = (-1)^n gamma_n / n!.
std::span<const double> laurent_regular_coefficients();

}  // namespace detail

}  // namespace delange
