#include "delange/zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace delange {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} / (2k)! for k = 1..30.
constexpr std::array<double, 30> kBernoulliOverFactorial = {
    0.083333333333333333,    -0.0013888888888888889,  3.3068783068783069e-5,
    -8.2671957671957672e-7,  2.0876756987868099e-8,   -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225829e-13, 8.5860620562778446e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18,  -1.3954464685812523e-19,
    3.5347070396294675e-21,  -8.9535174270375469e-23, 2.2679524523376831e-24,
    -5.7447906688722024e-26, 1.4551724756148649e-27,  -3.6859949406653102e-29,
    9.3367342570950447e-31,  -2.3650224157006299e-32, 5.9906717624821343e-34,
    -1.5174548844682903e-35, 3.8437581254541882e-37,  -9.736353072646691e-39,
    2.466247044200681e-40,   -6.2470767418207437e-42, 1.5824030244644914e-43,
    -4.008273685948936e-45,  1.0153075855569556e-46,  -2.5718041582418717e-48,
};

// Lanczos, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// sin(pi a) and cos(pi a) for real a with exact zeros at the integers.
void sincos_pi(double a, double& s, double& c) {
  double r = std::fmod(a, 2.0);
  if (r < 0) r += 2.0;
  if (r == 0.0) { s = 0.0; c = 1.0; return; }
  if (r == 0.5) { s = 1.0; c = 0.0; return; }
  if (r == 1.0) { s = 0.0; c = -1.0; return; }
  if (r == 1.5) { s = -1.0; c = 0.0; return; }
  s = std::sin(kPi * r);
  c = std::cos(kPi * r);
}

Complex sin_pi(Complex z) {
  double s, c;
  sincos_pi(z.real(), s, c);
  double b = kPi * z.imag();
  return {s * std::cosh(b), c * std::sinh(b)};
}

Complex lanczos_log_gamma_right(Complex z) {
  // Re(z) >= 0.5
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + double(i));
  Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// Sum_{n<N} n^{-s}, smallest terms first.
Complex head_sum(Complex s, long n_terms) {
  Complex acc = 0.0;
  for (long n = n_terms - 1; n >= 1; --n) {
    double ln = std::log(double(n));
    double mag = std::exp(-s.real() * ln);
    double ph = -s.imag() * ln;
    acc += Complex(mag * std::cos(ph), mag * std::sin(ph));
  }
  return acc;
}

// Euler-Maclaurin with automatic head length. When minus_pole is set the
// singular part 1/(s-1) is removed analytically.
Complex euler_maclaurin(Complex s, const EvalPrecision& prec, bool minus_pole) {
  const int K = prec.euler_maclaurin_terms;
  double need = std::abs(s + double(2 * K)) / kPi;
  long N = std::max<long>(prec.tail_cutoff, long(std::ceil(need)) + 1);
  for (int attempt = 0; attempt < 8; ++attempt, N *= 2) {
    const double lnN = std::log(double(N));
    Complex n_pow = std::exp(-s * lnN);  // N^{-s}
    Complex total = head_sum(s, N) + 0.5 * n_pow;
    Complex one_minus_s = 1.0 - s;
    if (minus_pole) {
      Complex w = one_minus_s * lnN;
      Complex ratio = (std::abs(w) < 1e-300) ? Complex(1.0) : expm1(w) / w;
      total += -lnN * ratio;
    } else {
      total += double(N) * n_pow / (s - 1.0);
    }
    // Corrections B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}.
    Complex rising = s;          // s(s+1)...(s+2k-2), starts at k = 1
    Complex power = n_pow / double(N);
    double last = 0.0;
    double prev = HUGE_VAL;
    bool diverging = false;
    for (int k = 1; k <= K; ++k) {
      Complex term = kBernoulliOverFactorial[k - 1] * rising * power;
      total += term;
      last = std::abs(term);
      if (k > 2 && last > prev) diverging = true;
      prev = last;
      rising *= (s + double(2 * k - 1)) * (s + double(2 * k));
      power /= double(N) * double(N);
    }
    if (!diverging && last <= 0.1 * prec.target_abs_error) return total;
  }
  std::ostringstream msg;
  msg << "Euler-Maclaurin did not reach target accuracy at s = " << s;
  fail(ErrorCode::OutOfValidatedRange, msg.str());
}

Complex functional_equation(Complex s, const EvalPrecision& prec) {
  // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s), Re(s) < 0.
  Complex reflected = euler_maclaurin(1.0 - s, prec, false);
  Complex factor = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi) +
                            lanczos_log_gamma_right(1.0 - s));
  return factor * sin_pi(0.5 * s) * reflected;
}

// Solves r log(r / 2pi) = n for r >= 2pi.
double stieltjes_radius(int n) {
  double r = 2.0 * kPi;
  if (n == 0) return r;
  r = std::max(r, double(n));
  for (int it = 0; it < 60; ++it) {
    double f = r * std::log(r / (2.0 * kPi)) - n;
    double df = std::log(r / (2.0 * kPi)) + 1.0;
    double step = f / df;
    r -= step;
    if (std::abs(step) < 1e-12 * r) break;
  }
  return r;
}

std::vector<double> compute_laurent_coefficients() {
  // Cauchy integral of the entire function zeta(s) - 1/(s-1) on circles whose
  // radius balances n!/r^n against the growth of zeta on the left.
  EvalPrecision prec;
  prec.target_abs_error = 1e-16;
  prec.euler_maclaurin_terms = 24;
  constexpr int M = 256;
  std::vector<double> out(kMaxSeriesOrder);
  for (int n = 0; n < kMaxSeriesOrder; ++n) {
    const double r = stieltjes_radius(n);
    double acc = 0.0;
    for (int k = 0; k <= M / 2; ++k) {
      double theta = 2.0 * kPi * k / M;
      Complex e(std::cos(theta), std::sin(theta));
      Complex s = 1.0 + r * e;
      Complex g = detail::zeta_minus_pole(s, prec);
      double w = (k == 0 || k == M / 2) ? 1.0 : 2.0;
      acc += w * (g * std::exp(Complex(0.0, -n * theta))).real();
    }
    out[n] = acc / M / std::pow(r, n);
  }
  return out;
}

}  // namespace

void EvalPrecision::validate() const {
  if (euler_maclaurin_terms < 1 || euler_maclaurin_terms > int(kBernoulliOverFactorial.size()))
    fail(ErrorCode::ParameterOutOfRange, "euler_maclaurin_terms must be in [1, 30]");
  if (tail_cutoff < 1) fail(ErrorCode::ParameterOutOfRange, "tail_cutoff must be positive");
  if (!(target_abs_error > 0.0 && target_abs_error <= 1e-6))
    fail(ErrorCode::ParameterOutOfRange, "target_abs_error must lie in (0, 1e-6]");
}

Complex expm1(Complex z) {
  double x = z.real(), y = z.imag();
  if (y == 0.0) return {std::expm1(x), 0.0};
  double sh = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * sh * sh, std::exp(x) * std::sin(y)};
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) fail(ErrorCode::ParameterOutOfRange, "log_gamma at a pole");
  if (z.real() < 0.5) {
    return std::log(kPi) - std::log(sin_pi(z)) - lanczos_log_gamma_right(1.0 - z);
  }
  return lanczos_log_gamma_right(z);
}

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) fail(ErrorCode::ParameterOutOfRange, "gamma at a pole");
  if (z.real() < 0.5) return kPi / (sin_pi(z) * std::exp(lanczos_log_gamma_right(1.0 - z)));
  return std::exp(lanczos_log_gamma_right(z));
}

Complex recip_gamma(Complex z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.imag() == 0.0 && z.real() >= 1.0 && z.real() <= 20.0 && z.real() == std::floor(z.real())) {
    double f = 1.0;
    for (int k = 2; k < int(z.real()); ++k) f *= k;
    return 1.0 / f;
  }
  if (z.real() < 0.5) return sin_pi(z) * std::exp(lanczos_log_gamma_right(1.0 - z)) / kPi;
  return std::exp(-lanczos_log_gamma_right(z));
}

Complex principal_pow(Complex base, Complex exponent) {
  if (base == Complex(0.0)) fail(ErrorCode::ZeroBase, "principal_pow with zero base");
  if (base.imag() == 0.0 && base.real() > 0.0 && exponent.imag() == 0.0)
    return {std::pow(base.real(), exponent.real()), 0.0};
  return std::exp(exponent * std::log(base));
}

namespace detail {

Complex zeta_unchecked(Complex s, const EvalPrecision& prec) {
  if (s.real() < -1.0) return functional_equation(s, prec);
  return euler_maclaurin(s, prec, false);
}

Complex zeta_minus_pole(Complex s, const EvalPrecision& prec) {
  if (s.real() < -1.0) return functional_equation(s, prec) - 1.0 / (s - 1.0);
  return euler_maclaurin(s, prec, true);
}

std::span<const double> laurent_regular_coefficients() {
  static const std::vector<double> table = compute_laurent_coefficients();
  return table;
}

}  // namespace detail

Complex zeta(Complex s, const EvalPrecision& prec) {
  prec.validate();
  if (s == Complex(1.0)) fail(ErrorCode::PoleAtOne, "zeta has a pole at s = 1");
  if (!(s.real() > kZetaMinRe) || !(std::abs(s.imag()) <= kZetaMaxIm) || !std::isfinite(s.real())) {
    std::ostringstream msg;
    msg << "s = " << s << " lies outside the validated box Re(s) > -1, |Im(s)| <= 1e5";
    fail(ErrorCode::OutOfValidatedRange, msg.str());
  }
  return detail::zeta_unchecked(s, prec);
}

Complex log_zeta(Complex s, const EvalPrecision& prec) {
  Complex z = zeta(s, prec);
  if (s.real() >= 2.0) return std::log(z);
  // Re = 2 keeps |zeta - 1| < 0.65, so the principal log is continuous there.
  Complex start(2.0, s.imag());
  Complex prev = zeta(start, prec);
  double arg = std::arg(prev);
  const double span = 2.0 - s.real();
  const int steps = std::max(8, int(std::ceil(span / 0.01)));
  for (int k = 1; k <= steps; ++k) {
    Complex p(2.0 - span * k / steps, s.imag());
    Complex cur = (k == steps) ? z : zeta(p, prec);
    if (std::abs(cur) < 1e-10) fail(ErrorCode::OutOfValidatedRange, "log_zeta continuation path meets a zero");
    arg += std::arg(cur / prev);
    prev = cur;
  }
  return {std::log(std::abs(z)), arg};
}

double stieltjes(int n) {
  if (n < 0 || n > kMaxStieltjesOrder) {
    fail(ErrorCode::OrderTooHigh, "Stieltjes constants are tabulated for 0 <= n <= 40");
  }
  double c = detail::laurent_regular_coefficients()[n];
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) factorial *= k;
  return (n % 2 == 0 ? 1.0 : -1.0) * factorial * c;
}

}  // namespace delange
