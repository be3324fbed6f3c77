#pragma once

// Quadrature cross-checks: truncated Perron line integral and Hankel loop
// integrals around s = 1.

#include <cstdint>
#include <string>
#include <vector>

#include "delange/families.hpp"
#include "delange/sieve.hpp"

namespace delange {

enum class QuadratureScheme { trapezoid, gauss_segment };

struct QuadratureSpec {
  int nodes_per_unit = 200;
  QuadratureScheme scheme = QuadratureScheme::gauss_segment;
  double abs_tol = 1e-3;

  void validate() const;
};

const char* quadrature_scheme_name(QuadratureScheme s) noexcept;
QuadratureScheme parse_quadrature_scheme(const std::string& name);

struct PerronOptions {
  // sorted ordinates; when given, T is moved to the midpoint of the
  // neighbouring ordinates
  std::vector<double> ordinates;
  // b = 1 + b_shift / log x
  double b_shift = 20.0;
  unsigned workers = 0;
};

struct QuadratureResult {
  Complex value = 0.0;
  double step_change = 0.0;  // |I(h) - I(h/2)|
  std::int64_t nodes = 0;    // at the finer level
};

struct PerronResult {
  Complex value = 0.0;
  double T = 0.0;  // height actually used
  bool nudged = false;
  double b = 0.0;
  double step_change = 0.0;
  std::int64_t nodes = 0;
};

// (1/2 pi i) int_{b-iT}^{b+iT} F(s) ((x+y)^s - x^s)/s ds
PerronResult perron_line_sum(const ArithmeticFamily& family, const Window& win, double T, const QuadratureSpec& q = {},
                             const PerronOptions& opts = {});

// Midpoint between the tabulated ordinates around T (T itself if outside).
double nudge_height(double T, const std::vector<double>& ordinates);

struct LoopResult {
  Complex value = 0.0;
  double reference = 0.0;
  double rel_dev = 0.0;
  double step_change = 0.0;
  std::int64_t nodes = 0;
};

inline constexpr double kDefaultEta = 0.05;

// (1/2 pi i) int over the loop of radius r about 1 with legs to Re s = 1/2 + eta
// of (s-1)^{l-kappa} u^{s-1} ds, against (log u)^{kappa-1-l}/Gamma(kappa-l).
LoopResult hankel_main_term(double u, double kappa, int l, double r, const QuadratureSpec& q = {},
                            double eta = kDefaultEta);

// Same loop with ((x+y)^s - x^s)/s and r = 1/log x, against
// y (log x)^{kappa-1-l}/Gamma(kappa-l).
LoopResult ml_integral_check(double kappa, int l, const Window& win, const QuadratureSpec& q = {},
                             double eta = kDefaultEta);

}  // namespace delange
