#include "delange/perron.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

#include "delange/zeta.hpp"

namespace delange {

void QuadratureSpec::validate() const {
  if (nodes_per_unit < 1) fail(ErrorCode::ParameterOutOfRange, "nodes_per_unit must be positive");
  if (!(abs_tol > 0.0 && abs_tol <= 1e-3)) fail(ErrorCode::ParameterOutOfRange, "abs_tol must lie in (0, 1e-3]");
}

const char* quadrature_scheme_name(QuadratureScheme s) noexcept {
  return s == QuadratureScheme::trapezoid ? "trapezoid" : "gauss_segment";
}

QuadratureScheme parse_quadrature_scheme(const std::string& name) {
  if (name == "trapezoid") return QuadratureScheme::trapezoid;
  if (name == "gauss" || name == "gauss_segment") return QuadratureScheme::gauss_segment;
  fail(ErrorCode::ParameterOutOfRange, "unknown quadrature scheme '" + name + "'");
}

namespace {

constexpr int kGaussPoints = 10;
using Gauss = boost::math::quadrature::gauss<double, kGaussPoints>;

// Nodes and weights for one refinement level on [a, b].
void make_rule(double a, double b, std::int64_t units, QuadratureScheme scheme, std::vector<double>& t,
               std::vector<double>& w) {
  t.clear();
  w.clear();
  if (scheme == QuadratureScheme::trapezoid) {
    const std::int64_t n = std::max<std::int64_t>(units, 1);
    const double h = (b - a) / double(n);
    for (std::int64_t k = 0; k <= n; ++k) {
      t.push_back(a + h * double(k));
      w.push_back((k == 0 || k == n) ? h / 2.0 : h);
    }
    return;
  }
  const std::int64_t segs = std::max<std::int64_t>((units + kGaussPoints - 1) / kGaussPoints, 1);
  const double h = (b - a) / double(segs);
  const auto& abs = Gauss::abscissa();
  const auto& wts = Gauss::weights();
  for (std::int64_t s = 0; s < segs; ++s) {
    const double mid = a + h * (double(s) + 0.5);
    const double half = h / 2.0;
    // boost stores the nonnegative half of a symmetric rule
    for (std::size_t i = 0; i < abs.size(); ++i) {
      if (abs[i] == 0.0) {
        t.push_back(mid);
        w.push_back(wts[i] * half);
      } else {
        t.push_back(mid - half * abs[i]);
        w.push_back(wts[i] * half);
        t.push_back(mid + half * abs[i]);
        w.push_back(wts[i] * half);
      }
    }
  }
}

using Integrand = std::function<Complex(double)>;

Complex apply_rule(const Integrand& f, const std::vector<double>& t, const std::vector<double>& w, unsigned workers) {
  const std::size_t n = t.size();
  std::vector<Complex> vals(n);
  if (workers <= 1 || n < 4096) {
    for (std::size_t i = 0; i < n; ++i) vals[i] = f(t[i]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned k = 0; k < workers; ++k) {
      pool.emplace_back([&, k] {
        try {
          for (std::size_t i = k; i < n; i += workers) vals[i] = f(t[i]);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  Complex acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * vals[i];
  return acc;
}

// Integral over [a, b] at the requested density and at twice the density.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& q, unsigned workers = 1) {
  const auto units = std::int64_t(std::ceil((b - a) * q.nodes_per_unit));
  std::vector<double> t, w;
  make_rule(a, b, units, q.scheme, t, w);
  const Complex coarse = apply_rule(f, t, w, workers);
  make_rule(a, b, 2 * units, q.scheme, t, w);
  QuadratureResult out;
  out.value = apply_rule(f, t, w, workers);
  out.step_change = std::abs(out.value - coarse);
  out.nodes = std::int64_t(t.size());
  return out;
}

void require_converged(const QuadratureResult& r, const QuadratureSpec& q, const char* what) {
  if (!(r.step_change <= q.abs_tol)) {
    std::ostringstream msg;
    msg << what << ": halving the step changed the integral by " << r.step_change << " > " << q.abs_tol;
    fail(ErrorCode::QuadratureNotConverged, msg.str());
  }
}

unsigned default_workers(unsigned w) { return w ? w : std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

double nudge_height(double T, const std::vector<double>& ordinates) {
  auto it = std::lower_bound(ordinates.begin(), ordinates.end(), T);
  if (it == ordinates.begin() || it == ordinates.end()) return T;
  return 0.5 * (*(it - 1) + *it);
}

PerronResult perron_line_sum(const ArithmeticFamily& family, const Window& win, double T, const QuadratureSpec& q,
                             const PerronOptions& opts) {
  q.validate();
  win.validate();
  if (!family.has_closed_form())
    fail(ErrorCode::NoClosedForm, "family " + family.spec() + " has no closed-form Dirichlet series");
  if (!(win.x >= 2 && win.x <= 100000)) fail(ErrorCode::OutOfValidatedRange, "Perron check needs 2 <= x <= 1e5");
  if (!(T > 0.0 && T <= kZetaMaxIm / 2.0)) fail(ErrorCode::OutOfValidatedRange, "T outside the zeta evaluation box");
  if (!(opts.b_shift > 0.0)) fail(ErrorCode::ParameterOutOfRange, "b_shift must be positive");

  PerronResult out;
  out.T = opts.ordinates.empty() ? T : nudge_height(T, opts.ordinates);
  out.nudged = out.T != T;
  const double x = double(win.x);
  const double lx = std::log(x);
  const double ly = std::log1p(double(win.y) / x);
  out.b = 1.0 + opts.b_shift / lx;
  const double b = out.b;

  auto h = [&](Complex s) { return std::exp(s * lx) * expm1(s * ly) / s; };
  const unsigned workers = default_workers(opts.workers);
  QuadratureResult r;
  if (family.real_valued()) {
    // F(conj s) = conj F(s): (1/pi) int_0^T Re[F h] dt
    r = integrate(
        [&](double t) {
          Complex s(b, t);
          return Complex((family.closed_form_F(s) * h(s)).real() / std::numbers::pi, 0.0);
        },
        0.0, out.T, q, workers);
  } else {
    r = integrate(
        [&](double t) {
          Complex s(b, t);
          return family.closed_form_F(s) * h(s) / (2.0 * std::numbers::pi);
        },
        -out.T, out.T, q, workers);
  }
  require_converged(r, q, "Perron integral");
  out.value = r.value;
  out.step_change = r.step_change;
  out.nodes = r.nodes;
  return out;
}

namespace {

// Loop of radius r about 1 with legs on both sides of the cut to 1/2 + eta,
// for the integrand (s-1)^a g(s).
LoopResult loop_integral(double a, const std::function<Complex(Complex)>& g, double r, double eta,
                         const QuadratureSpec& q) {
  q.validate();
  const double R = 0.5 - eta;
  if (!(r > 0.0 && r < R)) fail(ErrorCode::ParameterOutOfRange, "loop radius must lie in (0, 1/2 - eta)");
  // legs: -sin(pi a)/pi int_r^R rho^a g(1 - rho) d rho
  const Complex sp = std::sin(std::numbers::pi * a);
  const double sin_pa = (a == std::floor(a)) ? 0.0 : sp.real();
  QuadratureResult legs;
  if (sin_pa != 0.0)
    legs = integrate([&](double rho) { return std::pow(rho, a) * g(Complex(1.0 - rho, 0.0)); }, r, R, q);
  legs.value *= -sin_pa / std::numbers::pi;
  legs.step_change *= std::abs(sin_pa) / std::numbers::pi;
  // circle s = 1 + r e^{i th}: (1/2 pi) int (r e^{i th})^a g(s) r e^{i th} d th;
  // Gauss segments because the integrand is not periodic for noninteger a
  QuadratureSpec qc = q;
  qc.scheme = QuadratureScheme::gauss_segment;
  QuadratureResult circ = integrate(
      [&](double th) {
        Complex e(std::cos(th), std::sin(th));
        Complex z = r * e;
        return std::pow(r, a) * Complex(std::cos(a * th), std::sin(a * th)) * g(1.0 + z) * z /
               (2.0 * std::numbers::pi);
      },
      -std::numbers::pi, std::numbers::pi, qc);
  LoopResult out;
  out.value = legs.value + circ.value;
  out.step_change = legs.step_change + circ.step_change;
  out.nodes = legs.nodes + circ.nodes;
  return out;
}

}  // namespace

LoopResult hankel_main_term(double u, double kappa, int l, double r, const QuadratureSpec& q, double eta) {
  if (!(u >= 100.0)) fail(ErrorCode::ParameterOutOfRange, "u must be at least 100");
  const double L = std::log(u);
  const double a = double(l) - kappa;
  LoopResult out = loop_integral(a, [&](Complex s) { return std::exp((s - 1.0) * L); }, r, eta, q);
  QuadratureSpec check = q;
  check.abs_tol = q.abs_tol * std::max(1.0, std::pow(L, kappa - 1.0 - l));
  if (!(out.step_change <= check.abs_tol)) {
    std::ostringstream msg;
    msg << "Hankel loop: halving the step changed the integral by " << out.step_change;
    fail(ErrorCode::QuadratureNotConverged, msg.str());
  }
  out.reference = std::pow(L, kappa - 1.0 - l) * recip_gamma(Complex(kappa - l, 0.0)).real();
  out.rel_dev = out.reference == 0.0 ? std::abs(out.value) : std::abs(out.value - out.reference) / std::abs(out.reference);
  return out;
}

LoopResult ml_integral_check(double kappa, int l, const Window& win, const QuadratureSpec& q, double eta) {
  win.validate();
  if (!(win.y <= win.x && win.x >= 100)) fail(ErrorCode::InvalidWindow, "M_l check needs y <= x and x >= 100");
  const double x = double(win.x);
  const double lx = std::log(x);
  const double ly = std::log1p(double(win.y) / x);
  const double a = double(l) - kappa;
  auto h = [&](Complex s) { return std::exp(s * lx) * expm1(s * ly) / s; };
  LoopResult out = loop_integral(a, h, 1.0 / lx, eta, q);
  const double ref = double(win.y) * std::pow(lx, kappa - 1.0 - l) * recip_gamma(Complex(kappa - l, 0.0)).real();
  // tolerance relative to the natural size y (log x)^{kappa-1-l}
  const double scale = double(win.y) * std::pow(lx, kappa - 1.0 - l);
  if (!(out.step_change <= q.abs_tol * std::max(1.0, scale))) {
    std::ostringstream msg;
    msg << "M_l loop: halving the step changed the integral by " << out.step_change;
    fail(ErrorCode::QuadratureNotConverged, msg.str());
  }
  out.reference = ref;
  out.rel_dev = ref == 0.0 ? std::abs(out.value) / scale : std::abs(out.value - ref) / std::abs(ref);
  return out;
}

}  // namespace delange
