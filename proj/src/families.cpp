#include "delange/families.hpp"

#include <algorithm>
#include <boost/math/special_functions/expint.hpp>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "delange/sieve.hpp"

namespace delange {

struct ArithmeticFamily::Cache {
  std::mutex mu;
  std::map<int, PowerSeries> series;
};

void TypePParams::validate() const {
  auto bad = [](const std::string& what) { fail(ErrorCode::ParameterOutOfRange, what); };
  if (!(B > 0.0) || !std::isfinite(B)) bad("B must be positive");
  if (!(kappa > 0.0 && kappa <= B)) bad("kappa must lie in (0, B]");
  if (!(std::abs(w) <= B)) bad("|w| must not exceed B");
  if (!(alpha_growth > 0.0)) bad("alpha must be positive");
  if (!(delta >= 0.0)) bad("delta must be nonnegative");
  if (!(A >= 0.0)) bad("A must be nonnegative");
  if (!(M > 0.0)) bad("M must be positive");
}

ArithmeticFamily::ArithmeticFamily(std::string name, std::string spec, LocalFactor local_factor,
                                   TypePParams params, SeriesProvider series,
                                   std::optional<DirichletFunction> closed_form, bool real_valued)
    : name_(std::move(name)),
      spec_(std::move(spec)),
      local_factor_(std::move(local_factor)),
      params_(params),
      series_(std::move(series)),
      closed_form_(std::move(closed_form)),
      real_valued_(real_valued),
      cache_(std::make_shared<Cache>()) {
  params_.validate();
}

PowerSeries ArithmeticFamily::g_times_zeta2s_series(int order) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->series.find(order);
    if (it != cache_->series.end()) return it->second;
  }
  PowerSeries s = series_ ? series_(order) : g_series_by_euler_product(*this, order).series;
  std::lock_guard lock(cache_->mu);
  cache_->series.emplace(order, s);
  return s;
}

Complex ArithmeticFamily::closed_form_F(Complex s) const {
  if (!closed_form_) fail(ErrorCode::NoClosedForm, "family " + spec_ + " has no closed-form Dirichlet series");
  return (*closed_form_)(s);
}

ArithmeticFamily ArithmeticFamily::with_params(const TypePParams& params) const {
  ArithmeticFamily out = *this;
  out.params_.alpha_growth = params.alpha_growth;
  out.params_.delta = params.delta;
  out.params_.A = params.A;
  out.params_.B = params.B;
  out.params_.M = params.M;
  out.params_.validate();
  return out;
}

namespace {

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double real_parameter(Complex parameter, const char* family) {
  if (parameter.imag() != 0.0 || !std::isfinite(parameter.real()))
    fail(ErrorCode::ParameterOutOfRange, std::string(family) + " needs a real parameter");
  return parameter.real();
}

bool is_integer(double v) { return std::floor(v) == v; }

Complex zeta_power(Complex s, double k) {
  if (is_integer(k) && k <= 64) {
    Complex z = zeta(s);
    Complex out = 1.0;
    for (int i = 0; i < int(k); ++i) out *= z;
    return out;
  }
  return std::exp(k * log_zeta(s));
}

ArithmeticFamily make_constant_one() {
  TypePParams p;
  p.kappa = 1.0;
  p.alpha_growth = 1.0;
  return ArithmeticFamily(
      "constant_one", "one", [](std::uint64_t, int) { return Complex(1.0); }, p,
      [](int order) { return PowerSeries::constant(order, 1.0); }, DirichletFunction([](Complex s) { return zeta(s); }),
      true);
}

ArithmeticFamily make_divisor(double kappa) {
  TypePParams p;
  p.kappa = kappa;
  p.alpha_growth = kappa;
  auto local = [kappa](std::uint64_t, int a) {
    double v = 1.0;
    for (int i = 1; i <= a; ++i) v *= (kappa + i - 1) / i;
    return Complex(v);
  };
  return ArithmeticFamily(
      "divisor_kappa", "divisor:" + format_number(kappa), local, p,
      [](int order) { return PowerSeries::constant(order, 1.0); },
      DirichletFunction([kappa](Complex s) { return zeta_power(s, kappa); }), true);
}

ArithmeticFamily make_omega(double z) {
  if (!(z > 0.0)) fail(ErrorCode::ParameterOutOfRange, "omega_power needs z > 0");
  TypePParams p;
  p.kappa = z;
  p.alpha_growth = z;
  std::optional<DirichletFunction> closed;
  if (z == 1.0) closed = [](Complex s) { return zeta(s); };
  if (z == 2.0) closed = [](Complex s) { Complex zs = zeta(s); return zs * zs / zeta(2.0 * s); };
  return ArithmeticFamily(
      "omega_power", "omega:" + format_number(z), [z](std::uint64_t, int) { return Complex(z); }, p, {}, closed,
      true);
}

ArithmeticFamily make_squarefree(double z) {
  if (!(z > 0.0)) fail(ErrorCode::ParameterOutOfRange, "squarefree_omega_power needs z > 0");
  TypePParams p;
  p.kappa = z;
  p.w = z * (z + 1.0) / 2.0;
  p.alpha_growth = z;
  auto local = [z](std::uint64_t, int a) { return a == 1 ? Complex(z) : Complex(0.0); };
  SeriesProvider series;
  std::optional<DirichletFunction> closed;
  if (z == 1.0) {
    series = [](int order) { return zeta2s_power_series(1.0, order); };
    closed = [](Complex s) { return zeta(s) / zeta(2.0 * s); };
  }
  return ArithmeticFamily("squarefree_omega_power", z == 1.0 ? "sqfree" : "sqfree:" + format_number(z), local, p,
                          series, closed, true);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return char(std::tolower(c)); });
  return out;
}

}  // namespace

ArithmeticFamily builtin_family(std::string_view name, Complex parameter) {
  if (name == "constant_one") return make_constant_one();
  if (name == "divisor_kappa") return make_divisor(real_parameter(parameter, "divisor_kappa"));
  if (name == "omega_power") return make_omega(real_parameter(parameter, "omega_power"));
  if (name == "squarefree_omega_power")
    return make_squarefree(real_parameter(parameter, "squarefree_omega_power"));
  fail(ErrorCode::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

ArithmeticFamily parse_family(std::string_view spec) {
  std::string_view head = spec;
  std::optional<double> param;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    head = spec.substr(0, colon);
    std::string_view tail = spec.substr(colon + 1);
    double v = 0.0;
    auto res = std::from_chars(tail.data(), tail.data() + tail.size(), v);
    if (res.ec != std::errc() || res.ptr != tail.data() + tail.size())
      fail(ErrorCode::ParameterOutOfRange, "bad family parameter '" + std::string(tail) + "'");
    param = v;
  }
  std::string name = lower(head);
  if (name == "one" || name == "constant_one") {
    if (param) fail(ErrorCode::ParameterOutOfRange, "constant_one takes no parameter");
    return make_constant_one();
  }
  if (name == "divisor" || name == "divisor_kappa" || name == "d") return make_divisor(param.value_or(2.0));
  if (name == "omega" || name == "omega_power") return make_omega(param.value_or(2.0));
  if (name == "sqfree" || name == "squarefree" || name == "squarefree_omega_power" || name == "mu2")
    return make_squarefree(param.value_or(1.0));
  fail(ErrorCode::UnknownFamily, "unknown family '" + std::string(spec) + "'");
}

namespace {

// log D_p(p^{-s}) + kappa log(1 - p^{-s}) + a log(1 - p^{-2s}) as a series
// in X = s - 1, where D_p(u) = sum_a f(p^a) u^a. magnitude collects the
// absolute size of the summed pieces for a rounding estimate.
PowerSeries local_log_series(const ArithmeticFamily& family, std::uint64_t p, int order, Complex a2,
                             std::vector<double>& magnitude) {
  const double lp = std::log(double(p));
  const double kappa = family.params().kappa;
  const int terms = int(std::ceil((2.0 * order + 60.0) / lp)) + 1;

  PowerSeries d = PowerSeries::constant(order, 1.0);
  PowerSeries l(order);
  for (int a = 1; a <= terms; ++a) {
    Complex fa = family.local_factor(p, a);
    // p^{-a s} = p^{-a} exp(-a log p X)
    double t = std::exp(-a * lp);
    for (int j = 0; j <= order; ++j) {
      if (fa != Complex(0.0)) d[j] += fa * t;
      l[j] -= t / a;
      t *= -a * lp / (j + 1);
    }
  }
  if (d[0] == Complex(0.0)) {
    std::ostringstream msg;
    msg << "local factor vanishes at s = 1 for p = " << p;
    fail(ErrorCode::NonconvergentProduct, msg.str());
  }
  PowerSeries out = ps_log(d);
  for (int j = 0; j <= order; ++j) magnitude[j] += std::abs(out[j]) + std::abs(kappa * l[j]);
  out += kappa * l;
  if (a2 != Complex(0.0)) {
    PowerSeries l2(order);
    for (int k = 1; 2 * k <= terms; ++k) {
      double t = std::exp(-2 * k * lp);
      for (int j = 0; j <= order; ++j) {
        l2[j] -= t / k;
        t *= -2 * k * lp / (j + 1);
      }
    }
    for (int j = 0; j <= order; ++j) magnitude[j] += std::abs(a2 * l2[j]);
    out += a2 * l2;
  }
  return out;
}

// sum_{p > P} c p^{-ks} per Taylor coefficient, with the prime sum replaced
// by int dt/log t:  c (-k)^j/j! Gamma(j, (k-1) log P) / (k-1)^j.
PowerSeries prime_tail(Complex c, int k, double log_cutoff, int order) {
  PowerSeries tail(order);
  if (c == Complex(0.0)) return tail;
  const double y = (k - 1) * log_cutoff;
  tail[0] = c * boost::math::expint(1, y);
  // Gamma(j, y)/j! = e^{-y}/j sum_{m<j} y^m/m!
  double partial = 0.0, term = 1.0, scale = 1.0;
  for (int j = 1; j <= order; ++j) {
    partial += term;
    term *= y / j;
    scale *= -double(k) / double(k - 1);
    tail[j] = c * scale * std::exp(-y) * partial / double(j);
  }
  return tail;
}

}  // namespace

EulerProductSeries g_series_by_euler_product(const ArithmeticFamily& family, int order,
                                             std::uint64_t prime_cutoff) {
  if (prime_cutoff < 1000) fail(ErrorCode::ParameterOutOfRange, "prime_cutoff must be at least 1000");
  if (order < 0) fail(ErrorCode::ParameterOutOfRange, "series order must be nonnegative");
  const double kappa = family.params().kappa;
  const auto primes = primes_up_to(prime_cutoff);
  const std::uint64_t half = prime_cutoff / 2;

  // Local logs are (f1 - kappa) u + c2 u^2 + c3 u^3 + ...; the u^2 part is
  // carried by zeta(2s)^{c2} exactly, using c2 at the cutoff prime.
  auto low_order = [&](std::uint64_t p, Complex& c1, Complex& c2, Complex& c3) {
    Complex f1 = family.local_factor(p, 1), f2 = family.local_factor(p, 2), f3 = family.local_factor(p, 3);
    c1 = f1 - kappa;
    c2 = f2 - f1 * f1 / 2.0 - kappa / 2.0;
    c3 = f3 - f1 * f2 + f1 * f1 * f1 / 3.0 - kappa / 3.0;
  };
  Complex c1, c2_ref, c3;
  low_order(primes.back(), c1, c2_ref, c3);

  PowerSeries log_sum(order);
  std::vector<double> magnitude(std::size_t(order) + 1, 0.0);
  Complex half_constant = 0.0;
  double c1_max = 0.0;
  Complex c2_resid = 0.0, c3_max = 0.0;
  for (std::uint64_t p : primes) {
    if (p > half) {
      Complex a, b, c;
      low_order(p, a, b, c);
      c1_max = std::max(c1_max, std::abs(a));
      if (std::abs(b - c2_ref) > std::abs(c2_resid)) c2_resid = b - c2_ref;
      if (std::abs(c) > std::abs(c3_max)) c3_max = c;
    }
    log_sum += local_log_series(family, p, order, c2_ref, magnitude);
    if (p <= half) half_constant = log_sum[0];
  }
  if (c1_max > 1e-9) {
    std::ostringstream msg;
    msg << "f(p) - kappa = " << c1_max << " near the cutoff; the Euler product for G diverges";
    fail(ErrorCode::NonconvergentProduct, msg.str());
  }

  const double x = std::log(double(prime_cutoff));
  PowerSeries tail = prime_tail(c2_resid, 2, x, order) + prime_tail(c3_max, 3, x, order);

  // Cauchy check between P/2 and P on the constant term.
  const double xh = std::log(double(half));
  const double step = std::abs(log_sum[0] - half_constant);
  const double expected =
      std::abs(c2_resid) * boost::math::expint(1, xh) + std::abs(c3_max) * boost::math::expint(1, 2.0 * xh);
  if (step > 100.0 * expected + 1e-12) {
    std::ostringstream msg;
    msg << "partial Euler products moved by " << step << " between " << half << " and " << prime_cutoff;
    fail(ErrorCode::NonconvergentProduct, msg.str());
  }

  const PowerSeries zeta2s = zeta2s_power_series(-c2_ref, order);
  const PowerSeries without_tail = ps_mul(ps_exp(log_sum), zeta2s);
  EulerProductSeries out;
  out.series = ps_mul(ps_exp(log_sum + tail), zeta2s);
  out.tail_bound.resize(std::size_t(order) + 1);
  constexpr double kRounding = 4.0 * std::numeric_limits<double>::epsilon();
  for (int j = 0; j <= order; ++j)
    out.tail_bound[j] = std::abs(out.series[j] - without_tail[j]) + kRounding * magnitude[j] * std::abs(out.series[0]);
  out.prime_cutoff = prime_cutoff;
  return out;
}

Complex euler_product_G(const ArithmeticFamily& family, Complex s, std::uint64_t prime_cutoff) {
  if (!(s.real() > 0.5)) fail(ErrorCode::OutOfValidatedRange, "Euler product for G needs Re s > 1/2");
  const double kappa = family.params().kappa;
  const Complex w = family.params().w;
  Complex log_sum = 0.0;
  for (std::uint64_t p : primes_up_to(prime_cutoff)) {
    const double lp = std::log(double(p));
    Complex u = std::exp(-s * lp);
    const int terms = int(std::ceil(40.0 / (s.real() * lp))) + 1;
    Complex d = 1.0, ua = 1.0;
    for (int a = 1; a <= terms; ++a) {
      ua *= u;
      d += family.local_factor(p, a) * ua;
    }
    log_sum += std::log(d) + kappa * std::log(1.0 - u);
  }
  Complex g = std::exp(log_sum);
  if (w != Complex(0.0)) g *= std::exp(w * log_zeta(2.0 * s));
  return g;
}

PowerSeries zeta2s_power_series(Complex w, int order) {
  if (w == Complex(0.0)) return PowerSeries::constant(order, 1.0);
  const EvalPrecision prec{};
  if (w.imag() == 0.0 && w.real() > 0.0 && is_integer(w.real()) && w.real() <= 64) {
    // 1/zeta(2s) is analytic for |s - 1| < 2 (first zero of zeta(2s) at s = -1)
    PowerSeries inv = taylor_by_cauchy(
        [&](Complex s) {
          Complex t = 2.0 * s;
          return t == Complex(1.0) ? Complex(0.0) : 1.0 / detail::zeta_unchecked(t, prec);
        },
        1.0, 1.5, order, 256);
    PowerSeries out = inv;
    for (int i = 1; i < int(w.real()); ++i) out = ps_mul(out, inv);
    return out;
  }
  // zeta(2s) has its pole at s = 1/2
  PowerSeries z2 = taylor_by_cauchy([&](Complex s) { return detail::zeta_unchecked(2.0 * s, prec); }, 1.0, 0.4,
                                     order, 256);
  return ps_exp(-w * ps_log(z2));
}

Complex f_value(const ArithmeticFamily& family, std::span<const PrimePower> factorization) {
  std::vector<std::uint64_t> seen;
  seen.reserve(factorization.size());
  Complex v = 1.0;
  for (const auto& pp : factorization) {
    if (pp.exponent < 1) fail(ErrorCode::ParameterOutOfRange, "exponents must be at least 1");
    seen.push_back(pp.prime);
    v *= family.local_factor(pp.prime, pp.exponent);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    fail(ErrorCode::DuplicatePrime, "factorization repeats a prime");
  return v;
}

double growth_constant_pointwise(const ArithmeticFamily& family, std::uint64_t n_max, double eps) {
  double worst = 0.0;
  for_each_factorization(Window{0, n_max}, [&](std::uint64_t n, std::span<const PrimePower> fac) {
    double v = std::abs(f_value(family, fac)) / std::pow(double(n), eps);
    worst = std::max(worst, v);
  });
  return worst;
}

double growth_constant_dirichlet(const ArithmeticFamily& family, std::uint64_t n_max, double sigma) {
  if (!(sigma > 1.0)) fail(ErrorCode::ParameterOutOfRange, "sigma must exceed 1");
  std::vector<double> terms;
  terms.reserve(n_max);
  for_each_factorization(Window{0, n_max}, [&](std::uint64_t n, std::span<const PrimePower> fac) {
    terms.push_back(std::abs(f_value(family, fac)) * std::pow(double(n), -sigma));
  });
  // smallest first
  double acc = 0.0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) acc += *it;
  return acc * std::pow(sigma - 1.0, family.params().alpha_growth);
}

}  // namespace delange
