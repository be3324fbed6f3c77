#include <cmath>
#include <functional>
#include <numbers>

#include "doctest.h"
#include "delange/families.hpp"
#include "delange/perron.hpp"
#include "delange/sieve.hpp"

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

// b = 1 + 1/log x keeps x^b small enough for double quadrature
QuadratureSpec light() {
  QuadratureSpec q;
  q.nodes_per_unit = 40;
  return q;
}

PerronOptions near_line() {
  PerronOptions o;
  o.b_shift = 1.0;
  return o;
}

}  // namespace

TEST_CASE("quadrature spec validation") {
  CHECK_NOTHROW(QuadratureSpec{}.validate());
  CHECK(code_of([] { QuadratureSpec{200, QuadratureScheme::trapezoid, 0.01}.validate(); }) ==
        ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { QuadratureSpec{0, QuadratureScheme::trapezoid, 1e-4}.validate(); }) ==
        ErrorCode::ParameterOutOfRange);
  CHECK(parse_quadrature_scheme("trapezoid") == QuadratureScheme::trapezoid);
  CHECK(parse_quadrature_scheme("gauss_segment") == QuadratureScheme::gauss_segment);
  CHECK(code_of([] { parse_quadrature_scheme("simpson"); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("height nudging") {
  const std::vector<double> ords = {14.13, 21.02, 25.01};
  CHECK(nudge_height(20.0, ords) == doctest::Approx(17.575));
  CHECK(nudge_height(10.0, ords) == 10.0);
  CHECK(nudge_height(30.0, ords) == 30.0);
  const auto one = parse_family("one");
  PerronOptions o = near_line();
  o.ordinates = ords;
  const PerronResult r = perron_line_sum(one, Window{10000, 1000}, 20.0, light(), o);
  CHECK(r.nudged);
  CHECK(r.T == doctest::Approx(17.575));
}

TEST_CASE("Perron preconditions") {
  CHECK(code_of([] { perron_line_sum(parse_family("omega:0.5"), Window{1000, 100}, 100.0); }) ==
        ErrorCode::NoClosedForm);
  CHECK(code_of([] { perron_line_sum(parse_family("one"), Window{200000, 100}, 100.0); }) ==
        ErrorCode::OutOfValidatedRange);
  QuadratureSpec coarse;
  coarse.nodes_per_unit = 1;
  CHECK(code_of([&] { perron_line_sum(parse_family("one"), Window{10000, 1000}, 200.0, coarse, near_line()); }) ==
        ErrorCode::QuadratureNotConverged);
}

TEST_CASE("default abscissa is 1 + 20/log x") {
  QuadratureSpec q;
  q.nodes_per_unit = 20;
  q.abs_tol = 1e-3;
  try {
    const PerronResult r = perron_line_sum(parse_family("one"), Window{1000, 100}, 5.0, q);
    CHECK(r.b == doctest::Approx(1.0 + 20.0 / std::log(1000.0)));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::QuadratureNotConverged);
  }
}

TEST_CASE("Perron line sum near the line of convergence") {
  const auto one = parse_family("one");
  const Window w{10000, 1000};
  const PerronResult r1 = perron_line_sum(one, w, 1000.0, light(), near_line());
  CHECK(std::abs(r1.value.real() - 1000.0) <= 0.05 * 1000.0);
  CHECK(std::abs(r1.value.imag()) == 0.0);
  CHECK(r1.step_change <= 1e-3);
  const PerronResult r2 = perron_line_sum(one, w, 2000.0, light(), near_line());
  CHECK(std::abs(r2.value.real() - 1000.0) <= std::abs(r1.value.real() - 1000.0) + 2e-3);

  const auto d = parse_family("divisor:2");
  const Window wd{1000, 100};
  const double exact = exact_sum(d, wd).real();
  const PerronResult rd = perron_line_sum(d, wd, 2000.0, light(), near_line());
  CHECK(std::abs(rd.value.real() - exact) <= 0.05 * exact);
}

TEST_CASE("Perron worker count does not change the value") {
  const auto d = parse_family("divisor:2");
  PerronOptions a = near_line(), b = near_line();
  a.workers = 1;
  b.workers = 3;
  const PerronResult ra = perron_line_sum(d, Window{1000, 100}, 100.0, light(), a);
  const PerronResult rb = perron_line_sum(d, Window{1000, 100}, 100.0, light(), b);
  CHECK(ra.value == rb.value);
}

TEST_CASE("Hankel main term") {
  const double L = std::log(1e6);
  const LoopResult r = hankel_main_term(1e6, 0.5, 0, 1.0 / L);
  CHECK(r.reference == doctest::Approx(0.15175).epsilon(1e-4));
  CHECK(r.rel_dev <= 1e-3);
  const LoopResult z = hankel_main_term(1e6, 1.0, 1, 1.0 / L);
  CHECK(z.reference == 0.0);
  CHECK(std::abs(z.value) <= 1e-3);
  double prev = 1e300;
  for (double u : {1e4, 1e6, 1e8}) {
    const LoopResult h = hankel_main_term(u, 0.5, 0, 1.0 / std::log(u));
    CAPTURE(u);
    CHECK(h.rel_dev < prev);
    prev = h.rel_dev;
  }
  CHECK(code_of([] { hankel_main_term(50.0, 0.5, 0, 0.1); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { hankel_main_term(1e6, 0.5, 0, 0.5); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("M_l loop check") {
  const LoopResult a = ml_integral_check(1.0, 0, Window{10000, 1000});
  CHECK(a.value.real() == doctest::Approx(1000.0).epsilon(1e-6));
  const LoopResult b = ml_integral_check(2.0, 0, Window{10000, 1000});
  CHECK(b.reference == doctest::Approx(1000.0 * std::log(1e4)));
  CHECK(b.rel_dev <= 0.02);
  const LoopResult c = ml_integral_check(0.5, 1, Window{1000000, 10000});
  const double ref = 1e4 * std::pow(std::log(1e6), -1.5) / (-2.0 * std::sqrt(std::numbers::pi));
  CHECK(c.reference == doctest::Approx(ref));
  CHECK(c.rel_dev <= 0.05);
  CHECK(code_of([] { ml_integral_check(1.0, 0, Window{1000, 2000}); }) == ErrorCode::InvalidWindow);
}
