#include <cmath>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "delange/delange.h"

TEST_CASE("version and status names") {
  CHECK(std::string(dl_version()) == "1.0.0");
  CHECK(std::string(dl_status_name(DL_OK)) == "Ok");
  CHECK(std::string(dl_status_name(DL_ERR_POLE_AT_ONE)) == "PoleAtOne");
  CHECK(std::string(dl_status_name(DL_ERR_IO_ERROR)) == "IoError");
  CHECK(std::string(dl_status_name(DL_ERR_INVALID_ARGUMENT)) == "InvalidArgument");
}

TEST_CASE("zeta entry points") {
  dl_complex out{};
  REQUIRE(dl_zeta({2.0, 0.0}, &out) == DL_OK);
  CHECK(std::abs(out.re - M_PI * M_PI / 6.0) < 1e-12);
  CHECK(out.im == 0.0);
  CHECK(dl_zeta({1.0, 0.0}, &out) == DL_ERR_POLE_AT_ONE);
  CHECK(std::string(dl_last_error_message()).size() > 0);
  CHECK(dl_zeta({2.0, 0.0}, nullptr) == DL_ERR_INVALID_ARGUMENT);
  CHECK(dl_zeta({-3.0, 0.0}, &out) == DL_ERR_OUT_OF_VALIDATED_RANGE);
  double g0 = 0.0;
  REQUIRE(dl_stieltjes(0, &g0) == DL_OK);
  CHECK(std::abs(g0 - 0.5772156649015329) < 1e-15);
  CHECK(dl_stieltjes(99, &g0) == DL_ERR_ORDER_TOO_HIGH);
  REQUIRE(dl_recip_gamma({0.0, 0.0}, &out) == DL_OK);
  CHECK(out.re == 0.0);
  REQUIRE(dl_log_zeta({2.0, 0.0}, &out) == DL_OK);
  CHECK(std::abs(out.re - std::log(M_PI * M_PI / 6.0)) < 1e-12);
}

TEST_CASE("errors are thread local") {
  dl_complex out{};
  dl_zeta({1.0, 0.0}, &out);
  std::string other;
  std::thread t([&] {
    dl_family* f = nullptr;
    dl_family_parse("bogus", &f);
    other = dl_last_error_message();
  });
  t.join();
  CHECK(other.find("bogus") != std::string::npos);
  CHECK(std::string(dl_last_error_message()).find("bogus") == std::string::npos);
}

TEST_CASE("families and coefficients") {
  dl_family* fam = nullptr;
  REQUIRE(dl_family_parse("d", &fam) == DL_OK);
  CHECK(std::string(dl_family_spec(fam)) == "divisor:2");
  double kappa = 0.0;
  dl_complex w{};
  REQUIRE(dl_family_kappa(fam, &kappa, &w) == DL_OK);
  CHECK(kappa == 2.0);
  dl_complex v{};
  REQUIRE(dl_family_value(fam, 12, &v) == DL_OK);
  CHECK(v.re == 6.0);
  REQUIRE(dl_family_closed_form(fam, {2.0, 0.0}, &v) == DL_OK);
  CHECK(std::abs(v.re - std::pow(M_PI * M_PI / 6.0, 2.0)) < 1e-11);

  dl_coeffs* c = nullptr;
  REQUIRE(dl_coeffs_compute(fam, 12, &c) == DL_OK);
  CHECK(dl_coeffs_order(c) == 12);
  dl_complex l1{};
  REQUIRE(dl_coeffs_get(c, DL_COEFF_LAMBDA, 1, &l1) == DL_OK);
  CHECK(std::abs(l1.re - 2.0 * 0.5772156649015329) < 1e-10);
  CHECK(dl_coeffs_get(c, DL_COEFF_G, 13, &l1) == DL_ERR_INVALID_ARGUMENT);

  dl_complex p{};
  REQUIRE(dl_predict(c, 10000000, 100000, 1, &p) == DL_OK);
  CHECK(std::abs(p.re - 1e5 * (std::log(1e7) + 2.0 * 0.5772156649015329)) < 1e-6);
  double rb = 0.0;
  REQUIRE(dl_remainder_bound(c, 10000000, 100000, 1, nullptr, &rb) == DL_OK);
  CHECK(rb > 0.0);
  const dl_remainder_params bad{0.0, 0.5, 1.0};
  CHECK(dl_remainder_bound(c, 10000000, 100000, 1, &bad, &rb) == DL_ERR_PARAMETER_OUT_OF_RANGE);
  CHECK(dl_predict(c, 10000000, 100000, 30, &p) == DL_ERR_ORDER_EXCEEDS_COEFFICIENTS);

  dl_complex s{};
  REQUIRE(dl_exact_sum(fam, 10, 4, 1, &s) == DL_OK);
  CHECK(s.re == 14.0);
  CHECK(dl_exact_sum(fam, 10, 0, 1, &s) == DL_ERR_INVALID_WINDOW);

  const uint64_t grid[] = {100000, 1000000};
  dl_experiment_record recs[2];
  REQUIRE(dl_run_experiment(fam, grid, 2, 0.8, 1, 24, nullptr, 0, recs) == DL_OK);
  CHECK(recs[0].x == 100000);
  CHECK(recs[1].rel_error < 0.05);

  dl_coeffs_free(c);
  dl_family_free(fam);
  dl_family_free(nullptr);
  CHECK(dl_family_parse("bogus", &fam) == DL_ERR_UNKNOWN_FAMILY);
  CHECK(dl_family_parse(nullptr, &fam) == DL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("trial division and window length") {
  uint64_t primes[8];
  int exps[8];
  size_t n = 0;
  REQUIRE(dl_trial_division(360, primes, exps, 8, &n) == DL_OK);
  REQUIRE(n == 3);
  CHECK(primes[0] == 2);
  CHECK(exps[0] == 3);
  REQUIRE(dl_trial_division(360, primes, exps, 2, &n) == DL_OK);
  CHECK(n == 3);
  CHECK(primes[1] == 3);
  uint64_t y = 0;
  REQUIRE(dl_window_length(100, 0.5, &y) == DL_OK);
  CHECK(y == 10);
}

TEST_CASE("theta entry points") {
  dl_theta_result r{};
  REQUIRE(dl_theta(1.0, 0.0, "unconditional", 1.0 / 3.0, 0.01, 20.0, &r) == DL_OK);
  CHECK(std::abs(r.value - 7.55 / 12.05) < 1e-12);
  CHECK(r.branch == DL_THETA_CASE1);
  CHECK(std::string(dl_theta_branch_name(r.branch)) == "case1");
  CHECK(dl_theta(1.0, 1.0, "lindelof", 1.0 / 3.0, 0.01, 20.0, &r) == DL_ERR_LINDELOF_REQUIRES_DELTA_ABOVE_ONE);
  CHECK(dl_theta(1.0, 0.0, "nonsense", 1.0 / 3.0, 0.01, 20.0, &r) == DL_ERR_PARAMETER_OUT_OF_RANGE);
  double prior = 0.0;
  REQUIRE(dl_prior_theta_bound(1.0, 0.0, &prior) == DL_OK);
  CHECK(std::abs(prior - 26.0 / 41.0) < 1e-15);
}

TEST_CASE("zero sets, density and contours") {
  dl_zeroset* z = nullptr;
  REQUIRE(dl_zeroset_parse("14.134725\n21.022040\n", 100.0, &z) == DL_OK);
  CHECK(dl_zeroset_size(z) == 2);
  double beta = 0.0, gamma = 0.0;
  REQUIRE(dl_zeroset_get(z, 1, &beta, &gamma) == DL_OK);
  CHECK(beta == 0.5);
  CHECK(gamma == 21.02204);
  CHECK(dl_zeroset_get(z, 2, &beta, &gamma) == DL_ERR_INVALID_ARGUMENT);
  dl_density_report d{};
  REQUIRE(dl_zero_density(z, 0.5, 100.0, 1.0, 0.01, &d) == DL_OK);
  CHECK(d.count == 2);
  dl_zeroset_free(z);
  CHECK(dl_zeroset_parse("1.5 20\n", 100.0, &z) == DL_ERR_BETA_OUT_OF_RANGE);
  CHECK(dl_zeroset_load("/nonexistent", 100.0, &z) == DL_ERR_IO_ERROR);

  REQUIRE(dl_zeroset_synthetic(3, 65536.0, 0.6, &z) == DL_OK);
  CHECK(dl_zeroset_size(z) == 100);
  dl_contour* c = nullptr;
  REQUIRE(dl_contour_build(z, 65536.0, 0.6, 0.05, 0.1, std::log(1e6), 0.0, &c) == DL_OK);
  CHECK(dl_contour_piece_count(c) > 10);
  dl_complex a{}, b{};
  const char* label = nullptr;
  REQUIRE(dl_contour_piece(c, 0, &a, &b, &label) == DL_OK);
  CHECK(label != nullptr);
  dl_contour_report rep{};
  REQUIRE(dl_contour_validate(c, z, 0.6, &rep) == DL_OK);
  CHECK(rep.symmetric);
  CHECK(rep.connected);
  CHECK(rep.axis_parallel);
  CHECK(rep.clearance);
  CHECK(rep.offending == 0);
  CHECK(std::string(dl_vcase_name(0)) == "valley");
  dl_contour_free(c);
  CHECK(dl_contour_build(z, 65536.0, 0.6, 0.05, 1.0, std::log(1e6), 0.0, &c) == DL_ERR_DEGENERATE_BLOCK);
  dl_zeroset_free(z);
}

TEST_CASE("quadrature entry points") {
  const dl_quadrature q = dl_quadrature_defaults();
  CHECK(q.nodes_per_unit == 200);
  CHECK(q.scheme == DL_QUAD_GAUSS_SEGMENT);
  CHECK(q.abs_tol == 1e-3);
  dl_loop_report lr{};
  REQUIRE(dl_hankel_main_term(1e6, 0.5, 0, 1.0 / std::log(1e6), &q, 0.05, &lr) == DL_OK);
  CHECK(lr.rel_dev <= 1e-3);
  REQUIRE(dl_ml_integral_check(1.0, 0, 10000, 1000, &q, 0.05, &lr) == DL_OK);
  CHECK(std::abs(lr.value.re - 1000.0) < 1e-3);
  dl_family* fam = nullptr;
  REQUIRE(dl_family_parse("omega:0.5", &fam) == DL_OK);
  dl_perron_report pr{};
  CHECK(dl_perron_line_sum(fam, 1000, 100, 100.0, &q, 20.0, nullptr, &pr) == DL_ERR_NO_CLOSED_FORM);
  dl_family_free(fam);
  REQUIRE(dl_family_parse("one", &fam) == DL_OK);
  dl_quadrature light = q;
  light.nodes_per_unit = 40;
  REQUIRE(dl_perron_line_sum(fam, 10000, 1000, 200.0, &light, 1.0, nullptr, &pr) == DL_OK);
  CHECK(std::abs(pr.value.re - 1000.0) < 50.0);
  CHECK(pr.b == doctest::Approx(1.0 + 1.0 / std::log(1e4)));
  dl_family_free(fam);
}
