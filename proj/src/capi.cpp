#include "delange/delange.h"

#include <new>
#include <sstream>
#include <string>

#include "delange/contour.hpp"
#include "delange/families.hpp"
#include "delange/meanvalue.hpp"
#include "delange/perron.hpp"
#include "delange/sieve.hpp"
#include "delange/zeta.hpp"

using namespace delange;

struct dl_family {
  ArithmeticFamily family;
};

struct dl_coeffs {
  ExpansionCoefficients coeffs;
};

struct dl_zeroset {
  ZeroSet zeros;
};

struct dl_contour {
  ContourPath path;
};

namespace {

thread_local std::string last_error;

dl_complex to_c(Complex z) { return {z.real(), z.imag()}; }
Complex from_c(dl_complex z) { return {z.re, z.im}; }

dl_status invalid(const char* what) {
  last_error = what;
  return DL_ERR_INVALID_ARGUMENT;
}

template <class F>
dl_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return DL_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return dl_status(int(e.code()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DL_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return DL_ERR_INTERNAL;
  }
}

QuadratureSpec to_spec(const dl_quadrature* q) {
  QuadratureSpec spec;
  if (q) {
    spec.nodes_per_unit = q->nodes_per_unit;
    spec.scheme = q->scheme == DL_QUAD_TRAPEZOID ? QuadratureScheme::trapezoid : QuadratureScheme::gauss_segment;
    spec.abs_tol = q->abs_tol;
  }
  return spec;
}

RemainderParams to_params(const dl_remainder_params* p) {
  RemainderParams rp;
  if (p) {
    rp.a1 = p->a1;
    rp.a2 = p->a2;
    rp.M = p->M;
  }
  return rp;
}

void fill(dl_loop_report* out, const LoopResult& r) {
  out->value = to_c(r.value);
  out->reference = r.reference;
  out->rel_dev = r.rel_dev;
  out->step_change = r.step_change;
  out->nodes = r.nodes;
}

}  // namespace

extern "C" {

const char* dl_version(void) { return "1.0.0"; }

const char* dl_status_name(dl_status status) {
  switch (status) {
    case DL_OK: return "Ok";
    case DL_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case DL_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (int(status) >= 1 && int(status) <= int(ErrorCode::IoError)) return error_code_name(ErrorCode(int(status)));
  return "Unknown";
}

const char* dl_last_error_message(void) { return last_error.c_str(); }

dl_status dl_zeta(dl_complex s, dl_complex* out) {
  if (!out) return invalid("null output");
  return guarded([&] { *out = to_c(zeta(from_c(s))); });
}

dl_status dl_log_zeta(dl_complex s, dl_complex* out) {
  if (!out) return invalid("null output");
  return guarded([&] { *out = to_c(log_zeta(from_c(s))); });
}

dl_status dl_stieltjes(int n, double* out) {
  if (!out) return invalid("null output");
  return guarded([&] { *out = stieltjes(n); });
}

dl_status dl_recip_gamma(dl_complex z, dl_complex* out) {
  if (!out) return invalid("null output");
  return guarded([&] { *out = to_c(recip_gamma(from_c(z))); });
}

dl_status dl_family_parse(const char* spec, dl_family** out) {
  if (!spec || !out) return invalid("null argument");
  *out = nullptr;
  return guarded([&] { *out = new dl_family{parse_family(spec)}; });
}

void dl_family_free(dl_family* family) { delete family; }

const char* dl_family_spec(const dl_family* family) { return family ? family->family.spec().c_str() : ""; }

dl_status dl_family_kappa(const dl_family* family, double* kappa, dl_complex* w) {
  if (!family) return invalid("null family");
  return guarded([&] {
    if (kappa) *kappa = family->family.params().kappa;
    if (w) *w = to_c(family->family.params().w);
  });
}

dl_status dl_family_value(const dl_family* family, uint64_t n, dl_complex* out) {
  if (!family || !out) return invalid("null argument");
  if (n == 0) return invalid("n must be positive");
  return guarded([&] {
    const auto fac = trial_division(n);
    *out = to_c(f_value(family->family, fac));
  });
}

dl_status dl_family_closed_form(const dl_family* family, dl_complex s, dl_complex* out) {
  if (!family || !out) return invalid("null argument");
  return guarded([&] { *out = to_c(family->family.closed_form_F(from_c(s))); });
}

dl_status dl_coeffs_compute(const dl_family* family, int order, dl_coeffs** out) {
  if (!family || !out) return invalid("null argument");
  *out = nullptr;
  return guarded([&] { *out = new dl_coeffs{g_lambda_coeffs(family->family, order)}; });
}

void dl_coeffs_free(dl_coeffs* coeffs) { delete coeffs; }

int dl_coeffs_order(const dl_coeffs* coeffs) { return coeffs ? coeffs->coeffs.order : -1; }

dl_status dl_coeffs_get(const dl_coeffs* coeffs, dl_coeff_kind kind, int index, dl_complex* out) {
  if (!coeffs || !out) return invalid("null argument");
  const auto& c = coeffs->coeffs;
  const std::vector<Complex>* v = nullptr;
  switch (kind) {
    case DL_COEFF_GAMMA: v = &c.gamma_j; break;
    case DL_COEFF_G: v = &c.g_l; break;
    case DL_COEFF_LAMBDA: v = &c.lambda_l; break;
    default: return invalid("unknown coefficient kind");
  }
  if (index < 0 || std::size_t(index) >= v->size()) return invalid("coefficient index out of range");
  *out = to_c((*v)[std::size_t(index)]);
  last_error.clear();
  return DL_OK;
}

dl_status dl_exact_sum(const dl_family* family, uint64_t x, uint64_t y, unsigned workers, dl_complex* out) {
  if (!family || !out) return invalid("null argument");
  return guarded([&] {
    SieveOptions opts;
    opts.workers = workers;
    *out = to_c(exact_sum(family->family, Window{x, y}, opts));
  });
}

dl_status dl_trial_division(uint64_t n, uint64_t* primes, int* exponents, size_t capacity, size_t* count) {
  if (!count || (capacity && (!primes || !exponents))) return invalid("null argument");
  if (n == 0) return invalid("n must be positive");
  return guarded([&] {
    const auto fac = trial_division(n);
    *count = fac.size();
    for (std::size_t i = 0; i < fac.size() && i < capacity; ++i) {
      primes[i] = fac[i].prime;
      exponents[i] = fac[i].exponent;
    }
  });
}

dl_status dl_window_length(uint64_t x, double exponent, uint64_t* out) {
  if (!out) return invalid("null output");
  return guarded([&] { *out = window_length(x, exponent); });
}

dl_status dl_theta(double kappa, double delta, const char* regime, double eta1, double epsilon, double bound,
                   dl_theta_result* out) {
  if (!regime || !out) return invalid("null argument");
  return guarded([&] {
    ThetaRegime r{parse_theta_regime(regime), eta1, epsilon};
    const ThetaResult res = theta(kappa, delta, r, bound);
    out->value = res.value;
    out->branch = dl_theta_branch(int(res.branch));
    out->kappa_split = res.kappa_split;
  });
}

dl_status dl_prior_theta_bound(double kappa, double delta, double* out) {
  if (!out) return invalid("null output");
  return guarded([&] { *out = prior_theta_bound(kappa, delta); });
}

const char* dl_theta_branch_name(dl_theta_branch branch) {
  if (int(branch) < 0 || int(branch) > 2) return "unknown";
  return theta_branch_name(ThetaBranch(int(branch)));
}

dl_remainder_params dl_remainder_defaults(void) {
  RemainderParams rp;
  return {rp.a1, rp.a2, rp.M};
}

dl_status dl_predict(const dl_coeffs* coeffs, uint64_t x, uint64_t y, int N, dl_complex* out) {
  if (!coeffs || !out) return invalid("null argument");
  return guarded([&] { *out = to_c(predict(coeffs->coeffs, Window{x, y}, N)); });
}

dl_status dl_remainder_bound(const dl_coeffs* coeffs, uint64_t x, uint64_t y, int N,
                             const dl_remainder_params* params, double* out) {
  if (!coeffs || !out) return invalid("null argument");
  return guarded([&] { *out = remainder_bound(coeffs->coeffs, Window{x, y}, N, to_params(params)); });
}

dl_status dl_run_experiment(const dl_family* family, const uint64_t* x_grid, size_t count, double theta_exponent,
                            int N, int order, const dl_remainder_params* params, unsigned workers,
                            dl_experiment_record* out) {
  if (!family || (count && (!x_grid || !out))) return invalid("null argument");
  return guarded([&] {
    ExperimentOptions opts;
    opts.remainder = to_params(params);
    opts.order = order;
    opts.sieve.workers = workers;
    const auto recs = run_experiment(family->family, std::span<const uint64_t>(x_grid, count), theta_exponent, N, opts);
    for (std::size_t i = 0; i < recs.size(); ++i) {
      out[i].x = recs[i].x;
      out[i].y = recs[i].y;
      out[i].N = recs[i].N;
      out[i].exact = to_c(recs[i].exact);
      out[i].predicted = to_c(recs[i].predicted);
      out[i].remainder_bound = recs[i].remainder_bound;
      out[i].rel_error = recs[i].rel_error;
    }
  });
}

dl_status dl_zeroset_load(const char* path, double T, dl_zeroset** out) {
  if (!path || !out) return invalid("null argument");
  *out = nullptr;
  return guarded([&] { *out = new dl_zeroset{load_zeros(path, T)}; });
}

dl_status dl_zeroset_parse(const char* text, double T, dl_zeroset** out) {
  if (!text || !out) return invalid("null argument");
  *out = nullptr;
  return guarded([&] {
    std::istringstream in(text);
    *out = new dl_zeroset{parse_zeros(in, T)};
  });
}

dl_status dl_zeroset_synthetic(uint64_t seed, double T, double alpha, dl_zeroset** out) {
  if (!out) return invalid("null output");
  *out = nullptr;
  return guarded([&] { *out = new dl_zeroset{synthetic_zero_set(seed, T, alpha)}; });
}

void dl_zeroset_free(dl_zeroset* zeros) { delete zeros; }

size_t dl_zeroset_size(const dl_zeroset* zeros) { return zeros ? zeros->zeros.zeros.size() : 0; }

dl_status dl_zeroset_get(const dl_zeroset* zeros, size_t index, double* beta, double* gamma) {
  if (!zeros) return invalid("null zero set");
  if (index >= zeros->zeros.zeros.size()) return invalid("zero index out of range");
  if (beta) *beta = zeros->zeros.zeros[index].beta;
  if (gamma) *gamma = zeros->zeros.zeros[index].gamma;
  last_error.clear();
  return DL_OK;
}

dl_status dl_zero_density(const dl_zeroset* zeros, double sigma, double T, double C_star, double epsilon,
                          dl_density_report* out) {
  if (!zeros || !out) return invalid("null argument");
  return guarded([&] {
    const DensityReport r = zero_density_count(zeros->zeros, sigma, T, C_star, epsilon);
    *out = {r.sigma, r.T, r.count, r.huxley_bound, r.ratio, r.sigma_exceptional, r.exceptional_count,
            r.t_eps, r.exceptional_ratio};
  });
}

dl_status dl_contour_build(const dl_zeroset* zeros, double T, double alpha, double eta, double C_star, double logx,
                           double corner_eps, dl_contour** out) {
  if (!zeros || !out) return invalid("null argument");
  *out = nullptr;
  return guarded(
      [&] { *out = new dl_contour{build_contour(zeros->zeros, T, alpha, eta, C_star, logx, corner_eps)}; });
}

void dl_contour_free(dl_contour* contour) { delete contour; }

size_t dl_contour_piece_count(const dl_contour* contour) { return contour ? contour->path.pieces.size() : 0; }

dl_status dl_contour_piece(const dl_contour* contour, size_t index, dl_complex* a, dl_complex* b,
                           const char** label) {
  if (!contour) return invalid("null contour");
  if (index >= contour->path.pieces.size()) return invalid("piece index out of range");
  const Piece& p = contour->path.pieces[index];
  if (a) *a = to_c(p.a);
  if (b) *b = to_c(p.b);
  if (label) *label = piece_label_name(p.label);
  last_error.clear();
  return DL_OK;
}

dl_status dl_contour_validate(const dl_contour* contour, const dl_zeroset* zeros, double alpha,
                              dl_contour_report* out) {
  if (!contour || !zeros || !out) return invalid("null argument");
  return guarded([&] {
    const ValidationReport r = validate_contour(contour->path, zeros->zeros, alpha);
    out->symmetric = r.symmetric;
    out->connected = r.connected;
    out->axis_parallel = r.axis_parallel;
    out->clearance = r.clearance;
    out->offending = r.offending.size();
    for (int i = 0; i < DL_VCASE_COUNT; ++i) {
      out->v_tally[i] = r.v_tally.count[i];
      out->h_tally[i] = r.h_tally.count[i];
    }
  });
}

const char* dl_vcase_name(int vcase) {
  if (vcase < 0 || vcase >= DL_VCASE_COUNT) return "unknown";
  return delange::vcase_name(VCase(vcase));
}

dl_quadrature dl_quadrature_defaults(void) {
  QuadratureSpec q;
  return {q.nodes_per_unit, DL_QUAD_GAUSS_SEGMENT, q.abs_tol};
}

dl_status dl_perron_line_sum(const dl_family* family, uint64_t x, uint64_t y, double T, const dl_quadrature* quad,
                             double b_shift, const dl_zeroset* ordinates, dl_perron_report* out) {
  if (!family || !out) return invalid("null argument");
  return guarded([&] {
    PerronOptions opts;
    opts.b_shift = b_shift;
    if (ordinates)
      for (const Zero& z : ordinates->zeros.zeros) opts.ordinates.push_back(z.gamma);
    const PerronResult r = perron_line_sum(family->family, Window{x, y}, T, to_spec(quad), opts);
    out->value = to_c(r.value);
    out->T = r.T;
    out->nudged = r.nudged;
    out->b = r.b;
    out->step_change = r.step_change;
    out->nodes = r.nodes;
  });
}

dl_status dl_hankel_main_term(double u, double kappa, int l, double r, const dl_quadrature* quad, double eta,
                              dl_loop_report* out) {
  if (!out) return invalid("null output");
  return guarded([&] { fill(out, hankel_main_term(u, kappa, l, r, to_spec(quad), eta)); });
}

dl_status dl_ml_integral_check(double kappa, int l, uint64_t x, uint64_t y, const dl_quadrature* quad, double eta,
                               dl_loop_report* out) {
  if (!out) return invalid("null output");
  return guarded([&] { fill(out, ml_integral_check(kappa, l, Window{x, y}, to_spec(quad), eta)); });
}

}  // extern "C"
