#pragma once

// Multiplicative families with their type parameters and the Taylor data of
// G(s) zeta(2s)^{-w} at s = 1.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "delange/power_series.hpp"
#include "delange/primes.hpp"
#include "delange/zeta.hpp"

namespace delange {

struct TypePParams {
  double kappa = 1.0;
  Complex w = 0.0;
  double alpha_growth = 1.0;
  double delta = 0.0;
  double A = 1.0;
  double B = kDefaultParameterBound;
  double M = 1.0;

  void validate() const;
};

using LocalFactor = std::function<Complex(std::uint64_t prime, int exponent)>;
using SeriesProvider = std::function<PowerSeries(int order)>;
using DirichletFunction = std::function<Complex(Complex s)>;

class ArithmeticFamily {
 public:
  // series may be empty, in which case the Euler product at the default
  // cutoff is used.
  ArithmeticFamily(std::string name, std::string spec, LocalFactor local_factor, TypePParams params,
                   SeriesProvider series, std::optional<DirichletFunction> closed_form, bool real_valued);

  const std::string& name() const noexcept { return name_; }
  // Canonical CLI spelling, e.g. "divisor:2".
  const std::string& spec() const noexcept { return spec_; }
  const TypePParams& params() const noexcept { return params_; }
  bool real_valued() const noexcept { return real_valued_; }

  Complex local_factor(std::uint64_t prime, int exponent) const { return local_factor_(prime, exponent); }

  // Taylor series of G(s) zeta(2s)^{-w} about s = 1; cached per order.
  PowerSeries g_times_zeta2s_series(int order) const;

  bool has_closed_form() const noexcept { return closed_form_.has_value(); }
  // F(s) = sum f(n) n^{-s}; throws NoClosedForm.
  Complex closed_form_F(Complex s) const;

  // Same family with delta, A, B, M (and alpha) replaced; kappa and w kept.
  ArithmeticFamily with_params(const TypePParams& params) const;

 private:
  struct Cache;

  std::string name_;
  std::string spec_;
  LocalFactor local_factor_;
  TypePParams params_;
  SeriesProvider series_;
  std::optional<DirichletFunction> closed_form_;
  bool real_valued_ = true;
  std::shared_ptr<Cache> cache_;
};

// name in {constant_one, divisor_kappa, omega_power, squarefree_omega_power};
// parameter is kappa for divisor_kappa and z for the omega families.
ArithmeticFamily builtin_family(std::string_view name, Complex parameter = 1.0);

// "one", "divisor[:k]", "omega:z", "sqfree[:z]" and the long names.
ArithmeticFamily parse_family(std::string_view spec);

inline constexpr std::uint64_t kDefaultPrimeCutoff = 100000;

struct EulerProductSeries {
  PowerSeries series{0};
  // Coefficientwise size of the first-order tail correction already added.
  std::vector<double> tail_bound;
  std::uint64_t prime_cutoff = 0;
};

// Truncated Euler product for G(s) zeta(2s)^{-w} = F(s) zeta(s)^{-kappa}
// with an analytic first-order tail.
EulerProductSeries g_series_by_euler_product(const ArithmeticFamily& family, int order,
                                             std::uint64_t prime_cutoff = kDefaultPrimeCutoff);

// G(s) by the truncated Euler product, for Re s > 1/2.
Complex euler_product_G(const ArithmeticFamily& family, Complex s,
                        std::uint64_t prime_cutoff = kDefaultPrimeCutoff);

// Taylor series of zeta(2s)^{-w} about s = 1.
PowerSeries zeta2s_power_series(Complex w, int order);

// Product of local factors; throws DuplicatePrime.
Complex f_value(const ArithmeticFamily& family, std::span<const PrimePower> factorization);

// max_{n <= n_max} |f(n)| n^{-eps}
double growth_constant_pointwise(const ArithmeticFamily& family, std::uint64_t n_max, double eps);
// (sigma - 1)^alpha * sum_{n <= n_max} |f(n)| n^{-sigma}
double growth_constant_dirichlet(const ArithmeticFamily& family, std::uint64_t n_max, double sigma);

}  // namespace delange
