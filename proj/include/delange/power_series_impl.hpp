#pragma once

#include <cmath>
#include <numbers>

namespace delange {

template <class F>
PowerSeries taylor_by_cauchy(F&& f, Complex center, double radius, int order, int nodes) {
  std::vector<Complex> values(nodes);
  for (int k = 0; k < nodes; ++k) {
    double theta = 2.0 * std::numbers::pi * k / nodes;
    values[k] = f(center + radius * Complex(std::cos(theta), std::sin(theta)));
  }
  PowerSeries out(order);
  double scale = 1.0;
  for (int n = 0; n <= order; ++n) {
    Complex acc = 0.0;
    for (int k = 0; k < nodes; ++k) {
      double theta = -2.0 * std::numbers::pi * double(k) * n / nodes;
      acc += values[k] * Complex(std::cos(theta), std::sin(theta));
    }
    out[n] = acc / double(nodes) / scale;
    scale *= radius;
  }
  return out;
}

}  // namespace delange
