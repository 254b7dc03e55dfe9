#pragma once

#include <functional>

#include "casimir/lifshitz.hpp"

namespace casimir {

// 1-D scalar Fabry-Perot cavity: two mirrors with frequency-dependent
// reflection amplitudes at imaginary frequency, |r| <= 1.
struct Cavity1D {
  std::function<double(double xi)> r1;
  std::function<double(double xi)> r2;
  double L = 0.0;  // m
  double T = 0.0;  // K

  static Cavity1D perfect(double L, double T = 0.0);
  static Cavity1D constant(double r1r2_each, double L, double T = 0.0);
};

// T = 0: E = (hbar/2pi) Int_0^inf ln(1 - r1 r2 e^{-2 xi L/c}) dxi
// T > 0: E = kT sum'_m ln(1 - r1 r2 e^{-2 xi_m L/c})
EvalResult free_energy_1d(const Cavity1D& cavity,
                          const SummationPolicy& policy = {});

// -dE/dL by analytic differentiation under the integral/sum.
EvalResult force_1d(const Cavity1D& cavity, const SummationPolicy& policy = {});

// Independent oracle for perfect mirrors: regularized mode sum
// sum_n hbar w_n / 2, w_n = n pi c / L, with exponential regulator, bulk
// subtraction, and Richardson extrapolation of the regulator to zero.
double mode_sum_oracle(double L, long cutoff_count);

}  // namespace casimir
