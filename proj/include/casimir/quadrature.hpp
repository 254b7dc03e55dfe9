#pragma once

#include <functional>

namespace casimir {

struct QuadResult {
  double value = 0.0;
  double err = 0.0;
  long nodes = 0;
  bool converged = true;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7/K15) on a finite interval. Bisects intervals
// until the local error estimate satisfies the scaled tolerance or the node
// budget is exhausted. Fixed evaluation order, bit-reproducible.
QuadResult gk_adaptive(const Integrand& f, double a, double b, double rel_tol,
                       double abs_tol = 0.0, long max_nodes = 200000);

// Integral of an (eventually) exponentially decaying integrand over
// [a, inf). Covers the axis with panels of doubling width until the last
// panel contributes below tolerance; each panel uses gk_adaptive.
QuadResult integrate_decaying(const Integrand& f, double a, double rel_tol,
                              double abs_tol = 0.0, long max_nodes = 200000,
                              double first_width = 5.0);

}  // namespace casimir
