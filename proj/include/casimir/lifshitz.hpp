#pragma once

#include "casimir/media.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

// Two semi-infinite mirrors facing each other across a gap L, area A,
// temperature T.
struct PlanePlaneProblem {
  MirrorModel mirror1;
  MirrorModel mirror2;
  double L = 0.0;  // m
  double A = 1.0;  // m^2
  double T = 0.0;  // K
};

// Truncation policy for the Matsubara sum and the mode integrals.
struct SummationPolicy {
  double rel_tol = 1e-8;       // Matsubara tail target
  long m_max_cap = 1000000;    // hard cap on summed terms
  double quad_rel_tol = 1e-9;  // per-integral relative tolerance
  long quad_max_nodes = 400000;
  int threads = 1;             // worker threads for independent blocks
};

struct EvalDiagnostics {
  long terms_used = 0;   // Matsubara terms (including m = 0)
  long nodes_used = 0;   // integrand evaluations
  bool truncation_reached = false;
  int ell_max_used = 0;     // multipole truncation (plane-sphere only)
  bool valid_region = true; // false when x < x_min ~ C / ell_max
};

struct EvalResult {
  double value = 0.0;         // J, Pa or N depending on the operation
  double err_estimate = 0.0;  // same units, absolute
  EvalDiagnostics diagnostics;
};

// Ideal zero-temperature results for perfect mirrors:
//   E = -hbar c pi^2 A / (720 L^3),  F = -hbar c pi^2 A / (240 L^4)
// Negative values = attraction.
double ideal_energy(double L, double A);
double ideal_force(double L, double A);

// xi_m = 2 pi m k_B T / hbar
double matsubara_xi(double T, long m);

// ln d with d = 1 - r e^{-2 kappa L}, evaluated via log1p.
double log_denominator(double r_product, double kappa, double L);

// Free energy at T > 0:
//   F = A kT/(8 pi L^2) * sum'_m sum_p Int_{u0}^inf u ln(1 - r1 r2 e^{-u}) du
// with u = 2 K L, u0 = 2 xi_m L / c; m = 0 carries weight 1/2 and uses the
// static reflection limits.
EvalResult free_energy(const PlanePlaneProblem& problem,
                       const SummationPolicy& policy = {});

// Zero-temperature free energy: k_B T sum'_m -> (hbar/2 pi) Int dxi.
EvalResult free_energy_T0(const PlanePlaneProblem& problem,
                          const SummationPolicy& policy = {});

// Pressure/force by analytic differentiation under the integral; dispatches
// on T = 0 vs T > 0. Negative = attractive.
EvalResult pressure(const PlanePlaneProblem& problem,
                    const SummationPolicy& policy = {});
EvalResult force(const PlanePlaneProblem& problem,
                 const SummationPolicy& policy = {});

// Reduction factors relative to the ideal formulas (T = 0 definition;
// domain error if problem.T != 0).
double eta_F(const PlanePlaneProblem& problem, const SummationPolicy& policy = {});
double eta_E(const PlanePlaneProblem& problem, const SummationPolicy& policy = {});

// Finite-temperature analogue of eta_F (force over the ideal T = 0 force at
// the same L); kept distinct from the T = 0 definition above.
double eta_F_thermal(const PlanePlaneProblem& problem,
                     const SummationPolicy& policy = {});

// F_plasma(gamma = 0) / F_Drude(gamma > 0) at identical (omega_p, L, T).
double thermal_ratio(double L, double T, double omega_p, double gamma,
                     const SummationPolicy& policy = {});

// Single Matsubara term (weight included: 1/2 at m = 0), in joules. Exposed
// for term-wise analysis and tests.
double matsubara_term(const PlanePlaneProblem& problem,
                      const SummationPolicy& policy, long m);

// Injection-hook variants: drive the engine with arbitrary reflection
// amplitude functions instead of bulk mirror models.
EvalResult free_energy(const ReflectionFn& r1, const ReflectionFn& r2, double L,
                       double A, double T, const SummationPolicy& policy = {});
EvalResult free_energy_T0(const ReflectionFn& r1, const ReflectionFn& r2,
                          double L, double A,
                          const SummationPolicy& policy = {});
EvalResult pressure(const ReflectionFn& r1, const ReflectionFn& r2, double L,
                    double T, const SummationPolicy& policy = {});

}  // namespace casimir
