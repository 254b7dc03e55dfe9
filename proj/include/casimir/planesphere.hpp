#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/pfa.hpp"

namespace casimir {

enum class MultipolePol { E, M };

// Index of one spherical-wave channel of the multipole basis.
struct SphericalMode {
  int ell = 1;
  int m = 0;
  MultipolePol pol = MultipolePol::E;
};

// Multipole truncation policy. When auto_grow is set, ell_max doubles until
// the free energy changes by less than target_rel (never past ell_cap).
// Accuracy degrades for aspect ratios below x_min ~ validity_c / ell_max;
// results there carry valid_region = false.
struct TruncationSpec {
  int ell_max = 0;           // 0 = choose from aspect ratio
  bool auto_grow = true;
  double target_rel = 1e-4;
  int ell_cap = 100;
  double validity_c = 5.0;   // x_min = validity_c / ell_max
};

// Mie reflection amplitudes of a sphere at imaginary frequency, real-valued.
// Convention: a_ell (electric) > 0 and b_ell (magnetic) < 0 for conductors.
struct MieAmplitudes {
  double a = 0.0;  // electric (E) multipole
  double b = 0.0;  // magnetic (M) multipole
};

// Standard Mie coefficients continued to imaginary frequency, evaluated with
// logarithmic modified-Bessel recurrences. Supported sphere models: Perfect
// and Plasma.
MieAmplitudes mie_amplitudes(const MirrorModel& model, double xi, int ell,
                             double R);

// One round trip sphere -> plane -> sphere for fixed azimuthal index m and
// frequency xi, assembled in the spherical basis. `matrix` is the balanced
// (similarity-transformed) operator: its spectrum and det(I - M) equal the
// physical round trip's. Layout: M-pol rows ell_min..ell_max, then E-pol.
struct RoundTripOperator {
  Eigen::MatrixXd matrix;
  int ell_min = 1;
  int ell_max = 0;
  int m = 0;
  double xi = 0.0;
};

RoundTripOperator assemble_roundtrip(const PlaneSphereGeometry& geom,
                                     const MirrorModel& sphere,
                                     const MirrorModel& plane, double xi, int m,
                                     int ell_max);

// F = k_B T sum'_n sum_m ln det(I - M^(m)(i xi_n)); T = 0 via the xi
// integral. Negative for passive mirrors.
EvalResult free_energy_planesphere(const PlaneSphereGeometry& geom,
                                   const MirrorModel& sphere,
                                   const MirrorModel& plane, double T,
                                   const TruncationSpec& trunc = {},
                                   const SummationPolicy& policy = {});

struct GradientResult {
  double G = 0.0;        // force gradient -d^2F/dL^2, N/m (positive)
  double G_pfa = 0.0;    // 2 pi R |P_pp|, N/m
  double rho = 0.0;      // G / G_pfa
  bool valid = true;     // aspect ratio inside the trusted region
  int ell_max_used = 0;
  double err_estimate = 0.0;  // relative, from truncation convergence
};

// rho_G(x) = G / G_PFA with G from the analytic first derivative of F
// differentiated once more by central differences (step 1e-3 L).
GradientResult rho_G(const PlaneSphereGeometry& geom, const MirrorModel& sphere,
                     const MirrorModel& plane, double T,
                     const TruncationSpec& trunc = {},
                     const SummationPolicy& policy = {});

struct SlopeFit {
  double beta = 0.0;    // slope at origin of rho(x) = 1 + beta x + c x^2
  double stderr_ = 0.0;
  double curvature = 0.0;
};

// Weighted least squares of rho = 1 + beta x + c x^2 with the intercept
// pinned at 1. Needs >= 3 samples with distinct x.
SlopeFit beta_G_fit(const std::vector<std::pair<double, double>>& samples,
                    const std::vector<double>& weights = {});

// Experimental-bound classifier for fitted slopes: |beta| < 0.4.
bool within_gradient_bound(double beta);

}  // namespace casimir
