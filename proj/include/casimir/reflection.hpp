#pragma once

#include <functional>

#include "casimir/media.hpp"

namespace casimir {

enum class Pol { TE, TM };

// One mode channel: imaginary frequency xi, transverse wavevector magnitude k,
// polarization. (xi, k) = (0, 0) is excluded for reflection evaluation.
struct SpectralPoint {
  double xi = 0.0;  // rad/s
  double k = 0.0;   // rad/m
  Pol pol = Pol::TE;
};

// K = sqrt(k^2 + xi^2/c^2)
double kappa(double xi, double k);

// Specular reflection amplitude of a semi-infinite bulk mirror at imaginary
// frequency. With kt = sqrt(eps xi^2/c^2 + k^2):
//   r_TE = (K - kt)/(K + kt),  r_TM = (eps K - kt)/(eps K + kt)
// Perfect mirrors: r_TE = -1, r_TM = +1 (only products r1 r2 enter
// observables, so the sign convention is internal).
double fresnel_r(const MirrorModel& model, const SpectralPoint& point);

// Analytic xi -> 0 limits. TM: +1 for any conductor. TE: 0 for Drude
// (gamma > 0), the closed plasma form for gamma = 0, -1 for perfect mirrors.
// Tabulated models need a Drude tail to define this limit.
double fresnel_r_static(const MirrorModel& model, double k, Pol pol);

// Amplitude-injection hook: anything evaluable over (xi, k, pol) can drive
// the plane-plane engine. xi = 0 must return the static limit.
using ReflectionFn = std::function<double(double xi, double k, Pol pol)>;

// Wraps a mirror model as a ReflectionFn (dispatching xi = 0 to the static
// limits).
ReflectionFn reflection_of(const MirrorModel& model);

}  // namespace casimir
