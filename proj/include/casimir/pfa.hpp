#pragma once

#include "casimir/lifshitz.hpp"

namespace casimir {

// Sphere of radius R at closest separation L above a plane.
struct PlaneSphereGeometry {
  double R = 0.0;  // m
  double L = 0.0;  // m
  double aspect() const { return L / R; }
  // PFA is a leading-order approximation in L/R; flag when it gets shaky.
  bool pfa_advisory() const { return aspect() > 0.1; }
};

// F_PS(L) = 2 pi R (E_pp/A)(L), the proximity-force map from the plane-plane
// energy per area. Attractive = negative.
EvalResult pfa_force(const PlaneSphereGeometry& geom, const MirrorModel& m1,
                     const MirrorModel& m2, double T,
                     const SummationPolicy& policy = {});

// G_PFA(L) = 2 pi R |P_pp(L)|, the PFA force gradient (positive).
EvalResult pfa_gradient(const PlaneSphereGeometry& geom, const MirrorModel& m1,
                        const MirrorModel& m2, double T,
                        const SummationPolicy& policy = {});

// Didactic route: explicit integration of the plane-plane pressure over the
// distribution of local distances on the near hemisphere,
//   F = 2 pi Int_L^{L+R} P(l) (R - l + L) dl.
// Agrees with pfa_force to leading order in L/R; much slower.
EvalResult pfa_force_local_integration(const PlaneSphereGeometry& geom,
                                       const MirrorModel& m1,
                                       const MirrorModel& m2, double T,
                                       const SummationPolicy& policy = {},
                                       double rel_tol = 1e-6);

}  // namespace casimir
