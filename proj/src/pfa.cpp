#include "casimir/pfa.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

void check(const PlaneSphereGeometry& geom) {
  if (!(geom.R > 0.0) || !(geom.L > 0.0))
    throw std::domain_error("pfa: R and L must be > 0");
}

EvalResult energy_per_area(const MirrorModel& m1, const MirrorModel& m2,
                           double L, double T, const SummationPolicy& policy) {
  PlanePlaneProblem p{m1, m2, L, 1.0, T};
  return T > 0.0 ? free_energy(p, policy) : free_energy_T0(p, policy);
}

}  // namespace

EvalResult pfa_force(const PlaneSphereGeometry& geom, const MirrorModel& m1,
                     const MirrorModel& m2, double T,
                     const SummationPolicy& policy) {
  check(geom);
  EvalResult r = energy_per_area(m1, m2, geom.L, T, policy);
  const double pref = 2.0 * constants::pi * geom.R;
  r.value *= pref;
  r.err_estimate *= pref;
  return r;
}

EvalResult pfa_gradient(const PlaneSphereGeometry& geom, const MirrorModel& m1,
                        const MirrorModel& m2, double T,
                        const SummationPolicy& policy) {
  check(geom);
  PlanePlaneProblem p{m1, m2, geom.L, 1.0, T};
  EvalResult r = pressure(p, policy);
  const double pref = 2.0 * constants::pi * geom.R;
  r.value = pref * std::abs(r.value);
  r.err_estimate *= pref;
  return r;
}

EvalResult pfa_force_local_integration(const PlaneSphereGeometry& geom,
                                       const MirrorModel& m1,
                                       const MirrorModel& m2, double T,
                                       const SummationPolicy& policy,
                                       double rel_tol) {
  check(geom);
  EvalResult out;
  long nodes = 0;
  auto integrand = [&](double ell) {
    PlanePlaneProblem p{m1, m2, ell, 1.0, T};
    const EvalResult pr = pressure(p, policy);
    nodes += pr.diagnostics.nodes_used;
    return pr.value * (geom.R - (ell - geom.L));
  };
  const QuadResult q = gk_adaptive(integrand, geom.L, geom.L + geom.R, rel_tol,
                                   0.0, policy.quad_max_nodes);
  out.value = 2.0 * constants::pi * q.value;
  out.err_estimate = 2.0 * constants::pi * q.err;
  out.diagnostics.nodes_used = nodes;
  out.diagnostics.truncation_reached = !q.converged;
  return out;
}

}  // namespace casimir
