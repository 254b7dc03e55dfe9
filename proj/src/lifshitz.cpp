#include "casimir/lifshitz.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace cn = constants;

double ideal_energy(double L, double A) {
  if (!(L > 0.0) || !(A > 0.0))
    throw std::domain_error("ideal_energy: L and A must be > 0");
  return -cn::hbar * cn::c * cn::pi * cn::pi * A / (720.0 * L * L * L);
}

double ideal_force(double L, double A) {
  if (!(L > 0.0) || !(A > 0.0))
    throw std::domain_error("ideal_force: L and A must be > 0");
  return -cn::hbar * cn::c * cn::pi * cn::pi * A / (240.0 * L * L * L * L);
}

double matsubara_xi(double T, long m) {
  if (!(T > 0.0))
    throw std::domain_error("matsubara_xi: T must be > 0 (zero-temperature runs use the xi-integral path)");
  if (m < 0) throw std::domain_error("matsubara_xi: m must be >= 0");
  return 2.0 * cn::pi * static_cast<double>(m) * cn::k_B * T / cn::hbar;
}

double log_denominator(double r_product, double kappa, double L) {
  if (std::abs(r_product) > 1.0)
    throw std::invalid_argument("log_denominator: |r1 r2| must be <= 1");
  if (kappa < 0.0 || L <= 0.0)
    throw std::domain_error("log_denominator: kappa >= 0 and L > 0 required");
  const double t = r_product * std::exp(-2.0 * kappa * L);
  if (t >= 1.0) throw std::invalid_argument("log_denominator: d <= 0");
  return std::log1p(-t);
}

namespace {

// Per-(xi, pol) mode integrals after the substitution u = 2 K L:
//   energy:   Int_{u0}^inf u    ln(1 - r(k(u)) e^{-u}) du
//   pressure: Int_{u0}^inf u^2  r(k(u)) e^{-u} / (1 - r e^{-u}) du
// u0 = 2 xi L / c, k(u) = sqrt(u^2 - u0^2) / (2L).
struct ModeIntegrals {
  const ReflectionFn* r1;
  const ReflectionFn* r2;
  double L;
  double xi;

  double product(double u, double u0, Pol pol) const {
    const double s = u - u0;
    const double k = std::sqrt(s * (u + u0)) / (2.0 * L);
    return (*r1)(xi, k, pol) * (*r2)(xi, k, pol);
  }

  QuadResult energy(Pol pol, const SummationPolicy& policy) const {
    const double u0 = 2.0 * xi * L / cn::c;
    return integrate_decaying(
        [&](double s) {
          const double u = u0 + s;
          return u * std::log1p(-product(u, u0, pol) * std::exp(-u));
        },
        0.0, policy.quad_rel_tol, 0.0, policy.quad_max_nodes);
  }

  QuadResult pressure(Pol pol, const SummationPolicy& policy) const {
    const double u0 = 2.0 * xi * L / cn::c;
    return integrate_decaying(
        [&](double s) {
          const double u = u0 + s;
          const double re = product(u, u0, pol) * std::exp(-u);
          return u * u * re / (1.0 - re);
        },
        0.0, policy.quad_rel_tol, 0.0, policy.quad_max_nodes);
  }
};

enum class Quantity { FreeEnergy, Pressure };

// sum over both polarizations of the requested mode integral at one xi
QuadResult both_pols(const ModeIntegrals& mi, Quantity q,
                     const SummationPolicy& policy) {
  QuadResult te = q == Quantity::FreeEnergy ? mi.energy(Pol::TE, policy)
                                            : mi.pressure(Pol::TE, policy);
  QuadResult tm = q == Quantity::FreeEnergy ? mi.energy(Pol::TM, policy)
                                            : mi.pressure(Pol::TM, policy);
  te.value += tm.value;
  te.err += tm.err;
  te.nodes += tm.nodes;
  te.converged = te.converged && tm.converged;
  return te;
}

// Matsubara sum with weight-1/2 m = 0 term, geometric tail correction, and
// the three-quiet-terms stopping rule.
EvalResult matsubara_sum(const ReflectionFn& r1, const ReflectionFn& r2,
                         double L, double T, Quantity q,
                         const SummationPolicy& policy) {
  EvalResult out;
  ModeIntegrals mi{&r1, &r2, L, 0.0};
  QuadResult q0 = both_pols(mi, q, policy);
  double acc = 0.5 * q0.value;
  double err = 0.5 * q0.err;
  long nodes = q0.nodes;
  long terms = 1;
  int quiet = 0;
  double prev = 0.0;
  double last = 0.0;
  bool capped = true;
  for (long m = 1; m <= policy.m_max_cap; ++m) {
    mi.xi = matsubara_xi(T, m);
    const QuadResult qm = both_pols(mi, q, policy);
    acc += qm.value;
    err += qm.err;
    nodes += qm.nodes;
    ++terms;
    prev = last;
    last = qm.value;
    if (std::abs(qm.value) < policy.rel_tol * std::abs(acc))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 3) {
      capped = false;
      break;
    }
  }
  // geometric extrapolation of the remaining tail from the last term ratio
  if (prev != 0.0 && last != 0.0) {
    const double ratio = std::abs(last / prev);
    if (ratio < 1.0) {
      const double tail = last * ratio / (1.0 - ratio);
      acc += tail;
      err += std::abs(tail);
    }
  }
  out.value = acc;
  out.err_estimate = err;
  out.diagnostics.terms_used = terms;
  out.diagnostics.nodes_used = nodes;
  out.diagnostics.truncation_reached = capped;
  return out;
}

// xi-integral over [0, inf) in the scaled variable y = 2 xi L / c
EvalResult xi_integral(const ReflectionFn& r1, const ReflectionFn& r2, double L,
                       Quantity q, const SummationPolicy& policy) {
  EvalResult out;
  long nodes = 0;
  bool inner_ok = true;
  double inner_rel_err = 0.0;
  auto g = [&](double y) {
    ModeIntegrals mi{&r1, &r2, L, y * cn::c / (2.0 * L)};
    const QuadResult r = both_pols(mi, q, policy);
    nodes += r.nodes;
    inner_ok = inner_ok && r.converged;
    if (r.value != 0.0)
      inner_rel_err = std::max(inner_rel_err, std::abs(r.err / r.value));
    return r.value;
  };
  const QuadResult outer = integrate_decaying(g, 0.0, policy.quad_rel_tol, 0.0,
                                              policy.quad_max_nodes);
  out.value = outer.value;
  out.err_estimate = outer.err + inner_rel_err * std::abs(outer.value);
  out.diagnostics.nodes_used = nodes;
  out.diagnostics.truncation_reached = !(outer.converged && inner_ok);
  return out;
}

void check_problem(double L, double A) {
  if (!(L > 0.0)) throw std::domain_error("plane-plane: L must be > 0");
  if (!(A > 0.0)) throw std::domain_error("plane-plane: A must be > 0");
}

}  // namespace

EvalResult free_energy(const ReflectionFn& r1, const ReflectionFn& r2, double L,
                       double A, double T, const SummationPolicy& policy) {
  check_problem(L, A);
  if (!(T > 0.0))
    throw std::domain_error("free_energy: T must be > 0 (use free_energy_T0)");
  EvalResult r = matsubara_sum(r1, r2, L, T, Quantity::FreeEnergy, policy);
  const double pref = A * cn::k_B * T / (8.0 * cn::pi * L * L);
  r.value *= pref;
  r.err_estimate *= pref;
  return r;
}

EvalResult free_energy_T0(const ReflectionFn& r1, const ReflectionFn& r2,
                          double L, double A, const SummationPolicy& policy) {
  check_problem(L, A);
  EvalResult r = xi_integral(r1, r2, L, Quantity::FreeEnergy, policy);
  const double pref =
      A * cn::hbar * cn::c / (32.0 * cn::pi * cn::pi * L * L * L);
  r.value *= pref;
  r.err_estimate *= pref;
  return r;
}

EvalResult pressure(const ReflectionFn& r1, const ReflectionFn& r2, double L,
                    double T, const SummationPolicy& policy) {
  check_problem(L, 1.0);
  if (T > 0.0) {
    EvalResult r = matsubara_sum(r1, r2, L, T, Quantity::Pressure, policy);
    const double pref = -cn::k_B * T / (8.0 * cn::pi * L * L * L);
    r.value *= pref;
    r.err_estimate *= std::abs(pref);
    return r;
  }
  EvalResult r = xi_integral(r1, r2, L, Quantity::Pressure, policy);
  const double pref =
      -cn::hbar * cn::c / (32.0 * cn::pi * cn::pi * L * L * L * L);
  r.value *= pref;
  r.err_estimate *= std::abs(pref);
  return r;
}

EvalResult free_energy(const PlanePlaneProblem& problem,
                       const SummationPolicy& policy) {
  return free_energy(reflection_of(problem.mirror1),
                     reflection_of(problem.mirror2), problem.L, problem.A,
                     problem.T, policy);
}

EvalResult free_energy_T0(const PlanePlaneProblem& problem,
                          const SummationPolicy& policy) {
  if (problem.T != 0.0)
    throw std::domain_error("free_energy_T0: problem.T must be 0");
  return free_energy_T0(reflection_of(problem.mirror1),
                        reflection_of(problem.mirror2), problem.L, problem.A,
                        policy);
}

EvalResult pressure(const PlanePlaneProblem& problem,
                    const SummationPolicy& policy) {
  return pressure(reflection_of(problem.mirror1),
                  reflection_of(problem.mirror2), problem.L, problem.T, policy);
}

EvalResult force(const PlanePlaneProblem& problem,
                 const SummationPolicy& policy) {
  EvalResult r = pressure(problem, policy);
  r.value *= problem.A;
  r.err_estimate *= problem.A;
  return r;
}

double eta_F(const PlanePlaneProblem& problem, const SummationPolicy& policy) {
  if (problem.T != 0.0)
    throw std::domain_error("eta_F: defined at T = 0 (use eta_F_thermal)");
  return force(problem, policy).value / ideal_force(problem.L, problem.A);
}

double eta_E(const PlanePlaneProblem& problem, const SummationPolicy& policy) {
  if (problem.T != 0.0)
    throw std::domain_error("eta_E: defined at T = 0");
  return free_energy_T0(problem, policy).value /
         ideal_energy(problem.L, problem.A);
}

double eta_F_thermal(const PlanePlaneProblem& problem,
                     const SummationPolicy& policy) {
  return force(problem, policy).value / ideal_force(problem.L, problem.A);
}

double thermal_ratio(double L, double T, double omega_p, double gamma,
                     const SummationPolicy& policy) {
  if (!(L > 0.0) || !(T > 0.0))
    throw std::domain_error("thermal_ratio: L and T must be > 0");
  if (!(gamma > 0.0))
    throw std::domain_error("thermal_ratio: gamma must be > 0 for the Drude leg");
  PlanePlaneProblem plasma{MirrorModel::plasma(omega_p),
                           MirrorModel::plasma(omega_p), L, 1.0, T};
  PlanePlaneProblem drude{MirrorModel::drude(omega_p, gamma),
                          MirrorModel::drude(omega_p, gamma), L, 1.0, T};
  const double fp = free_energy(plasma, policy).value;
  const double fd = free_energy(drude, policy).value;
  if (fd == 0.0) throw numerical_error("thermal_ratio: Drude free energy is 0");
  return fp / fd;
}

double matsubara_term(const PlanePlaneProblem& problem,
                      const SummationPolicy& policy, long m) {
  if (!(problem.T > 0.0))
    throw std::domain_error("matsubara_term: T must be > 0");
  const ReflectionFn r1 = reflection_of(problem.mirror1);
  const ReflectionFn r2 = reflection_of(problem.mirror2);
  ModeIntegrals mi{&r1, &r2, problem.L, m == 0 ? 0.0 : matsubara_xi(problem.T, m)};
  const QuadResult q = both_pols(mi, Quantity::FreeEnergy, policy);
  const double weight = m == 0 ? 0.5 : 1.0;
  const double pref =
      problem.A * cn::k_B * problem.T / (8.0 * cn::pi * problem.L * problem.L);
  return pref * weight * q.value;
}

}  // namespace casimir
