#include "casimir/reflection.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

double kappa(double xi, double k) {
  if (xi < 0.0 || k < 0.0) throw std::domain_error("kappa: negative argument");
  return std::hypot(k, xi / constants::c);
}

double fresnel_r(const MirrorModel& model, const SpectralPoint& point) {
  if (!(point.xi > 0.0))
    throw std::domain_error("fresnel_r: xi must be > 0 (use fresnel_r_static)");
  if (point.k < 0.0) throw std::domain_error("fresnel_r: k must be >= 0");
  if (model.kind == MirrorKind::Perfect)
    return point.pol == Pol::TE ? -1.0 : 1.0;

  const double eps = eval_epsilon(model, point.xi);
  const double K = kappa(point.xi, point.k);
  const double xc = point.xi / constants::c;
  const double kt = std::sqrt(eps * xc * xc + point.k * point.k);
  if (point.pol == Pol::TE) return (K - kt) / (K + kt);
  return (eps * K - kt) / (eps * K + kt);
}

double fresnel_r_static(const MirrorModel& model, double k, Pol pol) {
  if (!(k > 0.0)) throw std::domain_error("fresnel_r_static: k must be > 0");
  switch (model.kind) {
    case MirrorKind::Perfect:
      return pol == Pol::TE ? -1.0 : 1.0;
    case MirrorKind::Plasma: {
      if (pol == Pol::TM) return 1.0;
      const double q = model.omega_p / constants::c;
      const double kt = std::hypot(k, q);
      return (k - kt) / (k + kt);
    }
    case MirrorKind::Drude: {
      if (pol == Pol::TM) return 1.0;
      if (model.gamma == 0.0) {
        const double q = model.omega_p / constants::c;
        const double kt = std::hypot(k, q);
        return (k - kt) / (k + kt);
      }
      return 0.0;  // TE reflection vanishes at xi -> 0 for any gamma > 0
    }
    case MirrorKind::Tabulated: {
      if (model.omega_p > 0.0) {
        // static behavior is set by the conduction tail
        if (pol == Pol::TM) return 1.0;
        if (model.gamma > 0.0) return 0.0;
        const double q = model.omega_p / constants::c;
        const double kt = std::hypot(k, q);
        return (k - kt) / (k + kt);
      }
      throw std::domain_error(
          "fresnel_r_static: tabulated model needs a Drude tail to define the "
          "xi -> 0 limit");
    }
  }
  throw std::logic_error("fresnel_r_static: unreachable");
}

ReflectionFn reflection_of(const MirrorModel& model) {
  return [model](double xi, double k, Pol pol) {
    if (xi == 0.0) return fresnel_r_static(model, k, pol);
    return fresnel_r(model, SpectralPoint{xi, k, pol});
  };
}

}  // namespace casimir
