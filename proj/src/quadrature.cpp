#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace casimir {
namespace {

// 15-point Kronrod nodes/weights on [-1,1] and the embedded 7-point Gauss
// weights (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEst {
  double I15, err;
};

PanelEst gk15(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double i15 = kWk[7] * fv[7];
  double i7 = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    i15 += kWk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) i7 += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  i15 *= h;
  i7 *= h;
  double err = std::abs(i15 - i7);
  // QUADPACK-style sharpening of the raw difference
  err = std::min(err, std::pow(200.0 * err, 1.5) + 1e-300);
  return {i15, err};
}

void subdivide(const Integrand& f, double a, double b, const PanelEst& est,
               double tol_per_width, int depth, QuadResult& acc) {
  acc.nodes += 15;
  const double width = b - a;
  if (est.err <= tol_per_width * width || depth >= 40 ||
      acc.nodes >= 1000000) {
    acc.value += est.I15;
    acc.err += est.err;
    if (depth >= 40 || (est.err > tol_per_width * width)) acc.converged = false;
    return;
  }
  const double m = 0.5 * (a + b);
  const PanelEst left = gk15(f, a, m);
  const PanelEst right = gk15(f, m, b);
  subdivide(f, a, m, left, tol_per_width, depth + 1, acc);
  subdivide(f, m, b, right, tol_per_width, depth + 1, acc);
}

}  // namespace

QuadResult gk_adaptive(const Integrand& f, double a, double b, double rel_tol,
                       double abs_tol, long max_nodes) {
  QuadResult acc;
  if (a == b) return acc;
  const PanelEst whole = gk15(f, a, b);
  // tolerance budget distributed per unit width, scaled from the first pass
  const double target =
      std::max(abs_tol, rel_tol * std::max(std::abs(whole.I15), 1e-300));
  QuadResult out;
  out.converged = true;
  subdivide(f, a, b, whole, target / std::abs(b - a), 0, out);
  if (out.nodes > max_nodes) out.converged = false;
  return out;
}

QuadResult integrate_decaying(const Integrand& f, double a, double rel_tol,
                              double abs_tol, long max_nodes,
                              double first_width) {
  QuadResult total;
  double left = a;
  double width = first_width;
  int quiet_panels = 0;
  for (int panel = 0; panel < 64; ++panel) {
    const QuadResult p =
        gk_adaptive(f, left, left + width, rel_tol, abs_tol, max_nodes);
    total.value += p.value;
    total.err += p.err;
    total.nodes += p.nodes;
    total.converged = total.converged && p.converged;
    const double floor =
        std::max(abs_tol, rel_tol * std::abs(total.value));
    if (std::abs(p.value) < 0.5 * floor) {
      if (++quiet_panels >= 2) {
        total.err += std::abs(p.value);
        return total;
      }
    } else {
      quiet_panels = 0;
    }
    left += width;
    width *= 2.0;
    if (total.nodes >= max_nodes) {
      total.converged = false;
      return total;
    }
  }
  total.converged = false;
  return total;
}

}  // namespace casimir
