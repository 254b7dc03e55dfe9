#include "casimir/special.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {
namespace {

// mantissa/exponent pair kept normalized so recurrences never overflow
struct Scaled {
  double m = 0.0;
  double e = 0.0;  // value = m * exp(e)
  void normalize() {
    if (m == 0.0) return;
    const double a = std::abs(m);
    if (a > 1e150 || a < 1e-150) {
      const double l = std::log(a);
      m /= std::exp(l);
      e += l;
    }
  }
  double log_abs() const { return std::log(std::abs(m)) + e; }
};

double log_sinh(double x) {
  // ln sinh x, stable for large x
  if (x > 20.0) return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
  return std::log(std::sinh(x));
}

}  // namespace

void log_mod_sph_bessel(int lmax, double x, std::vector<double>& log_i,
                        std::vector<double>& log_k) {
  if (x <= 0.0) throw std::domain_error("log_mod_sph_bessel: x must be > 0");
  if (lmax < 0) throw std::domain_error("log_mod_sph_bessel: lmax < 0");
  log_i.assign(lmax + 1, 0.0);
  log_k.assign(lmax + 1, 0.0);

  // k_l: upward recurrence k_{l+1} = k_{l-1} + ((2l+1)/x) k_l
  {
    Scaled km1{std::exp(-x), std::log(constants::pi / (2.0 * x))};  // k_0
    km1.normalize();
    log_k[0] = km1.log_abs();
    if (lmax >= 1) {
      Scaled k{km1.m * (1.0 + 1.0 / x), km1.e};  // k_1 = k_0 (1 + 1/x)
      k.normalize();
      log_k[1] = k.log_abs();
      for (int l = 1; l < lmax; ++l) {
        Scaled next;
        next.e = k.e;
        next.m = km1.m * std::exp(km1.e - k.e) + ((2.0 * l + 1.0) / x) * k.m;
        next.normalize();
        km1 = k;
        k = next;
        log_k[l + 1] = k.log_abs();
      }
    }
  }

  // i_l: downward Miller recurrence from a start order above lmax,
  // normalized against i_0 = sinh(x)/x.
  {
    const int start = lmax + 16 + static_cast<int>(std::sqrt(40.0 * x));
    std::vector<double> ratio_ln(lmax + 1, 0.0);
    Scaled ip1{1e-280, 0.0};  // arbitrary seed for l = start+1
    Scaled i{1e-270, 0.0};    // seed for l = start
    std::vector<Scaled> raw(lmax + 1);
    for (int l = start; l >= 1; --l) {
      // i_{l-1} = i_{l+1} + ((2l+1)/x) i_l
      Scaled im1;
      im1.e = i.e;
      im1.m = ip1.m * std::exp(ip1.e - i.e) + ((2.0 * l + 1.0) / x) * i.m;
      im1.normalize();
      ip1 = i;
      i = im1;
      if (l - 1 <= lmax) raw[l - 1] = im1;
    }
    const double log_i0 = log_sinh(x) - std::log(x);
    const double shift = log_i0 - raw[0].log_abs();
    for (int l = 0; l <= lmax; ++l) log_i[l] = raw[l].log_abs() + shift;
  }
}

void log_legendre_pb_tb(int lmax, int m, double z, std::vector<double>& log_pb,
                        std::vector<double>& log_tb) {
  if (z <= 1.0) throw std::domain_error("log_legendre_pb_tb: z must be > 1");
  if (m < 0 || lmax < 1 || m > lmax)
    throw std::domain_error("log_legendre_pb_tb: bad (lmax, m)");
  const int lmin = std::max(1, m);
  const int count = lmax - lmin + 1;
  log_pb.assign(count, -std::numeric_limits<double>::infinity());
  log_tb.assign(count, -std::numeric_limits<double>::infinity());

  const double s2 = (z - 1.0) * (z + 1.0);
  const double s = std::sqrt(s2);
  const double log_s = 0.5 * std::log(s2);

  // Phat_l^m stored scaled; recurrence upward in l is stable for z > 1.
  std::vector<Scaled> P(lmax + 2);
  double lg = 0.0;
  for (int i = 1; i < 2 * m; i += 2) lg += std::log(static_cast<double>(i));
  P[m] = Scaled{1.0, lg + m * log_s};  // (2m-1)!! (z^2-1)^{m/2}
  if (m + 1 <= lmax) {
    P[m + 1] = Scaled{(2.0 * m + 1.0) * z * P[m].m, P[m].e};
    P[m + 1].normalize();
  }
  for (int l = m + 1; l < lmax; ++l) {
    Scaled next;
    next.e = P[l].e;
    next.m = ((2.0 * l + 1.0) * z * P[l].m -
              (l + m) * P[l - 1].m * std::exp(P[l - 1].e - P[l].e)) /
             (l - m + 1.0);
    next.normalize();
    P[l + 1] = next;
  }

  for (int l = lmin; l <= lmax; ++l) {
    const int idx = l - lmin;
    double lnN = 0.5 * (std::log(2.0 * l + 1.0) + std::lgamma(l - m + 1.0) -
                        std::log(4.0 * constants::pi) -
                        std::lgamma(l + m + 1.0));
    if (m > 0 && P[l].m > 0.0)
      log_pb[idx] = std::log(static_cast<double>(m)) + P[l].log_abs() + lnN - log_s;
    double v;
    double ve = P[l].e;
    if (l - 1 >= m) {
      v = l * z * P[l].m - (l + m) * P[l - 1].m * std::exp(P[l - 1].e - P[l].e);
    } else {
      v = l * z * P[l].m;
    }
    if (v <= 0.0)
      throw std::runtime_error("log_legendre_pb_tb: recurrence lost positivity");
    log_tb[idx] = std::log(v) + ve + lnN - log_s;
  }
}

namespace {

GaussRule golub_welsch(const std::vector<double>& diag,
                       const std::vector<double>& offdiag, double mu0) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = diag[i];
    if (i + 1 < n) {
      J(i, i + 1) = offdiag[i];
      J(i + 1, i) = offdiag[i];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.x[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.w[i] = mu0 * v0 * v0;
  }
  return rule;
}

std::map<int, GaussRule> g_legendre_cache;
std::map<int, GaussRule> g_laguerre_cache;
std::mutex g_rule_mutex;

}  // namespace

const GaussRule& gauss_legendre(int n) {
  std::lock_guard<std::mutex> lock(g_rule_mutex);
  auto it = g_legendre_cache.find(n);
  if (it != g_legendre_cache.end()) return it->second;
  std::vector<double> diag(n, 0.0), off(n - 1);
  for (int i = 1; i < n; ++i)
    off[i - 1] = i / std::sqrt(4.0 * i * i - 1.0);
  auto rule = golub_welsch(diag, off, 2.0);
  return g_legendre_cache.emplace(n, std::move(rule)).first->second;
}

const GaussRule& gauss_laguerre(int n) {
  std::lock_guard<std::mutex> lock(g_rule_mutex);
  auto it = g_laguerre_cache.find(n);
  if (it != g_laguerre_cache.end()) return it->second;
  std::vector<double> diag(n), off(n - 1);
  for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + 1.0;
  for (int i = 1; i < n; ++i) off[i - 1] = static_cast<double>(i);
  auto rule = golub_welsch(diag, off, 1.0);
  return g_laguerre_cache.emplace(n, std::move(rule)).first->second;
}

}  // namespace casimir
