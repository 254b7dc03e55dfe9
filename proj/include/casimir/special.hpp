#pragma once

#include <vector>

namespace casimir {

// Log-domain special functions backing the multipole engine. Everything here
// works on ln|value| so that x^l / (2l+1)!! style growth never overflows.

// ln i_l(x) and ln k_l(x) for l = 0..lmax, x > 0, where i_l and k_l are the
// modified spherical Bessel functions of the first and second kind
// (k_l includes the conventional pi/2 factor: k_0(x) = (pi/2x) e^{-x}).
// i_l via downward (Miller) recurrence, k_l via upward recurrence; both are
// stable in those directions.
void log_mod_sph_bessel(int lmax, double x, std::vector<double>& log_i,
                        std::vector<double>& log_k);

// Normalized angular functions of the multipole basis, continued to z > 1:
//   pb_lm(z) = m N_lm Phat_l^m(z) / sqrt(z^2-1)
//   tb_lm(z) = N_lm [ l z Phat_l^m(z) - (l+m) Phat_{l-1}^m(z) ] / sqrt(z^2-1)
// with Phat_l^m(z) = (z^2-1)^{m/2} d^m P_l / dz^m  (no Condon-Shortley phase)
// and N_lm = sqrt( (2l+1)(l-m)! / (4 pi (l+m)!) ).
// Both are >= 0 for z > 1, m >= 0. Output vectors cover l = max(1,m)..lmax,
// as ln values (-inf where the function vanishes, e.g. pb at m = 0).
void log_legendre_pb_tb(int lmax, int m, double z, std::vector<double>& log_pb,
                        std::vector<double>& log_tb);

struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre rule on [-1, 1] (Golub-Welsch, cached per order).
const GaussRule& gauss_legendre(int n);

// Gauss-Laguerre rule for weight e^{-u} on [0, inf) (cached per order).
const GaussRule& gauss_laguerre(int n);

}  // namespace casimir
