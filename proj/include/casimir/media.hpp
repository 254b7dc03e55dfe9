#pragma once

#include <memory>
#include <string>
#include <vector>

namespace casimir {

// Sampled dielectric function at imaginary frequencies. Rows strictly
// increasing in xi, eps >= 1. Interpolation is log-log linear on (eps - 1),
// exact at the nodes.
class EpsilonTable {
 public:
  EpsilonTable(std::vector<double> xi, std::vector<double> eps);

  // CSV with header `xi_rad_per_s,epsilon`; lines starting with '#' ignored.
  static EpsilonTable from_csv(const std::string& path);

  double eval(double xi) const;  // range error outside [xi_front, xi_back]
  double xi_front() const { return xi_.front(); }
  double xi_back() const { return xi_.back(); }
  double eps_front() const { return eps_.front(); }
  double eps_back() const { return eps_.back(); }
  std::size_t size() const { return xi_.size(); }

 private:
  std::vector<double> xi_;
  std::vector<double> eps_;
};

enum class MirrorKind { Perfect, Plasma, Drude, Tabulated };

// Optical response of one mirror, evaluated at imaginary frequencies.
// Plasma/Drude carry (omega_p, gamma) and an optional interband table for
// the regular part eps-hat (default: 1). Tabulated carries full eps samples
// plus an optional Drude tail used analytically below the table range.
struct MirrorModel {
  MirrorKind kind = MirrorKind::Perfect;
  double omega_p = 0.0;  // rad/s
  double gamma = 0.0;    // rad/s
  std::shared_ptr<const EpsilonTable> interband;  // eps-hat for Plasma/Drude
  std::shared_ptr<const EpsilonTable> table;      // full eps for Tabulated

  static MirrorModel perfect();
  static MirrorModel plasma(double omega_p);
  static MirrorModel drude(double omega_p, double gamma);
  static MirrorModel tabulated(EpsilonTable table, double tail_omega_p = 0.0,
                               double tail_gamma = 0.0);

  std::string label() const;  // short tag for CSV output
};

// eps[i xi] = eps_hat[i xi] + sigma[i xi]/xi with sigma = omega_p^2/(xi+gamma).
// Perfect mirrors have no finite dielectric function (domain error);
// xi <= 0 is a domain error (the xi -> 0 limit has dedicated operations).
double eval_epsilon(const MirrorModel& model, double xi);

// Log-log interpolation of (eps-1) between bracketing samples.
double eval_epsilon_tabulated(const EpsilonTable& table, double xi);

// Mean photon number per mode, 1/(exp(hbar w/kT) - 1); returns 0 at T = 0.
double mean_occupation(double omega, double T);

// (nbar + 1/2) hbar w; the zero-point half survives at T = 0.
double mean_energy_per_mode(double omega, double T);

// (hbar w_max)^4 / (8 pi^2 (hbar c)^3), the vacuum energy density below a
// hard frequency cutoff.
double vacuum_energy_density_cutoff(double omega_max);

double plasma_wavelength(double omega_p);  // 2 pi c / omega_p
double thermal_wavelength(double T);       // hbar c / (k_B T)

// Default gold parameters: omega_p from lambda_p = 136 nm; gamma = omega_p/250
// is a configurable placeholder, not measured ground truth.
double gold_omega_p();
double gold_gamma();
MirrorModel gold_plasma();
MirrorModel gold_drude();

}  // namespace casimir
