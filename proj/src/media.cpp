#include "casimir/media.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

EpsilonTable::EpsilonTable(std::vector<double> xi, std::vector<double> eps)
    : xi_(std::move(xi)), eps_(std::move(eps)) {
  if (xi_.size() != eps_.size())
    throw std::invalid_argument("EpsilonTable: column size mismatch");
  if (xi_.size() < 2)
    throw std::invalid_argument("EpsilonTable: need at least 2 samples");
  for (std::size_t i = 0; i < xi_.size(); ++i) {
    if (!(xi_[i] >= 0.0) || !std::isfinite(xi_[i]))
      throw std::invalid_argument("EpsilonTable: xi must be finite and >= 0");
    if (i > 0 && !(xi_[i] > xi_[i - 1]))
      throw std::invalid_argument("EpsilonTable: xi must be strictly increasing");
    if (!(eps_[i] >= 1.0))
      throw std::invalid_argument("EpsilonTable: eps must be >= 1");
  }
}

EpsilonTable EpsilonTable::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("EpsilonTable: cannot open " + path);
  std::string line;
  std::vector<double> xi, eps;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      // require the documented header
      std::string h = line;
      h.erase(std::remove_if(h.begin(), h.end(), ::isspace), h.end());
      if (h != "xi_rad_per_s,epsilon")
        throw std::runtime_error(
            "EpsilonTable: expected header 'xi_rad_per_s,epsilon' in " + path);
      header_seen = true;
      continue;
    }
    std::istringstream ss(line);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b))
      throw std::runtime_error("EpsilonTable: malformed row '" + line + "'");
    xi.push_back(std::stod(a));
    eps.push_back(std::stod(b));
  }
  if (!header_seen) throw std::runtime_error("EpsilonTable: missing header");
  return EpsilonTable(std::move(xi), std::move(eps));
}

double EpsilonTable::eval(double xi) const {
  if (xi < xi_.front() || xi > xi_.back()) {
    std::ostringstream msg;
    msg << "EpsilonTable: xi=" << xi << " outside valid range ["
        << xi_.front() << ", " << xi_.back() << "]";
    throw range_error(msg.str());
  }
  auto it = std::lower_bound(xi_.begin(), xi_.end(), xi);
  std::size_t hi = static_cast<std::size_t>(it - xi_.begin());
  if (hi == 0) return eps_.front();
  if (xi == xi_[hi]) return eps_[hi];
  std::size_t lo = hi - 1;
  const double f0 = eps_[lo] - 1.0, f1 = eps_[hi] - 1.0;
  const double t = (std::log(xi) - std::log(xi_[lo])) /
                   (std::log(xi_[hi]) - std::log(xi_[lo]));
  if (f0 > 0.0 && f1 > 0.0) {
    return 1.0 + std::exp((1.0 - t) * std::log(f0) + t * std::log(f1));
  }
  // an endpoint sits exactly at eps = 1: fall back to linear in (eps-1)
  return 1.0 + (1.0 - t) * f0 + t * f1;
}

double eval_epsilon_tabulated(const EpsilonTable& table, double xi) {
  return table.eval(xi);
}

MirrorModel MirrorModel::perfect() { return MirrorModel{}; }

MirrorModel MirrorModel::plasma(double omega_p) {
  if (!(omega_p > 0.0)) throw std::domain_error("plasma: omega_p must be > 0");
  MirrorModel m;
  m.kind = MirrorKind::Plasma;
  m.omega_p = omega_p;
  return m;
}

MirrorModel MirrorModel::drude(double omega_p, double gamma) {
  if (!(omega_p > 0.0)) throw std::domain_error("drude: omega_p must be > 0");
  if (!(gamma >= 0.0)) throw std::domain_error("drude: gamma must be >= 0");
  MirrorModel m;
  m.kind = MirrorKind::Drude;
  m.omega_p = omega_p;
  m.gamma = gamma;
  return m;
}

MirrorModel MirrorModel::tabulated(EpsilonTable table, double tail_omega_p,
                                   double tail_gamma) {
  MirrorModel m;
  m.kind = MirrorKind::Tabulated;
  m.table = std::make_shared<EpsilonTable>(std::move(table));
  m.omega_p = tail_omega_p;
  m.gamma = tail_gamma;
  return m;
}

std::string MirrorModel::label() const {
  switch (kind) {
    case MirrorKind::Perfect:
      return "perfect";
    case MirrorKind::Plasma:
      return "plasma";
    case MirrorKind::Drude:
      return "drude";
    case MirrorKind::Tabulated:
      return "tabulated";
  }
  return "?";
}

namespace {

double eps_hat(const MirrorModel& model, double xi) {
  if (!model.interband) return 1.0;
  const EpsilonTable& t = *model.interband;
  // the interband part is regular; clamp to the end values outside the table
  if (xi <= t.xi_front()) return t.eps_front();
  if (xi >= t.xi_back()) return t.eps_back();
  return t.eval(xi);
}

}  // namespace

double eval_epsilon(const MirrorModel& model, double xi) {
  if (!(xi > 0.0)) throw std::domain_error("eval_epsilon: xi must be > 0");
  switch (model.kind) {
    case MirrorKind::Perfect:
      throw std::domain_error(
          "eval_epsilon: perfect mirror has no finite dielectric function");
    case MirrorKind::Plasma:
      return eps_hat(model, xi) + model.omega_p * model.omega_p / (xi * xi);
    case MirrorKind::Drude:
      return eps_hat(model, xi) +
             model.omega_p * model.omega_p / (xi * (xi + model.gamma));
    case MirrorKind::Tabulated: {
      const EpsilonTable& t = *model.table;
      if (xi >= t.xi_back()) return t.eps_back();  // high-frequency plateau
      if (xi >= t.xi_front()) return t.eval(xi);
      if (model.omega_p > 0.0) {
        // analytic Drude tail below the table, matched at the first node
        const double sigma_over_xi = [&](double x) {
          return model.omega_p * model.omega_p / (x * (x + model.gamma));
        }(t.xi_front());
        const double eps_hat0 = std::max(1.0, t.eps_front() - sigma_over_xi);
        return eps_hat0 +
               model.omega_p * model.omega_p / (xi * (xi + model.gamma));
      }
      std::ostringstream msg;
      msg << "eval_epsilon: xi=" << xi << " below tabulated range ["
          << t.xi_front() << ", " << t.xi_back()
          << "] and no Drude tail was supplied";
      throw range_error(msg.str());
    }
  }
  throw std::logic_error("eval_epsilon: unreachable");
}

double mean_occupation(double omega, double T) {
  if (!(omega > 0.0)) throw std::domain_error("mean_occupation: omega must be > 0");
  if (T < 0.0) throw std::domain_error("mean_occupation: T must be >= 0");
  if (T == 0.0) return 0.0;
  const double x = constants::hbar * omega / (constants::k_B * T);
  return 1.0 / std::expm1(x);
}

double mean_energy_per_mode(double omega, double T) {
  if (!(omega > 0.0))
    throw std::domain_error("mean_energy_per_mode: omega must be > 0");
  if (T < 0.0) throw std::domain_error("mean_energy_per_mode: T must be >= 0");
  const double zp = 0.5 * constants::hbar * omega;
  if (T == 0.0) return zp;
  return (mean_occupation(omega, T) + 0.5) * constants::hbar * omega;
}

double vacuum_energy_density_cutoff(double omega_max) {
  if (omega_max < 0.0)
    throw std::domain_error("vacuum_energy_density_cutoff: omega_max < 0");
  const double hw = constants::hbar * omega_max;
  const double hc = constants::hbar * constants::c;
  return hw * hw * hw * hw /
         (8.0 * constants::pi * constants::pi * hc * hc * hc);
}

double plasma_wavelength(double omega_p) {
  if (!(omega_p > 0.0))
    throw std::domain_error("plasma_wavelength: omega_p must be > 0");
  return 2.0 * constants::pi * constants::c / omega_p;
}

double thermal_wavelength(double T) {
  if (!(T > 0.0)) throw std::domain_error("thermal_wavelength: T must be > 0");
  return constants::hbar * constants::c / (constants::k_B * T);
}

double gold_omega_p() {
  return 2.0 * constants::pi * constants::c / 136e-9;
}

double gold_gamma() { return gold_omega_p() / 250.0; }

MirrorModel gold_plasma() { return MirrorModel::plasma(gold_omega_p()); }

MirrorModel gold_drude() {
  return MirrorModel::drude(gold_omega_p(), gold_gamma());
}

}  // namespace casimir
