#include "qps/bath.hpp"

#include <cmath>
#include <stdexcept>

namespace qps {

void BathSpin::validate() const {
  if (a_perp_khz < 0.0)
    throw std::invalid_argument("BathSpin: a_perp must be nonnegative");
  if (p_z < -1.0 || p_z > 1.0)
    throw std::invalid_argument("BathSpin: p_z outside [-1, 1]");
  if (p_perp < 0.0 || p_perp > 1.0)
    throw std::invalid_argument("BathSpin: p_perp outside [0, 1]");
  if (p_z * p_z + p_perp * p_perp > 1.0 + 1e-12)
    throw std::invalid_argument("BathSpin: Bloch vector longer than 1");
}

void BathConfig::validate() const {
  for (const auto& s : spins) s.validate();
}

FieldParams FieldParams::from_b0(double b0, double gamma_n, double gamma_e) {
  FieldParams f;
  f.b0_gauss = b0;
  f.gamma_n_khz_per_gauss = gamma_n;
  f.gamma_e_mhz_per_gauss = gamma_e;
  f.omega_L = khz_to_rad_us(gamma_n * b0);
  return f;
}

void FieldParams::validate() const {
  if (!(omega_L > 0.0)) throw std::invalid_argument("FieldParams: omega_L must be > 0");
}

std::vector<AngularSpin> angular_spins(const BathConfig& bath) {
  std::vector<AngularSpin> out;
  out.reserve(bath.spins.size());
  for (const auto& s : bath.spins) {
    AngularSpin a;
    a.a_par = khz_to_rad_us(s.a_par_khz);
    a.a_perp = khz_to_rad_us(s.a_perp_khz);
    a.px = s.p_perp * std::cos(s.phi0);
    a.py = s.p_perp * std::sin(s.phi0);
    a.pz = s.p_z;
    out.push_back(a);
  }
  return out;
}

double epsilon(const BathConfig& bath, const FieldParams& field) {
  field.validate();
  double s = 0.0;
  for (const auto& a : angular_spins(bath)) s += a.a_perp * a.a_perp;
  return s / (field.omega_L * field.omega_L);
}

double weighted_axial_polarization(const BathConfig& bath) {
  double num = 0.0, den = 0.0;
  for (const auto& a : angular_spins(bath)) {
    num += a.pz * a.a_perp * a.a_perp;
    den += a.a_perp * a.a_perp;
  }
  if (den == 0.0)
    throw std::invalid_argument("weighted_axial_polarization: undefined weighting (all a_perp zero)");
  return num / den;
}

DipolarCouplings couplings_from_geometry(double r_nm, double theta_rad,
                                         const FieldParams& field) {
  if (!(r_nm > 0.0)) throw std::invalid_argument("couplings_from_geometry: r must be > 0");
  // (mu0/4pi) h gamma_e gamma_n / r^3 collapses to this numeric factor when
  // gamma_e is in MHz/G, gamma_n in kHz/G, r in nm and the result in kHz.
  const double d = 6.62607015 * field.gamma_e_mhz_per_gauss *
                   field.gamma_n_khz_per_gauss / (r_nm * r_nm * r_nm);
  const double c = std::cos(theta_rad);
  return {d * (1.0 - 3.0 * c * c), std::abs(3.0 * d * std::sin(2.0 * theta_rad))};
}

double gaussian_validity_horizon(const BathConfig& bath) {
  if (bath.spins.empty())
    throw std::invalid_argument("gaussian_validity_horizon: empty bath");
  double m = 0.0;
  for (const auto& a : angular_spins(bath))
    m = std::max(m, std::max(std::abs(a.a_par), a.a_perp));
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / m;
}

}  // namespace qps
