#pragma once

#include <string>
#include <vector>

#include "qps/units.hpp"

namespace qps {

/// One bath nucleus: secular hyperfine couplings and initial polarization.
/// Couplings are stored as A/2pi in kHz, matching tabulated values. a_perp is
/// kept nonnegative; the transverse orientation lives in phi0.
struct BathSpin {
  double a_par_khz = 0.0;
  double a_perp_khz = 0.0;  // >= 0
  double p_z = 0.0;         // in [-1, 1]
  double p_perp = 0.0;      // in [0, 1]
  double phi0 = 0.0;        // rad, transverse polarization phase

  void validate() const;
};

struct BathConfig {
  std::vector<BathSpin> spins;
  std::string label;

  void validate() const;
  int size() const { return static_cast<int>(spins.size()); }
};

/// Static field parameters. omega_L is angular (rad/us); gyromagnetic ratios
/// keep their customary units (kHz/G for nuclei, MHz/G for the electron).
struct FieldParams {
  double b0_gauss = 310.8;
  double omega_L = khz_to_rad_us(335.0);
  double gamma_n_khz_per_gauss = 1.0705;
  double gamma_e_mhz_per_gauss = 2.8025;
  double d_zfs = khz_to_rad_us(2.87e6);  // zero-field splitting, rad/us

  /// omega_L derived from gamma_n * b0 instead of the explicit value.
  static FieldParams from_b0(double b0_gauss, double gamma_n = 1.0705,
                             double gamma_e = 2.8025);

  void validate() const;
  double larmor_period() const { return two_pi / omega_L; }
};

/// Per-spin couplings in angular units plus the Bloch vector, the form every
/// computation consumes. Conversion from BathSpin happens here and only here.
struct AngularSpin {
  double a_par = 0.0;   // rad/us, signed
  double a_perp = 0.0;  // rad/us, >= 0
  double px = 0.0, py = 0.0, pz = 0.0;
};

std::vector<AngularSpin> angular_spins(const BathConfig& bath);

/// Dimensionless qubit-bath coupling strength: sum_j A_perp_j^2 / omega_L^2.
double epsilon(const BathConfig& bath, const FieldParams& field);

/// Coupling-weighted axial polarization: sum_j p_z_j A_perp_j^2 / sum_j A_perp_j^2.
/// Throws if every a_perp is zero.
double weighted_axial_polarization(const BathConfig& bath);

/// Point-dipole hyperfine couplings (kHz) for a nucleus at distance r_nm and
/// polar angle theta from the probe axis:
///   a_par  = d (1 - 3 cos^2 theta),   a_perp = |3 d sin(2 theta)|,
///   d = (mu0/4pi) h gamma_e gamma_n / r^3.
/// The convention is frozen against tabulated couplings; see tests.
struct DipolarCouplings {
  double a_par_khz;
  double a_perp_khz;
};
DipolarCouplings couplings_from_geometry(double r_nm, double theta_rad,
                                         const FieldParams& field);

/// Advisory timescale below which a Gaussian treatment of this bath holds:
/// 1 / max_j(|A_par_j|, A_perp_j), couplings taken as angular frequencies.
double gaussian_validity_horizon(const BathConfig& bath);

}  // namespace qps
