#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "superholonomy/moduli.hpp"
#include "superholonomy/superlie.hpp"

namespace superholonomy {

enum class AbelianType { So2, Hyperbolic, Parabolic };

std::string to_string(AbelianType t);

/// One bosonic conjugacy-class sector of commuting OSp(1|2) pairs
/// (diag(a0, eps1 e^X), diag(b0, eps2 e^Y)). SO(2) sectors carry no eps signs
/// (eps1 = eps2 = 0).
struct SectorDescriptor {
  int a0 = 1;
  int b0 = 1;
  int eps1 = 0;
  int eps2 = 0;
  AbelianType type = AbelianType::So2;
  bool fermionic = false;
  /// Degree-one count from mod_fermionic_moduli_bruteforce.
  int moduli = 0;
  /// 2(2nm - r), or -1 when rank Â0 != rank B̂0.
  int closed_form_moduli = -1;
  int rank1 = 0;
  int rank2 = 0;
  HolonomyPair representative;
};

struct SectorReport {
  std::string group;
  int bosonic_sectors = 0;
  int fermionic_sectors = 0;
  std::vector<SectorDescriptor> sectors;
  /// c1, c2 of the parabolic representatives and c1^2 + c2^2.
  double c1 = 0.0;
  double c2 = 0.0;
  double c_norm_squared = 0.0;
};

/// All 2*16 + 4 bosonic sectors of OSp(1|2) with representatives over B_N.
/// Fermionic representatives follow (a0, xi_k; chi_k, eps_k e^{c_k sigma_+})
/// with chi_k = (0, eps_k c_k theta_1)^T; the others are body pairs conjugated
/// by a fixed odd group element so that their odd blocks are nonzero.
SectorReport mod_enumerate_sectors_osp12(int generators = 2);

/// OSp(2|2) facts available in closed form: det Â0 against
/// (2cos phi - tr A0)^2 for a0 = R(phi), and the SO(2) x SO(2) sector.
struct Osp22Report {
  int grid_points = 0;
  double max_det_error = 0.0;
  int so2_rank = 0;
  int so2_moduli = 0;
  int so2_bruteforce_moduli = 0;
  bool partial = true;
};

/// grid x grid points: phi over (0, 2pi) against A0 = R(t) diag(e^s, e^-s).
Osp22Report mod_osp22_partial_report(int grid = 10);

/// U(phi) = diag(1, R(phi/2)) exp(phi (calA diag(0, sigma) + psi^alpha Q_alpha))
/// on a grid, with the connection U^{-1} dU/dphi.
struct NonexpFamily {
  std::vector<double> phi;
  std::vector<SuperMatrix> U;
  /// Central differences with step h.
  std::vector<SuperMatrix> connection;
  /// Closed form exp(-phi X) diag(0, R^{-1} R') exp(phi X) + X.
  std::vector<SuperMatrix> connection_exact;
  /// -exp(2pi calA sigma), the intended A-block body of U(2pi).
  Eigen::Matrix2d target_body;
};

NonexpFamily mod_build_nonexp_holonomy(const SuperAlgebra& osp12, double cal_a,
                                       const std::vector<GrassmannElement>& psi, int points,
                                       const Eigen::Matrix2d& sigma, double h = 1e-5);

/// sigma_+ = sigma_0 + sigma_2.
Eigen::Matrix2d sigma_plus();

}  // namespace superholonomy
