#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>

#include "superholonomy/linalg.hpp"
#include "superholonomy/random.hpp"
#include "superholonomy/supermatrix.hpp"

namespace superholonomy {

/// Â0 = a0^T (x) I_2n - I_m (x) A0: the action sigma -> sigma a0 - A0 sigma on
/// odd (2n x m) matrices, written in column-major vec coordinates.
struct Ahat {
  Eigen::MatrixXd matrix;
  double det = 0.0;
  int rank = 0;
  /// 2mn
  int size = 0;
  bool singular() const { return rank < size; }
};

Ahat mod_ahat(const Eigen::MatrixXd& a0, const Eigen::MatrixXd& A0);
Ahat mod_ahat(const SuperMatrix& U);

/// det(a0^T (x) I - I (x) S0 A0 S0^{-1}) and det(a0^T (x) I - I (x) A0).
/// Throws NotInvertibleError for singular S0.
std::pair<double, double> mod_det_conjugation_invariance(const Eigen::MatrixXd& a0,
                                                         const Eigen::MatrixXd& A0,
                                                         const Eigen::MatrixXd& S0);

/// Body blocks (s0, S0) of the conjugation the recursion starts from.
struct GaugeSeed {
  Eigen::MatrixXd s0;
  Eigen::MatrixXd S0;
};

struct GaugeFixResult {
  /// OSp element with U_fixed = S U S^{-1}.
  SuperMatrix S;
  SuperMatrix U_fixed;
  /// Number of Grassmann degrees that had to be solved.
  int steps = 0;
};

/// Removes the odd blocks of U by conjugation, solving
/// sigma_d a0 - S0 A0 S0^{-1} sigma_d = -(chi-block at degree d) one odd
/// degree at a time. Throws SingularAhatError when Â0 is singular.
GaugeFixResult mod_gauge_fix_sigma(const SuperMatrix& U,
                                   const std::optional<GaugeSeed>& seed = std::nullopt);

/// Given U1 = diag(a, A) with det Â0 != 0 and [U1, U2] = 0, reports whether the
/// odd blocks of U2 vanish. Throws HypothesisError if U1 is not block
/// diagonal, Â0 is singular, or the pair does not commute.
bool mod_commuting_pair_forces_diagonal(const SuperMatrix& U1, const SuperMatrix& U2,
                                        double tol = kDefaultTolerance);

/// 2(2nm - r) with r = rank Â0. Throws HypothesisError when the bodies do not
/// commute or rank B̂0 != r.
int mod_fermionic_moduli_count(const Eigen::MatrixXd& a0, const Eigen::MatrixXd& b0,
                               const Eigen::MatrixXd& A0, const Eigen::MatrixXd& B0);

/// Degree-one count computed from supermatrix arithmetic alone: the dimension
/// of the solutions (chi1, mu1) of [U1, U2] = 0 at first order in a single
/// theta, minus the dimension of the odd gauge orbit through the body pair.
struct BruteForceCount {
  int solution_dim = 0;
  int orbit_dim = 0;
  int moduli() const { return solution_dim - orbit_dim; }
};
BruteForceCount mod_fermionic_moduli_bruteforce(const Eigen::MatrixXd& a0,
                                                const Eigen::MatrixXd& b0,
                                                const Eigen::MatrixXd& A0,
                                                const Eigen::MatrixXd& B0);

/// Body blocks of a commuting pair (a0, A0), (b0, B0).
struct BodyPair {
  Eigen::MatrixXd a0, A0, b0, B0;
  std::string kind;
};

/// Random commuting bodies exp(xZ), exp(yZ) on a common one-parameter
/// subgroup of O(m) x Sp(2n). Z is drawn from one of three families: generic,
/// nilpotent in Sp(2n) (parabolic), or a rotation shared between the two
/// factors, so that both singular and regular Â0 occur.
BodyPair random_commuting_body_pair(int m, int n, Rng& rng);

/// Commuting pair of holonomies around the two torus cycles.
struct HolonomyPair {
  SuperMatrix U1;
  SuperMatrix U2;
  std::string sector;
  double det_ahat = 0.0;
  int rank = 0;
  int moduli = 0;
};

/// Max coefficient of U1 U2 - U2 U1.
double commutator_residual(const SuperMatrix& U1, const SuperMatrix& U2);

/// Gauge-fixes a pair through whichever holonomy has a nonsingular Â0 and
/// applies the same conjugation to the other. Throws SingularAhatError when
/// both are singular.
std::pair<SuperMatrix, SuperMatrix> mod_gauge_fix_pair(const SuperMatrix& U1,
                                                       const SuperMatrix& U2);

}  // namespace superholonomy
