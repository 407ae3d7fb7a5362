#pragma once

#include <Eigen/Dense>

#include "superholonomy/gmatrix.hpp"
#include "superholonomy/linalg.hpp"
#include "superholonomy/random.hpp"
#include "superholonomy/superlie.hpp"
#include "superholonomy/supermatrix.hpp"

namespace superholonomy {

/// H = diag(I_m, C_2n).
Eigen::MatrixXd osp_metric(int m, int n2);

/// Max coefficient of M^st H M - H, together with the body conditions
/// a0^T a0 = I and A0^T C A0 = C. Throws DimensionError when the odd block
/// size is not even.
double grp_membership_residual(const SuperMatrix& M);

bool grp_is_member(const SuperMatrix& M, double tol = kDefaultTolerance);

/// xi = -(a^T)^{-1} chi^T C A. Throws NotInvertibleError for singular a.
GMatrix grp_xi_from_chi(const GMatrix& a, const GMatrix& A, const GMatrix& chi);

/// (a, xi, chi, A) with xi recovered from chi.
SuperMatrix grp_assemble(const GMatrix& a, const GMatrix& A, const GMatrix& chi);

/// Odd algebra element (0, -eta^T C; eta, 0) for an odd (2n x m) matrix eta.
SuperMatrix osp_odd_generator(const GMatrix& eta, int m);

struct MemberSampling {
  double body_scale = 0.8;
  double soul_scale = 0.5;
  /// Grassmann-even souls on the even coefficients (B_N^+ instead of reals).
  bool even_souls = true;
  /// Multiply by a reflection diag(-1, 1, ..) in O(m) half of the time.
  bool disconnected = true;
};

/// Random odd element: degree-1 terms plus degree-3 when N >= 3.
GrassmannElement random_odd(int generators, Rng& rng, double scale = 1.0);
/// Random real number plus (optionally) a random even soul.
GrassmannElement random_even(int generators, Rng& rng, double body_scale, double soul_scale);

/// Random element of the Grassmann envelope of an algebra with a representation.
SuperMatrix sample_algebra_element(const SuperAlgebra& alg, int generators, Rng& rng,
                                   const MemberSampling& opts = {});

/// exp of a random envelope element of osp(m|2n), optionally times a reflection.
SuperMatrix sample_member(const SuperAlgebra& osp, int generators, Rng& rng,
                          const MemberSampling& opts = {});

Eigen::MatrixXd random_symplectic(int n, Rng& rng, double scale = 0.8);
Eigen::MatrixXd random_orthogonal(int m, Rng& rng);

}  // namespace superholonomy
