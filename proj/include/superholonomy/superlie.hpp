#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "superholonomy/grassmann.hpp"
#include "superholonomy/supermatrix.hpp"

namespace superholonomy {

/// Outcome of normalizing the sigma-matrix data of osp(1|2).
///
/// The generators are J_a = j_scale[a] diag(0, sigma_a) and
/// Q_alpha = q_scale (0, -c_alpha^T C; c_alpha, 0). The relations fitted are
///   [J_a, J_b] = eps_ab^c J_c,  eps_abc = epsilon_012 * LeviCivita_abc,
///   [J_a, Q_alpha] = (sigma_a)_alpha^beta Q_beta,
///   {Q_alpha, Q_beta} = (sigma^a)_alpha^gamma C_gamma_beta J_a,
/// with indices raised by eta = diag(-1, 1, 1).
struct Osp12Fit {
  std::array<double, 3> j_scale{};
  double q_scale = 0.0;
  double epsilon_012 = 0.0;
  /// str(T_I T_J) = str_normalization * eta_IJ.
  double str_normalization = 0.0;
  double residual_jj = 0.0;
  double residual_jq = 0.0;
  double residual_qq = 0.0;
  std::string convention;
};

/// Super Lie algebra given by graded structure constants f_IJ^K and the
/// invariant form eta_IJ, optionally with a real matrix representation.
///
/// Representation matrices of odd generators have real entries in the
/// off-diagonal blocks; elements of the Grassmann envelope are obtained by
/// multiplying them with odd Grassmann coefficients.
class SuperAlgebra {
 public:
  SuperAlgebra(std::string name, std::vector<std::string> labels, std::vector<Parity> parities,
               std::vector<double> structure_constants, Eigen::MatrixXd eta);

  /// Derives f and eta from representation matrices of size (m+n):
  /// eta_IJ = str(T_I T_J) / str_normalization and f by projecting the graded
  /// brackets of the matrices back onto the basis through eta.
  static SuperAlgebra from_representation(std::string name, std::vector<std::string> labels,
                                          std::vector<Parity> parities,
                                          std::vector<Eigen::MatrixXd> rep, int m, int n,
                                          double str_normalization = 1.0);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  Parity parity(int i) const { return parities_[i]; }
  const std::vector<int>& even_indices() const { return even_; }
  const std::vector<int>& odd_indices() const { return odd_; }

  double f(int i, int j, int k) const { return f_[(i * dim() + j) * dim() + k]; }
  const std::vector<double>& structure_constants() const { return f_; }
  const Eigen::MatrixXd& eta() const { return eta_; }
  Eigen::MatrixXd eta_inverse() const { return eta_.inverse(); }

  bool has_representation() const { return !rep_.empty(); }
  const Eigen::MatrixXd& rep(int i) const { return rep_.at(i); }
  int rep_m() const { return rep_m_; }
  int rep_n() const { return rep_n_; }
  double str_normalization() const { return str_normalization_; }
  /// Max deviation of the matrix brackets from sum_K f_IJ^K T_K.
  double projection_residual() const { return projection_residual_; }

  const std::optional<Osp12Fit>& osp12_fit() const { return fit_; }

  /// Copy with f_IJ^K shifted by delta (and f_JI^K kept graded antisymmetric).
  SuperAlgebra with_perturbed_constant(int i, int j, int k, double delta) const;
  /// Copy with a different invariant form.
  SuperAlgebra with_eta(Eigen::MatrixXd eta) const;

 private:
  friend SuperAlgebra alg_build_osp12();

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Parity> parities_;
  std::vector<int> even_;
  std::vector<int> odd_;
  std::vector<double> f_;
  Eigen::MatrixXd eta_;
  std::vector<Eigen::MatrixXd> rep_;
  int rep_m_ = 0;
  int rep_n_ = 0;
  double str_normalization_ = 1.0;
  double projection_residual_ = 0.0;
  std::optional<Osp12Fit> fit_;
};

/// The sigma matrices (sigma_a)_alpha^beta, a = 0, 1, 2.
std::array<Eigen::Matrix2d, 3> osp12_sigma();

/// osp(1|2) from the sigma-matrix data, normalized so that the three
/// defining relations hold exactly in the 3x3 representation.
SuperAlgebra alg_build_osp12();

/// osp(m|2n): every (m+2n)-matrix X with X^st H + H X = 0, H = diag(I_m, C_2n).
/// Even part o(m) + sp(2n), 2mn odd generators.
SuperAlgebra alg_build_osp(int m, int n);

/// Max entry of the blocks of X^st H + H X for a real representation matrix.
double osp_tangent_residual(const Eigen::MatrixXd& x, int m, int n2);

/// Bracket of homogeneous real coefficient vectors: sum x^I y^J f_IJ^K.
/// Throws ParityError when an argument mixes even and odd generators.
Eigen::VectorXd alg_bracket(const SuperAlgebra& alg, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& y);

/// Bracket in the Grassmann envelope. Coefficients of even generators must be
/// Grassmann-even and those of odd generators Grassmann-odd.
std::vector<GrassmannElement> alg_bracket(const SuperAlgebra& alg,
                                          const std::vector<GrassmannElement>& x,
                                          const std::vector<GrassmannElement>& y);

struct JacobiReport {
  double max_residual = 0.0;
  std::array<int, 3> worst{-1, -1, -1};
  bool pass = false;
};

/// Evaluates [X,[Y,Z}} - [[X,Y},Z} - (-1)^{|X||Y|}[Y,[X,Z}} on all basis triples.
JacobiReport alg_check_jacobi(const SuperAlgebra& alg, double tol);

/// Fermion-fermion block J_alpha^beta = c^a f_{a alpha}^beta of the adjoint
/// action of c^a J_a. Rows and columns follow odd_indices().
Eigen::MatrixXd alg_ff_block(const SuperAlgebra& alg, const Eigen::VectorXd& c);

/// Envelope element sum_I x^I T_I as an even supermatrix.
SuperMatrix alg_element(const SuperAlgebra& alg, const std::vector<GrassmannElement>& coeffs);

/// Coefficients of an even supermatrix in the envelope, monomial by monomial.
/// Throws HypothesisError if X is not in the span (residual above tol).
std::vector<GrassmannElement> alg_coefficients(const SuperAlgebra& alg, const SuperMatrix& x,
                                               double tol = 1e-9);

/// Coefficients of a real matrix in the span of the representation.
Eigen::VectorXd alg_real_coefficients(const SuperAlgebra& alg, const Eigen::MatrixXd& x);

/// Graded bracket of representation matrices: XY - (-1)^{|X||Y|} YX.
Eigen::MatrixXd graded_matrix_bracket(const Eigen::MatrixXd& x, Parity px,
                                      const Eigen::MatrixXd& y, Parity py);

/// tr(top-left m block) - tr(rest) of a real matrix.
double real_supertrace(const Eigen::MatrixXd& x, int m);

}  // namespace superholonomy
