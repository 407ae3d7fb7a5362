#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "superholonomy/grassmann.hpp"
#include "superholonomy/linalg.hpp"
#include "superholonomy/superlie.hpp"

namespace superholonomy {

/// Phase space of the homogeneous sector: even variables A_k^a and odd
/// variables psi_k^alpha, k = 1, 2, with
///   {A_k^a, A_j^b}* = eps_kj eta^{ab},  {psi_k^alpha, psi_j^beta}* = eps_kj C^{alpha beta},
/// eps_12 = 1. The matrices eta^{ab} and C^{alpha beta} are the even and odd
/// blocks of `inverse_form`, which defaults to the inverse of the algebra's eta.
class PhaseSpace {
 public:
  explicit PhaseSpace(SuperAlgebra alg);
  PhaseSpace(SuperAlgebra alg, Eigen::MatrixXd inverse_form);

  const SuperAlgebra& algebra() const { return alg_; }
  int even_dim() const { return static_cast<int>(alg_.even_indices().size()); }
  int odd_dim() const { return static_cast<int>(alg_.odd_indices().size()); }
  int even_vars() const { return 2 * even_dim(); }
  int odd_vars() const { return 2 * odd_dim(); }

  /// Variable index of A_k^a (k = 1, 2; a = position in even_indices()).
  int a_var(int k, int a) const { return (k - 1) * even_dim() + a; }
  /// Variable index of psi_k^alpha (alpha = position in odd_indices()).
  int psi_var(int k, int alpha) const { return (k - 1) * odd_dim() + alpha; }

  /// {z_i, z_j}* on the generators.
  const Eigen::MatrixXd& even_form() const { return even_form_; }
  const Eigen::MatrixXd& odd_form() const { return odd_form_; }
  /// eta^{ab} and C^{alpha beta}.
  Eigen::MatrixXd eta_upper() const;
  Eigen::MatrixXd c_upper() const;

 private:
  void build(const Eigen::MatrixXd& inverse_form);

  SuperAlgebra alg_;
  Eigen::MatrixXd inverse_form_;
  Eigen::MatrixXd even_form_;
  Eigen::MatrixXd odd_form_;
};

using PhaseSpacePtr = std::shared_ptr<const PhaseSpace>;

PhaseSpacePtr make_phase_space(const SuperAlgebra& alg);
PhaseSpacePtr make_phase_space(const SuperAlgebra& alg, const Eigen::MatrixXd& inverse_form);

/// Key of a monomial: exponents of the even variables and the set of odd
/// variables, multiplied in increasing index order.
struct PolyKey {
  std::vector<int> exps;
  std::uint32_t odd = 0;
  friend bool operator<(const PolyKey& x, const PolyKey& y) {
    return x.odd != y.odd ? x.odd < y.odd : x.exps < y.exps;
  }
  friend bool operator==(const PolyKey& x, const PolyKey& y) {
    return x.odd == y.odd && x.exps == y.exps;
  }
};

/// Polynomial in commuting A_k^a and anticommuting psi_k^alpha with real
/// coefficients, kept in canonical form.
class GradedPolynomial {
 public:
  explicit GradedPolynomial(PhaseSpacePtr ctx);

  static GradedPolynomial constant(PhaseSpacePtr ctx, double c);
  static GradedPolynomial a(PhaseSpacePtr ctx, int k, int a);
  static GradedPolynomial psi(PhaseSpacePtr ctx, int k, int alpha);

  const PhaseSpacePtr& context() const { return ctx_; }
  const std::map<PolyKey, double>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  double max_abs() const;
  bool is_even() const;
  bool is_odd() const;
  /// Parity of a homogeneous polynomial; throws ParityError otherwise. Zero is even.
  Parity parity() const;
  int degree() const;

  GradedPolynomial operator-() const;
  GradedPolynomial& operator+=(const GradedPolynomial& o);
  GradedPolynomial& operator-=(const GradedPolynomial& o);
  GradedPolynomial& operator*=(double s);
  friend GradedPolynomial operator+(GradedPolynomial x, const GradedPolynomial& y) { return x += y; }
  friend GradedPolynomial operator-(GradedPolynomial x, const GradedPolynomial& y) { return x -= y; }
  friend GradedPolynomial operator*(GradedPolynomial x, double s) { return x *= s; }
  friend GradedPolynomial operator*(double s, GradedPolynomial x) { return x *= s; }
  friend GradedPolynomial operator*(const GradedPolynomial& x, const GradedPolynomial& y);

  GradedPolynomial d_even(int var) const;
  /// Derivative acting from the left (psi moved to the front).
  GradedPolynomial d_left(int var) const;
  /// Derivative acting from the right (psi moved to the back).
  GradedPolynomial d_right(int var) const;

  /// Value at Grassmann-valued coordinates (even values for A, odd for psi).
  GrassmannElement evaluate(const std::vector<GrassmannElement>& a_values,
                            const std::vector<GrassmannElement>& psi_values) const;

  /// Adds c * key.
  void add_term(const PolyKey& key, double c);

 private:
  void check_context(const GradedPolynomial& o) const;

  PhaseSpacePtr ctx_;
  std::map<PolyKey, double> terms_;
};

std::string to_string(const GradedPolynomial& p);

/// Graded Dirac bracket, sum over generators of
/// (P d_right z_i) {z_i, z_j}* (d_left z_j Q).
GradedPolynomial sp_bracket(const GradedPolynomial& p, const GradedPolynomial& q);

enum class ConstraintVariant {
  /// f_bc^a A_1^b A_2^c in G^a.
  Commutator,
  /// f_bc^a A_1^b A_1^c, the variant with the repeated index.
  RepeatedIndex,
};

/// G^K for K over the basis of the algebra, in basis order:
///   G^a = f_bc^a A_1^b A_2^c + f_alpha beta^a psi_1^alpha psi_2^beta,
///   G^alpha = f_a beta^alpha (A_1^a psi_2^beta - A_2^a psi_1^beta).
struct Constraints {
  std::vector<GradedPolynomial> even;
  std::vector<GradedPolynomial> odd;
  /// even and odd interleaved back into basis order.
  std::vector<GradedPolynomial> all;
};
Constraints sp_constraints(const PhaseSpacePtr& ctx,
                           ConstraintVariant variant = ConstraintVariant::Commutator);

/// Values A_k^a, psi_k^alpha read off Lie-algebra elements X_1, X_2 of the
/// Grassmann envelope.
struct PhasePoint {
  std::vector<GrassmannElement> a;
  std::vector<GrassmannElement> psi;
};
PhasePoint phase_point_from_elements(const PhaseSpace& ctx, const SuperMatrix& x1,
                                     const SuperMatrix& x2);

/// max over constraints of the largest coefficient of G at the point.
double sp_constraint_residual(const std::vector<GradedPolynomial>& g, const PhasePoint& pt);

/// The constraints are lowered, G_I = eta_IK G^K, and every bracket
/// {G_I, G_J}* is matched against the span of the G_K. For Grassmann-valued
/// smearings G(lambda) = lambda^I G_I this reads
///   {G(lambda), G(mu)}* = G([lambda, mu]) * factor
/// exactly when (-1)^{|I||J|} g_IJ^K = factor * f_IJ^K, which is the form
/// reported in `induced`.
struct ClosureReport {
  /// Component constants: {G_I, G_J}* = g_IJ^K G_K.
  std::vector<double> component;
  /// Envelope constants (-1)^{|I||J|} g_IJ^K.
  std::vector<double> induced;
  int dim = 0;
  /// Largest coefficient of {G_I, G_J}* - g_IJ^K G_K.
  double max_residual = 0.0;
  /// Least-squares lambda in induced = lambda f and the largest deviation.
  double lambda = 0.0;
  double proportionality_residual = 0.0;
  bool pass = false;
};

ClosureReport sp_check_closure(const PhaseSpacePtr& ctx, double tol = kDefaultTolerance);
ClosureReport sp_check_closure(const SuperAlgebra& alg, double tol = kDefaultTolerance);

struct EfmReport {
  double det = 0.0;
  int rank = 0;
  /// Number of odd generators, 2mn.
  int odd_dim = 0;
  /// 2(2mn - r).
  int moduli = 0;
  bool singular() const { return rank < odd_dim; }
};

/// Determinant and rank of J_alpha^beta = c^a f_{a alpha}^beta.
EfmReport sp_efm(const SuperAlgebra& alg, const Eigen::VectorXd& c);

struct GaugeFixingReport {
  /// r = rank of c^a f_{a alpha}^beta.
  int r = 0;
  /// det of the r x r matrix {G^alpha~, chi^beta~}* on the sector.
  double det = 0.0;
  /// Largest coefficient of f_alpha beta^a psi_1^alpha psi_2^beta restricted to
  /// the surface G^alpha~ = chi^beta~ = 0.
  double afc_residual = 0.0;
  /// Odd coordinates left after imposing constraints and gauge conditions.
  int free_odd = 0;
  bool pass = false;
};

/// Gauge-fixing check at A_k^a = calA_k c^a. `chi` must hold r polynomials
/// linear in psi (DimensionError otherwise).
GaugeFixingReport sp_gauge_fixing_check(const PhaseSpacePtr& ctx, const Eigen::VectorXd& c,
                                        double cal_a1, double cal_a2,
                                        const std::vector<GradedPolynomial>& chi,
                                        double tol = kDefaultTolerance);

/// The r independent fermionic constraints on the sector A_k^a = calA_k c^a,
/// as polynomials in psi.
std::vector<GradedPolynomial> sp_sector_fermionic_constraints(const PhaseSpacePtr& ctx,
                                                              const Eigen::VectorXd& c,
                                                              double cal_a1, double cal_a2);

/// calA_1 psi_2^j - calA_2 psi_1^j for the odd generator at position j.
GradedPolynomial sp_paired_condition(const PhaseSpacePtr& ctx, int j, double cal_a1,
                                     double cal_a2);

struct ExponentialSectorSample {
  double p = 0.0;
  double q = 0.0;
  double commutator = 0.0;
  double constraint_residual = 0.0;
  double fc_residual = 0.0;
  double gfc_residual = 0.0;
};

struct ExponentialSectorReport {
  /// Position (in odd_indices) of psi^+, the odd direction hit by sigma_+.
  int plus_index = 0;
  int minus_index = 1;
  Eigen::VectorXd c;
  std::vector<ExponentialSectorSample> samples;
  double max_commutator = 0.0;
  double max_constraint_residual = 0.0;
};

struct ExponentialSectorPoint {
  double p = 0.0;
  double q = 1.0;
  /// Odd element of B_N.
  GrassmannElement psi;
};

/// U_1 = exp 2pi(p sigma_+ + (p/q) c^alpha Q_alpha psi),
/// U_2 = exp 2pi(q sigma_+ + c^alpha Q_alpha psi) at each point, with c^alpha
/// fixed. Throws DimensionError for q = 0.
ExponentialSectorReport sp_osp12_exponential_sector(
    const SuperAlgebra& osp12, const std::vector<ExponentialSectorPoint>& points,
    const Eigen::Vector2d& c_alpha);

}  // namespace superholonomy
