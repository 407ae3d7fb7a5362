#include "superholonomy/osp_group.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "superholonomy/errors.hpp"

namespace superholonomy {

Eigen::MatrixXd osp_metric(int m, int n2) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m + n2, m + n2);
  h.topLeftCorner(m, m).setIdentity();
  h.bottomRightCorner(n2, n2) = symplectic_form(n2 / 2);
  return h;
}

double grp_membership_residual(const SuperMatrix& M) {
  if (M.n() % 2 != 0) throw DimensionError("OSp(m|2n) needs an even-sized odd block");
  if (M.parity() != Parity::Even) throw ParityError("group elements are even supermatrices");
  const SuperMatrix H = SuperMatrix::from_body(osp_metric(M.m(), M.n()), M.m(), M.n(),
                                               M.generators());
  double r = (sm_supertranspose(M) * H * M - H).max_abs();
  const Eigen::MatrixXd a0 = M.a().body();
  const Eigen::MatrixXd A0 = M.A().body();
  const Eigen::MatrixXd c = symplectic_form(M.n() / 2);
  if (M.m() > 0) {
    r = std::max(r, (a0.transpose() * a0 - Eigen::MatrixXd::Identity(M.m(), M.m()))
                        .cwiseAbs().maxCoeff());
  }
  if (M.n() > 0) r = std::max(r, (A0.transpose() * c * A0 - c).cwiseAbs().maxCoeff());
  return r;
}

bool grp_is_member(const SuperMatrix& M, double tol) { return grp_membership_residual(M) <= tol; }

GMatrix grp_xi_from_chi(const GMatrix& a, const GMatrix& A, const GMatrix& chi) {
  const GMatrix c = GMatrix::from_body(symplectic_form(A.rows() / 2), a.generators());
  return -(inverse_even(a.transpose()) * chi.transpose() * c * A);
}

SuperMatrix grp_assemble(const GMatrix& a, const GMatrix& A, const GMatrix& chi) {
  return SuperMatrix::from_blocks(a, grp_xi_from_chi(a, A, chi), chi, A);
}

SuperMatrix osp_odd_generator(const GMatrix& eta, int m) {
  const int n2 = eta.rows();
  const int N = eta.generators();
  const GMatrix c = GMatrix::from_body(symplectic_form(n2 / 2), N);
  return SuperMatrix::from_blocks(GMatrix(m, m, N), -(eta.transpose() * c), eta,
                                  GMatrix(n2, n2, N));
}

GrassmannElement random_odd(int generators, Rng& rng, double scale) {
  std::vector<GrassmannElement::Term> terms;
  for (int i = 0; i < generators; ++i) terms.emplace_back(1u << i, uniform(rng, -scale, scale));
  if (generators >= 3) {
    for (Monomial mono = 0; mono < (1u << generators); ++mono) {
      if (degree(mono) == 3) terms.emplace_back(mono, uniform(rng, -scale, scale) * 0.5);
    }
  }
  return GrassmannElement(generators, std::move(terms));
}

GrassmannElement random_even(int generators, Rng& rng, double body_scale, double soul_scale) {
  std::vector<GrassmannElement::Term> terms;
  terms.emplace_back(0u, uniform(rng, -body_scale, body_scale));
  if (soul_scale > 0.0) {
    for (Monomial mono = 1; mono < (1u << generators); ++mono) {
      if (degree(mono) == 2) terms.emplace_back(mono, uniform(rng, -soul_scale, soul_scale));
    }
  }
  return GrassmannElement(generators, std::move(terms));
}

SuperMatrix sample_algebra_element(const SuperAlgebra& alg, int generators, Rng& rng,
                                   const MemberSampling& opts) {
  std::vector<GrassmannElement> coeffs;
  coeffs.reserve(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) {
    if (alg.parity(i) == Parity::Even) {
      coeffs.push_back(random_even(generators, rng, opts.body_scale,
                                   opts.even_souls ? opts.soul_scale : 0.0));
    } else {
      coeffs.push_back(random_odd(generators, rng));
    }
  }
  return alg_element(alg, coeffs);
}

SuperMatrix sample_member(const SuperAlgebra& osp, int generators, Rng& rng,
                          const MemberSampling& opts) {
  SuperMatrix g = sm_exp(sample_algebra_element(osp, generators, rng, opts));
  if (opts.disconnected && osp.rep_m() > 0 && coin(rng)) {
    Eigen::MatrixXd refl = Eigen::MatrixXd::Identity(g.size(), g.size());
    refl(0, 0) = -1.0;
    g = SuperMatrix::from_body(refl, g.m(), g.n(), generators) * g;
  }
  return g;
}

Eigen::MatrixXd random_symplectic(int n, Rng& rng, double scale) {
  Eigen::MatrixXd s(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i; j < 2 * n; ++j) s(i, j) = s(j, i) = uniform(rng, -scale, scale);
  const Eigen::MatrixXd x = symplectic_form(n) * s;
  return x.exp();
}

Eigen::MatrixXd random_orthogonal(int m, Rng& rng) {
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      k(i, j) = uniform(rng, -2.0, 2.0);
      k(j, i) = -k(i, j);
    }
  Eigen::MatrixXd o = k.exp();
  if (coin(rng)) o.row(0) *= -1.0;
  return o;
}

}  // namespace superholonomy
