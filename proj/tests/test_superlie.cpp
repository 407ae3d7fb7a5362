#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "helpers.hpp"
#include "superholonomy/errors.hpp"
#include "superholonomy/osp_group.hpp"
#include "superholonomy/superlie.hpp"

using namespace superholonomy;

namespace {

// XY - (-1)^{|X||Y|} YX, written out again here.
Eigen::MatrixXd bracket(const SuperAlgebra& alg, int i, int j) {
  const Eigen::MatrixXd& x = alg.rep(i);
  const Eigen::MatrixXd& y = alg.rep(j);
  const bool both_odd = alg.parity(i) == Parity::Odd && alg.parity(j) == Parity::Odd;
  return x * y + (both_odd ? 1.0 : -1.0) * y * x;
}

double str_real(const Eigen::MatrixXd& x, int m) {
  return x.topLeftCorner(m, m).trace() - x.bottomRightCorner(x.rows() - m, x.rows() - m).trace();
}

Eigen::MatrixXd span_matrix(const SuperAlgebra& alg) {
  const int s = alg.rep(0).rows();
  Eigen::MatrixXd b(s * s, alg.dim());
  for (int i = 0; i < alg.dim(); ++i) b.col(i) = alg.rep(i).reshaped();
  return b;
}

double max_matrix_bracket_error(const SuperAlgebra& alg) {
  double worst = 0.0;
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(alg.rep(0).rows(), alg.rep(0).cols());
      for (int k = 0; k < alg.dim(); ++k) t += alg.f(i, j, k) * alg.rep(k);
      worst = std::max(worst, (bracket(alg, i, j) - t).cwiseAbs().maxCoeff());
    }
  return worst;
}

Eigen::VectorXd unit(int dim, int i) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v(i) = 1.0;
  return v;
}

}  // namespace

TEST(Osp12, GeneratorsAndParities) {
  const SuperAlgebra alg = alg_build_osp12();
  ASSERT_EQ(alg.dim(), 5);
  EXPECT_EQ(alg.even_indices().size(), 3u);
  EXPECT_EQ(alg.odd_indices().size(), 2u);
  EXPECT_EQ(alg.label(0), "J0");
  EXPECT_EQ(alg.label(4), "Q2");
  for (int i = 0; i < alg.dim(); ++i) EXPECT_LT(osp_tangent_residual(alg.rep(i), 1, 2), 1e-15);
}

TEST(Osp12, DefiningRelationsHoldExactly) {
  const SuperAlgebra alg = alg_build_osp12();
  ASSERT_TRUE(alg.osp12_fit().has_value());
  const Osp12Fit& fit = *alg.osp12_fit();
  EXPECT_LT(fit.residual_jj, 1e-14);
  EXPECT_LT(fit.residual_jq, 1e-14);
  EXPECT_LT(fit.residual_qq, 1e-14);
  EXPECT_FALSE(fit.convention.empty());
}

TEST(Osp12, JJCommutatorRaisedByMinkowskiEta) {
  const SuperAlgebra alg = alg_build_osp12();
  const double e = alg.osp12_fit()->epsilon_012;
  const Eigen::Vector3d eta(-1, 1, 1);
  // [J1, J2] = eps_12^c J_c = e eta^00 J_0.
  EXPECT_NEAR(alg.f(1, 2, 0), e * eta(0), 1e-14);
  EXPECT_NEAR(alg.f(1, 2, 1), 0.0, 1e-14);
  EXPECT_NEAR(alg.f(1, 2, 2), 0.0, 1e-14);
  EXPECT_NEAR(alg.f(0, 1, 2), e * eta(2), 1e-14);
  EXPECT_NEAR(alg.f(2, 0, 1), e * eta(1), 1e-14);
}

TEST(Osp12, QQClosesOnJWithSigmaCoefficients) {
  const SuperAlgebra alg = alg_build_osp12();
  const auto sigma = osp12_sigma();
  const Eigen::Vector3d eta(-1, 1, 1);
  Eigen::Matrix2d c;
  c << 0, 1, -1, 0;
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be) {
      for (int a = 0; a < 3; ++a) {
        const double expected = (eta(a) * sigma[a] * c)(al, be);
        EXPECT_NEAR(alg.f(3 + al, 3 + be, a), expected, 1e-14);
      }
      EXPECT_NEAR(alg.f(3 + al, 3 + be, 3), 0.0, 1e-15);
      EXPECT_NEAR(alg.f(3 + al, 3 + be, 4), 0.0, 1e-15);
    }
}

TEST(Osp12, EtaFromSupertrace) {
  const SuperAlgebra alg = alg_build_osp12();
  const double nu = alg.str_normalization();
  EXPECT_NE(nu, 0.0);
  Eigen::Matrix3d expected = Eigen::Vector3d(-1, 1, 1).asDiagonal();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      EXPECT_NEAR(str_real(alg.rep(a) * alg.rep(b), 1) / nu, expected(a, b), 1e-14);
      EXPECT_NEAR(alg.eta()(a, b), expected(a, b), 1e-14);
    }
  EXPECT_NEAR(alg.eta()(3, 4), -alg.eta()(4, 3), 1e-15);
  EXPECT_NE(alg.eta()(3, 4), 0.0);
}

TEST(SuperLie, StructureConstantsReproduceMatrixBrackets) {
  for (const SuperAlgebra& alg : {alg_build_osp12(), alg_build_osp(1, 1), alg_build_osp(2, 1),
                                  alg_build_osp(1, 2), alg_build_osp(2, 2)}) {
    EXPECT_LT(max_matrix_bracket_error(alg), 1e-12) << alg.name();
    EXPECT_LT(alg.projection_residual(), 1e-12) << alg.name();
  }
}

TEST(SuperLie, GradedAntisymmetryAndParity) {
  for (const SuperAlgebra& alg : {alg_build_osp12(), alg_build_osp(2, 1), alg_build_osp(1, 2)}) {
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = 0; j < alg.dim(); ++j)
        for (int k = 0; k < alg.dim(); ++k) {
          const int pij = as_int(alg.parity(i)) * as_int(alg.parity(j));
          EXPECT_NEAR(alg.f(i, j, k), (pij ? 1.0 : -1.0) * alg.f(j, i, k), 1e-14);
          if ((as_int(alg.parity(i)) + as_int(alg.parity(j)) + as_int(alg.parity(k))) % 2) {
            EXPECT_EQ(alg.f(i, j, k), 0.0);
          }
        }
  }
}

TEST(SuperLie, OspDimensions) {
  struct Case {
    int m, n, even, odd;
  };
  for (const Case& c : {Case{1, 1, 3, 2}, Case{2, 1, 4, 4}, Case{1, 2, 10, 4}, Case{2, 2, 11, 8},
                        Case{3, 1, 6, 6}}) {
    const SuperAlgebra alg = alg_build_osp(c.m, c.n);
    EXPECT_EQ(static_cast<int>(alg.even_indices().size()), c.even);
    EXPECT_EQ(static_cast<int>(alg.odd_indices().size()), c.odd);
    EXPECT_EQ(c.even, c.m * (c.m - 1) / 2 + c.n * (2 * c.n + 1));
    EXPECT_EQ(c.odd, 2 * c.m * c.n);
    for (int i = 0; i < alg.dim(); ++i) EXPECT_EQ(osp_tangent_residual(alg.rep(i), c.m, 2 * c.n), 0.0);
  }
  EXPECT_THROW(alg_build_osp(0, 1), DimensionError);
  EXPECT_THROW(alg_build_osp(1, 0), DimensionError);
}

TEST(SuperLie, Osp11IsIsomorphicToOsp12) {
  const SuperAlgebra a = alg_build_osp12();
  const SuperAlgebra b = alg_build_osp(1, 1);
  // Both act on the same (1|2) space, so the change of basis is the coordinate
  // matrix of a's generators in b's span.
  const Eigen::MatrixXd span = span_matrix(b);
  const Eigen::MatrixXd target = span_matrix(a);
  const Eigen::MatrixXd p = span.colPivHouseholderQr().solve(target);  // a_I = sum_A p(A, I) b_A
  ASSERT_LT((span * p - target).cwiseAbs().maxCoeff(), 1e-13);
  ASSERT_GT(std::abs(p.determinant()), 1e-6);
  for (int i = 0; i < 5; ++i)
    for (int A = 0; A < 5; ++A)
      if (a.parity(i) != b.parity(A)) EXPECT_EQ(p(A, i), 0.0);
  double worst = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int l = 0; l < 5; ++l) {
        double lhs = 0.0;
        for (int k = 0; k < 5; ++k) lhs += a.f(i, j, k) * p(l, k);
        double rhs = 0.0;
        for (int A = 0; A < 5; ++A)
          for (int B = 0; B < 5; ++B) rhs += p(A, i) * p(B, j) * b.f(A, B, l);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  EXPECT_LT(worst, 1e-13);
}

TEST(SuperLie, JacobiPassesOnOspFamily) {
  for (const SuperAlgebra& alg : {alg_build_osp12(), alg_build_osp(1, 1), alg_build_osp(2, 1),
                                  alg_build_osp(1, 2), alg_build_osp(2, 2)}) {
    const JacobiReport r = alg_check_jacobi(alg, 1e-12);
    EXPECT_TRUE(r.pass) << alg.name() << " " << r.max_residual;
    EXPECT_LT(r.max_residual, 1e-12);
  }
}

TEST(SuperLie, JacobiDetectsPerturbation) {
  const SuperAlgebra alg = alg_build_osp12();
  const SuperAlgebra bad = alg.with_perturbed_constant(0, 3, 4, 0.1);
  EXPECT_NEAR(bad.f(0, 3, 4), alg.f(0, 3, 4) + 0.1, 1e-15);
  EXPECT_NEAR(bad.f(3, 0, 4), -bad.f(0, 3, 4), 1e-15);
  const JacobiReport r = alg_check_jacobi(bad, 1e-12);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.max_residual, 1e-3);
}

TEST(SuperLie, JacobiOracleFromMatrixAssociativity) {
  // The graded Jacobi identity of the matrix brackets holds by associativity;
  // compare it term by term with the structure-constant evaluation.
  const SuperAlgebra alg = alg_build_osp(2, 1);
  double worst = 0.0;
  for (int x = 0; x < alg.dim(); ++x)
    for (int y = 0; y < alg.dim(); ++y)
      for (int z = 0; z < alg.dim(); ++z) {
        Eigen::VectorXd lhs = Eigen::VectorXd::Zero(alg.dim());
        for (int k = 0; k < alg.dim(); ++k)
          for (int l = 0; l < alg.dim(); ++l) {
            const double sxy = (as_int(alg.parity(x)) & as_int(alg.parity(y))) ? -1.0 : 1.0;
            lhs(l) += alg.f(y, z, k) * alg.f(x, k, l) - alg.f(x, y, k) * alg.f(k, z, l) -
                      sxy * alg.f(x, z, k) * alg.f(y, k, l);
          }
        worst = std::max(worst, lhs.cwiseAbs().maxCoeff());
      }
  EXPECT_LT(worst, 1e-12);
  EXPECT_NEAR(alg_check_jacobi(alg, 1e-12).max_residual, worst, 1e-12);
}

TEST(SuperLie, EtaInvariance) {
  for (const SuperAlgebra& alg : {alg_build_osp12(), alg_build_osp(2, 1), alg_build_osp(1, 2)}) {
    const int m = alg.rep_m();
    double worst = 0.0;
    for (int x = 0; x < alg.dim(); ++x)
      for (int y = 0; y < alg.dim(); ++y)
        for (int z = 0; z < alg.dim(); ++z) {
          const double l = str_real(bracket(alg, x, y) * alg.rep(z), m);
          const double r = str_real(alg.rep(x) * bracket(alg, y, z), m);
          worst = std::max(worst, std::abs(l - r));
        }
    EXPECT_LT(worst, 1e-12) << alg.name();
  }
}

TEST(SuperLie, RealBracketBasics) {
  const SuperAlgebra alg = alg_build_osp12();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(5);
  x << 0.3, -1.2, 0.7, 0, 0;
  EXPECT_LT(alg_bracket(alg, x, x).cwiseAbs().maxCoeff(), 1e-15);

  const Eigen::VectorXd q1 = unit(5, 3);
  const Eigen::VectorXd qq = alg_bracket(alg, q1, q1);
  EXPECT_GT(qq.head(3).cwiseAbs().maxCoeff(), 0.1);
  EXPECT_EQ(qq.tail(2).cwiseAbs().maxCoeff(), 0.0);

  Eigen::VectorXd mixed = unit(5, 0) + unit(5, 3);
  EXPECT_THROW(alg_bracket(alg, mixed, x), ParityError);
}

TEST(SuperLie, OddOddBracketLandsOnEvenGenerators) {
  const SuperAlgebra alg = alg_build_osp(1, 2);
  Rng rng(2);
  for (int s = 0; s < 100; ++s) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(alg.dim());
    Eigen::VectorXd y = Eigen::VectorXd::Zero(alg.dim());
    for (int i : alg.odd_indices()) {
      x(i) = uniform(rng, -1, 1);
      y(i) = uniform(rng, -1, 1);
    }
    const Eigen::VectorXd r = alg_bracket(alg, x, y);
    for (int i : alg.odd_indices()) EXPECT_EQ(r(i), 0.0);
  }
}

TEST(SuperLie, EnvelopeBracketMatchesMatrixCommutator) {
  const SuperAlgebra alg = alg_build_osp12();
  Rng rng(29);
  for (int s = 0; s < 200; ++s) {
    std::vector<GrassmannElement> x, y;
    for (int i = 0; i < alg.dim(); ++i) {
      const int p = as_int(alg.parity(i));
      x.push_back(testing_helpers::random_element(3, rng, p));
      y.push_back(testing_helpers::random_element(3, rng, p));
    }
    const SuperMatrix mx = alg_element(alg, x);
    const SuperMatrix my = alg_element(alg, y);
    const SuperMatrix expected = sm_commutator(mx, my);
    const SuperMatrix got = alg_element(alg, alg_bracket(alg, x, y));
    ASSERT_LT((got - expected).max_abs(), 1e-12);
    const auto back = alg_coefficients(alg, mx);
    for (int i = 0; i < alg.dim(); ++i) ASSERT_LT((back[i] - x[i]).max_abs(), 1e-12);
  }
}

TEST(SuperLie, FermionBlock) {
  const SuperAlgebra alg = alg_build_osp12();
  const Eigen::VectorXd plus = unit(5, 0) + unit(5, 2);
  const Eigen::MatrixXd jp = alg_ff_block(alg, plus);
  ASSERT_EQ(jp.rows(), 2);
  EXPECT_NEAR(jp.determinant(), 0.0, 1e-14);
  EXPECT_GT(jp.cwiseAbs().maxCoeff(), 0.5);

  const Eigen::MatrixXd j1 = alg_ff_block(alg, unit(5, 1));
  // [J_1, Q_alpha] = (sigma_1)_alpha^beta Q_beta, sigma_1 = diag(1, -1).
  EXPECT_NEAR(j1.determinant(), -1.0, 1e-14);

  EXPECT_EQ(alg_ff_block(alg, Eigen::VectorXd::Zero(5)).cwiseAbs().maxCoeff(), 0.0);
}
