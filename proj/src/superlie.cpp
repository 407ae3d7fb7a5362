#include "superholonomy/superlie.hpp"

#include <cmath>
#include <sstream>

#include "superholonomy/errors.hpp"
#include "superholonomy/linalg.hpp"

namespace superholonomy {

namespace {

double frob_dot(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a.array() * b.array()).sum();
}

double levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0.0;
  return ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
}

int sign_of(Parity a, Parity b) { return (as_int(a) & as_int(b)) ? -1 : 1; }

}  // namespace

SuperAlgebra::SuperAlgebra(std::string name, std::vector<std::string> labels,
                           std::vector<Parity> parities, std::vector<double> structure_constants,
                           Eigen::MatrixXd eta)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      parities_(std::move(parities)),
      f_(std::move(structure_constants)),
      eta_(std::move(eta)) {
  const int d = dim();
  if (static_cast<int>(parities_.size()) != d) throw DimensionError("labels and parities differ");
  if (static_cast<int>(f_.size()) != d * d * d) {
    throw DimensionError("structure constants must have dim^3 entries");
  }
  if (eta_.rows() != d || eta_.cols() != d) throw DimensionError("eta must be dim x dim");
  for (int i = 0; i < d; ++i) {
    (parities_[i] == Parity::Even ? even_ : odd_).push_back(i);
  }
}

SuperAlgebra SuperAlgebra::from_representation(std::string name, std::vector<std::string> labels,
                                               std::vector<Parity> parities,
                                               std::vector<Eigen::MatrixXd> rep, int m, int n,
                                               double str_normalization) {
  const int d = static_cast<int>(rep.size());
  Eigen::MatrixXd gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram(i, j) = real_supertrace(rep[i] * rep[j], m);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(gram.transpose());
  if (!lu.isInvertible()) throw NotInvertibleError("supertrace form is degenerate on the basis");

  std::vector<double> f(static_cast<size_t>(d) * d * d, 0.0);
  double residual = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Eigen::MatrixXd b = graded_matrix_bracket(rep[i], parities[i], rep[j], parities[j]);
      Eigen::VectorXd s(d);
      for (int l = 0; l < d; ++l) s(l) = real_supertrace(b * rep[l], m);
      const Eigen::VectorXd x = lu.solve(s);
      Eigen::MatrixXd rebuilt = Eigen::MatrixXd::Zero(b.rows(), b.cols());
      for (int k = 0; k < d; ++k) {
        f[(i * d + j) * d + k] = x(k);
        rebuilt += x(k) * rep[k];
      }
      residual = std::max(residual, (rebuilt - b).cwiseAbs().maxCoeff());
    }
  }
  SuperAlgebra alg(std::move(name), std::move(labels), std::move(parities), std::move(f),
                   gram / str_normalization);
  alg.rep_ = std::move(rep);
  alg.rep_m_ = m;
  alg.rep_n_ = n;
  alg.str_normalization_ = str_normalization;
  alg.projection_residual_ = residual;
  return alg;
}

SuperAlgebra SuperAlgebra::with_perturbed_constant(int i, int j, int k, double delta) const {
  SuperAlgebra copy = *this;
  const int d = dim();
  copy.f_[(i * d + j) * d + k] += delta;
  if (i != j) {
    // f_JI^K = (-1)^{|I||J|+1} f_IJ^K
    copy.f_[(j * d + i) * d + k] -= sign_of(parities_[i], parities_[j]) * delta;
  }
  copy.name_ += " (perturbed)";
  return copy;
}

SuperAlgebra SuperAlgebra::with_eta(Eigen::MatrixXd eta) const {
  SuperAlgebra copy = *this;
  copy.eta_ = std::move(eta);
  return copy;
}

double real_supertrace(const Eigen::MatrixXd& x, int m) {
  return x.topLeftCorner(m, m).trace() - x.bottomRightCorner(x.rows() - m, x.cols() - m).trace();
}

Eigen::MatrixXd graded_matrix_bracket(const Eigen::MatrixXd& x, Parity px,
                                      const Eigen::MatrixXd& y, Parity py) {
  return x * y - sign_of(px, py) * (y * x);
}

double osp_tangent_residual(const Eigen::MatrixXd& x, int m, int n2) {
  const Eigen::MatrixXd c = symplectic_form(n2 / 2);
  const Eigen::MatrixXd a = x.topLeftCorner(m, m);
  const Eigen::MatrixXd xi = x.topRightCorner(m, n2);
  const Eigen::MatrixXd chi = x.bottomLeftCorner(n2, m);
  const Eigen::MatrixXd A = x.bottomRightCorner(n2, n2);
  double r = 0.0;
  if (m > 0) r = std::max(r, (a.transpose() + a).cwiseAbs().maxCoeff());
  if (m > 0 && n2 > 0) {
    r = std::max(r, (chi.transpose() * c + xi).cwiseAbs().maxCoeff());
    r = std::max(r, (-xi.transpose() + c * chi).cwiseAbs().maxCoeff());
  }
  if (n2 > 0) r = std::max(r, (A.transpose() * c + c * A).cwiseAbs().maxCoeff());
  return r;
}

std::array<Eigen::Matrix2d, 3> osp12_sigma() {
  Eigen::Matrix2d s0, s1, s2;
  s0 << 0, 1, -1, 0;
  s1 << 1, 0, 0, -1;
  s2 << 0, 1, 1, 0;
  return {s0, s1, s2};
}

SuperAlgebra alg_build_osp12() {
  const auto sigma = osp12_sigma();
  const Eigen::Vector3d eta_diag(-1.0, 1.0, 1.0);
  const Eigen::Matrix2d c_form = symplectic_form(1);  // C_alpha_beta = epsilon_alpha_beta

  // Unit-normalized candidates. The top-left entry of J_a is zero: o(1) is trivial.
  std::array<Eigen::MatrixXd, 3> j0;
  std::array<Eigen::MatrixXd, 2> q0;
  for (int a = 0; a < 3; ++a) {
    j0[a] = Eigen::MatrixXd::Zero(3, 3);
    j0[a].bottomRightCorner(2, 2) = sigma[a];
  }
  for (int al = 0; al < 2; ++al) {
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    c(al) = 1.0;
    q0[al] = Eigen::MatrixXd::Zero(3, 3);
    q0[al].block(0, 1, 1, 2) = -c.transpose() * c_form;
    q0[al].block(1, 0, 2, 1) = c;
  }

  Osp12Fit fit;
  // [J_a, Q_alpha] = (sigma_a)_alpha^beta Q_beta is linear in the scale of J_a.
  for (int a = 0; a < 3; ++a) {
    double num = 0.0, den = 0.0;
    for (int al = 0; al < 2; ++al) {
      const Eigen::MatrixXd r = j0[a] * q0[al] - q0[al] * j0[a];
      const Eigen::MatrixXd t = sigma[a](al, 0) * q0[0] + sigma[a](al, 1) * q0[1];
      num += frob_dot(r, t);
      den += frob_dot(r, r);
    }
    fit.j_scale[a] = num / den;
  }
  std::array<Eigen::MatrixXd, 3> j;
  for (int a = 0; a < 3; ++a) j[a] = fit.j_scale[a] * j0[a];

  // {Q_alpha, Q_beta} = (sigma^a C)_alpha_beta J_a fixes the square of the Q scale.
  std::array<Eigen::Matrix2d, 3> sigma_low;
  for (int a = 0; a < 3; ++a) sigma_low[a] = eta_diag(a) * sigma[a] * c_form;
  {
    double num = 0.0, den = 0.0;
    for (int al = 0; al < 2; ++al) {
      for (int be = 0; be < 2; ++be) {
        const Eigen::MatrixXd p = q0[al] * q0[be] + q0[be] * q0[al];
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(3, 3);
        for (int a = 0; a < 3; ++a) t += sigma_low[a](al, be) * j[a];
        num += frob_dot(p, t);
        den += frob_dot(p, p);
      }
    }
    const double q2 = num / den;
    if (!(q2 > 0.0)) throw HypothesisError("osp(1|2) odd normalization has no real solution");
    fit.q_scale = std::sqrt(q2);
  }
  std::array<Eigen::MatrixXd, 2> q;
  for (int al = 0; al < 2; ++al) q[al] = fit.q_scale * q0[al];

  // [J_a, J_b] = lambda eps_ab^c J_c with eps_ab^c = LeviCivita_abd eta^dc.
  {
    double num = 0.0, den = 0.0;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const Eigen::MatrixXd r = j[a] * j[b] - j[b] * j[a];
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(3, 3);
        for (int c = 0; c < 3; ++c) t += levi_civita(a, b, c) * eta_diag(c) * j[c];
        num += frob_dot(r, t);
        den += frob_dot(t, t);
      }
    }
    fit.epsilon_012 = num / den;
  }

  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(3, 3);
      for (int c = 0; c < 3; ++c) t += fit.epsilon_012 * levi_civita(a, b, c) * eta_diag(c) * j[c];
      fit.residual_jj =
          std::max(fit.residual_jj, (j[a] * j[b] - j[b] * j[a] - t).cwiseAbs().maxCoeff());
    }
    for (int al = 0; al < 2; ++al) {
      const Eigen::MatrixXd t = sigma[a](al, 0) * q[0] + sigma[a](al, 1) * q[1];
      fit.residual_jq =
          std::max(fit.residual_jq, (j[a] * q[al] - q[al] * j[a] - t).cwiseAbs().maxCoeff());
    }
  }
  for (int al = 0; al < 2; ++al) {
    for (int be = 0; be < 2; ++be) {
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(3, 3);
      for (int a = 0; a < 3; ++a) t += sigma_low[a](al, be) * j[a];
      fit.residual_qq = std::max(
          fit.residual_qq, (q[al] * q[be] + q[be] * q[al] - t).cwiseAbs().maxCoeff());
    }
  }

  // str(J_a J_b) = nu eta_ab fixes the global normalization of the form.
  {
    double num = 0.0, den = 0.0;
    for (int a = 0; a < 3; ++a) {
      num += real_supertrace(j[a] * j[a], 1) * eta_diag(a);
      den += eta_diag(a) * eta_diag(a);
    }
    fit.str_normalization = num / den;
  }

  std::ostringstream conv;
  conv << "J_a = " << fit.j_scale[0] << "," << fit.j_scale[1] << "," << fit.j_scale[2]
       << " x diag(0, sigma_a); Q scale " << fit.q_scale << "; C = epsilon with C_12 = +1; "
       << "(sigma^a)_ab = eta^ab' (sigma_b')_a^g C_gb; [J_a,Q_al] = (sigma_a)_al^be Q_be; "
       << "eps_012 = " << fit.epsilon_012 << "; str = tr(a) - tr(A) = "
       << fit.str_normalization << " x eta";
  fit.convention = conv.str();

  std::vector<Eigen::MatrixXd> rep{j[0], j[1], j[2], q[0], q[1]};
  SuperAlgebra alg = SuperAlgebra::from_representation(
      "osp(1|2)", {"J0", "J1", "J2", "Q1", "Q2"},
      {Parity::Even, Parity::Even, Parity::Even, Parity::Odd, Parity::Odd}, std::move(rep), 1, 2,
      fit.str_normalization);
  alg.fit_ = fit;
  return alg;
}

SuperAlgebra alg_build_osp(int m, int n) {
  if (m < 1 || n < 1) throw DimensionError("osp(m|2n) needs m >= 1 and n >= 1");
  const int n2 = 2 * n;
  const int size = m + n2;
  const Eigen::MatrixXd c = symplectic_form(n);
  std::vector<Eigen::MatrixXd> rep;
  std::vector<std::string> labels;
  std::vector<Parity> parities;

  for (int i = 0; i < m; ++i) {
    for (int k = i + 1; k < m; ++k) {
      Eigen::MatrixXd x = Eigen::MatrixXd::Zero(size, size);
      x(i, k) = 1.0;
      x(k, i) = -1.0;
      rep.push_back(x);
      labels.push_back("L" + std::to_string(i + 1) + std::to_string(k + 1));
      parities.push_back(Parity::Even);
    }
  }
  // sp(2n) = { C S : S symmetric }.
  for (int i = 0; i < n2; ++i) {
    for (int k = i; k < n2; ++k) {
      Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n2, n2);
      s(i, k) = 1.0;
      s(k, i) = 1.0;
      Eigen::MatrixXd x = Eigen::MatrixXd::Zero(size, size);
      x.bottomRightCorner(n2, n2) = c * s;
      rep.push_back(x);
      labels.push_back("S" + std::to_string(i + 1) + std::to_string(k + 1));
      parities.push_back(Parity::Even);
    }
  }
  // Odd generators: unit chi entry, xi = -chi^T C.
  for (int col = 0; col < m; ++col) {
    for (int row = 0; row < n2; ++row) {
      Eigen::MatrixXd chi = Eigen::MatrixXd::Zero(n2, m);
      chi(row, col) = 1.0;
      Eigen::MatrixXd x = Eigen::MatrixXd::Zero(size, size);
      x.bottomLeftCorner(n2, m) = chi;
      x.topRightCorner(m, n2) = -chi.transpose() * c;
      rep.push_back(x);
      labels.push_back("Q" + std::to_string(row + 1) + std::to_string(col + 1));
      parities.push_back(Parity::Odd);
    }
  }
  std::ostringstream name;
  name << "osp(" << m << "|" << n2 << ")";
  return SuperAlgebra::from_representation(name.str(), std::move(labels), std::move(parities),
                                           std::move(rep), m, n2, 1.0);
}

Eigen::VectorXd alg_bracket(const SuperAlgebra& alg, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& y) {
  const int d = alg.dim();
  if (x.size() != d || y.size() != d) throw DimensionError("coefficient vector length != dim");
  auto homogeneous = [&](const Eigen::VectorXd& v) {
    bool has_even = false, has_odd = false;
    for (int i = 0; i < d; ++i) {
      if (v(i) == 0.0) continue;
      (alg.parity(i) == Parity::Even ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) throw ParityError("coefficient vector mixes even and odd generators");
  };
  homogeneous(x);
  homogeneous(y);
  Eigen::VectorXd r = Eigen::VectorXd::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < d; ++j) {
      if (y(j) == 0.0) continue;
      for (int k = 0; k < d; ++k) r(k) += x(i) * y(j) * alg.f(i, j, k);
    }
  }
  return r;
}

std::vector<GrassmannElement> alg_bracket(const SuperAlgebra& alg,
                                          const std::vector<GrassmannElement>& x,
                                          const std::vector<GrassmannElement>& y) {
  const int d = alg.dim();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d) {
    throw DimensionError("coefficient vector length != dim");
  }
  const int generators = x.empty() ? 0 : x[0].generators();
  auto check = [&](const std::vector<GrassmannElement>& v) {
    for (int i = 0; i < d; ++i) {
      const bool ok = alg.parity(i) == Parity::Even ? v[i].is_even() : v[i].is_odd();
      if (!ok) throw ParityError("coefficient of " + alg.label(i) + " has the wrong parity");
    }
  };
  check(x);
  check(y);
  std::vector<GrassmannElement> r(d, GrassmannElement(generators));
  // Grassmann scalars commute with the real representation matrices, so
  // [x^I T_I, y^J T_J] = x^I y^J [T_I, T_J} with no extra sign.
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const GrassmannElement xy = x[i] * y[j];
      if (xy.is_zero()) continue;
      for (int k = 0; k < d; ++k) {
        const double fk = alg.f(i, j, k);
        if (fk != 0.0) r[k] += xy * fk;
      }
    }
  }
  return r;
}

JacobiReport alg_check_jacobi(const SuperAlgebra& alg, double tol) {
  const int d = alg.dim();
  JacobiReport rep;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double s = sign_of(alg.parity(i), alg.parity(j));
      for (int k = 0; k < d; ++k) {
        for (int out = 0; out < d; ++out) {
          double v = 0.0;
          for (int l = 0; l < d; ++l) {
            v += alg.f(j, k, l) * alg.f(i, l, out);   // [X,[Y,Z}}
            v -= alg.f(i, j, l) * alg.f(l, k, out);   // [[X,Y},Z}
            v -= s * alg.f(i, k, l) * alg.f(j, l, out);  // [Y,[X,Z}}
          }
          if (std::abs(v) > rep.max_residual) {
            rep.max_residual = std::abs(v);
            rep.worst = {i, j, k};
          }
        }
      }
    }
  }
  rep.pass = rep.max_residual <= tol;
  return rep;
}

Eigen::MatrixXd alg_ff_block(const SuperAlgebra& alg, const Eigen::VectorXd& c) {
  if (c.size() != alg.dim()) throw DimensionError("direction length != dim");
  for (int i : alg.odd_indices()) {
    if (c(i) != 0.0) throw ParityError("direction must be supported on even generators");
  }
  const auto& odd = alg.odd_indices();
  const int k = static_cast<int>(odd.size());
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(k, k);
  for (int a : alg.even_indices()) {
    if (c(a) == 0.0) continue;
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q) r(p, q) += c(a) * alg.f(a, odd[p], odd[q]);
  }
  return r;
}

SuperMatrix alg_element(const SuperAlgebra& alg, const std::vector<GrassmannElement>& coeffs) {
  if (!alg.has_representation()) throw HypothesisError(alg.name() + " has no representation");
  if (static_cast<int>(coeffs.size()) != alg.dim()) throw DimensionError("coefficient count != dim");
  const int generators = coeffs.front().generators();
  const int size = alg.rep_m() + alg.rep_n();
  GMatrix sum(size, size, generators);
  for (int i = 0; i < alg.dim(); ++i) {
    if (coeffs[i].is_zero()) continue;
    sum += GMatrix::scaled(alg.rep(i), coeffs[i]);
  }
  return SuperMatrix(alg.rep_m(), alg.rep_n(), std::move(sum), Parity::Even);
}

Eigen::VectorXd alg_real_coefficients(const SuperAlgebra& alg, const Eigen::MatrixXd& x) {
  if (!alg.has_representation()) throw HypothesisError(alg.name() + " has no representation");
  const int d = alg.dim();
  Eigen::VectorXd s(d);
  for (int l = 0; l < d; ++l) s(l) = real_supertrace(x * alg.rep(l), alg.rep_m());
  const Eigen::MatrixXd gram = alg.eta() * alg.str_normalization();
  return gram.transpose().fullPivLu().solve(s);
}

std::vector<GrassmannElement> alg_coefficients(const SuperAlgebra& alg, const SuperMatrix& x,
                                               double tol) {
  const int d = alg.dim();
  const int generators = x.generators();
  std::vector<std::vector<GrassmannElement::Term>> terms(d);
  for (Monomial mono : x.entries().support()) {
    const Eigen::MatrixXd xm = x.entries().coefficient(mono);
    const Eigen::VectorXd c = alg_real_coefficients(alg, xm);
    Eigen::MatrixXd rebuilt = Eigen::MatrixXd::Zero(xm.rows(), xm.cols());
    for (int i = 0; i < d; ++i) rebuilt += c(i) * alg.rep(i);
    if ((rebuilt - xm).cwiseAbs().maxCoeff() > tol) {
      throw HypothesisError("supermatrix is not in the span of " + alg.name());
    }
    for (int i = 0; i < d; ++i) terms[i].emplace_back(mono, c(i));
  }
  std::vector<GrassmannElement> out;
  out.reserve(d);
  for (int i = 0; i < d; ++i) out.emplace_back(generators, std::move(terms[i]));
  return out;
}

}  // namespace superholonomy
