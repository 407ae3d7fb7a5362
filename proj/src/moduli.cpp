#include "superholonomy/moduli.hpp"

#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "superholonomy/errors.hpp"
#include "superholonomy/osp_group.hpp"

namespace superholonomy {

namespace {

Eigen::VectorXd vec(const Eigen::MatrixXd& m) {
  return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
}

Eigen::MatrixXd unvec(const Eigen::VectorXd& v, int rows, int cols) {
  return Eigen::Map<const Eigen::MatrixXd>(v.data(), rows, cols);
}

bool commute(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y, double tol) {
  if (x.size() == 0) return true;
  return (x * y - y * x).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

Ahat mod_ahat(const Eigen::MatrixXd& a0, const Eigen::MatrixXd& A0) {
  const int m = static_cast<int>(a0.rows());
  const int n2 = static_cast<int>(A0.rows());
  Ahat r;
  r.matrix = kron(a0.transpose(), Eigen::MatrixXd::Identity(n2, n2)) -
             kron(Eigen::MatrixXd::Identity(m, m), A0);
  r.size = m * n2;
  r.det = r.size > 0 ? r.matrix.determinant() : 1.0;
  r.rank = numeric_rank(r.matrix);
  return r;
}

Ahat mod_ahat(const SuperMatrix& U) { return mod_ahat(U.a().body(), U.A().body()); }

std::pair<double, double> mod_det_conjugation_invariance(const Eigen::MatrixXd& a0,
                                                         const Eigen::MatrixXd& A0,
                                                         const Eigen::MatrixXd& S0) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(S0);
  if (!lu.isInvertible()) throw NotInvertibleError("conjugator S0 is singular");
  const Eigen::MatrixXd conj = S0 * A0 * lu.inverse();
  return {mod_ahat(a0, conj).det, mod_ahat(a0, A0).det};
}

GaugeFixResult mod_gauge_fix_sigma(const SuperMatrix& U, const std::optional<GaugeSeed>& seed) {
  const int m = U.m();
  const int n2 = U.n();
  const int N = U.generators();
  Eigen::MatrixXd seed_body = Eigen::MatrixXd::Identity(m + n2, m + n2);
  if (seed) {
    if (seed->s0.rows() != m || seed->S0.rows() != n2) throw DimensionError("seed block sizes");
    seed_body.topLeftCorner(m, m) = seed->s0;
    seed_body.bottomRightCorner(n2, n2) = seed->S0;
  }
  SuperMatrix S = SuperMatrix::from_body(seed_body, m, n2, N);
  if (!grp_is_member(S, 1e-9)) throw HypothesisError("gauge seed is not in O(m) x Sp(2n)");
  SuperMatrix fixed = S * U * sm_inverse(S);

  const Ahat ahat = mod_ahat(fixed);
  if (ahat.singular()) {
    throw SingularAhatError("Ahat_0 has rank " + std::to_string(ahat.rank) + " < " +
                            std::to_string(ahat.size) + "; the odd block cannot be gauged away");
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> solver(ahat.matrix);

  GaugeFixResult result{S, fixed, 0};
  for (int step = 0; step <= N + 1; ++step) {
    const GMatrix chi = result.U_fixed.chi();
    int d = -1;
    for (int i = 0; i < chi.rows(); ++i)
      for (int j = 0; j < chi.cols(); ++j) {
        const int l = chi(i, j).lowest_degree();
        if (l >= 0 && (d < 0 || l < d)) d = l;
      }
    if (d < 0) return result;

    // Linearized conjugation by exp(Y(eta)): chi -> chi + eta a0 - A0 eta + O(eta^2).
    std::vector<std::vector<GrassmannElement::Term>> eta_terms(static_cast<size_t>(n2) * m);
    for (Monomial mono : chi.support()) {
      if (degree(mono) != d) continue;
      const Eigen::VectorXd x = solver.solve(-vec(chi.coefficient(mono)));
      for (int k = 0; k < x.size(); ++k) eta_terms[k].emplace_back(mono, x(k));
    }
    GMatrix eta(n2, m, N);
    for (int col = 0; col < m; ++col)
      for (int row = 0; row < n2; ++row)
        eta(row, col) = GrassmannElement(N, eta_terms[col * n2 + row]);

    const SuperMatrix E = sm_exp(osp_odd_generator(eta, m));
    result.S = E * result.S;
    result.U_fixed = E * result.U_fixed * sm_inverse(E);
    result.steps = step + 1;
  }
  if (!result.U_fixed.chi().is_zero()) {
    throw Error("gauge-fixing recursion did not terminate");
  }
  return result;
}

bool mod_commuting_pair_forces_diagonal(const SuperMatrix& U1, const SuperMatrix& U2,
                                        double tol) {
  if (U1.xi().max_abs() > tol || U1.chi().max_abs() > tol) {
    throw HypothesisError("U1 is not block diagonal");
  }
  if (mod_ahat(U1).singular()) throw HypothesisError("Ahat_0 of U1 is singular");
  if (commutator_residual(U1, U2) > tol) throw HypothesisError("U1 and U2 do not commute");
  return U2.xi().max_abs() <= tol && U2.chi().max_abs() <= tol;
}

int mod_fermionic_moduli_count(const Eigen::MatrixXd& a0, const Eigen::MatrixXd& b0,
                               const Eigen::MatrixXd& A0, const Eigen::MatrixXd& B0) {
  if (!commute(a0, b0, 1e-9) || !commute(A0, B0, 1e-9)) {
    throw HypothesisError("body blocks do not commute");
  }
  const Ahat ah = mod_ahat(a0, A0);
  const Ahat bh = mod_ahat(b0, B0);
  if (ah.rank != bh.rank) {
    throw HypothesisError("rank Ahat_0 = " + std::to_string(ah.rank) + " but rank Bhat_0 = " +
                          std::to_string(bh.rank));
  }
  return 2 * (ah.size - ah.rank);
}

BruteForceCount mod_fermionic_moduli_bruteforce(const Eigen::MatrixXd& a0,
                                                const Eigen::MatrixXd& b0,
                                                const Eigen::MatrixXd& A0,
                                                const Eigen::MatrixXd& B0) {
  const int m = static_cast<int>(a0.rows());
  const int n2 = static_cast<int>(A0.rows());
  const int k = m * n2;
  const int size = m + n2;
  constexpr int N = 1;
  const Monomial theta = 1u;
  const GMatrix ga = GMatrix::from_body(a0, N);
  const GMatrix gb = GMatrix::from_body(b0, N);
  const GMatrix gA = GMatrix::from_body(A0, N);
  const GMatrix gB = GMatrix::from_body(B0, N);

  auto odd_block = [&](const Eigen::VectorXd& v) {
    GMatrix out(n2, m, N);
    const Eigen::MatrixXd x = unvec(v, n2, m);
    for (int i = 0; i < n2; ++i)
      for (int j = 0; j < m; ++j) out(i, j) = GrassmannElement(N, {{theta, x(i, j)}});
    return out;
  };

  // Columns: first-order part of U1 U2 - U2 U1 for unit (chi1, mu1).
  Eigen::MatrixXd comm(size * size, 2 * k);
  for (int col = 0; col < 2 * k; ++col) {
    Eigen::VectorXd chi = Eigen::VectorXd::Zero(k);
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(k);
    (col < k ? chi(col) : mu(col - k)) = 1.0;
    const SuperMatrix U1 = grp_assemble(ga, gA, odd_block(chi));
    const SuperMatrix U2 = grp_assemble(gb, gB, odd_block(mu));
    comm.col(col) = vec((U1 * U2 - U2 * U1).entries().coefficient(theta));
  }
  // Columns: first-order odd blocks of (E U1 E^{-1}, E U2 E^{-1}), E = exp(eta theta).
  const SuperMatrix U1b = SuperMatrix::from_blocks(ga, GMatrix(m, n2, N), GMatrix(n2, m, N), gA);
  const SuperMatrix U2b = SuperMatrix::from_blocks(gb, GMatrix(m, n2, N), GMatrix(n2, m, N), gB);
  Eigen::MatrixXd gauge(2 * k, k);
  for (int col = 0; col < k; ++col) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(k);
    e(col) = 1.0;
    const SuperMatrix E = sm_exp(osp_odd_generator(odd_block(e), m));
    const SuperMatrix Einv = sm_inverse(E);
    gauge.col(col).head(k) = vec((E * U1b * Einv).chi().coefficient(theta));
    gauge.col(col).tail(k) = vec((E * U2b * Einv).chi().coefficient(theta));
  }
  return {2 * k - numeric_rank(comm), numeric_rank(gauge)};
}

BodyPair random_commuting_body_pair(int m, int n, Rng& rng) {
  const int n2 = 2 * n;
  Eigen::MatrixXd zo = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd zs = Eigen::MatrixXd::Zero(n2, n2);
  BodyPair out;
  const int family = static_cast<int>(rng() % 3);
  if (family == 0) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        zo(i, j) = uniform(rng, -1.5, 1.5);
        zo(j, i) = -zo(i, j);
      }
    Eigen::MatrixXd s(n2, n2);
    for (int i = 0; i < n2; ++i)
      for (int j = i; j < n2; ++j) s(i, j) = s(j, i) = uniform(rng, -1.0, 1.0);
    zs = symplectic_form(n) * s;
    out.kind = "generic";
  } else if (family == 1) {
    // [[0, B], [0, 0]] with B symmetric is nilpotent in sp(2n).
    zs(0, n) = uniform(rng, 0.5, 1.5);
    out.kind = "parabolic";
  } else {
    const double w = uniform(rng, 0.5, 1.5);
    if (m >= 2) {
      zo(0, 1) = w;
      zo(1, 0) = -w;
    }
    zs(0, n) = w;
    zs(n, 0) = -w;
    out.kind = "rotation";
  }
  const Eigen::MatrixXd S = random_symplectic(n, rng, 0.4);
  const Eigen::MatrixXd O = random_orthogonal(m, rng);
  zs = S * zs * S.inverse();
  zo = O * zo * O.transpose();
  const double x = uniform(rng, 0.3, 1.2) * (coin(rng) ? 1.0 : -1.0);
  const double y = uniform(rng, 0.3, 1.2) * (coin(rng) ? 1.0 : -1.0);
  const Eigen::MatrixXd xo = x * zo, xs = x * zs, yo = y * zo, ys = y * zs;
  out.a0 = xo.exp();
  out.b0 = yo.exp();
  out.A0 = xs.exp();
  out.B0 = ys.exp();
  return out;
}

double commutator_residual(const SuperMatrix& U1, const SuperMatrix& U2) {
  return sm_commutator(U1, U2).max_abs();
}

std::pair<SuperMatrix, SuperMatrix> mod_gauge_fix_pair(const SuperMatrix& U1,
                                                       const SuperMatrix& U2) {
  if (!mod_ahat(U1).singular()) {
    const GaugeFixResult g = mod_gauge_fix_sigma(U1);
    return {g.U_fixed, g.S * U2 * sm_inverse(g.S)};
  }
  if (!mod_ahat(U2).singular()) {
    const GaugeFixResult g = mod_gauge_fix_sigma(U2);
    return {g.S * U1 * sm_inverse(g.S), g.U_fixed};
  }
  throw SingularAhatError("both holonomies have singular Ahat_0; fermionic moduli present");
}

}  // namespace superholonomy
