#include "superholonomy/sectors.hpp"

#include <cmath>
#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>

#include "superholonomy/errors.hpp"
#include "superholonomy/osp_group.hpp"

namespace superholonomy {

namespace {

constexpr double kParabolicC1 = 0.6;
constexpr double kParabolicC2 = 0.8;
constexpr double kHyperbolicV1 = 0.7;
constexpr double kHyperbolicV2 = -0.4;
constexpr double kRotationPhi1 = 0.9;
constexpr double kRotationPhi2 = 2.1;

Eigen::Matrix2d sigma_block(AbelianType t, double param) {
  const auto s = osp12_sigma();
  switch (t) {
    case AbelianType::So2: return (param * s[0]).exp();
    case AbelianType::Hyperbolic: return (param * s[1]).exp();
    case AbelianType::Parabolic: break;
  }
  return Eigen::Matrix2d::Identity() + param * sigma_plus();
}

SuperMatrix body_holonomy(int a0, const Eigen::Matrix2d& A0, int N) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(3, 3);
  b(0, 0) = a0;
  b.bottomRightCorner(2, 2) = A0;
  return SuperMatrix::from_body(b, 1, 2, N);
}

/// Fixed odd group element used to dress bosonic representatives.
SuperMatrix dressing(int N) {
  GMatrix eta(2, 1, N);
  if (N >= 2) {
    eta(0, 0) = GrassmannElement(N, {{1u, 0.3}, {2u, 0.2}});
    eta(1, 0) = GrassmannElement(N, {{1u, -0.4}, {2u, 0.5}});
  } else if (N == 1) {
    eta(0, 0) = GrassmannElement(N, {{1u, 0.3}});
    eta(1, 0) = GrassmannElement(N, {{1u, -0.4}});
  }
  return sm_exp(osp_odd_generator(eta, 1));
}

SectorDescriptor make_sector(int a0, int b0, int eps1, int eps2, AbelianType type, int N) {
  SectorDescriptor d;
  d.a0 = a0;
  d.b0 = b0;
  d.eps1 = eps1;
  d.eps2 = eps2;
  d.type = type;
  const int s1 = type == AbelianType::So2 ? 1 : eps1;
  const int s2 = type == AbelianType::So2 ? 1 : eps2;
  double p1 = kRotationPhi1, p2 = kRotationPhi2;
  if (type == AbelianType::Hyperbolic) {
    p1 = kHyperbolicV1;
    p2 = kHyperbolicV2;
  } else if (type == AbelianType::Parabolic) {
    p1 = kParabolicC1;
    p2 = kParabolicC2;
  }
  const Eigen::Matrix2d A0 = s1 * sigma_block(type, p1);
  const Eigen::Matrix2d B0 = s2 * sigma_block(type, p2);
  const Eigen::MatrixXd a = Eigen::MatrixXd::Constant(1, 1, a0);
  const Eigen::MatrixXd b = Eigen::MatrixXd::Constant(1, 1, b0);

  const Ahat h1 = mod_ahat(a, A0);
  const Ahat h2 = mod_ahat(b, B0);
  d.rank1 = h1.rank;
  d.rank2 = h2.rank;
  d.moduli = mod_fermionic_moduli_bruteforce(a, b, A0, B0).moduli();
  try {
    d.closed_form_moduli = mod_fermionic_moduli_count(a, b, A0, B0);
  } catch (const HypothesisError&) {
    d.closed_form_moduli = -1;
  }
  d.fermionic = d.moduli > 0;

  HolonomyPair& rep = d.representative;
  if (d.fermionic && N >= 1) {
    auto holonomy = [&](int a_k, int eps_k, double c_k, const Eigen::Matrix2d& body) {
      GMatrix chi(2, 1, N);
      chi(1, 0) = GrassmannElement(N, {{1u, eps_k * c_k}});
      return grp_assemble(GMatrix::from_body(Eigen::MatrixXd::Constant(1, 1, a_k), N),
                          GMatrix::from_body(body, N), chi);
    };
    rep.U1 = holonomy(a0, s1, p1, A0);
    rep.U2 = holonomy(b0, s2, p2, B0);
  } else {
    const SuperMatrix E = dressing(N);
    const SuperMatrix Einv = sm_inverse(E);
    rep.U1 = E * body_holonomy(a0, A0, N) * Einv;
    rep.U2 = E * body_holonomy(b0, B0, N) * Einv;
  }
  rep.sector = to_string(type) + " a0=" + std::to_string(a0) + " b0=" + std::to_string(b0);
  if (type != AbelianType::So2) {
    rep.sector += " eps=(" + std::to_string(eps1) + "," + std::to_string(eps2) + ")";
  }
  rep.det_ahat = h1.det;
  rep.rank = h1.rank;
  rep.moduli = d.moduli;
  return d;
}

}  // namespace

std::string to_string(AbelianType t) {
  switch (t) {
    case AbelianType::So2: return "so2";
    case AbelianType::Hyperbolic: return "hyperbolic";
    case AbelianType::Parabolic: break;
  }
  return "parabolic";
}

Eigen::Matrix2d sigma_plus() {
  const auto s = osp12_sigma();
  return s[0] + s[2];
}

SectorReport mod_enumerate_sectors_osp12(int generators) {
  SectorReport r;
  r.group = "osp(1|2)";
  r.c1 = kParabolicC1;
  r.c2 = kParabolicC2;
  r.c_norm_squared = kParabolicC1 * kParabolicC1 + kParabolicC2 * kParabolicC2;
  const int signs[2] = {1, -1};
  for (AbelianType t : {AbelianType::Hyperbolic, AbelianType::Parabolic})
    for (int a0 : signs)
      for (int b0 : signs)
        for (int e1 : signs)
          for (int e2 : signs) r.sectors.push_back(make_sector(a0, b0, e1, e2, t, generators));
  for (int a0 : signs)
    for (int b0 : signs) r.sectors.push_back(make_sector(a0, b0, 0, 0, AbelianType::So2, generators));
  r.bosonic_sectors = static_cast<int>(r.sectors.size());
  for (const auto& s : r.sectors) r.fermionic_sectors += s.fermionic ? 1 : 0;
  return r;
}

Osp22Report mod_osp22_partial_report(int grid) {
  Osp22Report r;
  for (int i = 0; i < grid; ++i) {
    const double phi = 2.0 * std::numbers::pi * (i + 0.5) / grid;
    for (int j = 0; j < grid; ++j) {
      const double t = 2.0 * std::numbers::pi * j / grid;
      const double s = -1.0 + 2.0 * j / std::max(grid - 1, 1);
      const Eigen::MatrixXd A0 =
          rotation(t) * Eigen::Vector2d(std::exp(s), std::exp(-s)).asDiagonal();
      const double expected = std::pow(2.0 * std::cos(phi) - A0.trace(), 2);
      r.max_det_error =
          std::max(r.max_det_error, std::abs(mod_ahat(rotation(phi), A0).det - expected));
      ++r.grid_points;
    }
  }
  const double phi1 = 0.7, phi2 = 1.9;
  const Eigen::MatrixXd a0 = rotation(phi1), b0 = rotation(phi2);
  r.so2_rank = mod_ahat(a0, a0).rank;
  r.so2_moduli = mod_fermionic_moduli_count(a0, b0, a0, b0);
  r.so2_bruteforce_moduli = mod_fermionic_moduli_bruteforce(a0, b0, a0, b0).moduli();
  return r;
}

NonexpFamily mod_build_nonexp_holonomy(const SuperAlgebra& osp12, double cal_a,
                                       const std::vector<GrassmannElement>& psi, int points,
                                       const Eigen::Matrix2d& sigma, double h) {
  if (osp12.rep_m() != 1 || osp12.rep_n() != 2) throw DimensionError("needs the osp(1|2) representation");
  const auto& odd = osp12.odd_indices();
  if (psi.size() != odd.size()) throw DimensionError("psi needs one entry per odd generator");
  if (points < 2) throw DimensionError("need at least two grid points");
  const int N = psi.empty() ? 0 : psi[0].generators();

  Eigen::MatrixXd even = Eigen::MatrixXd::Zero(3, 3);
  even.bottomRightCorner(2, 2) = cal_a * sigma;
  GMatrix x = GMatrix::from_body(even, N);
  for (size_t i = 0; i < odd.size(); ++i) x += GMatrix::scaled(osp12.rep(odd[i]), psi[i]);
  const SuperMatrix X(1, 2, x);

  auto frame = [&](double phi) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Identity(3, 3);
    d.bottomRightCorner(2, 2) = rotation(phi / 2.0);
    return SuperMatrix::from_body(d, 1, 2, N);
  };
  auto U = [&](double phi) { return frame(phi) * sm_exp(phi * X); };
  Eigen::MatrixXd drot = Eigen::MatrixXd::Zero(3, 3);
  drot.bottomRightCorner(2, 2) = 0.5 * rotation(std::numbers::pi / 2.0);
  const SuperMatrix D = SuperMatrix::from_body(drot, 1, 2, N);

  NonexpFamily fam;
  for (int i = 0; i < points; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / (points - 1);
    const SuperMatrix u = U(phi);
    const SuperMatrix uinv = sm_inverse(u);
    fam.phi.push_back(phi);
    fam.U.push_back(u);
    fam.connection.push_back(uinv * (U(phi + h) - U(phi - h)) * (0.5 / h));
    fam.connection_exact.push_back(sm_exp(-phi * X) * D * sm_exp(phi * X) + X);
  }
  const Eigen::Matrix2d e = (2.0 * std::numbers::pi * cal_a * sigma).exp();
  fam.target_body = -e;
  return fam;
}

}  // namespace superholonomy
