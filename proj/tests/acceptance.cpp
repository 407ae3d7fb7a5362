#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "superholonomy/errors.hpp"
#include "superholonomy/graded_phase.hpp"
#include "superholonomy/moduli.hpp"
#include "superholonomy/osp_group.hpp"
#include "superholonomy/random.hpp"
#include "superholonomy/sectors.hpp"
#include "superholonomy/superlie.hpp"

using namespace superholonomy;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Eigen::MatrixXd a_block(const Eigen::Matrix2d& s) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(3, 3);
  x.bottomRightCorner(2, 2) = s;
  return x;
}

Outcome jacobi() {
  Clock clock;
  double worst = 0.0;
  bool ok = true;
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    const JacobiReport r = alg_check_jacobi(m == 1 && n == 1 ? alg_build_osp12() : alg_build_osp(m, n), 1e-12);
    worst = std::max(worst, r.max_residual);
    ok = ok && r.pass && r.max_residual <= 1e-12;
  }
  const double t = clock.seconds();
  return {ok && t < 5.0, fmt("max residual %.2e over 4 algebras, %.2f s", worst, t)};
}

Outcome membership() {
  Clock clock;
  double worst = 0.0;
  for (const SuperAlgebra& alg : {alg_build_osp12(), alg_build_osp(2, 1)}) {
    Rng rng(1001);
    for (int s = 0; s < 1000; ++s) {
      const SuperMatrix g = sample_member(alg, 2, rng);
      const SuperMatrix h = sample_member(alg, 2, rng);
      worst = std::max({worst, grp_membership_residual(sm_mul(g, h)),
                        grp_membership_residual(sm_inverse(g)),
                        grp_membership_residual(sm_mul(sm_mul(g, h), sm_inverse(g)))});
    }
  }
  const double t = clock.seconds();
  return {worst <= 1e-9 && t < 30.0, fmt("max residual %.2e over 2x1000 samples, %.2f s", worst, t)};
}

Outcome xi_from_chi() {
  double worst = 0.0;
  for (const SuperAlgebra& alg : {alg_build_osp12(), alg_build_osp(2, 1)}) {
    Rng rng(1003);
    for (int s = 0; s < 200; ++s) {
      const SuperMatrix u = sample_member(alg, 2, rng);
      worst = std::max(worst, (u.xi() - grp_xi_from_chi(u.a(), u.A(), u.chi())).max_abs());
    }
  }
  return {worst <= 1e-10, fmt("max |xi - xi(chi)| %.2e over 2x200 members", worst)};
}

Outcome det_invariance() {
  double worst = 0.0;
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    Rng rng(1004 + 10 * m + n);
    const Eigen::MatrixXd a0 = random_orthogonal(m, rng);
    const Eigen::MatrixXd A0 = random_symplectic(n, rng);
    for (int s = 0; s < 100; ++s) {
      const auto [conj, plain] = mod_det_conjugation_invariance(a0, A0, random_symplectic(n, rng));
      worst = std::max(worst, std::abs(conj - plain) / std::abs(plain));
    }
  }
  return {worst <= 1e-8, fmt("max relative error %.2e over 3x100 Sp(2n) conjugations", worst)};
}

Outcome gauge_fixing() {
  const SuperAlgebra alg = alg_build_osp12();
  Rng rng(1005);
  int fixed = 0;
  double worst = 0.0;
  while (fixed < 100) {
    const SuperMatrix u = sample_member(alg, 2, rng);
    if (mod_ahat(u).singular()) continue;
    const GaugeFixResult r = mod_gauge_fix_sigma(u);
    const double conj = (sm_mul(sm_mul(r.S, u), sm_inverse(r.S)) - r.U_fixed).max_abs();
    worst = std::max({worst, r.U_fixed.chi().max_abs(), conj});
    ++fixed;
  }
  int raised = 0;
  for (int s = 0; s < 100; ++s) {
    const double a0 = coin(rng) ? 1.0 : -1.0;
    Eigen::MatrixXd body = Eigen::MatrixXd::Identity(3, 3) * a0;
    body(1, 2) = a0 * uniform(rng, 0.2, 2.0) * (coin(rng) ? 1 : -1);
    GMatrix eta(2, 1, 2);
    eta(0, 0) = random_odd(2, rng);
    eta(1, 0) = random_odd(2, rng);
    const SuperMatrix g = sample_member(alg, 2, rng);
    const SuperMatrix u = sm_mul(sm_mul(g, sm_mul(SuperMatrix::from_body(body, 1, 2, 2),
                                                  sm_exp(osp_odd_generator(eta, 1)))),
                                 sm_inverse(g));
    if (!grp_is_member(u, 1e-9)) continue;
    try {
      mod_gauge_fix_sigma(u);
    } catch (const SingularAhatError&) {
      ++raised;
    }
  }
  return {worst < 1e-10 && raised == 100,
          fmt("max chi after fixing (and |SUS^-1 - U_fixed|) %.2e on 100 regular members; parabolic raised %d/100", worst, raised)};
}

Outcome sectors() {
  const SectorReport r = mod_enumerate_sectors_osp12();
  bool ok = r.bosonic_sectors == 36 && r.fermionic_sectors == 4;
  int two = 0;
  for (const auto& s : r.sectors)
    if (s.fermionic && s.moduli == 2) ++two;
  ok = ok && two == 4;
  return {ok, fmt("bosonic=%d fermionic=%d, fermionic sectors with moduli 2: %d", r.bosonic_sectors,
                  r.fermionic_sectors, two)};
}

Outcome moduli_oracle() {
  int mismatches = 0, total = 0;
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    Rng rng(1007 + 10 * m + n);
    for (int s = 0; s < 50; ++s) {
      const BodyPair p = random_commuting_body_pair(m, n, rng);
      ++total;
      try {
        if (mod_fermionic_moduli_count(p.a0, p.b0, p.A0, p.B0) !=
            mod_fermionic_moduli_bruteforce(p.a0, p.b0, p.A0, p.B0).moduli())
          ++mismatches;
      } catch (const Error&) {
        ++mismatches;
      }
    }
  }
  return {mismatches == 0, fmt("%d mismatches over %d commuting body pairs", mismatches, total)};
}

Outcome osp22() {
  const Osp22Report r = mod_osp22_partial_report(10);
  return {r.grid_points == 100 && r.max_det_error <= 1e-10 && r.so2_moduli == 4,
          fmt("det formula max error %.2e on %d points; SO(2)xSO(2) moduli %d", r.max_det_error,
              r.grid_points, r.so2_moduli)};
}

Outcome closure() {
  bool ok = true;
  std::string detail;
  for (const SuperAlgebra& alg : {alg_build_osp12(), alg_build_osp(2, 1)}) {
    const ClosureReport r = sp_check_closure(alg, 1e-12);
    ok = ok && r.pass && r.max_residual <= 1e-12 && r.proportionality_residual <= 1e-12;
    detail += fmt("%s residual %.2e lambda %.6f; ", alg.name().c_str(), r.max_residual, r.lambda);
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

Outcome criterion_equivalence() {
  const SuperAlgebra alg = alg_build_osp12();
  const auto s = osp12_sigma();
  int agree = 0;
  for (const Eigen::Matrix2d& dir : {s[0], s[1], sigma_plus()}) {
    const EfmReport e = sp_efm(alg, alg_real_coefficients(alg, a_block(dir)));
    const Eigen::MatrixXd U = (2 * kPi * 0.13 * a_block(dir)).exp();
    const Ahat h = mod_ahat(U.topLeftCorner(1, 1), U.bottomRightCorner(2, 2));
    if (e.singular() == h.singular()) ++agree;
  }
  return {agree == 3, fmt("%d/3 directions agree", agree)};
}

Outcome exponential_sector() {
  Rng rng(1011);
  std::vector<ExponentialSectorPoint> pts;
  for (int i = 0; i < 10; ++i) {
    const double t = uniform(rng, 0.1, kPi - 0.1);
    pts.push_back({std::cos(t), std::sin(t), random_odd(2, rng)});
  }
  const ExponentialSectorReport r = sp_osp12_exponential_sector(alg_build_osp12(), pts, Eigen::Vector2d(0.6, 0.8));
  return {r.samples.size() == 10 && r.max_commutator <= 1e-8,
          fmt("max commutator %.2e, max constraint residual %.2e at 10 points", r.max_commutator,
              r.max_constraint_residual)};
}

Outcome nonexponential() {
  const std::vector<GrassmannElement> psi{GrassmannElement::generator(2, 1),
                                          0.5 * GrassmannElement::generator(2, 2)};
  const Eigen::Matrix2d sigma = osp12_sigma()[1];
  const NonexpFamily f = mod_build_nonexp_holonomy(alg_build_osp12(), 0.3, psi, 64, sigma);
  const bool start = f.U.front() == SuperMatrix::identity(1, 2, 2);
  const double err = (f.U.back().body().bottomRightCorner(2, 2) - f.target_body).cwiseAbs().maxCoeff();
  return {f.U.size() == 64 && start && err <= 1e-8,
          fmt("U(0) = I %s, |U(2pi) body - target| %.2e on 64 points", start ? "exactly" : "NOT", err)};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{
      jacobi,     membership, xi_from_chi, det_invariance,        gauge_fixing,       sectors,
      moduli_oracle, osp22,   closure,     criterion_equivalence, exponential_sector, nonexponential};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %zu: %s %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
