#include "superholonomy/graded_phase.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "superholonomy/errors.hpp"
#include "superholonomy/moduli.hpp"
#include "superholonomy/sectors.hpp"

namespace superholonomy {

namespace {

constexpr int kMaxOddVars = 32;

double eps(int k, int j) {
  if (k == j) return 0.0;
  return k < j ? 1.0 : -1.0;
}

Eigen::MatrixXd sub_block(const Eigen::MatrixXd& m, const std::vector<int>& idx) {
  Eigen::MatrixXd out(idx.size(), idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) out(i, j) = m(idx[i], idx[j]);
  return out;
}

}  // namespace

PhaseSpace::PhaseSpace(SuperAlgebra alg) : alg_(std::move(alg)) { build(alg_.eta_inverse()); }

PhaseSpace::PhaseSpace(SuperAlgebra alg, Eigen::MatrixXd inverse_form) : alg_(std::move(alg)) {
  build(inverse_form);
}

void PhaseSpace::build(const Eigen::MatrixXd& inverse_form) {
  if (inverse_form.rows() != alg_.dim() || inverse_form.cols() != alg_.dim()) {
    throw DimensionError("inverse form must be dim x dim");
  }
  if (odd_vars() > kMaxOddVars) throw DimensionError("too many odd phase-space variables");
  inverse_form_ = inverse_form;
  const Eigen::MatrixXd e = eta_upper();
  const Eigen::MatrixXd c = c_upper();
  even_form_ = Eigen::MatrixXd::Zero(even_vars(), even_vars());
  odd_form_ = Eigen::MatrixXd::Zero(odd_vars(), odd_vars());
  for (int k = 1; k <= 2; ++k)
    for (int j = 1; j <= 2; ++j) {
      for (int a = 0; a < even_dim(); ++a)
        for (int b = 0; b < even_dim(); ++b) even_form_(a_var(k, a), a_var(j, b)) = eps(k, j) * e(a, b);
      for (int a = 0; a < odd_dim(); ++a)
        for (int b = 0; b < odd_dim(); ++b) odd_form_(psi_var(k, a), psi_var(j, b)) = eps(k, j) * c(a, b);
    }
}

Eigen::MatrixXd PhaseSpace::eta_upper() const {
  return sub_block(inverse_form_, alg_.even_indices());
}

Eigen::MatrixXd PhaseSpace::c_upper() const { return sub_block(inverse_form_, alg_.odd_indices()); }

PhaseSpacePtr make_phase_space(const SuperAlgebra& alg) {
  return std::make_shared<const PhaseSpace>(alg);
}

PhaseSpacePtr make_phase_space(const SuperAlgebra& alg, const Eigen::MatrixXd& inverse_form) {
  return std::make_shared<const PhaseSpace>(alg, inverse_form);
}

GradedPolynomial::GradedPolynomial(PhaseSpacePtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw Error("polynomial needs a phase-space context");
}

GradedPolynomial GradedPolynomial::constant(PhaseSpacePtr ctx, double c) {
  GradedPolynomial p(std::move(ctx));
  p.add_term(PolyKey{std::vector<int>(p.ctx_->even_vars(), 0), 0}, c);
  return p;
}

GradedPolynomial GradedPolynomial::a(PhaseSpacePtr ctx, int k, int a) {
  GradedPolynomial p(std::move(ctx));
  if (k < 1 || k > 2 || a < 0 || a >= p.ctx_->even_dim()) throw DimensionError("A index out of range");
  PolyKey key{std::vector<int>(p.ctx_->even_vars(), 0), 0};
  key.exps[p.ctx_->a_var(k, a)] = 1;
  p.add_term(key, 1.0);
  return p;
}

GradedPolynomial GradedPolynomial::psi(PhaseSpacePtr ctx, int k, int alpha) {
  GradedPolynomial p(std::move(ctx));
  if (k < 1 || k > 2 || alpha < 0 || alpha >= p.ctx_->odd_dim()) {
    throw DimensionError("psi index out of range");
  }
  p.add_term(PolyKey{std::vector<int>(p.ctx_->even_vars(), 0), 1u << p.ctx_->psi_var(k, alpha)},
             1.0);
  return p;
}

void GradedPolynomial::add_term(const PolyKey& key, double c) {
  if (static_cast<int>(key.exps.size()) != ctx_->even_vars()) throw DimensionError("bad key size");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (std::abs(c) >= kDropTolerance) terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (std::abs(it->second) < kDropTolerance) terms_.erase(it);
}

void GradedPolynomial::check_context(const GradedPolynomial& o) const {
  if (ctx_ != o.ctx_) throw DimensionError("polynomials live in different phase spaces");
}

double GradedPolynomial::max_abs() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

bool GradedPolynomial::is_even() const {
  for (const auto& [k, c] : terms_)
    if (std::popcount(k.odd) % 2 != 0) return false;
  return true;
}

bool GradedPolynomial::is_odd() const {
  for (const auto& [k, c] : terms_)
    if (std::popcount(k.odd) % 2 != 1) return false;
  return !terms_.empty();
}

Parity GradedPolynomial::parity() const {
  if (is_even()) return Parity::Even;
  if (is_odd()) return Parity::Odd;
  throw ParityError("polynomial is not homogeneous");
}

int GradedPolynomial::degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) {
    int s = std::popcount(k.odd);
    for (int e : k.exps) s += e;
    d = std::max(d, s);
  }
  return d;
}

GradedPolynomial GradedPolynomial::operator-() const {
  GradedPolynomial r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
  check_context(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
  check_context(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (std::abs(it->second) < kDropTolerance) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

GradedPolynomial operator*(const GradedPolynomial& x, const GradedPolynomial& y) {
  x.check_context(y);
  GradedPolynomial r(x.ctx_);
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_) {
      const int s = merge_sign(kx.odd, ky.odd);
      if (s == 0) continue;
      PolyKey k{kx.exps, kx.odd | ky.odd};
      for (size_t i = 0; i < k.exps.size(); ++i) k.exps[i] += ky.exps[i];
      r.add_term(k, s * cx * cy);
    }
  return r;
}

GradedPolynomial GradedPolynomial::d_even(int var) const {
  GradedPolynomial r(ctx_);
  for (const auto& [k, c] : terms_) {
    if (k.exps[var] == 0) continue;
    PolyKey nk = k;
    nk.exps[var] -= 1;
    r.add_term(nk, c * k.exps[var]);
  }
  return r;
}

GradedPolynomial GradedPolynomial::d_left(int var) const {
  GradedPolynomial r(ctx_);
  const std::uint32_t bit = 1u << var;
  for (const auto& [k, c] : terms_) {
    if (!(k.odd & bit)) continue;
    const int before = std::popcount(k.odd & (bit - 1));
    r.add_term(PolyKey{k.exps, k.odd & ~bit}, (before % 2 ? -c : c));
  }
  return r;
}

GradedPolynomial GradedPolynomial::d_right(int var) const {
  GradedPolynomial r(ctx_);
  const std::uint32_t bit = 1u << var;
  for (const auto& [k, c] : terms_) {
    if (!(k.odd & bit)) continue;
    const int after = std::popcount(static_cast<std::uint64_t>(k.odd) >> (var + 1));
    r.add_term(PolyKey{k.exps, k.odd & ~bit}, (after % 2 ? -c : c));
  }
  return r;
}

GrassmannElement GradedPolynomial::evaluate(const std::vector<GrassmannElement>& a_values,
                                            const std::vector<GrassmannElement>& psi_values) const {
  if (static_cast<int>(a_values.size()) != ctx_->even_vars() ||
      static_cast<int>(psi_values.size()) != ctx_->odd_vars()) {
    throw DimensionError("wrong number of phase-space values");
  }
  const int N = !a_values.empty() ? a_values[0].generators()
                                  : (!psi_values.empty() ? psi_values[0].generators() : 0);
  GrassmannElement total(N);
  for (const auto& [k, c] : terms_) {
    GrassmannElement t(N, c);
    for (size_t i = 0; i < k.exps.size(); ++i)
      for (int e = 0; e < k.exps[i]; ++e) t = t * a_values[i];
    for (std::uint32_t rest = k.odd; rest; rest &= rest - 1) {
      t = t * psi_values[std::countr_zero(rest)];
    }
    total += t;
  }
  return total;
}

std::string to_string(const GradedPolynomial& p) {
  const PhaseSpace& ctx = *p.context();
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    os << (first ? "" : " + ") << c;
    first = false;
    for (size_t i = 0; i < k.exps.size(); ++i) {
      if (k.exps[i] == 0) continue;
      const int kk = static_cast<int>(i) / ctx.even_dim() + 1;
      const int a = static_cast<int>(i) % ctx.even_dim();
      os << "*A" << kk << "[" << ctx.algebra().label(ctx.algebra().even_indices()[a]) << "]";
      if (k.exps[i] > 1) os << "^" << k.exps[i];
    }
    for (std::uint32_t rest = k.odd; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      os << "*psi" << v / ctx.odd_dim() + 1 << "["
         << ctx.algebra().label(ctx.algebra().odd_indices()[v % ctx.odd_dim()]) << "]";
    }
  }
  if (first) os << "0";
  return os.str();
}

GradedPolynomial sp_bracket(const GradedPolynomial& p, const GradedPolynomial& q) {
  if (p.context() != q.context()) throw DimensionError("polynomials live in different phase spaces");
  const PhaseSpace& ctx = *p.context();
  GradedPolynomial r(p.context());
  std::vector<GradedPolynomial> dq;
  for (int j = 0; j < ctx.even_vars(); ++j) dq.push_back(q.d_even(j));
  for (int i = 0; i < ctx.even_vars(); ++i) {
    const GradedPolynomial dp = p.d_even(i);
    if (dp.is_zero()) continue;
    for (int j = 0; j < ctx.even_vars(); ++j) {
      const double w = ctx.even_form()(i, j);
      if (w == 0.0 || dq[j].is_zero()) continue;
      r += w * (dp * dq[j]);
    }
  }
  dq.clear();
  for (int j = 0; j < ctx.odd_vars(); ++j) dq.push_back(q.d_left(j));
  for (int i = 0; i < ctx.odd_vars(); ++i) {
    const GradedPolynomial dp = p.d_right(i);
    if (dp.is_zero()) continue;
    for (int j = 0; j < ctx.odd_vars(); ++j) {
      const double w = ctx.odd_form()(i, j);
      if (w == 0.0 || dq[j].is_zero()) continue;
      r += w * (dp * dq[j]);
    }
  }
  return r;
}

Constraints sp_constraints(const PhaseSpacePtr& ctx, ConstraintVariant variant) {
  const SuperAlgebra& alg = ctx->algebra();
  const auto& E = alg.even_indices();
  const auto& O = alg.odd_indices();
  const int de = ctx->even_dim(), dodd = ctx->odd_dim();
  const int second = variant == ConstraintVariant::Commutator ? 2 : 1;
  Constraints out;
  for (int a = 0; a < de; ++a) {
    GradedPolynomial g(ctx);
    for (int b = 0; b < de; ++b)
      for (int c = 0; c < de; ++c) {
        const double f = alg.f(E[b], E[c], E[a]);
        if (f != 0.0) {
          g += f * (GradedPolynomial::a(ctx, 1, b) * GradedPolynomial::a(ctx, second, c));
        }
      }
    for (int al = 0; al < dodd; ++al)
      for (int be = 0; be < dodd; ++be) {
        const double f = alg.f(O[al], O[be], E[a]);
        if (f != 0.0) {
          g += f * (GradedPolynomial::psi(ctx, 1, al) * GradedPolynomial::psi(ctx, 2, be));
        }
      }
    out.even.push_back(std::move(g));
  }
  for (int al = 0; al < dodd; ++al) {
    GradedPolynomial g(ctx);
    for (int a = 0; a < de; ++a)
      for (int be = 0; be < dodd; ++be) {
        const double f = alg.f(E[a], O[be], O[al]);
        if (f == 0.0) continue;
        g += f * (GradedPolynomial::a(ctx, 1, a) * GradedPolynomial::psi(ctx, 2, be) -
                  GradedPolynomial::a(ctx, 2, a) * GradedPolynomial::psi(ctx, 1, be));
      }
    out.odd.push_back(std::move(g));
  }
  int ie = 0, io = 0;
  for (int i = 0; i < alg.dim(); ++i) {
    out.all.push_back(alg.parity(i) == Parity::Even ? out.even[ie++] : out.odd[io++]);
  }
  return out;
}

PhasePoint phase_point_from_elements(const PhaseSpace& ctx, const SuperMatrix& x1,
                                     const SuperMatrix& x2) {
  const SuperAlgebra& alg = ctx.algebra();
  PhasePoint pt;
  pt.a.resize(ctx.even_vars());
  pt.psi.resize(ctx.odd_vars());
  int k = 1;
  for (const SuperMatrix* x : {&x1, &x2}) {
    const std::vector<GrassmannElement> coeffs = alg_coefficients(alg, *x);
    for (int a = 0; a < ctx.even_dim(); ++a) pt.a[ctx.a_var(k, a)] = coeffs[alg.even_indices()[a]];
    for (int al = 0; al < ctx.odd_dim(); ++al) {
      pt.psi[ctx.psi_var(k, al)] = coeffs[alg.odd_indices()[al]];
    }
    ++k;
  }
  return pt;
}

double sp_constraint_residual(const std::vector<GradedPolynomial>& g, const PhasePoint& pt) {
  double r = 0.0;
  for (const auto& p : g) r = std::max(r, p.evaluate(pt.a, pt.psi).max_abs());
  return r;
}

ClosureReport sp_check_closure(const PhaseSpacePtr& ctx, double tol) {
  const SuperAlgebra& alg = ctx->algebra();
  const int dim = alg.dim();
  const Constraints cons = sp_constraints(ctx);
  std::vector<GradedPolynomial> lowered;
  for (int i = 0; i < dim; ++i) {
    GradedPolynomial g(ctx);
    for (int k = 0; k < dim; ++k) {
      if (alg.eta()(i, k) != 0.0) g += alg.eta()(i, k) * cons.all[k];
    }
    lowered.push_back(std::move(g));
  }

  ClosureReport rep;
  rep.dim = dim;
  rep.component.assign(static_cast<size_t>(dim) * dim * dim, 0.0);
  rep.induced.assign(rep.component.size(), 0.0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const GradedPolynomial b = sp_bracket(lowered[i], lowered[j]);
      std::map<PolyKey, int> rows;
      for (const auto& g : lowered)
        for (const auto& [k, c] : g.terms()) rows.emplace(k, 0);
      for (const auto& [k, c] : b.terms()) rows.emplace(k, 0);
      int idx = 0;
      for (auto& [k, r] : rows) r = idx++;
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(idx, dim);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(idx);
      for (int k = 0; k < dim; ++k)
        for (const auto& [key, c] : lowered[k].terms()) m(rows[key], k) = c;
      for (const auto& [key, c] : b.terms()) rhs(rows[key]) = c;
      const Eigen::VectorXd g = m.colPivHouseholderQr().solve(rhs);
      if (idx > 0) rep.max_residual = std::max(rep.max_residual, (m * g - rhs).cwiseAbs().maxCoeff());
      const double sign = alg.parity(i) == Parity::Odd && alg.parity(j) == Parity::Odd ? -1.0 : 1.0;
      for (int k = 0; k < dim; ++k) {
        rep.component[(i * dim + j) * dim + k] = g(k);
        rep.induced[(i * dim + j) * dim + k] = sign * g(k);
      }
    }

  double gf = 0.0, ff = 0.0;
  const auto& f = alg.structure_constants();
  for (size_t t = 0; t < f.size(); ++t) {
    gf += rep.induced[t] * f[t];
    ff += f[t] * f[t];
  }
  rep.lambda = ff > 0.0 ? gf / ff : 0.0;
  for (size_t t = 0; t < f.size(); ++t) {
    rep.proportionality_residual =
        std::max(rep.proportionality_residual, std::abs(rep.induced[t] - rep.lambda * f[t]));
  }
  rep.pass = rep.max_residual <= tol && rep.proportionality_residual <= tol;
  return rep;
}

ClosureReport sp_check_closure(const SuperAlgebra& alg, double tol) {
  return sp_check_closure(make_phase_space(alg), tol);
}

EfmReport sp_efm(const SuperAlgebra& alg, const Eigen::VectorXd& c) {
  const Eigen::MatrixXd J = alg_ff_block(alg, c);
  EfmReport r;
  r.odd_dim = static_cast<int>(J.rows());
  r.det = r.odd_dim > 0 ? J.determinant() : 1.0;
  r.rank = numeric_rank(J);
  r.moduli = 2 * (r.odd_dim - r.rank);
  return r;
}

std::vector<GradedPolynomial> sp_sector_fermionic_constraints(const PhaseSpacePtr& ctx,
                                                              const Eigen::VectorXd& c,
                                                              double cal_a1, double cal_a2) {
  const Eigen::MatrixXd J = alg_ff_block(ctx->algebra(), c);
  const int d = ctx->odd_dim();
  // Row alpha: coefficients of G^alpha on (psi_1, psi_2).
  Eigen::MatrixXd L(d, 2 * d);
  for (int al = 0; al < d; ++al)
    for (int be = 0; be < d; ++be) {
      L(al, ctx->psi_var(1, be)) = -cal_a2 * J(be, al);
      L(al, ctx->psi_var(2, be)) = cal_a1 * J(be, al);
    }
  const int r = numeric_rank(J);
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(L.transpose());
  std::vector<GradedPolynomial> out;
  for (int i = 0; i < r; ++i) {
    const int row = qr.colsPermutation().indices()(i);
    GradedPolynomial g(ctx);
    for (int v = 0; v < 2 * d; ++v) {
      const int k = v < d ? 1 : 2;
      if (L(row, v) != 0.0) g += L(row, v) * GradedPolynomial::psi(ctx, k, v % d);
    }
    out.push_back(std::move(g));
  }
  return out;
}

GradedPolynomial sp_paired_condition(const PhaseSpacePtr& ctx, int j, double cal_a1,
                                     double cal_a2) {
  return cal_a1 * GradedPolynomial::psi(ctx, 2, j) - cal_a2 * GradedPolynomial::psi(ctx, 1, j);
}

GaugeFixingReport sp_gauge_fixing_check(const PhaseSpacePtr& ctx, const Eigen::VectorXd& c,
                                        double cal_a1, double cal_a2,
                                        const std::vector<GradedPolynomial>& chi, double tol) {
  const std::vector<GradedPolynomial> g = sp_sector_fermionic_constraints(ctx, c, cal_a1, cal_a2);
  GaugeFixingReport rep;
  rep.r = static_cast<int>(g.size());
  if (static_cast<int>(chi.size()) != rep.r) {
    throw DimensionError("expected " + std::to_string(rep.r) + " gauge conditions, got " +
                         std::to_string(chi.size()));
  }
  const int nv = ctx->odd_vars();
  auto linear_row = [&](const GradedPolynomial& p) {
    if (p.context() != ctx) throw DimensionError("gauge condition from another phase space");
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(nv);
    for (const auto& [k, v] : p.terms()) {
      const bool bosonic_free = std::all_of(k.exps.begin(), k.exps.end(), [](int e) { return e == 0; });
      if (!bosonic_free || std::popcount(k.odd) != 1) {
        throw DimensionError("gauge conditions must be linear in psi");
      }
      row(std::countr_zero(k.odd)) = v;
    }
    return row;
  };

  Eigen::MatrixXd M(rep.r, rep.r);
  for (int i = 0; i < rep.r; ++i)
    for (int j = 0; j < rep.r; ++j) {
      const GradedPolynomial b = sp_bracket(g[i], chi[j]);
      M(i, j) = b.evaluate(std::vector<GrassmannElement>(ctx->even_vars(), GrassmannElement(0)),
                           std::vector<GrassmannElement>(nv, GrassmannElement(0)))
                    .body();
    }
  rep.det = rep.r > 0 ? M.determinant() : 1.0;

  Eigen::MatrixXd stack(2 * rep.r, nv);
  for (int i = 0; i < rep.r; ++i) {
    stack.row(i) = linear_row(g[i]);
    stack.row(rep.r + i) = linear_row(chi[i]);
  }
  const Eigen::MatrixXd K = rep.r > 0 ? null_space(stack) : Eigen::MatrixXd::Identity(nv, nv);
  rep.free_odd = static_cast<int>(K.cols());

  const SuperAlgebra& alg = ctx->algebra();
  const auto& E = alg.even_indices();
  const auto& O = alg.odd_indices();
  for (int a = 0; a < ctx->even_dim(); ++a) {
    Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(nv, nv);
    for (int al = 0; al < ctx->odd_dim(); ++al)
      for (int be = 0; be < ctx->odd_dim(); ++be) {
        Q(ctx->psi_var(1, al), ctx->psi_var(2, be)) = alg.f(O[al], O[be], E[a]);
      }
    const Eigen::MatrixXd R = K.transpose() * Q * K;
    if (R.size() > 0) {
      rep.afc_residual = std::max(rep.afc_residual, (R - R.transpose()).cwiseAbs().maxCoeff());
    }
  }
  rep.pass = std::abs(rep.det) > kRankThreshold && rep.afc_residual <= tol;
  return rep;
}

ExponentialSectorReport sp_osp12_exponential_sector(
    const SuperAlgebra& osp12, const std::vector<ExponentialSectorPoint>& points,
    const Eigen::Vector2d& c_alpha) {
  if (osp12.rep_m() != 1 || osp12.rep_n() != 2 || osp12.odd_indices().size() != 2) {
    throw DimensionError("needs the osp(1|2) representation");
  }
  const auto ctx = make_phase_space(osp12);
  const Constraints cons = sp_constraints(ctx);
  Eigen::MatrixXd splus = Eigen::MatrixXd::Zero(3, 3);
  splus.bottomRightCorner(2, 2) = sigma_plus();

  ExponentialSectorReport rep;
  const Eigen::VectorXd full = alg_real_coefficients(osp12, splus);
  rep.c = Eigen::VectorXd::Zero(osp12.even_indices().size());
  for (size_t i = 0; i < osp12.even_indices().size(); ++i) rep.c(i) = full(osp12.even_indices()[i]);
  const Eigen::MatrixXd J = alg_ff_block(osp12, full);
  rep.plus_index = J.row(0).norm() >= J.row(1).norm() ? 0 : 1;
  rep.minus_index = 1 - rep.plus_index;

  for (const auto& pt : points) {
    if (pt.q == 0.0) throw DimensionError("q must be nonzero");
    const int N = pt.psi.generators();
    auto element = [&](double bos, double ferm) {
      GMatrix x = GMatrix::from_body(bos * splus, N);
      for (int i = 0; i < 2; ++i) {
        x += GMatrix::scaled(osp12.rep(osp12.odd_indices()[i]), (ferm * c_alpha(i)) * pt.psi);
      }
      return SuperMatrix(1, 2, x);
    };
    const SuperMatrix X1 = element(pt.p, pt.p / pt.q);
    const SuperMatrix X2 = element(pt.q, 1.0);
    const double two_pi = 2.0 * std::numbers::pi;
    const SuperMatrix U1 = sm_exp(two_pi * X1);
    const SuperMatrix U2 = sm_exp(two_pi * X2);

    ExponentialSectorSample s;
    s.p = pt.p;
    s.q = pt.q;
    s.commutator = commutator_residual(U1, U2);
    const PhasePoint v = phase_point_from_elements(*ctx, X1, X2);
    s.constraint_residual = sp_constraint_residual(cons.all, v);
    s.fc_residual = sp_paired_condition(ctx, rep.plus_index, pt.p, pt.q).evaluate(v.a, v.psi).max_abs();
    s.gfc_residual =
        sp_paired_condition(ctx, rep.minus_index, pt.p, pt.q).evaluate(v.a, v.psi).max_abs();
    rep.max_commutator = std::max(rep.max_commutator, s.commutator);
    rep.max_constraint_residual = std::max(rep.max_constraint_residual, s.constraint_residual);
    rep.samples.push_back(s);
  }
  return rep;
}

}  // namespace superholonomy
