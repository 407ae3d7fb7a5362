#include "superholonomy/supermatrix.hpp"

#include <cmath>
#include <string>

#include "superholonomy/errors.hpp"

namespace superholonomy {

namespace {

void check_pattern(int m, const GMatrix& e, Parity parity) {
  for (int i = 0; i < e.rows(); ++i) {
    for (int j = 0; j < e.cols(); ++j) {
      const int want = ((i < m ? 0 : 1) + (j < m ? 0 : 1) + as_int(parity)) % 2;
      const auto& x = e(i, j);
      if (want == 0 ? !x.is_even() : !x.is_odd()) {
        throw ParityError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") must be Grassmann-" + (want == 0 ? "even" : "odd"));
      }
    }
  }
}

void check_compatible(const SuperMatrix& x, const SuperMatrix& y) {
  if (x.m() != y.m() || x.n() != y.n() || x.generators() != y.generators()) {
    throw DimensionError("supermatrices differ in block sizes or generator count");
  }
}

}  // namespace

SuperMatrix::SuperMatrix(int m, int n, GMatrix entries, Parity parity)
    : m_(m), n_(n), parity_(parity), entries_(std::move(entries)) {
  if (m < 0 || n < 0) throw DimensionError("negative block size");
  if (entries_.rows() != m + n || entries_.cols() != m + n) {
    throw DimensionError("supermatrix entries must be (m+n) x (m+n)");
  }
  check_pattern(m_, entries_, parity_);
}

SuperMatrix SuperMatrix::identity(int m, int n, int generators) {
  return SuperMatrix(m, n, GMatrix::identity(m + n, generators));
}

SuperMatrix SuperMatrix::zero(int m, int n, int generators, Parity parity) {
  return SuperMatrix(m, n, GMatrix(m + n, m + n, generators), parity);
}

SuperMatrix SuperMatrix::from_blocks(const GMatrix& a, const GMatrix& xi, const GMatrix& chi,
                                     const GMatrix& A, Parity parity) {
  const int m = a.rows();
  const int n = A.rows();
  if (a.cols() != m || A.cols() != n || xi.rows() != m || xi.cols() != n || chi.rows() != n ||
      chi.cols() != m) {
    throw DimensionError("inconsistent block shapes");
  }
  GMatrix e(m + n, m + n, a.generators());
  e.set_block(0, 0, a);
  e.set_block(0, m, xi);
  e.set_block(m, 0, chi);
  e.set_block(m, m, A);
  return SuperMatrix(m, n, std::move(e), parity);
}

SuperMatrix SuperMatrix::from_body(const Eigen::MatrixXd& body, int m, int n, int generators,
                                   Parity parity) {
  return SuperMatrix(m, n, GMatrix::from_body(body, generators), parity);
}

SuperMatrix SuperMatrix::operator-() const { return SuperMatrix(m_, n_, -entries_, parity_); }

SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y) {
  check_compatible(x, y);
  if (x.parity_ != y.parity_) throw ParityError("sum of supermatrices of different parity");
  return SuperMatrix(x.m_, x.n_, x.entries_ + y.entries_, x.parity_);
}

SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y) {
  check_compatible(x, y);
  if (x.parity_ != y.parity_) throw ParityError("difference of supermatrices of different parity");
  return SuperMatrix(x.m_, x.n_, x.entries_ - y.entries_, x.parity_);
}

SuperMatrix operator*(const SuperMatrix& x, double s) {
  return SuperMatrix(x.m_, x.n_, x.entries_ * s, x.parity_);
}

SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y) {
  check_compatible(x, y);
  // The constructor re-checks the grading of the product.
  return SuperMatrix(x.m_, x.n_, x.entries_ * y.entries_, x.parity_ + y.parity_);
}

SuperMatrix sm_mul(const SuperMatrix& x, const SuperMatrix& y) { return x * y; }

SuperMatrix sm_commutator(const SuperMatrix& x, const SuperMatrix& y) { return x * y - y * x; }

SuperMatrix sm_supertranspose(const SuperMatrix& x) {
  const int s = x.size();
  GMatrix r(s, s, x.generators());
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      const int pi = x.index_parity(i);
      const int pj = x.index_parity(j);
      const int sign_exp = ((pi + pj) * (pi + as_int(x.parity()))) % 2;
      r(i, j) = sign_exp ? -x(j, i) : x(j, i);
    }
  }
  return SuperMatrix(x.m(), x.n(), std::move(r), x.parity());
}

GrassmannElement sm_supertrace(const SuperMatrix& x) {
  GrassmannElement t(x.generators());
  const bool odd = x.parity() == Parity::Odd;
  for (int i = 0; i < x.size(); ++i) {
    if (x.index_parity(i) == 0 || odd) {
      t += x(i, i);
    } else {
      t -= x(i, i);
    }
  }
  return t;
}

SuperMatrix sm_inverse(const SuperMatrix& x) {
  if (x.parity() != Parity::Even) throw ParityError("only even supermatrices are invertible");
  const GMatrix s = x.a();
  const GMatrix delta = x.xi();
  const GMatrix sigma = x.chi();
  const GMatrix S = x.A();
  const GMatrix s_inv = inverse_even(s);
  const GMatrix S_inv = inverse_even(S);
  // s_bar = s - delta S^{-1} sigma, S_bar = S - sigma s^{-1} delta.
  const GMatrix s_bar_inv = inverse_even(s - delta * S_inv * sigma);
  const GMatrix S_bar_inv = inverse_even(S - sigma * s_inv * delta);
  return SuperMatrix::from_blocks(s_bar_inv, -(s_inv * delta * S_bar_inv),
                                  -(S_inv * sigma * s_bar_inv), S_bar_inv);
}

SuperMatrix sm_exp(const SuperMatrix& x) {
  if (x.parity() != Parity::Even) throw ParityError("exponential needs an even supermatrix");
  const int size = x.size();
  const int N = x.generators();
  double norm = 0.0;
  for (int i = 0; i < size; ++i) {
    double row = 0.0;
    for (int j = 0; j < size; ++j) row += x(i, j).l1_norm();
    norm = std::max(norm, row);
  }
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const SuperMatrix y = x * std::ldexp(1.0, -squarings);

  SuperMatrix result = SuperMatrix::identity(x.m(), x.n(), N);
  SuperMatrix term = result;
  for (int k = 1; k <= 40; ++k) {
    term = term * y * (1.0 / k);
    if (term.max_abs() < 1e-18) break;
    result = result + term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace superholonomy
