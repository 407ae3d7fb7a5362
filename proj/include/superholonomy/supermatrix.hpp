#pragma once

#include <Eigen/Dense>

#include "superholonomy/gmatrix.hpp"
#include "superholonomy/grassmann.hpp"

namespace superholonomy {

/// (m+n) x (m+n) block-graded matrix over B_N, written M = (a xi; chi A) with
/// a of size m x m and A of size n x n.
///
/// An even supermatrix has Grassmann-even entries in a and A and odd entries in
/// xi and chi; an odd supermatrix swaps the two. The pattern is checked on
/// construction, so every SuperMatrix value is homogeneous.
class SuperMatrix {
 public:
  SuperMatrix() = default;
  SuperMatrix(int m, int n, GMatrix entries, Parity parity = Parity::Even);

  static SuperMatrix identity(int m, int n, int generators);
  static SuperMatrix zero(int m, int n, int generators, Parity parity = Parity::Even);
  static SuperMatrix from_blocks(const GMatrix& a, const GMatrix& xi, const GMatrix& chi,
                                 const GMatrix& A, Parity parity = Parity::Even);
  /// Real matrix placed in the body; only valid where the pattern allows
  /// Grassmann-degree-zero entries.
  static SuperMatrix from_body(const Eigen::MatrixXd& body, int m, int n, int generators,
                               Parity parity = Parity::Even);

  int m() const { return m_; }
  int n() const { return n_; }
  int size() const { return m_ + n_; }
  int generators() const { return entries_.generators(); }
  Parity parity() const { return parity_; }

  const GMatrix& entries() const { return entries_; }
  const GrassmannElement& operator()(int i, int j) const { return entries_(i, j); }

  GMatrix a() const { return entries_.block(0, 0, m_, m_); }
  GMatrix xi() const { return entries_.block(0, m_, m_, n_); }
  GMatrix chi() const { return entries_.block(m_, 0, n_, m_); }
  GMatrix A() const { return entries_.block(m_, m_, n_, n_); }

  Eigen::MatrixXd body() const { return entries_.body(); }
  double max_abs() const { return entries_.max_abs(); }
  /// Row/column grading: 0 for the first m indices, 1 afterwards.
  int index_parity(int i) const { return i < m_ ? 0 : 1; }

  SuperMatrix operator-() const;
  friend SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y);
  friend SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y);
  friend SuperMatrix operator*(const SuperMatrix& x, double s);
  friend SuperMatrix operator*(double s, const SuperMatrix& x) { return x * s; }
  friend SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y);
  friend bool operator==(const SuperMatrix& x, const SuperMatrix& y) {
    return x.m_ == y.m_ && x.n_ == y.n_ && x.parity_ == y.parity_ && x.entries_ == y.entries_;
  }

 private:
  int m_ = 0;
  int n_ = 0;
  Parity parity_ = Parity::Even;
  GMatrix entries_;
};

SuperMatrix sm_mul(const SuperMatrix& x, const SuperMatrix& y);

/// (M^st)_ij = (-1)^{(|i|+|j|)(|i|+|M|)} M_ji; for even M this maps the blocks
/// (a, xi, chi, A) to (a^T, chi^T, -xi^T, A^T).
SuperMatrix sm_supertranspose(const SuperMatrix& x);

/// tr(a) - tr(A) for even matrices, tr(a) + tr(A) for odd ones.
GrassmannElement sm_supertrace(const SuperMatrix& x);

/// Two-sided inverse of an even supermatrix by the Schur-complement block
/// formula. Throws NotInvertibleError if a body diagonal block is singular.
SuperMatrix sm_inverse(const SuperMatrix& x);

/// Exponential of an even supermatrix: scaling and squaring around a Taylor
/// kernel. Nilpotent contributions terminate at Grassmann degree N.
SuperMatrix sm_exp(const SuperMatrix& x);

/// XY - YX.
SuperMatrix sm_commutator(const SuperMatrix& x, const SuperMatrix& y);

}  // namespace superholonomy
