#pragma once

#include <Eigen/Dense>
#include <vector>

#include "superholonomy/grassmann.hpp"

namespace superholonomy {

/// Dense rows x cols matrix with GrassmannElement entries over a fixed N.
///
/// Plain matrix arithmetic; no grading is imposed. SuperMatrix layers the
/// block parity pattern on top of this.
class GMatrix {
 public:
  GMatrix() = default;
  GMatrix(int rows, int cols, int generators);

  static GMatrix identity(int size, int generators);
  /// Lift a real matrix into the body.
  static GMatrix from_body(const Eigen::MatrixXd& body, int generators);
  /// Real matrix times a single Grassmann scalar.
  static GMatrix scaled(const Eigen::MatrixXd& body, const GrassmannElement& s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int generators() const { return n_; }

  const GrassmannElement& operator()(int i, int j) const { return data_[i * cols_ + j]; }
  GrassmannElement& operator()(int i, int j) { return data_[i * cols_ + j]; }

  Eigen::MatrixXd body() const;
  /// Real coefficient matrix of one monomial.
  Eigen::MatrixXd coefficient(Monomial m) const;
  /// Every monomial that appears in some entry, sorted.
  std::vector<Monomial> support() const;
  double max_abs() const;
  bool is_zero() const;
  /// Restriction of every entry to Grassmann degree d.
  GMatrix degree_part(int d) const;

  GMatrix block(int row, int col, int rows, int cols) const;
  void set_block(int row, int col, const GMatrix& b);
  /// Plain transpose of the entry array; no Grassmann signs.
  GMatrix transpose() const;

  GMatrix operator-() const;
  GMatrix& operator+=(const GMatrix& o);
  GMatrix& operator-=(const GMatrix& o);
  friend GMatrix operator+(GMatrix a, const GMatrix& b) { return a += b; }
  friend GMatrix operator-(GMatrix a, const GMatrix& b) { return a -= b; }
  friend GMatrix operator*(const GMatrix& a, const GMatrix& b);
  friend GMatrix operator*(GMatrix a, double s);
  friend GMatrix operator*(double s, GMatrix a) { return std::move(a) * s; }
  /// Left multiplication of every entry by a Grassmann scalar.
  friend GMatrix operator*(const GrassmannElement& s, const GMatrix& a);
  friend bool operator==(const GMatrix& a, const GMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  int n_ = 0;
  std::vector<GrassmannElement> data_;
};

/// Inverse of a square matrix with Grassmann-even entries: body inverse
/// followed by the terminating Neumann series in the nilpotent part.
/// Throws NotInvertibleError when the body is singular.
GMatrix inverse_even(const GMatrix& m);

}  // namespace superholonomy
