#include "superholonomy/gmatrix.hpp"

#include <algorithm>
#include <set>

#include "superholonomy/errors.hpp"

namespace superholonomy {

GMatrix::GMatrix(int rows, int cols, int generators)
    : rows_(rows), cols_(cols), n_(generators),
      data_(static_cast<size_t>(rows) * cols, GrassmannElement(generators)) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
}

GMatrix GMatrix::identity(int size, int generators) {
  GMatrix r(size, size, generators);
  for (int i = 0; i < size; ++i) r(i, i) = GrassmannElement(generators, 1.0);
  return r;
}

GMatrix GMatrix::from_body(const Eigen::MatrixXd& body, int generators) {
  GMatrix r(static_cast<int>(body.rows()), static_cast<int>(body.cols()), generators);
  for (int i = 0; i < r.rows_; ++i)
    for (int j = 0; j < r.cols_; ++j) r(i, j) = GrassmannElement(generators, body(i, j));
  return r;
}

GMatrix GMatrix::scaled(const Eigen::MatrixXd& body, const GrassmannElement& s) {
  GMatrix r(static_cast<int>(body.rows()), static_cast<int>(body.cols()), s.generators());
  for (int i = 0; i < r.rows_; ++i)
    for (int j = 0; j < r.cols_; ++j) r(i, j) = s * body(i, j);
  return r;
}

Eigen::MatrixXd GMatrix::body() const { return coefficient(0u); }

Eigen::MatrixXd GMatrix::coefficient(Monomial m) const {
  Eigen::MatrixXd r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).coeff(m);
  return r;
}

std::vector<Monomial> GMatrix::support() const {
  std::set<Monomial> s;
  for (const auto& e : data_)
    for (const auto& t : e.terms()) s.insert(t.first);
  return {s.begin(), s.end()};
}

double GMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : data_) m = std::max(m, e.max_abs());
  return m;
}

bool GMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& e) { return e.is_zero(); });
}

GMatrix GMatrix::degree_part(int d) const {
  GMatrix r = *this;
  for (auto& e : r.data_) e = e.degree_part(d);
  return r;
}

GMatrix GMatrix::block(int row, int col, int rows, int cols) const {
  if (row < 0 || col < 0 || row + rows > rows_ || col + cols > cols_) {
    throw DimensionError("block out of range");
  }
  GMatrix r(rows, cols, n_);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r(i, j) = (*this)(row + i, col + j);
  return r;
}

void GMatrix::set_block(int row, int col, const GMatrix& b) {
  if (b.n_ != n_) throw DimensionError("block over a different Grassmann algebra");
  if (row < 0 || col < 0 || row + b.rows_ > rows_ || col + b.cols_ > cols_) {
    throw DimensionError("block out of range");
  }
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) (*this)(row + i, col + j) = b(i, j);
}

GMatrix GMatrix::transpose() const {
  GMatrix r(cols_, rows_, n_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

GMatrix GMatrix::operator-() const {
  GMatrix r = *this;
  for (auto& e : r.data_) e = -e;
  return r;
}

GMatrix& GMatrix::operator+=(const GMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_ || o.n_ != n_) {
    throw DimensionError("matrix sum with mismatched shapes");
  }
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

GMatrix& GMatrix::operator-=(const GMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_ || o.n_ != n_) {
    throw DimensionError("matrix difference with mismatched shapes");
  }
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

GMatrix operator*(const GMatrix& a, const GMatrix& b) {
  if (a.cols_ != b.rows_ || a.n_ != b.n_) {
    throw DimensionError("matrix product with mismatched shapes");
  }
  GMatrix r(a.rows_, b.cols_, a.n_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < b.cols_; ++j) {
      std::vector<GrassmannElement::Term> acc;
      for (int k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k);
        const auto& y = b(k, j);
        for (const auto& [mx, cx] : x.terms()) {
          for (const auto& [my, cy] : y.terms()) {
            const int s = merge_sign(mx, my);
            if (s != 0) acc.emplace_back(mx | my, s * cx * cy);
          }
        }
      }
      r(i, j) = GrassmannElement(a.n_, std::move(acc));
    }
  }
  return r;
}

GMatrix operator*(GMatrix a, double s) {
  for (auto& e : a.data_) e *= s;
  return a;
}

GMatrix operator*(const GrassmannElement& s, const GMatrix& a) {
  GMatrix r = a;
  for (auto& e : r.data_) e = s * e;
  return r;
}

GMatrix inverse_even(const GMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const Eigen::MatrixXd body = m.body();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(body);
  if (body.size() > 0 && !lu.isInvertible()) {
    throw NotInvertibleError("matrix body is singular");
  }
  const Eigen::MatrixXd body_inv = body.size() > 0 ? lu.inverse() : body;
  const GMatrix b_inv = GMatrix::from_body(body_inv, m.generators());
  // m = B (1 + B^{-1} S) with S nilpotent, so m^{-1} = sum_k (-B^{-1} S)^k B^{-1}.
  GMatrix soul = m;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) soul(i, j) = m(i, j).soul();
  const GMatrix step = -(b_inv * soul);
  GMatrix term = GMatrix::identity(m.rows(), m.generators());
  GMatrix sum = term;
  for (int k = 1; k <= m.generators(); ++k) {
    term = term * step;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum * b_inv;
}

}  // namespace superholonomy
