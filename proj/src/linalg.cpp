#include "superholonomy/linalg.hpp"

#include <cmath>

namespace superholonomy {

int numeric_rank(const Eigen::MatrixXd& m, double threshold) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) / sv(0) > threshold) ++r;
  }
  return r;
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double threshold) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return Eigen::MatrixXd::Identity(cols, cols);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const int r = numeric_rank(m, threshold);
  return svd.matrixV().rightCols(cols - r);
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

Eigen::MatrixXd symplectic_form(int n) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  c.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  c.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  return c;
}

Eigen::Matrix2d rotation(double phi) {
  Eigen::Matrix2d r;
  r << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  return r;
}

}  // namespace superholonomy
