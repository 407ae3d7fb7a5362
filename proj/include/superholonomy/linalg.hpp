#pragma once

#include <Eigen/Dense>

namespace superholonomy {

inline constexpr double kRankThreshold = 1e-10;
inline constexpr double kDefaultTolerance = 1e-10;

/// Numerical rank: singular values of the matrix scaled to unit spectral norm
/// counted above an absolute threshold. The zero matrix has rank 0.
int numeric_rank(const Eigen::MatrixXd& m, double threshold = kRankThreshold);

/// Orthonormal basis (columns) of the kernel under the same rank rule.
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double threshold = kRankThreshold);

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Standard symplectic form [[0, I_n], [-I_n, 0]] of size 2n.
Eigen::MatrixXd symplectic_form(int n);

/// Rotation by angle phi in the plane.
Eigen::Matrix2d rotation(double phi);

}  // namespace superholonomy
