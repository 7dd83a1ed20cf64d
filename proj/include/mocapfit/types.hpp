#pragma once

#include <Eigen/Dense>

namespace mocapfit {

template <typename T>
using Vec3 = Eigen::Matrix<T, 3, 1>;
template <typename T>
using Mat3 = Eigen::Matrix<T, 3, 3>;
// Rigid/affine transform stored as [R | t].
template <typename T>
using Affine34 = Eigen::Matrix<T, 3, 4>;
template <typename T>
using VecX = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <typename T>
using MatX3 = Eigen::Matrix<T, Eigen::Dynamic, 3>;

using Vec3d = Eigen::Vector3d;
using Mat3d = Eigen::Matrix3d;
using VecXd = Eigen::VectorXd;
using MatX3d = Eigen::MatrixX3d;
using MatXd = Eigen::MatrixXd;
using FaceMatrix = Eigen::Matrix<int, Eigen::Dynamic, 3>;

template <typename T>
Affine34<T> identity_transform() {
  Affine34<T> a;
  a.setZero();
  a(0, 0) = T(1);
  a(1, 1) = T(1);
  a(2, 2) = T(1);
  return a;
}

template <typename T>
Affine34<T> compose(const Affine34<T>& a, const Affine34<T>& b) {
  Affine34<T> r;
  r.template leftCols<3>() = a.template leftCols<3>() * b.template leftCols<3>();
  r.col(3) = a.template leftCols<3>() * b.col(3) + a.col(3);
  return r;
}

template <typename T>
Vec3<T> apply_transform(const Affine34<T>& a, const Vec3<T>& p) {
  return a.template leftCols<3>() * p + a.col(3);
}

}  // namespace mocapfit
