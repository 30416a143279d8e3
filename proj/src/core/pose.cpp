#include "evslam/core/pose.hpp"

#include <cmath>

namespace evslam {

namespace {
Eigen::Matrix3d skew(const Eigen::Vector3d& w) {
  Eigen::Matrix3d m;
  m << 0.0, -w.z(), w.y(), w.z(), 0.0, -w.x(), -w.y(), w.x(), 0.0;
  return m;
}
}  // namespace

Eigen::Quaterniond so3_exp(const Eigen::Vector3d& w) {
  const double theta2 = w.squaredNorm();
  const double theta = std::sqrt(theta2);
  double imag_scale;  // sin(theta/2) / theta
  double real;
  if (theta < 1e-8) {
    imag_scale = 0.5 - theta2 / 48.0;
    real = 1.0 - theta2 / 8.0;
  } else {
    imag_scale = std::sin(0.5 * theta) / theta;
    real = std::cos(0.5 * theta);
  }
  Eigen::Quaterniond q(real, w.x() * imag_scale, w.y() * imag_scale, w.z() * imag_scale);
  q.normalize();
  return q;
}

Eigen::Matrix3d so3_left_jacobian(const Eigen::Vector3d& w) {
  const double theta2 = w.squaredNorm();
  const double theta = std::sqrt(theta2);
  const Eigen::Matrix3d W = skew(w);
  double a;  // (1 - cos t) / t^2
  double b;  // (t - sin t) / t^3
  if (theta < 1e-5) {
    a = 0.5 - theta2 / 24.0;
    b = 1.0 / 6.0 - theta2 / 120.0;
  } else {
    a = (1.0 - std::cos(theta)) / theta2;
    b = (theta - std::sin(theta)) / (theta2 * theta);
  }
  return Eigen::Matrix3d::Identity() + a * W + b * W * W;
}

Pose apply_tangent(const Pose& pose, const PoseTangent& delta) {
  const Eigen::Quaterniond q_delta = so3_exp(delta.rot);
  const Eigen::Vector3d t_delta = so3_left_jacobian(delta.rot) * delta.trans;
  Pose out;
  out.rotation = (q_delta * pose.rotation).normalized();
  out.translation = q_delta * pose.translation + t_delta;
  return out;
}

Pose compose(const Pose& a, const Pose& b) {
  Pose out;
  out.rotation = (a.rotation * b.rotation).normalized();
  out.translation = a.rotation * b.translation + a.translation;
  return out;
}

Pose inverse(const Pose& p) {
  Pose out;
  out.rotation = p.rotation.conjugate();
  out.translation = -(out.rotation * p.translation);
  return out;
}

double rotation_distance(const Pose& a, const Pose& b) {
  const Eigen::Quaterniond r = a.rotation.conjugate() * b.rotation;
  return 2.0 * std::atan2(r.vec().norm(), std::abs(r.w()));
}

double translation_distance(const Pose& a, const Pose& b) {
  return (a.translation - b.translation).norm();
}

}  // namespace evslam
