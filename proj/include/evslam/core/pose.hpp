#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace evslam {

// Rigid camera-to-world transform. The quaternion is kept unit-norm; every
// operation that produces a Pose renormalizes.
struct Pose {
  Eigen::Quaterniond rotation{1.0, 0.0, 0.0, 0.0};
  Eigen::Vector3d translation{0.0, 0.0, 0.0};

  static Pose identity() { return Pose{}; }

  Eigen::Vector3d apply(const Eigen::Vector3d& p_cam) const {
    return rotation * p_cam + translation;
  }
};

// 6-DoF local increment: axis-angle rotation [rad] and translation [m],
// applied on the left of a pose through the SE(3) exponential.
struct PoseTangent {
  Eigen::Vector3d rot = Eigen::Vector3d::Zero();
  Eigen::Vector3d trans = Eigen::Vector3d::Zero();

  static PoseTangent zero() { return PoseTangent{}; }

  Eigen::Matrix<double, 6, 1> vec() const {
    Eigen::Matrix<double, 6, 1> v;
    v << rot, trans;
    return v;
  }
  static PoseTangent from_vec(const Eigen::Matrix<double, 6, 1>& v) {
    return PoseTangent{v.head<3>(), v.tail<3>()};
  }
  bool finite() const { return rot.allFinite() && trans.allFinite(); }
};

// Quaternion for exp([w]x). Safe at w = 0.
Eigen::Quaterniond so3_exp(const Eigen::Vector3d& w);

// Left Jacobian V(w) of SO(3); the translation part of the SE(3) exponential
// is V(w) * v.
Eigen::Matrix3d so3_left_jacobian(const Eigen::Vector3d& w);

// exp(delta) o pose, quaternion renormalized. Applying the zero tangent is the
// identity, and apply_tangent(apply_tangent(P, d), -d) == P because
// exp(-d) = exp(d)^-1.
Pose apply_tangent(const Pose& pose, const PoseTangent& delta);

Pose compose(const Pose& a, const Pose& b);  // a after b: x -> a(b(x))
Pose inverse(const Pose& p);

// Geodesic rotation distance [rad] and translation distance [m].
double rotation_distance(const Pose& a, const Pose& b);
double translation_distance(const Pose& a, const Pose& b);

}  // namespace evslam
