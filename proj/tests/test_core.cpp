#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Geometry>
#include <cmath>
#include <random>

#include "evslam/core/camera.hpp"
#include "evslam/core/image_ops.hpp"
#include "evslam/core/pose.hpp"

using namespace evslam;

namespace {

// Independent rotation oracle: Rodrigues' formula, no quaternions involved.
Eigen::Matrix3d rodrigues(const Eigen::Vector3d& axis_angle) {
  const double theta = axis_angle.norm();
  if (theta < 1e-12) return Eigen::Matrix3d::Identity();
  const Eigen::Vector3d k = axis_angle / theta;
  Eigen::Matrix3d kx;
  kx << 0, -k.z(), k.y(), k.z(), 0, -k.x(), -k.y(), k.x(), 0;
  return Eigen::Matrix3d::Identity() + std::sin(theta) * kx +
         (1.0 - std::cos(theta)) * kx * kx;
}

Pose random_pose(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Quaterniond q(n(rng), n(rng), n(rng), n(rng));
  q.normalize();
  return Pose{q, Eigen::Vector3d(n(rng), n(rng), n(rng))};
}

}  // namespace

TEST_CASE("apply_tangent: zero tangent is the identity") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Pose p = random_pose(rng);
    const Pose q = apply_tangent(p, PoseTangent::zero());
    CHECK(translation_distance(p, q) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(rotation_distance(p, q) == doctest::Approx(0.0).epsilon(1e-15));
  }
}

TEST_CASE("apply_tangent: pure translation from identity") {
  PoseTangent d;
  d.trans = Eigen::Vector3d(1.0, 2.0, 3.0);
  const Pose p = apply_tangent(Pose::identity(), d);
  CHECK(p.translation.isApprox(Eigen::Vector3d(1, 2, 3), 1e-15));
  CHECK(std::abs(p.rotation.w()) == doctest::Approx(1.0));
}

TEST_CASE("apply_tangent: rotation about x matches Rodrigues oracle") {
  PoseTangent d;
  d.rot = Eigen::Vector3d(M_PI / 2, 0, 0);
  const Pose p = apply_tangent(Pose::identity(), d);
  const Eigen::Vector3d v = p.rotation * Eigen::Vector3d(0, 1, 0);
  CHECK(v.isApprox(Eigen::Vector3d(0, 0, 1), 1e-12));

  std::mt19937_64 rng(11);
  std::normal_distribution<double> n(0.0, 0.8);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Vector3d w(n(rng), n(rng), n(rng));
    PoseTangent t;
    t.rot = w;
    const Pose q = apply_tangent(Pose::identity(), t);
    CHECK(q.rotation.toRotationMatrix().isApprox(rodrigues(w), 1e-12));
  }
}

TEST_CASE("apply_tangent: inverse tangent restores the pose") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> n(0.0, 0.5);
  for (int i = 0; i < 100; ++i) {
    const Pose p = random_pose(rng);
    PoseTangent d;
    d.rot = Eigen::Vector3d(n(rng), n(rng), n(rng));
    d.trans = Eigen::Vector3d(n(rng), n(rng), n(rng));
    PoseTangent minus;
    minus.rot = -d.rot;
    minus.trans = -d.trans;
    const Pose back = apply_tangent(apply_tangent(p, d), minus);
    CHECK(translation_distance(p, back) < 1e-9);
    CHECK(1.0 - std::abs(p.rotation.dot(back.rotation)) < 1e-9);
  }
}

TEST_CASE("compose and inverse are consistent") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Pose a = random_pose(rng);
    const Pose b = random_pose(rng);
    const Pose ab = compose(a, b);
    const Eigen::Vector3d x(0.3, -0.4, 1.2);
    CHECK(ab.apply(x).isApprox(a.apply(b.apply(x)), 1e-12));
    const Pose id = compose(a, inverse(a));
    CHECK(translation_distance(id, Pose::identity()) < 1e-12);
    CHECK(rotation_distance(id, Pose::identity()) < 1e-9);
  }
}

TEST_CASE("luminance: weighted sum with BT.601 weights") {
  RgbImage white(3, 2, 255, 255, 255);
  RgbImage black(3, 2, 0, 0, 0);
  RgbImage red(3, 2, 255, 0, 0);
  CHECK(luminance(white).at(1, 1) == doctest::Approx(255.0));
  CHECK(luminance(black).at(0, 0) == doctest::Approx(0.0));
  CHECK(luminance(red).at(2, 0) == doctest::Approx(76.245));
}

TEST_CASE("luminance stays within channel range") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 255.0);
  RgbImage img(17, 9);
  for (auto& v : img.data) v = u(rng);
  const GrayImage y = luminance(img);
  for (int yy = 0; yy < img.height; ++yy) {
    for (int xx = 0; xx < img.width; ++xx) {
      const double r = img.at(xx, yy, 0), g = img.at(xx, yy, 1), b = img.at(xx, yy, 2);
      const double lo = std::min({r, g, b}), hi = std::max({r, g, b});
      CHECK(y.at(xx, yy) >= lo - 1e-12);
      CHECK(y.at(xx, yy) <= hi + 1e-12);
    }
  }
}

TEST_CASE("downscale: paper dimensions and mean pooling") {
  RgbImage big(1200, 680, 10, 20, 30);
  const RgbImage small = downscale(big, 0.15);
  CHECK(small.width == 180);
  CHECK(small.height == 102);

  EventImage block(2, 2);
  block.pos = {1, 2, 3, 4};
  block.neg = {4, 3, 2, 1};
  const EventImage one = downscale(block, 0.5);
  CHECK(one.width == 1);
  CHECK(one.height == 1);
  CHECK(one.pos[0] == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(one.neg[0] == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("downscale: constants survive for every image type") {
  const double factors[] = {1.0, 0.7, 0.5, 0.31, 0.15};
  for (const double f : factors) {
    GrayImage g(37, 23, 4.25);
    DepthImage d(37, 23, 1.5);
    RgbImage rgb(37, 23, 12.0, 99.0, 201.0);
    EventImage e(37, 23);
    for (auto& v : e.pos) v = 3.0;
    for (auto& v : e.neg) v = 7.0;

    for (const double v : downscale(g, f).data) CHECK(v == doctest::Approx(4.25).epsilon(1e-12));
    for (const double v : downscale(d, f).data) CHECK(v == doctest::Approx(1.5).epsilon(1e-12));
    const RgbImage r2 = downscale(rgb, f);
    for (size_t i = 0; i < r2.data.size(); i += 3) {
      CHECK(r2.data[i] == doctest::Approx(12.0).epsilon(1e-12));
      CHECK(r2.data[i + 1] == doctest::Approx(99.0).epsilon(1e-12));
      CHECK(r2.data[i + 2] == doctest::Approx(201.0).epsilon(1e-12));
    }
    const EventImage e2 = downscale(e, f);
    for (const double v : e2.pos) CHECK(v == doctest::Approx(3.0).epsilon(1e-12));
    for (const double v : e2.neg) CHECK(v == doctest::Approx(7.0).epsilon(1e-12));
  }
}

TEST_CASE("downscale rejects factors that empty the image") {
  GrayImage g(4, 4, 1.0);
  CHECK_THROWS_AS(downscale(g, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(downscale(g, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(downscale(g, 1.5), std::invalid_argument);
}

TEST_CASE("intrinsics validation and scaling") {
  CameraIntrinsics intr{300.0, 300.0, 160.0, 90.0, 320, 180};
  intr.validate();
  const CameraIntrinsics s = intr.scaled_to(48, 27);
  CHECK(s.fx == doctest::Approx(45.0));
  CHECK(s.cx == doctest::Approx(24.0));
  CHECK(s.width == 48);

  CameraIntrinsics bad = intr;
  bad.fx = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = intr;
  bad.cx = 400.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
