#include "evslam/render/scene_factory.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace evslam {

namespace {

constexpr double kSolid = 8.0;
constexpr double kFree = -8.0;

struct Box {
  Eigen::Vector3d lo, hi;
  Eigen::Vector3d color;
  bool checker = false;
  Eigen::Vector3d color2 = Eigen::Vector3d::Zero();

  bool contains(const Eigen::Vector3d& p) const {
    return (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
  }
};

struct Sphere {
  Eigen::Vector3d center;
  double radius = 0.0;
  Eigen::Vector3d color;
};

double luma(const Eigen::Vector3d& c) { return 0.299 * c.x() + 0.587 * c.y() + 0.114 * c.z(); }

Eigen::Vector3d random_color(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(20.0, 245.0);
  return Eigen::Vector3d(u(rng), u(rng), u(rng));
}

// Two colors with a strong luminance gap, so wall checkers produce events.
std::pair<Eigen::Vector3d, Eigen::Vector3d> contrast_pair(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Eigen::Vector3d a = random_color(rng);
    const Eigen::Vector3d b = random_color(rng);
    if (std::abs(luma(a) - luma(b)) > 80.0) return {a, b};
  }
  return {Eigen::Vector3d(235, 235, 225), Eigen::Vector3d(25, 30, 40)};
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// small deterministic per-node tint so no wall is perfectly flat
double node_jitter(std::uint64_t seed, size_t node, int channel) {
  const std::uint64_t h = mix64(seed ^ mix64(node * 3 + channel));
  return (static_cast<double>(h >> 11) * 0x1.0p-53 - 0.5) * 14.0;
}

int checker_index(double u, double v, double cell) {
  const auto fold = [](double x) { return static_cast<long>(std::floor(x)); };
  return static_cast<int>((fold(u / cell) + fold(v / cell)) & 1);
}

}  // namespace

VoxelScene make_scene(const SceneSpec& spec) {
  VoxelScene scene = VoxelScene::create(spec.nx, spec.ny, spec.nz, spec.bounds_min,
                                        spec.bounds_max, kFree);
  if (spec.preset == "empty") return scene;

  std::mt19937_64 rng(spec.seed);
  const Eigen::Vector3d ext = spec.bounds_max - spec.bounds_min;
  const Eigen::Vector3d lo = spec.bounds_min;
  const Eigen::Vector3d hi = spec.bounds_max;

  const bool room = spec.preset == "room";
  if (!room && spec.preset != "boxes") {
    throw std::invalid_argument("make_scene: unknown preset '" + spec.preset + "'");
  }

  // wall shell thickness: two grid cells
  const Eigen::Vector3d cs = scene.cell_size();
  const double tx = 2.0 * cs.x(), ty = 2.0 * cs.y(), tz = 2.0 * cs.z();

  // per-face checker palettes
  std::pair<Eigen::Vector3d, Eigen::Vector3d> face_colors[6];
  for (auto& fc : face_colors) fc = contrast_pair(rng);
  std::uniform_real_distribution<double> cell_dist(0.35, 0.6);
  const double cell = cell_dist(rng);

  std::uniform_real_distribution<double> ux(lo.x() + 0.6, hi.x() - 0.6);
  std::uniform_real_distribution<double> uz(lo.z() + 0.6, hi.z() - 0.6);
  std::uniform_real_distribution<double> usize(0.25, 0.55);
  std::uniform_real_distribution<double> uheight(0.4, 1.4);
  std::uniform_int_distribution<int> ncheck(0, 2);

  std::vector<Box> boxes;
  const int n_boxes = room ? 4 : 6;
  for (int b = 0; b < n_boxes; ++b) {
    Box box;
    const double sx = usize(rng), sz = usize(rng), h = uheight(rng);
    const Eigen::Vector3d c(ux(rng), 0.0, uz(rng));
    box.lo = Eigen::Vector3d(c.x() - sx, lo.y(), c.z() - sz);
    box.hi = Eigen::Vector3d(c.x() + sx, lo.y() + h, c.z() + sz);
    box.color = random_color(rng);
    box.checker = ncheck(rng) == 0;
    box.color2 = random_color(rng);
    boxes.push_back(box);
  }
  Sphere sphere;
  sphere.center = Eigen::Vector3d(ux(rng), lo.y() + 0.9, uz(rng));
  sphere.radius = 0.35;
  sphere.color = random_color(rng);

  for (int k = 0; k < scene.nz; ++k) {
    for (int j = 0; j < scene.ny; ++j) {
      for (int i = 0; i < scene.nx; ++i) {
        const Eigen::Vector3d p = scene.node_position(i, j, k);
        const size_t idx = scene.index(i, j, k);
        double occ = kFree;
        Eigen::Vector3d color(127, 127, 127);

        // wall faces: -x +x -z +z floor (ceiling only for "room")
        int face = -1;
        if (p.x() <= lo.x() + tx) face = 0;
        else if (p.x() >= hi.x() - tx) face = 1;
        else if (p.z() <= lo.z() + tz) face = 2;
        else if (p.z() >= hi.z() - tz) face = 3;
        else if (p.y() <= lo.y() + ty) face = 4;
        else if (room && p.y() >= hi.y() - ty) face = 5;
        if (face >= 0) {
          occ = kSolid;
          double u, v;
          if (face <= 1) { u = p.z(); v = p.y(); }
          else if (face <= 3) { u = p.x(); v = p.y(); }
          else { u = p.x(); v = p.z(); }
          const auto& fc = face_colors[face];
          color = checker_index(u, v, cell) == 0 ? fc.first : fc.second;
        }
        for (const Box& b : boxes) {
          if (b.contains(p)) {
            occ = kSolid;
            color = b.checker && checker_index(p.x() + p.y(), p.z() + p.y(), 0.2) == 0
                        ? b.color2
                        : b.color;
          }
        }
        if ((p - sphere.center).norm() <= sphere.radius) {
          occ = kSolid;
          color = sphere.color;
        }

        scene.occ[idx] = occ;
        for (int c = 0; c < 3; ++c) {
          scene.color[idx * 3 + c] =
              std::clamp(color[c] + node_jitter(spec.seed, idx, c), 0.0, 255.0);
        }
      }
    }
  }
  return scene;
}

Pose look_at(const Eigen::Vector3d& eye, const Eigen::Vector3d& target) {
  Eigen::Vector3d z = target - eye;
  if (z.norm() < 1e-12) z = Eigen::Vector3d(0, 0, 1);
  z.normalize();
  Eigen::Vector3d up(0, 1, 0);
  if (std::abs(z.dot(up)) > 0.999) up = Eigen::Vector3d(0, 0, 1);
  const Eigen::Vector3d x = up.cross(z).normalized();
  const Eigen::Vector3d y = z.cross(x);
  Eigen::Matrix3d rot;
  rot.col(0) = x;
  rot.col(1) = y;
  rot.col(2) = z;
  Pose p;
  p.rotation = Eigen::Quaterniond(rot).normalized();
  p.translation = eye;
  return p;
}

std::vector<Pose> make_trajectory(const TrajectorySpec& spec, const VoxelScene& scene) {
  if (spec.frames < 1) throw std::invalid_argument("make_trajectory: frames must be >= 1");
  const Eigen::Vector3d center = 0.5 * (scene.bounds_min + scene.bounds_max);
  const Eigen::Vector3d ext = scene.bounds_max - scene.bounds_min;

  std::mt19937_64 rng(spec.seed ^ 0xA5A5A5A5ull);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  const double ph1 = phase(rng), ph2 = phase(rng), ph3 = phase(rng);

  double wobble = spec.wobble;
  if (wobble < 0.0) wobble = spec.preset == "wobble" ? 1.0 : 0.0;

  std::vector<Pose> out;
  out.reserve(spec.frames);

  if (spec.preset == "static") {
    const Eigen::Vector3d eye = center + Eigen::Vector3d(0.3 * ext.x(), 0.1 * ext.y(), 0.0);
    const Pose p = look_at(eye, center);
    out.assign(spec.frames, p);
    return out;
  }
  if (spec.preset == "line") {
    const double y = center.y() + 0.05 * ext.y();
    for (int k = 0; k < spec.frames; ++k) {
      const Eigen::Vector3d eye(center.x() - 0.3 * ext.x() + spec.speed * k, y,
                                center.z() - 0.3 * ext.z());
      out.push_back(look_at(eye, center));
    }
    return out;
  }
  if (spec.preset != "orbit" && spec.preset != "wobble") {
    throw std::invalid_argument("make_trajectory: unknown preset '" + spec.preset + "'");
  }

  const double radius = 0.33 * std::min(ext.x(), ext.z());
  double theta = phase(rng);
  for (int k = 0; k < spec.frames; ++k) {
    const double speed_k =
        spec.speed * (1.0 + 0.5 * wobble * std::sin(2.0 * M_PI * k / 23.0 + ph1));
    const double height = center.y() + 0.08 * ext.y() +
                          0.16 * ext.y() * wobble * std::sin(2.0 * M_PI * k / 17.0 + ph2);
    const Eigen::Vector3d eye(center.x() + radius * std::cos(theta), height,
                              center.z() + radius * std::sin(theta));
    Eigen::Vector3d target = center;
    target.x() += 0.3 * wobble * std::sin(2.0 * M_PI * k / 13.0 + ph3);
    target.y() += 0.15 * wobble * std::sin(2.0 * M_PI * k / 19.0 + ph1);
    target.z() += 0.3 * wobble * std::cos(2.0 * M_PI * k / 29.0 + ph3);
    out.push_back(look_at(eye, target));
    theta += speed_k / radius;
  }
  return out;
}

}  // namespace evslam
