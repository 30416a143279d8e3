#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evslam/core/pose.hpp"
#include "evslam/render/voxel_scene.hpp"

namespace evslam {

// Procedural ground-truth scenes. Presets:
//   "room"  - textured box room with seeded furniture boxes and a sphere
//   "boxes" - open floor with a ring of textured boxes
//   "empty" - free space only
struct SceneSpec {
  std::string preset = "room";
  std::uint64_t seed = 1;
  int nx = 64, ny = 40, nz = 64;
  Eigen::Vector3d bounds_min{0.0, 0.0, 0.0};
  Eigen::Vector3d bounds_max{4.0, 2.5, 4.0};
};
VoxelScene make_scene(const SceneSpec& spec);

// Camera paths. Presets:
//   "orbit"  - smooth circular sweep around the scene center, look-at center
//   "wobble" - orbit with seeded speed/height/heading modulation (harder to
//              dead-reckon; wobble defaults to 1)
//   "line"   - straight dolly past the center
//   "static" - constant pose
struct TrajectorySpec {
  std::string preset = "orbit";
  int frames = 200;
  std::uint64_t seed = 1;
  double speed = 0.01;   // meters per frame
  double wobble = -1.0;  // modulation strength; negative = preset default
};
std::vector<Pose> make_trajectory(const TrajectorySpec& spec, const VoxelScene& scene);

// Camera-to-world rotation looking from eye toward target (camera z forward).
Pose look_at(const Eigen::Vector3d& eye, const Eigen::Vector3d& target);

}  // namespace evslam
