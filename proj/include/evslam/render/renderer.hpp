#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "evslam/core/camera.hpp"
#include "evslam/core/image.hpp"
#include "evslam/core/pose.hpp"
#include "evslam/render/voxel_scene.hpp"

namespace evslam {

struct RenderConfig {
  int n_samples = 64;
  double near_m = 0.1;
  double far_m = 8.0;
  double scale = 0.15;               // render resolution factor
  std::array<double, 3> background = {0.0, 0.0, 0.0};
  double min_weight_sum = 0.1;       // below this, depth is marked invalid (0)
  bool jitter = true;                // stratified jitter; hashed from seed, pixel, sample
  std::uint64_t seed = 0;
  int threads = 0;                   // 0 = default_thread_count()

  void validate() const;
};

struct RenderOutput {
  RgbImage rgb;
  DepthImage depth;        // ray depth (camera z), 0 where weight sum < threshold
  GrayImage weight_sum;    // per-ray termination weight sum, in [0, 1]
};

// Volume render at floor(intrinsics dims * cfg.scale), intrinsics scaled to
// match. Per ray: stratified samples z in [near, far], occupancy
// o = sigmoid(logit), weights w_i = o_i * prod_{j<i} (1 - o_j),
// rgb = sum w_i c_i + (1 - sum w) * background,
// depth = sum w_i z_i / max(sum w, 1e-6).
RenderOutput render(const VoxelScene& scene, const Pose& pose, const CameraIntrinsics& intr,
                    const RenderConfig& cfg);

// d(loss)/d(tangent at pose) for loss = <adj_rgb, rgb> + <adj_depth, depth>,
// i.e. the pullback of per-pixel upstream gradients through the full render.
// Pixels whose depth is invalid contribute no depth term. Dimensions of the
// adjoint images must equal the render resolution.
PoseTangent render_pose_gradient(const VoxelScene& scene, const Pose& pose,
                                 const CameraIntrinsics& intr, const RenderConfig& cfg,
                                 const RgbImage& adj_rgb, const DepthImage& adj_depth);

// --- pixel-subset interface (used by the mapper) ---

struct PixelSample {
  int x = 0;
  int y = 0;
};

struct SubsetRender {
  std::vector<double> rgb;     // 3 per pixel
  std::vector<double> depth;   // 0 where invalid
  std::vector<double> wsum;
};

SubsetRender render_pixels(const VoxelScene& scene, const Pose& pose,
                           const CameraIntrinsics& intr, const RenderConfig& cfg,
                           const std::vector<PixelSample>& pixels);

// Gradients of the same subset loss w.r.t. every occupancy logit and color
// channel, accumulated into grad_occ / grad_color (sized like scene.occ and
// scene.color).
void render_pixels_scene_gradient(const VoxelScene& scene, const Pose& pose,
                                  const CameraIntrinsics& intr, const RenderConfig& cfg,
                                  const std::vector<PixelSample>& pixels,
                                  const std::vector<double>& adj_rgb,
                                  const std::vector<double>& adj_depth,
                                  std::vector<double>& grad_occ,
                                  std::vector<double>& grad_color);

}  // namespace evslam
