#include "evslam/render/renderer.hpp"

#include <cmath>
#include <stdexcept>

#include "evslam/core/parallel.hpp"

namespace evslam {

void RenderConfig::validate() const {
  if (n_samples < 2) throw std::invalid_argument("RenderConfig: n_samples must be >= 2");
  if (!(near_m > 0.0) || !(far_m > near_m)) {
    throw std::invalid_argument("RenderConfig: need 0 < near < far");
  }
  if (!(scale > 0.0) || scale > 1.0) {
    throw std::invalid_argument("RenderConfig: scale must be in (0, 1]");
  }
}

namespace {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Stratification jitter in [0, 1), a pure function of (seed, pixel, sample):
// deterministic under any threading and identical across repeated renders.
inline double jitter01(std::uint64_t seed, std::uint64_t pixel, std::uint64_t sample) {
  const std::uint64_t h = splitmix64(seed ^ splitmix64(pixel ^ splitmix64(sample)));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

struct RaySample {
  double z = 0.0;
  double o = 0.0;       // sigmoid occupancy, 0 outside bounds
  double trans = 1.0;   // transmittance before this sample
  double weight = 0.0;
  Eigen::Vector3d color = Eigen::Vector3d::Zero();
  Eigen::Vector3d pos = Eigen::Vector3d::Zero();
  TrilinearCell cell;
};

struct RayResult {
  Eigen::Vector3d rgb = Eigen::Vector3d::Zero();
  double depth = 0.0;
  double wsum = 0.0;
  double zsum = 0.0;
  bool depth_valid = false;
};

struct RenderGeometry {
  CameraIntrinsics intr;  // at render resolution
  Eigen::Matrix3d rot;
  Eigen::Vector3d origin;
};

RenderGeometry make_geometry(const Pose& pose, const CameraIntrinsics& intr,
                             const RenderConfig& cfg) {
  intr.validate();
  cfg.validate();
  const int rw = static_cast<int>(std::floor(intr.width * cfg.scale));
  const int rh = static_cast<int>(std::floor(intr.height * cfg.scale));
  if (rw < 1 || rh < 1) {
    throw std::invalid_argument("render: scale yields a degenerate resolution");
  }
  RenderGeometry g;
  g.intr = intr.scaled_to(rw, rh);
  g.rot = pose.rotation.toRotationMatrix();
  g.origin = pose.translation;
  return g;
}

// Camera ray of pixel (x, y); direction has unit camera z so the sample
// parameter is camera-frame depth.
inline Eigen::Vector3d pixel_direction(const RenderGeometry& g, int x, int y) {
  const Eigen::Vector3d dir_cam((x + 0.5 - g.intr.cx) / g.intr.fx,
                                (y + 0.5 - g.intr.cy) / g.intr.fy, 1.0);
  return g.rot * dir_cam;
}

RayResult trace_ray(const VoxelScene& scene, const RenderGeometry& g, const RenderConfig& cfg,
                    std::uint64_t pixel_index, const Eigen::Vector3d& dir,
                    std::vector<RaySample>* cache) {
  const double step = (cfg.far_m - cfg.near_m) / cfg.n_samples;
  RayResult r;
  if (cache) cache->clear();
  double trans = 1.0;
  for (int i = 0; i < cfg.n_samples; ++i) {
    const double u = cfg.jitter ? jitter01(cfg.seed, pixel_index, i) : 0.5;
    const double z = cfg.near_m + (i + u) * step;
    const Eigen::Vector3d p = g.origin + z * dir;
    RaySample s;
    s.z = z;
    s.trans = trans;
    s.pos = p;
    s.cell = locate_cell(scene, p);
    if (s.cell.inside) {
      double logit = 0.0;
      Eigen::Vector3d col = Eigen::Vector3d::Zero();
      for (int c = 0; c < 8; ++c) {
        logit += s.cell.w[c] * scene.occ[s.cell.idx[c]];
        col.x() += s.cell.w[c] * scene.color[s.cell.idx[c] * 3];
        col.y() += s.cell.w[c] * scene.color[s.cell.idx[c] * 3 + 1];
        col.z() += s.cell.w[c] * scene.color[s.cell.idx[c] * 3 + 2];
      }
      s.o = sigmoid(logit);
      s.color = col;
      s.weight = s.o * trans;
      r.rgb += s.weight * col;
      r.zsum += s.weight * z;
      r.wsum += s.weight;
      trans *= (1.0 - s.o);
    }
    if (cache) cache->push_back(s);
  }
  const Eigen::Vector3d bg(cfg.background[0], cfg.background[1], cfg.background[2]);
  r.rgb += (1.0 - r.wsum) * bg;
  r.depth_valid = r.wsum >= cfg.min_weight_sum;
  r.depth = r.depth_valid ? r.zsum / std::max(r.wsum, 1e-6) : 0.0;
  return r;
}

// Backpropagates <adj_rgb, rgb> + adj_depth * depth through one ray.
// emit(sample, dlogit, dcolor) receives the loss gradient w.r.t. the sample's
// interpolated logit and color.
template <class EmitSample>
void ray_backward(const std::vector<RaySample>& samples, const RayResult& r,
                  const RenderConfig& cfg, const Eigen::Vector3d& adj_rgb, double adj_depth,
                  EmitSample&& emit) {
  const Eigen::Vector3d bg(cfg.background[0], cfg.background[1], cfg.background[2]);
  const bool depth_flows = r.depth_valid && adj_depth != 0.0;
  const double inv_w = depth_flows ? 1.0 / r.wsum : 0.0;
  // dL/dT recurrence, walked back to front.
  double b_next = 0.0;
  for (int i = static_cast<int>(samples.size()) - 1; i >= 0; --i) {
    const RaySample& s = samples[i];
    if (!s.cell.inside) continue;
    double a = adj_rgb.dot(s.color - bg);
    if (depth_flows) a += adj_depth * (s.z * inv_w - r.zsum * inv_w * inv_w);
    const double dl_do = s.trans * (a - b_next);
    b_next = a * s.o + b_next * (1.0 - s.o);
    const double dlogit = dl_do * s.o * (1.0 - s.o);
    const Eigen::Vector3d dcolor = s.weight * adj_rgb;
    emit(s, dlogit, dcolor);
  }
}

}  // namespace

RenderOutput render(const VoxelScene& scene, const Pose& pose, const CameraIntrinsics& intr,
                    const RenderConfig& cfg) {
  scene.validate();
  const RenderGeometry g = make_geometry(pose, intr, cfg);
  const int rw = g.intr.width, rh = g.intr.height;
  RenderOutput out;
  out.rgb = RgbImage(rw, rh);
  out.depth = DepthImage(rw, rh);
  out.weight_sum = GrayImage(rw, rh);
  parallel_chunks(rh, cfg.threads, [&](int y) {
    for (int x = 0; x < rw; ++x) {
      const std::uint64_t pixel = static_cast<std::uint64_t>(y) * rw + x;
      const RayResult r = trace_ray(scene, g, cfg, pixel, pixel_direction(g, x, y), nullptr);
      out.rgb.at(x, y, 0) = r.rgb.x();
      out.rgb.at(x, y, 1) = r.rgb.y();
      out.rgb.at(x, y, 2) = r.rgb.z();
      out.depth.at(x, y) = r.depth;
      out.weight_sum.at(x, y) = r.wsum;
    }
  });
  return out;
}

PoseTangent render_pose_gradient(const VoxelScene& scene, const Pose& pose,
                                 const CameraIntrinsics& intr, const RenderConfig& cfg,
                                 const RgbImage& adj_rgb, const DepthImage& adj_depth) {
  scene.validate();
  const RenderGeometry g = make_geometry(pose, intr, cfg);
  const int rw = g.intr.width, rh = g.intr.height;
  if (adj_rgb.width != rw || adj_rgb.height != rh || adj_depth.width != rw ||
      adj_depth.height != rh) {
    throw std::invalid_argument("render_pose_gradient: adjoint dims must match render dims");
  }

  // Per-row partial gradients, merged in row order: bit-deterministic for any
  // thread count.
  std::vector<Eigen::Matrix<double, 6, 1>> partial(
      rh, Eigen::Matrix<double, 6, 1>::Zero());
  parallel_chunks(rh, cfg.threads, [&](int y) {
    std::vector<RaySample> cache;
    cache.reserve(cfg.n_samples);
    Eigen::Vector3d grad_rot = Eigen::Vector3d::Zero();
    Eigen::Vector3d grad_trans = Eigen::Vector3d::Zero();
    for (int x = 0; x < rw; ++x) {
      const std::uint64_t pixel = static_cast<std::uint64_t>(y) * rw + x;
      const Eigen::Vector3d a_rgb(adj_rgb.at(x, y, 0), adj_rgb.at(x, y, 1),
                                  adj_rgb.at(x, y, 2));
      const double a_depth = adj_depth.at(x, y);
      if (a_rgb.isZero(0.0) && a_depth == 0.0) continue;
      const RayResult r = trace_ray(scene, g, cfg, pixel, pixel_direction(g, x, y), &cache);
      ray_backward(cache, r, cfg, a_rgb, a_depth,
                   [&](const RaySample& s, double dlogit, const Eigen::Vector3d& dcolor) {
                     // gradient w.r.t. the sample's world position
                     Eigen::Vector3d gp = Eigen::Vector3d::Zero();
                     for (int c = 0; c < 8; ++c) {
                       const size_t idx = s.cell.idx[c];
                       const double f = dlogit * scene.occ[idx] +
                                        dcolor.x() * scene.color[idx * 3] +
                                        dcolor.y() * scene.color[idx * 3 + 1] +
                                        dcolor.z() * scene.color[idx * 3 + 2];
                       gp.x() += f * s.cell.dw[c][0];
                       gp.y() += f * s.cell.dw[c][1];
                       gp.z() += f * s.cell.dw[c][2];
                     }
                     // left-multiplicative tangent: d(pos)/d(rot_k) = e_k x pos
                     grad_rot += s.pos.cross(gp);
                     grad_trans += gp;
                   });
    }
    partial[y].head<3>() = grad_rot;
    partial[y].tail<3>() = grad_trans;
  });

  Eigen::Matrix<double, 6, 1> total = Eigen::Matrix<double, 6, 1>::Zero();
  for (const auto& p : partial) total += p;
  return PoseTangent::from_vec(total);
}

SubsetRender render_pixels(const VoxelScene& scene, const Pose& pose,
                           const CameraIntrinsics& intr, const RenderConfig& cfg,
                           const std::vector<PixelSample>& pixels) {
  scene.validate();
  const RenderGeometry g = make_geometry(pose, intr, cfg);
  SubsetRender out;
  out.rgb.resize(pixels.size() * 3);
  out.depth.resize(pixels.size());
  out.wsum.resize(pixels.size());
  for (size_t i = 0; i < pixels.size(); ++i) {
    const auto [x, y] = pixels[i];
    const std::uint64_t pixel = static_cast<std::uint64_t>(y) * g.intr.width + x;
    const RayResult r = trace_ray(scene, g, cfg, pixel, pixel_direction(g, x, y), nullptr);
    out.rgb[i * 3] = r.rgb.x();
    out.rgb[i * 3 + 1] = r.rgb.y();
    out.rgb[i * 3 + 2] = r.rgb.z();
    out.depth[i] = r.depth;
    out.wsum[i] = r.wsum;
  }
  return out;
}

void render_pixels_scene_gradient(const VoxelScene& scene, const Pose& pose,
                                  const CameraIntrinsics& intr, const RenderConfig& cfg,
                                  const std::vector<PixelSample>& pixels,
                                  const std::vector<double>& adj_rgb,
                                  const std::vector<double>& adj_depth,
                                  std::vector<double>& grad_occ,
                                  std::vector<double>& grad_color) {
  scene.validate();
  if (adj_rgb.size() != pixels.size() * 3 || adj_depth.size() != pixels.size()) {
    throw std::invalid_argument("render_pixels_scene_gradient: adjoint size mismatch");
  }
  const RenderGeometry g = make_geometry(pose, intr, cfg);
  grad_occ.assign(scene.occ.size(), 0.0);
  grad_color.assign(scene.color.size(), 0.0);
  std::vector<RaySample> cache;
  cache.reserve(cfg.n_samples);
  for (size_t i = 0; i < pixels.size(); ++i) {
    const auto [x, y] = pixels[i];
    const std::uint64_t pixel = static_cast<std::uint64_t>(y) * g.intr.width + x;
    const Eigen::Vector3d a_rgb(adj_rgb[i * 3], adj_rgb[i * 3 + 1], adj_rgb[i * 3 + 2]);
    const double a_depth = adj_depth[i];
    if (a_rgb.isZero(0.0) && a_depth == 0.0) continue;
    const RayResult r = trace_ray(scene, g, cfg, pixel, pixel_direction(g, x, y), &cache);
    ray_backward(cache, r, cfg, a_rgb, a_depth,
                 [&](const RaySample& s, double dlogit, const Eigen::Vector3d& dcolor) {
                   for (int c = 0; c < 8; ++c) {
                     const size_t idx = s.cell.idx[c];
                     grad_occ[idx] += dlogit * s.cell.w[c];
                     grad_color[idx * 3] += dcolor.x() * s.cell.w[c];
                     grad_color[idx * 3 + 1] += dcolor.y() * s.cell.w[c];
                     grad_color[idx * 3 + 2] += dcolor.z() * s.cell.w[c];
                   }
                 });
  }
}

}  // namespace evslam
