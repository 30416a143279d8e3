#include "evslam/render/dataset.hpp"

#include <cmath>
#include <stdexcept>

namespace evslam {

namespace {

RgbImage quantize_rgb(const RgbImage& img) {
  RgbImage out = img;
  for (double& v : out.data) v = std::round(std::clamp(v, 0.0, 255.0));
  return out;
}

}  // namespace

void generate_dataset_streaming(const VoxelScene& scene, const std::vector<Pose>& trajectory,
                                const CameraIntrinsics& intr, const RenderConfig& cfg,
                                const EventSimParams& sim,
                                const std::function<void(FrameRecord&&)>& sink) {
  if (trajectory.size() < 2) {
    throw std::invalid_argument("generate_dataset: trajectory needs at least 2 poses");
  }
  sim.validate();
  RenderConfig full = cfg;
  full.scale = 1.0;  // ground truth is always rendered at full resolution

  RgbImage prev_rgb;
  PixelRefState state;
  for (size_t k = 0; k < trajectory.size(); ++k) {
    const RenderOutput out = render(scene, trajectory[k], intr, full);
    FrameRecord rec;
    rec.frame_id = static_cast<int>(k);
    rec.timestamp = static_cast<double>(k) * sim.frame_dt;
    rec.rgb = quantize_rgb(out.rgb);
    rec.depth = out.depth;
    rec.gt_pose = trajectory[k];
    if (k == 0) {
      rec.gt_events = EventImage(rec.rgb.width, rec.rgb.height);
      state = init_ref_state(rec.rgb, sim);
    } else {
      rec.gt_events = simulate_frame_pair(prev_rgb, rec.rgb, rec.timestamp - sim.frame_dt,
                                          rec.timestamp, state, sim);
    }
    prev_rgb = rec.rgb;
    sink(std::move(rec));
  }
}

std::vector<FrameRecord> generate_dataset(const VoxelScene& scene,
                                          const std::vector<Pose>& trajectory,
                                          const CameraIntrinsics& intr,
                                          const RenderConfig& cfg,
                                          const EventSimParams& sim) {
  std::vector<FrameRecord> frames;
  frames.reserve(trajectory.size());
  generate_dataset_streaming(scene, trajectory, intr, cfg, sim,
                             [&](FrameRecord&& rec) { frames.push_back(std::move(rec)); });
  return frames;
}

}  // namespace evslam
