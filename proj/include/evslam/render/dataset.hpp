#pragma once

#include <functional>
#include <vector>

#include "evslam/render/renderer.hpp"
#include "evslam/sim/event_sim.hpp"
#include "evslam/track/frame.hpp"

namespace evslam {

// Fabricates a dataset: renders full-resolution RGB-D at every trajectory
// pose (RGB quantized to 8-bit integers, which is what the event simulator
// sees), then synthesizes events between consecutive RGB pairs. Frame k
// carries the events over (t_{k-1}, t_k]; frame 0 carries an all-zero event
// image. Deterministic for a fixed render seed.
std::vector<FrameRecord> generate_dataset(const VoxelScene& scene,
                                          const std::vector<Pose>& trajectory,
                                          const CameraIntrinsics& intr,
                                          const RenderConfig& cfg,
                                          const EventSimParams& sim);

// Streaming variant: frames are handed to the sink one at a time so long
// sequences never sit in memory. generate_dataset is this plus a collector.
void generate_dataset_streaming(const VoxelScene& scene, const std::vector<Pose>& trajectory,
                                const CameraIntrinsics& intr, const RenderConfig& cfg,
                                const EventSimParams& sim,
                                const std::function<void(FrameRecord&&)>& sink);

}  // namespace evslam
