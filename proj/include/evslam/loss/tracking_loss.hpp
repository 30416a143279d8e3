#pragma once

#include "evslam/core/camera.hpp"
#include "evslam/core/pose.hpp"
#include "evslam/loss/losses.hpp"
#include "evslam/predict/event_predictor.hpp"
#include "evslam/render/renderer.hpp"

namespace evslam {

// One tracking-loss evaluation at a candidate pose. Event term when gt_events
// is set (needs anchor_rgb, the downscaled ground-truth RGB at t_GT);
// photometric and depth terms when the current frame carries RGB-D. All image
// inputs live at the render resolution.
struct TrackingLossInputs {
  const VoxelScene* scene = nullptr;
  Pose pose;
  CameraIntrinsics intr;  // full-resolution; cfg.scale picks the render size
  RenderConfig render_cfg;
  PredictorParams predictor;
  const GaussianKernel* kernel = nullptr;
  LossWeights weights;
  const RgbImage* anchor_rgb = nullptr;
  const EventImage* gt_events = nullptr;
  const RgbImage* gt_rgb = nullptr;
  const DepthImage* gt_depth = nullptr;
};

struct TrackingLossResult {
  double value = 0.0;
  double event_term = 0.0;   // already lambda_event-weighted (the loss definition)
  double photo_term = 0.0;   // raw mean absolute error
  double depth_term = 0.0;   // raw mean absolute error [m]
  PoseTangent gradient;
  bool depth_empty_overlap = false;
};

// value = event_loss + lambda_photo * photo + lambda_depth * depth, with the
// pose gradient assembled through the predictor and renderer adjoints.
TrackingLossResult total_tracking_loss(const TrackingLossInputs& in);

}  // namespace evslam
