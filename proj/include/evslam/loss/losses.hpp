#pragma once

#include <stdexcept>

#include "evslam/core/image.hpp"
#include "evslam/loss/gaussian.hpp"

namespace evslam {

struct LossWeights {
  double lambda_event = 0.025;
  double lambda_photo = 1.0;
  double lambda_depth = 1.0;

  void validate() const {
    if (lambda_event < 0.0 || lambda_photo < 0.0 || lambda_depth < 0.0) {
      throw std::invalid_argument("LossWeights: weights must be nonnegative");
    }
  }
};

// Smoothed squared event discrepancy:
//   value = lambda * sum_{x,y,ch} (G*gt - G*pred)^2
// The gradient w.r.t. the prediction goes through the transposed filter:
//   grad = -2 lambda * G^T (G*gt - G*pred)   per channel.
struct EventLossResult {
  double value = 0.0;
  EventImage grad_predicted;
};
EventLossResult event_loss(const EventImage& gt_accum, const EventImage& predicted,
                           const GaussianKernel& kernel, double lambda_event);

// Mean absolute per-channel error; subgradient 0 where equal.
struct PhotometricLossResult {
  double value = 0.0;
  RgbImage grad_rendered;
};
PhotometricLossResult photometric_loss(const RgbImage& rendered, const RgbImage& gt);

// Mean absolute depth error over pixels valid (> 0) in both maps. Zero with
// empty_overlap set when nothing overlaps.
struct DepthLossResult {
  double value = 0.0;
  DepthImage grad_rendered;
  int valid_count = 0;
  bool empty_overlap = false;
};
DepthLossResult depth_loss(const DepthImage& rendered, const DepthImage& gt);

}  // namespace evslam
