#pragma once

#include "evslam/core/image.hpp"
#include "evslam/sim/event_sim.hpp"

namespace evslam {

struct PredictorParams {
  double c_pos = 0.1;
  double c_neg = 0.1;
  double epsilon = 1e-3;

  static PredictorParams from_sim(const EventSimParams& sim) {
    return PredictorParams{sim.c_pos, sim.c_neg, sim.epsilon};
  }
  void validate() const;
};

// Soft event counts between the latest available ground-truth RGB frame and
// the currently rendered one:
//   dL  = log_irr(lum(rendered)) - log_irr(lum(prev_gt))
//   pos = max(dL, 0) / c_pos,  neg = max(-dL, 0) / c_neg
// Real-valued, refractory-free, differentiable w.r.t. the rendered image.
EventImage predict_events(const RgbImage& prev_gt, const RgbImage& rendered,
                          const PredictorParams& params);

// Pullback of per-pixel (pos, neg) adjoints onto the rendered RGB image. The
// subgradient at dL == 0 is 0, and pixels clamped by epsilon pass nothing.
RgbImage predict_events_gradient(const RgbImage& prev_gt, const RgbImage& rendered,
                                 const PredictorParams& params, const EventImage& adjoint);

}  // namespace evslam
