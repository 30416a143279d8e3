#include "evslam/loss/tracking_loss.hpp"

#include <stdexcept>

namespace evslam {

TrackingLossResult total_tracking_loss(const TrackingLossInputs& in) {
  if (in.scene == nullptr || in.kernel == nullptr) {
    throw std::invalid_argument("total_tracking_loss: scene and kernel are required");
  }
  if (in.gt_events != nullptr && in.anchor_rgb == nullptr) {
    throw std::invalid_argument("total_tracking_loss: event term needs the anchor RGB frame");
  }
  in.weights.validate();

  const RenderOutput out = render(*in.scene, in.pose, in.intr, in.render_cfg);
  RgbImage adj_rgb(out.rgb.width, out.rgb.height);
  DepthImage adj_depth(out.depth.width, out.depth.height);

  TrackingLossResult r;
  if (in.gt_events != nullptr) {
    const EventImage predicted = predict_events(*in.anchor_rgb, out.rgb, in.predictor);
    const EventLossResult ev =
        event_loss(*in.gt_events, predicted, *in.kernel, in.weights.lambda_event);
    r.event_term = ev.value;
    const RgbImage g =
        predict_events_gradient(*in.anchor_rgb, out.rgb, in.predictor, ev.grad_predicted);
    for (size_t i = 0; i < adj_rgb.data.size(); ++i) adj_rgb.data[i] += g.data[i];
  }
  if (in.gt_rgb != nullptr) {
    const PhotometricLossResult ph = photometric_loss(out.rgb, *in.gt_rgb);
    r.photo_term = ph.value;
    for (size_t i = 0; i < adj_rgb.data.size(); ++i) {
      adj_rgb.data[i] += in.weights.lambda_photo * ph.grad_rendered.data[i];
    }
  }
  if (in.gt_depth != nullptr) {
    const DepthLossResult dp = depth_loss(out.depth, *in.gt_depth);
    r.depth_term = dp.value;
    r.depth_empty_overlap = dp.empty_overlap;
    for (size_t i = 0; i < adj_depth.data.size(); ++i) {
      adj_depth.data[i] += in.weights.lambda_depth * dp.grad_rendered.data[i];
    }
  }

  r.value = r.event_term + in.weights.lambda_photo * r.photo_term +
            in.weights.lambda_depth * r.depth_term;
  r.gradient = render_pose_gradient(*in.scene, in.pose, in.intr, in.render_cfg, adj_rgb,
                                    adj_depth);
  return r;
}

}  // namespace evslam
