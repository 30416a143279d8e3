#include "evslam/predict/event_predictor.hpp"

#include <cmath>
#include <stdexcept>

#include "evslam/core/image_ops.hpp"

namespace evslam {

void PredictorParams::validate() const {
  if (!(c_pos > 0.0) || !(c_neg > 0.0)) {
    throw std::invalid_argument("PredictorParams: thresholds must be positive");
  }
  if (!(epsilon > 0.0)) throw std::invalid_argument("PredictorParams: epsilon must be positive");
}

EventImage predict_events(const RgbImage& prev_gt, const RgbImage& rendered,
                          const PredictorParams& params) {
  require_same_dims(prev_gt, rendered, "predict_events");
  const GrayImage y_prev = luminance(prev_gt);
  const GrayImage y_rend = luminance(rendered);
  EventImage out(rendered.width, rendered.height);
  for (size_t i = 0; i < out.pixel_count(); ++i) {
    const double dl = log_irradiance_value(y_rend.data[i], params.epsilon) -
                      log_irradiance_value(y_prev.data[i], params.epsilon);
    out.pos[i] = std::max(dl, 0.0) / params.c_pos;
    out.neg[i] = std::max(-dl, 0.0) / params.c_neg;
  }
  return out;
}

RgbImage predict_events_gradient(const RgbImage& prev_gt, const RgbImage& rendered,
                                 const PredictorParams& params, const EventImage& adjoint) {
  require_same_dims(prev_gt, rendered, "predict_events_gradient");
  require_same_dims(rendered, adjoint, "predict_events_gradient");
  const GrayImage y_prev = luminance(prev_gt);
  const GrayImage y_rend = luminance(rendered);
  RgbImage grad(rendered.width, rendered.height);
  for (size_t i = 0; i < y_rend.pixel_count(); ++i) {
    const double y = y_rend.data[i];
    if (y <= params.epsilon) continue;  // clamp active: d log / dY = 0
    const double dl = log_irradiance_value(y, params.epsilon) -
                      log_irradiance_value(y_prev.data[i], params.epsilon);
    double d_dl = 0.0;
    if (dl > 0.0) d_dl = adjoint.pos[i] / params.c_pos;
    else if (dl < 0.0) d_dl = -adjoint.neg[i] / params.c_neg;
    const double dy = d_dl / y;
    grad.data[i * 3] = dy * 0.299;
    grad.data[i * 3 + 1] = dy * 0.587;
    grad.data[i * 3 + 2] = dy * 0.114;
  }
  return grad;
}

}  // namespace evslam
