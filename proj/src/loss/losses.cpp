#include "evslam/loss/losses.hpp"

#include <cmath>

namespace evslam {

namespace {

double plane_loss_and_grad(const std::vector<double>& gt, const std::vector<double>& pred,
                           int w, int h, const GaussianKernel& kernel, double lambda,
                           std::vector<double>& grad_out) {
  GrayImage diff(w, h);
  for (size_t i = 0; i < diff.data.size(); ++i) diff.data[i] = gt[i] - pred[i];
  const GrayImage smoothed = gaussian_filter(diff, kernel);
  double value = 0.0;
  for (const double v : smoothed.data) value += v * v;
  const GrayImage back = gaussian_filter_adjoint(smoothed, kernel);
  grad_out.resize(back.data.size());
  for (size_t i = 0; i < back.data.size(); ++i) grad_out[i] = -2.0 * lambda * back.data[i];
  return lambda * value;
}

}  // namespace

EventLossResult event_loss(const EventImage& gt_accum, const EventImage& predicted,
                           const GaussianKernel& kernel, double lambda_event) {
  require_same_dims(gt_accum, predicted, "event_loss");
  EventLossResult r;
  r.grad_predicted = EventImage(predicted.width, predicted.height);
  r.value = plane_loss_and_grad(gt_accum.pos, predicted.pos, predicted.width,
                                predicted.height, kernel, lambda_event, r.grad_predicted.pos);
  r.value += plane_loss_and_grad(gt_accum.neg, predicted.neg, predicted.width,
                                 predicted.height, kernel, lambda_event, r.grad_predicted.neg);
  return r;
}

PhotometricLossResult photometric_loss(const RgbImage& rendered, const RgbImage& gt) {
  require_same_dims(rendered, gt, "photometric_loss");
  PhotometricLossResult r;
  r.grad_rendered = RgbImage(rendered.width, rendered.height);
  const double inv_n = 1.0 / static_cast<double>(rendered.data.size());
  double acc = 0.0;
  for (size_t i = 0; i < rendered.data.size(); ++i) {
    const double d = rendered.data[i] - gt.data[i];
    acc += std::abs(d);
    r.grad_rendered.data[i] = (d > 0.0 ? inv_n : (d < 0.0 ? -inv_n : 0.0));
  }
  r.value = acc * inv_n;
  return r;
}

DepthLossResult depth_loss(const DepthImage& rendered, const DepthImage& gt) {
  require_same_dims(rendered, gt, "depth_loss");
  DepthLossResult r;
  r.grad_rendered = DepthImage(rendered.width, rendered.height);
  double acc = 0.0;
  for (size_t i = 0; i < rendered.data.size(); ++i) {
    if (rendered.data[i] > 0.0 && gt.data[i] > 0.0) {
      ++r.valid_count;
      acc += std::abs(rendered.data[i] - gt.data[i]);
    }
  }
  if (r.valid_count == 0) {
    r.empty_overlap = true;
    return r;
  }
  const double inv_n = 1.0 / r.valid_count;
  r.value = acc * inv_n;
  for (size_t i = 0; i < rendered.data.size(); ++i) {
    if (rendered.data[i] > 0.0 && gt.data[i] > 0.0) {
      const double d = rendered.data[i] - gt.data[i];
      r.grad_rendered.data[i] = (d > 0.0 ? inv_n : (d < 0.0 ? -inv_n : 0.0));
    }
  }
  return r;
}

}  // namespace evslam
