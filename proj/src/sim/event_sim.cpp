#include "evslam/sim/event_sim.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "evslam/core/image_ops.hpp"
#include "evslam/core/parallel.hpp"

namespace evslam {

void EventSimParams::validate() const {
  if (!(c_pos > 0.0) || !(c_neg > 0.0)) {
    throw std::invalid_argument("EventSimParams: contrast thresholds must be positive");
  }
  if (!(t_ref >= 0.0)) throw std::invalid_argument("EventSimParams: t_ref must be >= 0");
  if (!(epsilon > 0.0)) throw std::invalid_argument("EventSimParams: epsilon must be positive");
  if (!(frame_dt > t_ref)) {
    throw std::invalid_argument("EventSimParams: frame_dt must exceed t_ref");
  }
}

double log_irradiance_value(double e, double epsilon) {
  return std::log(std::max(e, epsilon) / (255.0 + epsilon));
}

GrayImage log_irradiance(const GrayImage& img, double epsilon) {
  GrayImage out(img.width, img.height);
  for (size_t i = 0; i < img.data.size(); ++i) {
    out.data[i] = log_irradiance_value(img.data[i], epsilon);
  }
  return out;
}

PixelEventCounts simulate_pixel(double l0, double l1, double t0, double t1,
                                double& ref_level, double& last_event_t,
                                const EventSimParams& params) {
  if (!std::isfinite(l0) || !std::isfinite(l1) || !std::isfinite(t0) || !std::isfinite(t1)) {
    throw std::invalid_argument("simulate_pixel: non-finite input");
  }
  if (!(t1 > t0)) throw std::invalid_argument("simulate_pixel: t1 must exceed t0");
  if (!std::isfinite(ref_level)) {
    throw std::invalid_argument("simulate_pixel: non-finite reference level");
  }

  PixelEventCounts counts;
  const double slope = (l1 - l0) / (t1 - t0);
  double t = t0;

  while (true) {
    // Pending refractory window reaching past t: the only place an event may
    // fire off-crossing, exactly at the window's end.
    if (params.t_ref > 0.0 && last_event_t + params.t_ref > t) {
      const double t_exit = last_event_t + params.t_ref;
      if (t_exit > t1) break;
      const double level = l0 + slope * (t_exit - t0);
      if (level >= ref_level + params.c_pos) {
        ++counts.pos;
        ref_level += params.c_pos;
        last_event_t = t_exit;
        t = t_exit;
        continue;
      }
      if (level <= ref_level - params.c_neg) {
        ++counts.neg;
        ref_level -= params.c_neg;
        last_event_t = t_exit;
        t = t_exit;
        continue;
      }
      t = t_exit;
    }

    if (slope > 0.0) {
      const double target = ref_level + params.c_pos;
      if (target > l1) break;  // level-space test decides boundary inclusion
      double t_c = t0 + (target - l0) / slope;
      t_c = std::min(std::max(t_c, t), t1);
      ++counts.pos;
      ref_level = target;
      last_event_t = t_c;
      t = t_c;
    } else if (slope < 0.0) {
      const double target = ref_level - params.c_neg;
      if (target < l1) break;
      double t_c = t0 + (target - l0) / slope;
      t_c = std::min(std::max(t_c, t), t1);
      ++counts.neg;
      ref_level = target;
      last_event_t = t_c;
      t = t_c;
    } else {
      break;
    }
  }
  return counts;
}

PixelRefState init_ref_state(const RgbImage& first_frame, const EventSimParams& params) {
  const GrayImage logl = log_irradiance(luminance(first_frame), params.epsilon);
  PixelRefState state;
  state.width = first_frame.width;
  state.height = first_frame.height;
  state.ref_level = logl.data;
  state.last_event_t.assign(logl.data.size(), -std::numeric_limits<double>::infinity());
  return state;
}

EventImage simulate_frame_pair(const RgbImage& prev, const RgbImage& next, double t0,
                               double t1, PixelRefState& state,
                               const EventSimParams& params) {
  require_same_dims(prev, next, "simulate_frame_pair");
  require_same_dims(prev, state, "simulate_frame_pair");
  const GrayImage l_prev = log_irradiance(luminance(prev), params.epsilon);
  const GrayImage l_next = log_irradiance(luminance(next), params.epsilon);

  if (params.reset_per_pair) {
    state.ref_level = l_prev.data;
    state.last_event_t.assign(state.ref_level.size(),
                              -std::numeric_limits<double>::infinity());
  }

  EventImage out(prev.width, prev.height);
  parallel_chunks(prev.height, 0, [&](int y) {
    for (int x = 0; x < prev.width; ++x) {
      const size_t i = static_cast<size_t>(y) * prev.width + x;
      const PixelEventCounts c =
          simulate_pixel(l_prev.data[i], l_next.data[i], t0, t1, state.ref_level[i],
                         state.last_event_t[i], params);
      out.pos[i] = static_cast<double>(c.pos);
      out.neg[i] = static_cast<double>(c.neg);
    }
  });
  return out;
}

void add_events(EventImage& accum, const EventImage& more) {
  require_same_dims(accum, more, "add_events");
  for (size_t i = 0; i < accum.pos.size(); ++i) {
    accum.pos[i] += more.pos[i];
    accum.neg[i] += more.neg[i];
  }
}

EventImage accumulate_events(const std::vector<EventImage>& images) {
  if (images.empty()) throw std::invalid_argument("accumulate_events: empty list");
  EventImage out = images.front();
  for (size_t k = 1; k < images.size(); ++k) add_events(out, images[k]);
  return out;
}

}  // namespace evslam
