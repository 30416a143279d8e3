#pragma once

#include <vector>

#include "evslam/core/image.hpp"

namespace evslam {

struct EventSimParams {
  double c_pos = 0.1;          // positive contrast threshold, log-irradiance units
  double c_neg = 0.1;          // negative contrast threshold
  double t_ref = 1e-4;         // refractory period [s]
  double epsilon = 1e-3;       // log conversion stabilizer
  double frame_dt = 1.0 / 30;  // inter-frame interval [s]
  bool reset_per_pair = false; // re-anchor simulator state at every frame pair

  void validate() const;
};

// Per-pixel simulator state carried across frame pairs: the log-irradiance
// level at the last emitted event and the time of that event. Fresh pixels
// have last_event_t = -inf so nothing starts refractory.
struct PixelRefState {
  int width = 0;
  int height = 0;
  std::vector<double> ref_level;
  std::vector<double> last_event_t;
};

// L = ln(max(E, eps) / (255 + eps)). Inputs are expected in [0, 255]; the
// clamp keeps E = 0 finite.
GrayImage log_irradiance(const GrayImage& img, double epsilon);
double log_irradiance_value(double e, double epsilon);

struct PixelEventCounts {
  long pos = 0;
  long neg = 0;
};

// Events of one pixel over (t0, t1], with log-irradiance moving linearly from
// l0 to l1. A crossing of ref +- threshold emits one event at the crossing
// time if at least t_ref has passed since the pixel's last event; suppressed
// crossings leave the reference untouched, and on leaving the refractory
// window an event fires immediately if the departure still exceeds the
// threshold. ref_level / last_event_t are updated in place.
PixelEventCounts simulate_pixel(double l0, double l1, double t0, double t1,
                                double& ref_level, double& last_event_t,
                                const EventSimParams& params);

PixelRefState init_ref_state(const RgbImage& first_frame, const EventSimParams& params);

// Per-pixel luminance -> log-irradiance -> simulate_pixel over the pair.
// Returned counts are integers stored as doubles.
EventImage simulate_frame_pair(const RgbImage& prev, const RgbImage& next, double t0,
                               double t1, PixelRefState& state,
                               const EventSimParams& params);

// Channel-wise pixel-wise sum. Throws on an empty list or mismatched dims.
EventImage accumulate_events(const std::vector<EventImage>& images);
void add_events(EventImage& accum, const EventImage& more);

}  // namespace evslam
