#pragma once

#include <algorithm>
#include <cmath>

#include "evslam/sim/event_sim.hpp"

namespace evslam::testing {

// Brute-force event counter: scans (t0, t1] in n_steps fixed substeps and
// resolves events inside each substep from first principles. Independent of
// simulate_pixel's closed-form event hopping; used to pin its semantics.
inline PixelEventCounts brute_force_pixel_events(double l0, double l1, double t0,
                                                 double t1, double& ref_level,
                                                 double& last_event_t,
                                                 const EventSimParams& params,
                                                 long n_steps = 1000000) {
  PixelEventCounts counts;
  const double slope = (l1 - l0) / (t1 - t0);
  const double span = t1 - t0;

  for (long k = 0; k < n_steps; ++k) {
    double ta = t0 + span * (static_cast<double>(k) / n_steps);
    const double tb = (k + 1 == n_steps) ? t1 : t0 + span * (static_cast<double>(k + 1) / n_steps);
    while (true) {
      // earliest time in this substep at which the pixel may fire
      const double t_start = std::max(ta, last_event_t + params.t_ref);
      if (t_start > tb) break;
      const double level_start = l0 + slope * (t_start - t0);
      if (level_start >= ref_level + params.c_pos) {
        ++counts.pos;
        ref_level += params.c_pos;
        last_event_t = t_start;
        ta = t_start;
        continue;
      }
      if (level_start <= ref_level - params.c_neg) {
        ++counts.neg;
        ref_level -= params.c_neg;
        last_event_t = t_start;
        ta = t_start;
        continue;
      }
      const double level_end = l0 + slope * (tb - t0);
      if (slope > 0.0 && ref_level + params.c_pos <= level_end) {
        const double target = ref_level + params.c_pos;
        double t_c = t0 + (target - l0) / slope;
        t_c = std::min(std::max(t_c, t_start), tb);
        ++counts.pos;
        ref_level = target;
        last_event_t = t_c;
        ta = t_c;
        continue;
      }
      if (slope < 0.0 && ref_level - params.c_neg >= level_end) {
        const double target = ref_level - params.c_neg;
        double t_c = t0 + (target - l0) / slope;
        t_c = std::min(std::max(t_c, t_start), tb);
        ++counts.neg;
        ref_level = target;
        last_event_t = t_c;
        ta = t_c;
        continue;
      }
      break;
    }
  }
  return counts;
}

}  // namespace evslam::testing
