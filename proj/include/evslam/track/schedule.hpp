#pragma once

#include <cstdint>
#include <stdexcept>

namespace evslam {

struct InputFlags {
  bool rgbd = false;
  bool events = false;
};

// RGB-D arrives on frame IDs that are multiples of tau; event images on every
// frame except the first.
inline InputFlags schedule_inputs(int frame_id, int tau) {
  if (frame_id < 0) throw std::invalid_argument("schedule_inputs: negative frame id");
  if (tau < 1) throw std::invalid_argument("schedule_inputs: tau must be >= 1");
  return InputFlags{frame_id % tau == 0, frame_id > 0};
}

struct ScheduleConfig {
  int tau = 5;
  int tracking_iters = 20;
  int mapping_iters = 60;
  int first_mapping_iters = 300;  // bootstrap mapping at frame 0
  int mapping_every = 0;          // 0 means tau
  double pose_step = 1e-3;
  double grid_step = 1e-2;
  int keyframe_window = 8;
  int mapping_pixels = 200;  // rays per keyframe per mapping iteration
  bool events_enabled = true;
  bool abort_on_divergence = true;
  double divergence_loss = 60.0;
  double divergence_step_m = 0.25;
  double divergence_step_rad = 0.5;
  int divergence_patience = 3;
  std::uint64_t seed = 0;
  enum class Mode { kSequential, kConcurrent };
  Mode mode = Mode::kSequential;

  int effective_mapping_every() const { return mapping_every > 0 ? mapping_every : tau; }

  void validate() const {
    if (tau < 1) throw std::invalid_argument("ScheduleConfig: tau must be >= 1");
    if (tracking_iters < 1 || mapping_iters < 1) {
      throw std::invalid_argument("ScheduleConfig: iteration counts must be >= 1");
    }
    if (keyframe_window < 1 || mapping_pixels < 1) {
      throw std::invalid_argument("ScheduleConfig: keyframe window and pixel count must be >= 1");
    }
    if (divergence_patience < 1) {
      throw std::invalid_argument("ScheduleConfig: divergence patience must be >= 1");
    }
  }
};

}  // namespace evslam
