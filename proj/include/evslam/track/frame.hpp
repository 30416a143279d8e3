#pragma once

#include <vector>

#include "evslam/core/image.hpp"
#include "evslam/core/pose.hpp"

namespace evslam {

// One timestep of a dataset. rgb/depth are full-resolution ground truth; the
// run schedule decides which frames the tracker is allowed to see them on.
// gt_pose is for evaluation and the frame-0 anchor only.
struct FrameRecord {
  int frame_id = 0;
  double timestamp = 0.0;
  RgbImage rgb;
  DepthImage depth;
  EventImage gt_events;  // events over (t_{k-1}, t_k]; all-zero for frame 0
  Pose gt_pose;
};

// Sequential access to a dataset; lets long sequences stream from disk
// instead of living in memory.
class FrameSource {
 public:
  virtual ~FrameSource() = default;
  virtual int frame_count() const = 0;
  virtual FrameRecord frame(int id) const = 0;
};

class MemoryFrameSource final : public FrameSource {
 public:
  explicit MemoryFrameSource(std::vector<FrameRecord> frames) : frames_(std::move(frames)) {}
  int frame_count() const override { return static_cast<int>(frames_.size()); }
  FrameRecord frame(int id) const override { return frames_.at(id); }

 private:
  std::vector<FrameRecord> frames_;
};

}  // namespace evslam
