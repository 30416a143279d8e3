#pragma once

#include <stdexcept>
#include <string>

namespace evslam {

// Pinhole model. Continuous image coordinates: pixel (ix, iy) covers
// [ix, ix+1) x [iy, iy+1) with its center at (ix + 0.5, iy + 0.5), so
// projection is u = fx * X/Z + cx. Under this convention rescaling an image by
// a factor s maps intrinsics exactly to (fx*s, fy*s, cx*s, cy*s).
struct CameraIntrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;

  void validate() const {
    if (!(fx > 0.0) || !(fy > 0.0)) {
      throw std::invalid_argument("CameraIntrinsics: focal lengths must be positive");
    }
    if (width < 1 || height < 1) {
      throw std::invalid_argument("CameraIntrinsics: image dimensions must be >= 1");
    }
    if (!(cx >= 0.0 && cx < width) || !(cy >= 0.0 && cy < height)) {
      throw std::invalid_argument("CameraIntrinsics: principal point outside image");
    }
  }

  // Intrinsics for the same camera rendered at (w, h) pixels.
  CameraIntrinsics scaled_to(int w, int h) const {
    const double sx = static_cast<double>(w) / width;
    const double sy = static_cast<double>(h) / height;
    return CameraIntrinsics{fx * sx, fy * sy, cx * sx, cy * sy, w, h};
  }
};

}  // namespace evslam
