#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace evslam {

// Images store doubles row-major (index y*width + x). RGB is interleaved.
// All image types are plain value types; copying copies the pixels.

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  GrayImage() = default;
  GrayImage(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  double at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<double> data;  // 3 channels per pixel, values in [0, 255]

  RgbImage() = default;
  RgbImage(int w, int h, double r = 0.0, double g = 0.0, double b = 0.0)
      : width(w), height(h), data(static_cast<size_t>(w) * h * 3) {
    for (size_t i = 0; i < data.size(); i += 3) {
      data[i] = r;
      data[i + 1] = g;
      data[i + 2] = b;
    }
  }

  double& at(int x, int y, int c) { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
  double at(int x, int y, int c) const { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

struct DepthImage {
  int width = 0;
  int height = 0;
  std::vector<double> data;  // meters, 0 = invalid

  DepthImage() = default;
  DepthImage(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  double at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

// Two planes of per-pixel event counts. Ground-truth instances hold integer
// values; soft predictions are real-valued. Both planes are nonnegative.
struct EventImage {
  int width = 0;
  int height = 0;
  std::vector<double> pos;
  std::vector<double> neg;

  EventImage() = default;
  EventImage(int w, int h)
      : width(w),
        height(h),
        pos(static_cast<size_t>(w) * h, 0.0),
        neg(static_cast<size_t>(w) * h, 0.0) {}

  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

template <class A, class B>
bool same_dims(const A& a, const B& b) {
  return a.width == b.width && a.height == b.height;
}

template <class A, class B>
void require_same_dims(const A& a, const B& b, const char* what) {
  if (!same_dims(a, b)) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.width) + "x" + std::to_string(a.height) +
                                " vs " + std::to_string(b.width) + "x" +
                                std::to_string(b.height) + ")");
  }
}

}  // namespace evslam
