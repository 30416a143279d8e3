#pragma once

#include <vector>

#include "evslam/core/image.hpp"

namespace evslam {

// Normalized, odd-sized, square Gaussian kernel. Separable: weights is the
// outer product of weights_1d with itself, so the full kernel sums to 1 and is
// symmetric under reflection and 90 degree rotation.
struct GaussianKernel {
  int size = 9;
  double sigma = 1.7;
  std::vector<double> weights;     // size * size, row-major
  std::vector<double> weights_1d;  // size, sums to 1

  static GaussianKernel create(int size, double sigma);
};

// 2-D convolution with replicate (edge-clamp) padding.
GrayImage gaussian_filter(const GrayImage& img, const GaussianKernel& k);
EventImage gaussian_filter(const EventImage& img, const GaussianKernel& k);

// Exact adjoint of gaussian_filter under replicate padding: border taps that
// clamp onto a pixel accumulate there. For interior pixels this equals the
// filter itself (the kernel is symmetric).
GrayImage gaussian_filter_adjoint(const GrayImage& upstream, const GaussianKernel& k);

}  // namespace evslam
