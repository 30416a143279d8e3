#pragma once

#include "evslam/core/image.hpp"

namespace evslam {

// ITU-R BT.601 luma: Y = 0.299 R + 0.587 G + 0.114 B. Output stays within the
// per-pixel [min channel, max channel] range since the weights are a convex
// combination.
GrayImage luminance(const RgbImage& img);

// Area-weighted average pooling to floor(dims * factor), factor in (0, 1].
// The same pooling is applied to every channel of every image type, so event
// counts keep the per-pixel magnitude they would have at the lower resolution.
GrayImage downscale(const GrayImage& img, double factor);
RgbImage downscale(const RgbImage& img, double factor);
DepthImage downscale(const DepthImage& img, double factor);
EventImage downscale(const EventImage& img, double factor);

}  // namespace evslam
