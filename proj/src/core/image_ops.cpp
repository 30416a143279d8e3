#include "evslam/core/image_ops.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace evslam {

GrayImage luminance(const RgbImage& img) {
  GrayImage out(img.width, img.height);
  const size_t n = img.pixel_count();
  for (size_t i = 0; i < n; ++i) {
    const double* px = &img.data[i * 3];
    out.data[i] = 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
  }
  return out;
}

namespace {

// Per-axis source coverage of each destination index, weights normalized to
// sum to 1 so constant inputs pool to the same constant.
using AxisWeights = std::vector<std::vector<std::pair<int, double>>>;

AxisWeights pooling_weights(int in_dim, int out_dim) {
  AxisWeights w(out_dim);
  const double step = static_cast<double>(in_dim) / out_dim;
  for (int o = 0; o < out_dim; ++o) {
    const double lo = o * step;
    const double hi = (o + 1) * step;
    int first = static_cast<int>(std::floor(lo));
    int last = static_cast<int>(std::ceil(hi)) - 1;
    first = std::max(first, 0);
    last = std::min(last, in_dim - 1);
    double total = 0.0;
    for (int i = first; i <= last; ++i) {
      const double overlap = std::min(hi, i + 1.0) - std::max(lo, static_cast<double>(i));
      if (overlap > 0.0) {
        w[o].emplace_back(i, overlap);
        total += overlap;
      }
    }
    for (auto& e : w[o]) e.second /= total;
  }
  return w;
}

void pool_plane(const double* src, int in_w, double* dst, int out_w,
                const AxisWeights& wx, const AxisWeights& wy) {
  const int out_h = static_cast<int>(wy.size());
  for (int oy = 0; oy < out_h; ++oy) {
    for (int ox = 0; ox < out_w; ++ox) {
      double acc = 0.0;
      for (const auto& [iy, fy] : wy[oy]) {
        double row = 0.0;
        for (const auto& [ix, fx] : wx[ox]) {
          row += fx * src[static_cast<size_t>(iy) * in_w + ix];
        }
        acc += fy * row;
      }
      dst[static_cast<size_t>(oy) * out_w + ox] = acc;
    }
  }
}

std::pair<int, int> output_dims(int w, int h, double factor) {
  if (!(factor > 0.0) || factor > 1.0) {
    throw std::invalid_argument("downscale: factor must be in (0, 1]");
  }
  const int ow = static_cast<int>(std::floor(w * factor));
  const int oh = static_cast<int>(std::floor(h * factor));
  if (ow < 1 || oh < 1) {
    throw std::invalid_argument("downscale: output dimensions would be < 1");
  }
  return {ow, oh};
}

}  // namespace

GrayImage downscale(const GrayImage& img, double factor) {
  const auto [ow, oh] = output_dims(img.width, img.height, factor);
  GrayImage out(ow, oh);
  const auto wx = pooling_weights(img.width, ow);
  const auto wy = pooling_weights(img.height, oh);
  pool_plane(img.data.data(), img.width, out.data.data(), ow, wx, wy);
  return out;
}

DepthImage downscale(const DepthImage& img, double factor) {
  const auto [ow, oh] = output_dims(img.width, img.height, factor);
  DepthImage out(ow, oh);
  const auto wx = pooling_weights(img.width, ow);
  const auto wy = pooling_weights(img.height, oh);
  pool_plane(img.data.data(), img.width, out.data.data(), ow, wx, wy);
  return out;
}

RgbImage downscale(const RgbImage& img, double factor) {
  const auto [ow, oh] = output_dims(img.width, img.height, factor);
  RgbImage out(ow, oh);
  const auto wx = pooling_weights(img.width, ow);
  const auto wy = pooling_weights(img.height, oh);
  // Deinterleave per channel; pooling stays a plain plane operation.
  const size_t n_in = img.pixel_count();
  const size_t n_out = out.pixel_count();
  std::vector<double> src(n_in), dst(n_out);
  for (int c = 0; c < 3; ++c) {
    for (size_t i = 0; i < n_in; ++i) src[i] = img.data[i * 3 + c];
    pool_plane(src.data(), img.width, dst.data(), ow, wx, wy);
    for (size_t i = 0; i < n_out; ++i) out.data[i * 3 + c] = dst[i];
  }
  return out;
}

EventImage downscale(const EventImage& img, double factor) {
  const auto [ow, oh] = output_dims(img.width, img.height, factor);
  EventImage out(ow, oh);
  const auto wx = pooling_weights(img.width, ow);
  const auto wy = pooling_weights(img.height, oh);
  pool_plane(img.pos.data(), img.width, out.pos.data(), ow, wx, wy);
  pool_plane(img.neg.data(), img.width, out.neg.data(), ow, wx, wy);
  return out;
}

}  // namespace evslam
