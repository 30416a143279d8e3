#include "evslam/loss/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evslam {

GaussianKernel GaussianKernel::create(int size, double sigma) {
  if (size < 1 || size % 2 == 0) {
    throw std::invalid_argument("GaussianKernel: size must be odd and >= 1");
  }
  if (!(sigma > 0.0)) throw std::invalid_argument("GaussianKernel: sigma must be positive");
  GaussianKernel k;
  k.size = size;
  k.sigma = sigma;
  k.weights_1d.resize(size);
  const int r = size / 2;
  double sum = 0.0;
  for (int i = 0; i < size; ++i) {
    const double d = i - r;
    k.weights_1d[i] = std::exp(-d * d / (2.0 * sigma * sigma));
    sum += k.weights_1d[i];
  }
  for (double& w : k.weights_1d) w /= sum;
  k.weights.resize(static_cast<size_t>(size) * size);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      k.weights[static_cast<size_t>(y) * size + x] = k.weights_1d[y] * k.weights_1d[x];
    }
  }
  return k;
}

namespace {

inline int clamp_idx(int i, int n) { return std::clamp(i, 0, n - 1); }

// out[i] = sum_t w[t] in[clamp(i + t - r)] along one axis of a plane.
void pass_rows(const double* in, double* out, int w, int h, const std::vector<double>& k) {
  const int r = static_cast<int>(k.size()) / 2;
  for (int y = 0; y < h; ++y) {
    const double* row = in + static_cast<size_t>(y) * w;
    double* orow = out + static_cast<size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int t = -r; t <= r; ++t) acc += k[t + r] * row[clamp_idx(x + t, w)];
      orow[x] = acc;
    }
  }
}

void pass_cols(const double* in, double* out, int w, int h, const std::vector<double>& k) {
  const int r = static_cast<int>(k.size()) / 2;
  for (int y = 0; y < h; ++y) {
    double* orow = out + static_cast<size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int t = -r; t <= r; ++t) {
        acc += k[t + r] * in[static_cast<size_t>(clamp_idx(y + t, h)) * w + x];
      }
      orow[x] = acc;
    }
  }
}

// Scatter adjoints of the two passes above.
void adjoint_rows(const double* in, double* out, int w, int h, const std::vector<double>& k) {
  const int r = static_cast<int>(k.size()) / 2;
  std::fill(out, out + static_cast<size_t>(w) * h, 0.0);
  for (int y = 0; y < h; ++y) {
    const double* row = in + static_cast<size_t>(y) * w;
    double* orow = out + static_cast<size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      const double g = row[x];
      for (int t = -r; t <= r; ++t) orow[clamp_idx(x + t, w)] += k[t + r] * g;
    }
  }
}

void adjoint_cols(const double* in, double* out, int w, int h, const std::vector<double>& k) {
  const int r = static_cast<int>(k.size()) / 2;
  std::fill(out, out + static_cast<size_t>(w) * h, 0.0);
  for (int y = 0; y < h; ++y) {
    const double* row = in + static_cast<size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      const double g = row[x];
      for (int t = -r; t <= r; ++t) {
        out[static_cast<size_t>(clamp_idx(y + t, h)) * w + x] += k[t + r] * g;
      }
    }
  }
}

void filter_plane(const double* in, double* out, int w, int h, const GaussianKernel& k,
                  std::vector<double>& tmp) {
  tmp.resize(static_cast<size_t>(w) * h);
  pass_rows(in, tmp.data(), w, h, k.weights_1d);
  pass_cols(tmp.data(), out, w, h, k.weights_1d);
}

void adjoint_plane(const double* in, double* out, int w, int h, const GaussianKernel& k,
                   std::vector<double>& tmp) {
  tmp.resize(static_cast<size_t>(w) * h);
  adjoint_cols(in, tmp.data(), w, h, k.weights_1d);
  adjoint_rows(tmp.data(), out, w, h, k.weights_1d);
}

}  // namespace

GrayImage gaussian_filter(const GrayImage& img, const GaussianKernel& k) {
  GrayImage out(img.width, img.height);
  std::vector<double> tmp;
  filter_plane(img.data.data(), out.data.data(), img.width, img.height, k, tmp);
  return out;
}

EventImage gaussian_filter(const EventImage& img, const GaussianKernel& k) {
  EventImage out(img.width, img.height);
  std::vector<double> tmp;
  filter_plane(img.pos.data(), out.pos.data(), img.width, img.height, k, tmp);
  filter_plane(img.neg.data(), out.neg.data(), img.width, img.height, k, tmp);
  return out;
}

GrayImage gaussian_filter_adjoint(const GrayImage& upstream, const GaussianKernel& k) {
  GrayImage out(upstream.width, upstream.height);
  std::vector<double> tmp;
  adjoint_plane(upstream.data.data(), out.data.data(), upstream.width, upstream.height, k, tmp);
  return out;
}

}  // namespace evslam
