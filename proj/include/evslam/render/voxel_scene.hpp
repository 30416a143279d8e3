#pragma once

#include <Eigen/Core>
#include <limits>
#include <vector>

namespace evslam {

// Single-level axis-aligned grid of occupancy logits and RGB colors. Grid
// nodes span the bounds exactly: node (i,j,k) sits at
// min + (i,j,k) .* (max-min) ./ (n-1), so trilinear interpolation is defined
// everywhere inside the bounds without extrapolation.
struct VoxelScene {
  int nx = 0, ny = 0, nz = 0;
  Eigen::Vector3d bounds_min = Eigen::Vector3d::Zero();
  Eigen::Vector3d bounds_max = Eigen::Vector3d::Zero();
  std::vector<double> occ;    // nx*ny*nz logits, x fastest
  std::vector<double> color;  // 3 channels per node, in [0, 255]

  static VoxelScene create(int nx, int ny, int nz, const Eigen::Vector3d& bmin,
                           const Eigen::Vector3d& bmax, double occ_logit = -8.0,
                           const Eigen::Vector3d& rgb = Eigen::Vector3d(127, 127, 127));

  size_t node_count() const { return static_cast<size_t>(nx) * ny * nz; }
  size_t index(int i, int j, int k) const {
    return (static_cast<size_t>(k) * ny + j) * nx + i;
  }
  Eigen::Vector3d node_position(int i, int j, int k) const;
  Eigen::Vector3d cell_size() const;
  void validate() const;
};

// Interpolation footprint of a point: the 8 surrounding nodes and their
// trilinear weights. inside == false means the point is out of bounds.
struct TrilinearCell {
  bool inside = false;
  size_t idx[8] = {0};
  double w[8] = {0};
  // d(weight)/d(position), one 3-vector per corner
  double dw[8][3] = {{0}};
};
TrilinearCell locate_cell(const VoxelScene& scene, const Eigen::Vector3d& p);

struct ScenePoint {
  double occ_logit = -std::numeric_limits<double>::infinity();  // -inf outside bounds
  Eigen::Vector3d color = Eigen::Vector3d::Zero();
};
ScenePoint sample_scene(const VoxelScene& scene, const Eigen::Vector3d& p);

}  // namespace evslam
