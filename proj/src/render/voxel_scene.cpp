#include "evslam/render/voxel_scene.hpp"

#include <stdexcept>

namespace evslam {

VoxelScene VoxelScene::create(int nx, int ny, int nz, const Eigen::Vector3d& bmin,
                              const Eigen::Vector3d& bmax, double occ_logit,
                              const Eigen::Vector3d& rgb) {
  VoxelScene s;
  s.nx = nx;
  s.ny = ny;
  s.nz = nz;
  s.bounds_min = bmin;
  s.bounds_max = bmax;
  s.validate();
  s.occ.assign(s.node_count(), occ_logit);
  s.color.resize(s.node_count() * 3);
  for (size_t i = 0; i < s.node_count(); ++i) {
    s.color[i * 3] = rgb.x();
    s.color[i * 3 + 1] = rgb.y();
    s.color[i * 3 + 2] = rgb.z();
  }
  return s;
}

Eigen::Vector3d VoxelScene::node_position(int i, int j, int k) const {
  const Eigen::Vector3d ext = bounds_max - bounds_min;
  return bounds_min + Eigen::Vector3d(ext.x() * i / (nx - 1), ext.y() * j / (ny - 1),
                                      ext.z() * k / (nz - 1));
}

Eigen::Vector3d VoxelScene::cell_size() const {
  const Eigen::Vector3d ext = bounds_max - bounds_min;
  return Eigen::Vector3d(ext.x() / (nx - 1), ext.y() / (ny - 1), ext.z() / (nz - 1));
}

void VoxelScene::validate() const {
  if (nx < 2 || ny < 2 || nz < 2) {
    throw std::invalid_argument("VoxelScene: resolution must be >= 2 per axis");
  }
  if (!((bounds_max - bounds_min).minCoeff() > 0.0)) {
    throw std::invalid_argument("VoxelScene: degenerate bounds");
  }
}

TrilinearCell locate_cell(const VoxelScene& scene, const Eigen::Vector3d& p) {
  TrilinearCell cell;
  const Eigen::Vector3d cs = scene.cell_size();
  const Eigen::Vector3d g = (p - scene.bounds_min).cwiseQuotient(cs);
  if (g.x() < 0.0 || g.y() < 0.0 || g.z() < 0.0 || g.x() > scene.nx - 1 ||
      g.y() > scene.ny - 1 || g.z() > scene.nz - 1) {
    return cell;
  }
  cell.inside = true;
  int i = std::min(static_cast<int>(g.x()), scene.nx - 2);
  int j = std::min(static_cast<int>(g.y()), scene.ny - 2);
  int k = std::min(static_cast<int>(g.z()), scene.nz - 2);
  const double fx = g.x() - i, fy = g.y() - j, fz = g.z() - k;
  const double ux[2] = {1.0 - fx, fx};
  const double uy[2] = {1.0 - fy, fy};
  const double uz[2] = {1.0 - fz, fz};
  const double sx[2] = {-1.0 / cs.x(), 1.0 / cs.x()};
  const double sy[2] = {-1.0 / cs.y(), 1.0 / cs.y()};
  const double sz[2] = {-1.0 / cs.z(), 1.0 / cs.z()};
  for (int c = 0; c < 8; ++c) {
    const int dx = c & 1, dy = (c >> 1) & 1, dz = (c >> 2) & 1;
    cell.idx[c] = scene.index(i + dx, j + dy, k + dz);
    cell.w[c] = ux[dx] * uy[dy] * uz[dz];
    cell.dw[c][0] = sx[dx] * uy[dy] * uz[dz];
    cell.dw[c][1] = ux[dx] * sy[dy] * uz[dz];
    cell.dw[c][2] = ux[dx] * uy[dy] * sz[dz];
  }
  return cell;
}

ScenePoint sample_scene(const VoxelScene& scene, const Eigen::Vector3d& p) {
  ScenePoint out;
  const TrilinearCell cell = locate_cell(scene, p);
  if (!cell.inside) return out;
  double logit = 0.0;
  Eigen::Vector3d col = Eigen::Vector3d::Zero();
  for (int c = 0; c < 8; ++c) {
    logit += cell.w[c] * scene.occ[cell.idx[c]];
    col.x() += cell.w[c] * scene.color[cell.idx[c] * 3];
    col.y() += cell.w[c] * scene.color[cell.idx[c] * 3 + 1];
    col.z() += cell.w[c] * scene.color[cell.idx[c] * 3 + 2];
  }
  out.occ_logit = logit;
  out.color = col;
  return out;
}

}  // namespace evslam
