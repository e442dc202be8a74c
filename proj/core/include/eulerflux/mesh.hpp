#ifndef EULERFLUX_MESH_HPP
#define EULERFLUX_MESH_HPP

#include <vector>

#include "eulerflux/euler.hpp"

namespace eulerflux {

enum class BoundaryKind { Periodic, WeakDirichlet };

/// Uniform Cartesian mesh, 1D or 2D. Elements are affine images of the
/// reference element with Jacobian dx/2 per axis.
struct Mesh {
  int dimension{1};
  int nx{1};
  int ny{1};
  double x_min{0.0}, x_max{1.0};
  double y_min{0.0}, y_max{1.0};
  BoundaryKind boundary{BoundaryKind::WeakDirichlet};

  int num_elements() const { return dimension == 1 ? nx : nx * ny; }
  double dx() const { return (x_max - x_min) / nx; }
  double dy() const { return (y_max - y_min) / ny; }
  double element_x(int ex) const { return x_min + ex * dx(); }
  double element_y(int ey) const { return y_min + ey * dy(); }
};

inline Mesh make_interval_mesh(double a, double b, int n, BoundaryKind bc) {
  Mesh m;
  m.dimension = 1;
  m.nx = n;
  m.x_min = a;
  m.x_max = b;
  m.boundary = bc;
  return m;
}

inline Mesh make_box_mesh(double ax, double bx, double ay, double by, int nx, int ny,
                          BoundaryKind bc) {
  Mesh m;
  m.dimension = 2;
  m.nx = nx;
  m.ny = ny;
  m.x_min = ax;
  m.x_max = bx;
  m.y_min = ay;
  m.y_max = by;
  m.boundary = bc;
  return m;
}

}  // namespace eulerflux

#endif
