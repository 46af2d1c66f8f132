#pragma once

#include <array>

#include "solinv/errors.hpp"

// Ambient geometry of the homogeneous space Sol: the model is R^3 with the
// left-invariant metric e^{2z}dx^2 + e^{-2z}dy^2 + dz^2. This header provides
// the metric, the Lie group law, the translational isometries T1/T2/T3, the
// orthonormal frame E1 = e^{-z}dx, E2 = e^{z}dy, E3 = dz with its connection,
// coordinate Christoffel symbols, and sectional curvature.

namespace solinv {

struct SolPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

enum class Basis { Coordinate, Frame };

// Tangent vector anchored at a base point, with components in either the
// coordinate basis (dx, dy, dz) or the orthonormal frame (E1, E2, E3).
struct SolTangent {
  SolPoint base;
  std::array<double, 3> v{0.0, 0.0, 0.0};
  Basis basis = Basis::Coordinate;
};

SolTangent to_coordinate(const SolTangent& u);
SolTangent to_frame(const SolTangent& u);

// Frame tangent helpers: E1, E2, E3 at p.
SolTangent frame_vector(const SolPoint& p, int i);

// <u,v> at p. Both vectors must be based at p; mixed bases are converted
// internally.
double metric_at(const SolPoint& p, const SolTangent& u, const SolTangent& v);

// Sol group product p * q = (x + e^{-z}x', y + e^{z}y', z + z').
SolPoint group_mul(const SolPoint& p, const SolPoint& q);

enum class IsometryKind { T1, T2, T3 };

// T1,c: x-translation. T2,c: y-translation. T3,c: (e^{-c}x, e^{c}y, z+c).
SolPoint isometry(IsometryKind kind, double c, const SolPoint& p);

// Differential of the (affine) isometry, applied analytically. Frame
// components are invariant under all three families (they are left
// translations); coordinate components pick up the linear part.
SolTangent isometry_pushforward(IsometryKind kind, double c, const SolTangent& u);

// Connection in the orthonormal frame: entry (i,j) holds the frame
// components of nabla_{E_i} E_j.
struct FrameConnectionTable {
  std::array<std::array<std::array<double, 3>, 3>, 3> coeff{};

  const std::array<double, 3>& operator()(int i, int j) const { return coeff[i][j]; }
};

FrameConnectionTable frame_connection_table();

// Coordinate Christoffel symbols Gamma^k_{ij} at p, indexed [k][i][j] with
// (0,1,2) = (x,y,z). Nonzero entries: Gamma^x_{xz} = Gamma^x_{zx} = 1,
// Gamma^z_{xx} = -e^{2z}, Gamma^y_{yz} = Gamma^y_{zy} = -1,
// Gamma^z_{yy} = e^{-2z}.
using Christoffel = std::array<std::array<std::array<double, 3>, 3>, 3>;
Christoffel christoffel(const SolPoint& p);

// Curvature tensor R(u,v)w = nabla_u nabla_v w - nabla_v nabla_u w -
// nabla_{[u,v]} w, assembled from the coordinate Christoffel symbols.
// Returns coordinate components of R(u,v)w for coordinate-component inputs.
std::array<double, 3> curvature_tensor(const SolPoint& p,
                                       const std::array<double, 3>& u,
                                       const std::array<double, 3>& v,
                                       const std::array<double, 3>& w);

// Sectional curvature K(u ^ v) = <R(u,v)v, u> / (|u|^2|v|^2 - <u,v>^2).
// Throws DomainError when the plane is degenerate.
double sectional_curvature(const SolPoint& p, const SolTangent& u, const SolTangent& v);

}  // namespace solinv
