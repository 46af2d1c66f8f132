#include "solinv/sol_geometry.hpp"

#include <cmath>
#include <string>

namespace solinv {

namespace {

bool same_point(const SolPoint& a, const SolPoint& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}

}  // namespace

SolTangent to_coordinate(const SolTangent& u) {
  if (u.basis == Basis::Coordinate) return u;
  const double ez = std::exp(u.base.z);
  return {u.base, {u.v[0] / ez, u.v[1] * ez, u.v[2]}, Basis::Coordinate};
}

SolTangent to_frame(const SolTangent& u) {
  if (u.basis == Basis::Frame) return u;
  const double ez = std::exp(u.base.z);
  return {u.base, {u.v[0] * ez, u.v[1] / ez, u.v[2]}, Basis::Frame};
}

SolTangent frame_vector(const SolPoint& p, int i) {
  SolTangent e{p, {0.0, 0.0, 0.0}, Basis::Frame};
  e.v[static_cast<std::size_t>(i)] = 1.0;
  return e;
}

double metric_at(const SolPoint& p, const SolTangent& u, const SolTangent& v) {
  if (!same_point(u.base, p) || !same_point(v.base, p)) {
    throw DomainError("metric_at: tangent vectors based at different points");
  }
  if (u.basis == Basis::Frame && v.basis == Basis::Frame) {
    return u.v[0] * v.v[0] + u.v[1] * v.v[1] + u.v[2] * v.v[2];
  }
  const SolTangent uc = to_coordinate(u);
  const SolTangent vc = to_coordinate(v);
  const double e2z = std::exp(2.0 * p.z);
  return e2z * uc.v[0] * vc.v[0] + uc.v[1] * vc.v[1] / e2z + uc.v[2] * vc.v[2];
}

SolPoint group_mul(const SolPoint& p, const SolPoint& q) {
  return {p.x + std::exp(-p.z) * q.x, p.y + std::exp(p.z) * q.y, p.z + q.z};
}

SolPoint isometry(IsometryKind kind, double c, const SolPoint& p) {
  switch (kind) {
    case IsometryKind::T1:
      return {p.x + c, p.y, p.z};
    case IsometryKind::T2:
      return {p.x, p.y + c, p.z};
    case IsometryKind::T3:
      return {std::exp(-c) * p.x, std::exp(c) * p.y, p.z + c};
  }
  throw ConfigError("isometry: unknown kind");
}

SolTangent isometry_pushforward(IsometryKind kind, double c, const SolTangent& u) {
  const SolPoint image = isometry(kind, c, u.base);
  if (u.basis == Basis::Frame) {
    // Left translations preserve the left-invariant frame.
    return {image, u.v, Basis::Frame};
  }
  std::array<double, 3> w = u.v;
  if (kind == IsometryKind::T3) {
    w[0] *= std::exp(-c);
    w[1] *= std::exp(c);
  }
  return {image, w, Basis::Coordinate};
}

FrameConnectionTable frame_connection_table() {
  FrameConnectionTable t;
  t.coeff[0][0] = {0.0, 0.0, -1.0};  // nabla_{E1}E1 = -E3
  t.coeff[0][2] = {1.0, 0.0, 0.0};   // nabla_{E1}E3 =  E1
  t.coeff[1][1] = {0.0, 0.0, 1.0};   // nabla_{E2}E2 =  E3
  t.coeff[1][2] = {0.0, -1.0, 0.0};  // nabla_{E2}E3 = -E2
  return t;
}

Christoffel christoffel(const SolPoint& p) {
  Christoffel g{};
  const double e2z = std::exp(2.0 * p.z);
  g[0][0][2] = 1.0;
  g[0][2][0] = 1.0;
  g[2][0][0] = -e2z;
  g[1][1][2] = -1.0;
  g[1][2][1] = -1.0;
  g[2][1][1] = 1.0 / e2z;
  return g;
}

namespace {

// d/dz of Gamma^k_{ij}; only the two exponential entries vary.
Christoffel christoffel_dz(const SolPoint& p) {
  Christoffel g{};
  const double e2z = std::exp(2.0 * p.z);
  g[2][0][0] = -2.0 * e2z;
  g[2][1][1] = -2.0 / e2z;
  return g;
}

}  // namespace

std::array<double, 3> curvature_tensor(const SolPoint& p,
                                       const std::array<double, 3>& u,
                                       const std::array<double, 3>& v,
                                       const std::array<double, 3>& w) {
  const Christoffel g = christoffel(p);
  const Christoffel gz = christoffel_dz(p);

  // R^l_{ijk} = d_i G^l_{jk} - d_j G^l_{ik} + G^l_{im}G^m_{jk} - G^l_{jm}G^m_{ik};
  // the metric depends on z only, so d_i G = 0 unless i = 2 (the z slot).
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (int l = 0; l < 3; ++l) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
          double r = 0.0;
          if (i == 2) r += gz[l][j][k];
          if (j == 2) r -= gz[l][i][k];
          for (int m = 0; m < 3; ++m) {
            r += g[l][i][m] * g[m][j][k] - g[l][j][m] * g[m][i][k];
          }
          acc += r * u[i] * v[j] * w[k];
        }
      }
    }
    out[static_cast<std::size_t>(l)] = acc;
  }
  return out;
}

double sectional_curvature(const SolPoint& p, const SolTangent& u, const SolTangent& v) {
  const SolTangent uc = to_coordinate(u);
  const SolTangent vc = to_coordinate(v);
  const double uu = metric_at(p, uc, uc);
  const double vv = metric_at(p, vc, vc);
  const double uv = metric_at(p, uc, vc);
  const double gram = uu * vv - uv * uv;
  if (gram <= 1e-12 * uu * vv || !(gram > 0.0)) {
    throw DomainError("sectional_curvature: degenerate plane");
  }
  const std::array<double, 3> rv = curvature_tensor(p, uc.v, vc.v, vc.v);
  const SolTangent r{p, rv, Basis::Coordinate};
  return metric_at(p, r, uc) / gram;
}

}  // namespace solinv
