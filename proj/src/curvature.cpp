#include "solinv/curvature.hpp"

#include <cmath>

namespace solinv {

CurvatureProfile curvature_profile(double theta, double theta_prime) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  CurvatureProfile p;
  p.H = 0.5 * theta_prime;
  p.kappa1 = theta_prime + c;
  p.kappa2 = -c;
  p.K_ext = p.kappa1 * p.kappa2;
  p.K_sec = c * c - s * s;
  p.K_int = -theta_prime * c - s * s;
  return p;
}

FundamentalForms fundamental_forms(const CurveState& state, double theta_prime) {
  const double e2z = std::exp(2.0 * state.z);
  const double c = std::cos(state.theta);
  FundamentalForms f;
  f.E = 1.0;
  f.F = 0.0;
  f.G = e2z;
  f.e = theta_prime + c;
  f.f = 0.0;
  f.g = -e2z * c;
  return f;
}

CurvatureProfile graph_curvatures(double z, double z_prime, double z_double_prime) {
  const double ez = std::exp(z);
  const double w2 = 1.0 + z_prime * z_prime * ez * ez;
  const double w = std::sqrt(w2);
  const double theta = std::atan2(z_prime * ez / w, 1.0 / w);
  const double theta_prime = ez * ez * (z_double_prime + z_prime * z_prime) / (w2 * w);
  return curvature_profile(theta, theta_prime);
}

SolTangent normal_vector(const CurveState& state) {
  const SolPoint base{0.0, state.y, state.z};
  return {base, {0.0, -std::sin(state.theta), std::cos(state.theta)}, Basis::Frame};
}

SolTangent tangent_vector(const CurveState& state) {
  const SolPoint base{0.0, state.y, state.z};
  return {base, {0.0, std::cos(state.theta), std::sin(state.theta)}, Basis::Frame};
}

}  // namespace solinv
